"""Do biased walkers perceive the planted community structure?

Walks a network with planted communities, reconstructs it from each
dynamics, detects communities on the reconstruction, and compares the
result with the planted partition on the recovered nodes.
"""

from netwalk import DynamicsId, GeneratorSpec, detect_communities, generate_sequence, nmi
from netwalk.analysis import restrict_partition
from netwalk.generators import gen_lfr
from netwalk.graph import largest_connected_component
from netwalk.reconstruction import knowledge_fraction, reconstruct

graph, planted = gen_lfr(GeneratorSpec("LFR", n=500, k_avg=8.0, seed=5,
                                       mu=0.1, n_communities=5))
graph, id_map = largest_connected_component(graph)
planted = restrict_partition(planted, id_map)

print(f"{'dynamics':>10} {'knowledge':>10} {'nmi':>6}")
for name in ("rw", "rwd", "rwid", "tsaw-node", "tsaw-edge"):
    seq = generate_sequence(graph, DynamicsId.from_name(name), w=4000, seed=17)
    recon = reconstruct(seq)
    detected = detect_communities(recon.graph, seed=17)
    reference = restrict_partition(planted, recon.to_original)
    print(f"{name:>10} {knowledge_fraction(recon, graph):10.1%} "
          f"{nmi(reference, detected):6.3f}")
