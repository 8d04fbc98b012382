"""Walk a scale-free network with each dynamics and compare what is recovered.

Shows the basic pipeline: generate -> walk -> reconstruct -> knowledge.
"""

from netwalk import DynamicsId, GeneratorSpec, generate, generate_sequence
from netwalk.graph import largest_connected_component
from netwalk.reconstruction import knowledge_fraction, reconstruct

graph = generate(GeneratorSpec("BA", n=1000, k_avg=4.0, seed=7))
graph, _ = largest_connected_component(graph)
print(f"original: {graph.n} nodes, {graph.m} edges")

for name in ("rw", "rwd", "rwid", "tsaw-node", "tsaw-edge"):
    seq = generate_sequence(graph, DynamicsId.from_name(name), w=2000, seed=42)
    recon = reconstruct(seq)
    print(
        f"{name:>10}: recovered {recon.graph.n:4d} nodes "
        f"({knowledge_fraction(recon, graph):.1%}), {recon.graph.m} edges"
    )
