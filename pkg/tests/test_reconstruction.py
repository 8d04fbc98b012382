import random

import pytest

from netwalk.dynamics import DynamicsId, generate_sequence
from netwalk.graph import Graph
from netwalk.reconstruction import (
    knowledge_fraction,
    reconstruct,
    reconstruct_prefixes,
)

from oracles import random_connected_graph


def test_abcb():
    r = reconstruct([10, 20, 30, 20])
    assert r.graph.n == 3
    assert r.to_original == (10, 20, 30)
    mapped = {frozenset((r.to_original[u], r.to_original[v])) for u, v in r.graph.edges()}
    assert mapped == {frozenset((10, 20)), frozenset((20, 30))}


def test_single_node():
    r = reconstruct([5])
    assert r.graph.n == 1
    assert r.graph.m == 0


def test_triangle_closed_walk():
    r = reconstruct([0, 1, 2, 0])
    assert r.graph.n == 3
    assert r.graph.m == 3


def test_empty_rejected():
    with pytest.raises(ValueError):
        reconstruct([])


def test_first_visit_order_ids():
    r = reconstruct([7, 3, 7, 9])
    assert r.to_original == (7, 3, 9)
    assert r.from_original == {7: 0, 3: 1, 9: 2}


def test_knowledge_fraction():
    g = Graph(6, [(i, i + 1) for i in range(5)])
    r = reconstruct([0, 1, 2])
    assert knowledge_fraction(r, g) == 0.5
    assert knowledge_fraction(reconstruct([4]), g) == pytest.approx(1 / 6)


def test_tsaw_edge_full_coverage():
    rng = random.Random(5)
    g = random_connected_graph(rng, n_max=50)
    seq = generate_sequence(g, DynamicsId("tsaw-edge"), 50 * g.n, seed=1)
    r = reconstruct(seq)
    assert knowledge_fraction(r, g) == 1.0


def test_subgraph_and_degree_bounds_fuzz():
    rng = random.Random(99)
    for _ in range(100):
        g = random_connected_graph(rng, n_max=40)
        kind = rng.choice(["rw", "rwd", "rwid", "tsaw-node", "tsaw-edge"])
        w = rng.randint(1, 100)
        seq = generate_sequence(g, DynamicsId(kind), w, seed=rng.randrange(2**32))
        r = reconstruct(seq)
        for u, v in r.graph.edges():
            assert g.has_edge(r.to_original[u], r.to_original[v])
        for i in range(r.graph.n):
            assert r.graph.degree(i) <= g.degree(r.to_original[i])
        assert r.graph.n <= min(w, g.n)
        assert r.graph.m <= w - 1 or w == 1


def test_prefix_monotonicity():
    rng = random.Random(4)
    g = random_connected_graph(rng, n_max=30)
    seq = generate_sequence(g, DynamicsId("rw"), 200, seed=3)
    checkpoints = [1, 5, 20, 50, 120, 200]
    prev_nodes, prev_edges = 0, 0
    for w, r in reconstruct_prefixes(seq, checkpoints):
        assert r.graph.n >= prev_nodes
        assert r.graph.m >= prev_edges
        prev_nodes, prev_edges = r.graph.n, r.graph.m


def test_prefix_checkpoints_validated():
    with pytest.raises(ValueError):
        reconstruct_prefixes([0, 1], [0, 2])
