import random

import pytest

from netwalk.graph import (
    EdgeListParseError,
    Graph,
    bfs_distances,
    graph_from_edge_list,
    largest_connected_component,
    read_edge_list,
    write_edge_list,
)

from pathlib import Path

SAMPLE = Path(__file__).resolve().parent.parent / "src" / "netwalk" / "data" / "sample_social.txt"


def test_path_of_three():
    result = graph_from_edge_list("0 1\n1 2")
    g = result.graph
    assert g.n == 3
    assert g.m == 2
    assert g.adj[result.label_to_id["1"]] == (
        result.label_to_id["0"],
        result.label_to_id["2"],
    )


def test_dedup_and_self_loop():
    result = graph_from_edge_list("a b\nb a\na a")
    assert result.graph.n == 2
    assert result.graph.m == 1
    assert result.dropped_duplicates == 1
    assert result.dropped_self_loops == 1


def test_bundled_sample_counts():
    result = read_edge_list(SAMPLE)
    assert result.graph.n == 34
    assert result.graph.m == 78


def test_malformed_line_reports_number():
    with pytest.raises(EdgeListParseError) as err:
        graph_from_edge_list("0 1\n0 1 2\n")
    assert err.value.line_number == 2


def test_comments_and_blanks_ignored():
    result = graph_from_edge_list("# header\n\n0 1\n")
    assert result.graph.m == 1


def test_handshake_identity_random():
    rng = random.Random(7)
    for _ in range(20):
        n = rng.randint(2, 40)
        edges = [(rng.randrange(n), rng.randrange(n)) for _ in range(3 * n)]
        g = Graph(n, edges)
        assert sum(g.degree(i) for i in range(n)) == 2 * g.m


def test_roundtrip_idempotent(tmp_path):
    result = read_edge_list(SAMPLE)
    out = tmp_path / "again.txt"
    write_edge_list(result.graph, out, labels=result.labels)
    again = read_edge_list(out)
    # same label universe, same edges under the label map
    assert set(again.labels) == set(result.labels)
    orig_edges = {
        frozenset((result.labels[u], result.labels[v])) for u, v in result.graph.edges()
    }
    new_edges = {
        frozenset((again.labels[u], again.labels[v])) for u, v in again.graph.edges()
    }
    assert orig_edges == new_edges


def test_degree_examples():
    triangle = Graph(3, [(0, 1), (1, 2), (2, 0)])
    assert all(triangle.degree(i) == 2 for i in range(3))
    star = Graph(6, [(0, i) for i in range(1, 6)])
    assert star.degree(0) == 5
    assert star.degree(3) == 1
    with pytest.raises(IndexError):
        star.degree(6)


def test_lcc_two_triangles_tie():
    g = Graph(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)])
    lcc, id_map = largest_connected_component(g)
    assert lcc.n == 3
    assert id_map == [0, 1, 2]  # tie broken by lowest contained original id


def test_lcc_connected_identity():
    g = Graph(4, [(0, 1), (1, 2), (2, 3)])
    lcc, id_map = largest_connected_component(g)
    assert id_map == [0, 1, 2, 3]
    assert lcc == g


def test_lcc_path_plus_isolated():
    g = Graph(6, [(0, 1), (1, 2), (2, 3), (3, 4)])
    lcc, id_map = largest_connected_component(g)
    assert lcc.n == 5
    assert id_map == [0, 1, 2, 3, 4]
    # output admits a path between every node pair
    for s in range(lcc.n):
        assert all(d >= 0 for d in bfs_distances(lcc, s))
