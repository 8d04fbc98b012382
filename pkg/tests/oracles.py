"""Independent brute-force reference implementations used as test oracles.

Everything here is definitional and deliberately slow: all-pairs BFS,
explicit shortest-path enumeration, exhaustive partition search. These
never share code with the library paths they check.
"""

from __future__ import annotations

import itertools
import random
from collections import deque

from netwalk.graph import Graph


def random_connected_graph(rng: random.Random, n_max: int = 50, k_avg: float = 3.0) -> Graph:
    """Small connected ER-ish graph: resample until connected."""
    while True:
        n = rng.randint(5, n_max)
        p = min(1.0, k_avg / (n - 1))
        edges = [
            (i, j)
            for i in range(n)
            for j in range(i + 1, n)
            if rng.random() < p
        ]
        g = Graph(n, edges)
        if g.is_connected():
            return g


def bfs_distances(g: Graph, s: int) -> list[int]:
    dist = [-1] * g.n
    dist[s] = 0
    q = deque([s])
    while q:
        u = q.popleft()
        for v in g.adj[u]:
            if dist[v] < 0:
                dist[v] = dist[u] + 1
                q.append(v)
    return dist


def oracle_degree(g: Graph) -> list[float]:
    return [float(len(g.adj[i])) for i in range(g.n)]


def oracle_clustering(g: Graph) -> list[float]:
    out = []
    for i in range(g.n):
        nb = g.adj[i]
        k = len(nb)
        if k < 2:
            out.append(0.0)
            continue
        triangles = sum(
            1 for a, b in itertools.combinations(nb, 2) if b in set(g.adj[a])
        )
        out.append(2.0 * triangles / (k * (k - 1)))
    return out


def oracle_closeness(g: Graph) -> list[float]:
    out = []
    for i in range(g.n):
        dist = bfs_distances(g, i)
        reach = [d for d in dist if d > 0]
        if not reach or g.n == 1:
            out.append(0.0)
            continue
        r = len(reach)
        out.append((r / (g.n - 1)) * (r / sum(reach)))
    return out


def oracle_eccentricity(g: Graph) -> list[float]:
    out = []
    for i in range(g.n):
        dist = bfs_distances(g, i)
        out.append(float(max((d for d in dist if d > 0), default=0)))
    return out


def all_shortest_paths(g: Graph, s: int, t: int) -> list[list[int]]:
    """Every shortest s-t path, by DFS over the BFS predecessor DAG."""
    dist = bfs_distances(g, s)
    if dist[t] < 0:
        return []
    paths = []

    def walk_back(node, suffix):
        if node == s:
            paths.append([s] + suffix)
            return
        for p in g.adj[node]:
            if dist[p] == dist[node] - 1:
                walk_back(p, [node] + suffix)

    walk_back(t, [])
    return paths


def oracle_betweenness(g: Graph) -> list[float]:
    """Normalized betweenness by explicit enumeration of all shortest paths."""
    n = g.n
    score = [0.0] * n
    if n < 3:
        return score
    for s in range(n):
        for t in range(s + 1, n):
            paths = all_shortest_paths(g, s, t)
            if not paths:
                continue
            for path in paths:
                for interior in path[1:-1]:
                    score[interior] += 1.0 / len(paths)
    norm = (n - 1) * (n - 2) / 2.0
    return [x / norm for x in score]


def oracle_pair_interior_total(g: Graph) -> float:
    """Sum over pairs of the average interior-node count per shortest path."""
    total = 0.0
    for s in range(g.n):
        for t in range(s + 1, g.n):
            paths = all_shortest_paths(g, s, t)
            if paths:
                total += sum(len(p) - 2 for p in paths) / len(paths)
    return total


def oracle_coreness(g: Graph) -> list[float]:
    """Peel by repeatedly deleting all nodes of degree <= k."""
    alive = set(range(g.n))
    core = [0] * g.n
    k = 0
    while alive:
        while True:
            victims = [v for v in alive if sum(1 for u in g.adj[v] if u in alive) <= k]
            if not victims:
                break
            for v in victims:
                core[v] = k
                alive.discard(v)
        k += 1
    return [float(c) for c in core]


def set_partitions(items: list[int]):
    """All set partitions of a list (Bell-number many; keep inputs tiny)."""
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for smaller in set_partitions(rest):
        for i in range(len(smaller)):
            yield smaller[:i] + [smaller[i] + [first]] + smaller[i + 1 :]
        yield [[first]] + smaller


def oracle_best_modularity_partition(g: Graph) -> tuple[list[int], float]:
    """Exhaustive modularity maximization; feasible up to ~8 nodes."""
    best_q, best_mem = -2.0, None
    m = g.m
    degree = [len(g.adj[i]) for i in range(g.n)]
    for blocks in set_partitions(list(range(g.n))):
        mem = [0] * g.n
        for c, block in enumerate(blocks):
            for v in block:
                mem[v] = c
        intra = sum(1 for u, v in g.edges() if mem[u] == mem[v])
        sums = {}
        for v in range(g.n):
            sums[mem[v]] = sums.get(mem[v], 0) + degree[v]
        q = intra / m - sum(s * s for s in sums.values()) / (4.0 * m * m)
        if q > best_q:
            best_q, best_mem = q, mem
    return best_mem, best_q
