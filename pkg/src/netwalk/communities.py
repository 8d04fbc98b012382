"""Community detection: modularity and a seeded Leiden implementation
(local moving, refinement, aggregation)."""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Optional, Sequence

from netwalk.graph import Graph

MAX_OUTER_ITERATIONS = 100


@dataclass(frozen=True)
class Partition:
    """Hard partition: membership[i] is the community of node i, ids 0..k-1."""

    membership: tuple[int, ...]
    k: int

    @classmethod
    def from_membership(cls, membership: Sequence[int]) -> "Partition":
        """Relabel arbitrary community ids to contiguous 0..k-1 (first-seen order)."""
        remap: dict[int, int] = {}
        compact = []
        for c in membership:
            if c not in remap:
                remap[c] = len(remap)
            compact.append(remap[c])
        return cls(membership=tuple(compact), k=len(remap))

    def __len__(self) -> int:
        return len(self.membership)

    def blocks(self) -> list[list[int]]:
        out: list[list[int]] = [[] for _ in range(self.k)]
        for node, c in enumerate(self.membership):
            out[c].append(node)
        return out


def modularity(graph: Graph, membership: Sequence[int]) -> float:
    """Newman modularity of a hard partition (resolution 1)."""
    m = graph.m
    if m == 0:
        return 0.0
    intra = 0
    for u, v in graph.edges():
        if membership[u] == membership[v]:
            intra += 1
    degree_sums: dict[int, int] = {}
    for node in range(graph.n):
        c = membership[node]
        degree_sums[c] = degree_sums.get(c, 0) + graph.degree(node)
    penalty = sum(s * s for s in degree_sums.values()) / (4.0 * m * m)
    return intra / m - penalty


class _Aggregate:
    """Weighted multigraph used internally across aggregation levels."""

    def __init__(self, n: int):
        self.n = n
        self.adj: list[dict[int, float]] = [dict() for _ in range(n)]
        self.strength = [0.0] * n
        self.self_loops = [0.0] * n  # full loop weight (counted twice in 2m)
        self.total = 0.0  # 2m equivalent

    @classmethod
    def from_graph(cls, graph: Graph) -> "_Aggregate":
        agg = cls(graph.n)
        for u, v in graph.edges():
            agg.adj[u][v] = agg.adj[u].get(v, 0.0) + 1.0
            agg.adj[v][u] = agg.adj[v].get(u, 0.0) + 1.0
            agg.strength[u] += 1.0
            agg.strength[v] += 1.0
            agg.total += 2.0
        return agg


def _local_move(agg: _Aggregate, membership: list[int], rng: random.Random) -> bool:
    """Queue-based greedy modularity moves; returns True if anything moved."""
    two_m = agg.total
    if two_m == 0:
        return False
    comm_strength: dict[int, float] = {}
    for node in range(agg.n):
        c = membership[node]
        comm_strength[c] = comm_strength.get(c, 0.0) + agg.strength[node]
    order = list(range(agg.n))
    rng.shuffle(order)
    queue = list(order)
    in_queue = [True] * agg.n
    moved_any = False
    head = 0
    while head < len(queue):
        node = queue[head]
        head += 1
        in_queue[node] = False
        current = membership[node]
        k_i = agg.strength[node]
        # weight to each neighboring community
        weights: dict[int, float] = {current: 0.0}
        for nb, w in agg.adj[node].items():
            if nb == node:
                continue
            c = membership[nb]
            weights[c] = weights.get(c, 0.0) + w
        comm_strength[current] -= k_i
        best_c, best_gain = current, weights.get(current, 0.0) - k_i * comm_strength[current] / two_m
        for c, w in sorted(weights.items()):
            gain = w - k_i * comm_strength.get(c, 0.0) / two_m
            if gain > best_gain + 1e-12:
                best_c, best_gain = c, gain
        membership[node] = best_c
        comm_strength[best_c] = comm_strength.get(best_c, 0.0) + k_i
        if best_c != current:
            moved_any = True
            for nb in agg.adj[node]:
                if nb != node and membership[nb] != best_c and not in_queue[nb]:
                    queue.append(nb)
                    in_queue[nb] = True
    return moved_any


def _refine(agg: _Aggregate, membership: list[int], rng: random.Random) -> list[int]:
    """Split each community into well-connected subcommunities.

    Starts from singletons and merges each node into a positive-gain
    subcommunity inside its local-move community, visiting nodes in a
    seeded random order.
    """
    two_m = agg.total
    refined = list(range(agg.n))
    sub_strength = list(agg.strength)
    order = list(range(agg.n))
    rng.shuffle(order)
    for node in order:
        if sub_strength[refined[node]] != agg.strength[node]:
            continue  # already merged into a larger subcommunity
        k_i = agg.strength[node]
        weights: dict[int, float] = {}
        for nb, w in agg.adj[node].items():
            if nb == node or membership[nb] != membership[node]:
                continue
            s = refined[nb]
            if s != refined[node]:
                weights[s] = weights.get(s, 0.0) + w
        best_s, best_gain = refined[node], 0.0
        for s, w in sorted(weights.items()):
            gain = w - k_i * sub_strength[s] / two_m
            if gain > best_gain + 1e-12:
                best_s, best_gain = s, gain
        if best_s != refined[node]:
            sub_strength[refined[node]] -= k_i
            sub_strength[best_s] += k_i
            refined[node] = best_s
    return refined


def _aggregate(
    agg: _Aggregate, refined: list[int], membership: list[int]
) -> tuple[_Aggregate, list[int]]:
    """Collapse refined subcommunities into super-nodes; carry the local-move
    communities over as the new initial membership."""
    remap: dict[int, int] = {}
    for node in range(agg.n):
        s = refined[node]
        if s not in remap:
            remap[s] = len(remap)
    new_n = len(remap)
    new_agg = _Aggregate(new_n)
    new_membership = [0] * new_n
    for node in range(agg.n):
        s = remap[refined[node]]
        new_membership[s] = membership[node]
        new_agg.strength[s] += agg.strength[node]
    for node in range(agg.n):
        su = remap[refined[node]]
        for nb, w in agg.adj[node].items():
            sv = remap[refined[nb]]
            if su == sv:
                if node < nb:
                    new_agg.self_loops[su] += w
            else:
                new_agg.adj[su][sv] = new_agg.adj[su].get(sv, 0.0) + w
    new_agg.total = agg.total
    return new_agg, new_membership


def detect_communities(graph: Graph, seed: int = 0, restarts: int = 3) -> Partition:
    """Leiden community detection optimizing modularity at resolution 1.

    Deterministic for a fixed seed: node orders are shuffled by a private
    RNG. Runs a few restarts with different shuffle orders and keeps the
    highest-modularity partition (greedy moves can stall in shallow local
    optima on small dense graphs).
    """
    if graph.n == 0:
        return Partition(membership=(), k=0)
    best: Optional[Partition] = None
    best_q = -2.0
    for attempt in range(max(1, restarts)):
        candidate = _leiden_once(graph, seed=seed * 1000003 + attempt)
        q = modularity(graph, candidate.membership)
        if q > best_q + 1e-12:
            best, best_q = candidate, q
    assert best is not None
    return best


def _leiden_once(graph: Graph, seed: int) -> Partition:
    rng = random.Random(seed)
    agg = _Aggregate.from_graph(graph)
    membership = list(range(agg.n))
    # original node -> current-level super-node
    assignment = list(range(graph.n))
    for _ in range(MAX_OUTER_ITERATIONS):
        moved = _local_move(agg, membership, rng)
        if not moved and agg.n == len(set(membership)):
            break  # every community is a single super-node and stable
        refined = _refine(agg, membership, rng)
        new_agg, new_membership = _aggregate(agg, refined, membership)
        if new_agg.n == agg.n and not moved:
            break
        remap: dict[int, int] = {}
        for node in range(agg.n):
            s = refined[node]
            if s not in remap:
                remap[s] = len(remap)
        assignment = [remap[refined[assignment[orig]]] for orig in range(graph.n)]
        agg, membership = new_agg, new_membership
    flat = [membership[assignment[orig]] for orig in range(graph.n)]
    return Partition.from_membership(flat)
