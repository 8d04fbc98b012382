"""Per-node structural metrics: degree, clustering, closeness, betweenness
(Brandes), eccentricity and coreness."""

from __future__ import annotations

import heapq
from collections import deque
from dataclasses import dataclass

from netwalk.graph import Graph

METRIC_NAMES = ("degree", "clustering", "closeness", "betweenness", "eccentricity", "coreness")


@dataclass(frozen=True)
class NodeMetricVector:
    """Per-node values of one named metric over one graph."""

    metric: str
    values: tuple[float, ...]
    graph_ref: str = ""

    def is_constant(self) -> bool:
        """Constant vectors make downstream correlations undefined."""
        return len(set(self.values)) <= 1


def degree_all(graph: Graph) -> list[float]:
    return [float(d) for d in graph.degrees]


def clustering_all(graph: Graph) -> list[float]:
    """Local clustering C_i = 2*T_i / (k_i*(k_i-1)); 0 when k_i < 2."""
    values = []
    for i in range(graph.n):
        neighbors = graph.adj[i]
        k = len(neighbors)
        if k < 2:
            values.append(0.0)
            continue
        nbset = set(neighbors)
        # each edge among neighbors is counted twice in this sum
        links2 = sum(sum(1 for l in graph.adj[j] if l in nbset) for j in neighbors)
        values.append(links2 / (k * (k - 1)))
    return values


def _bfs(graph: Graph, source: int) -> list[int]:
    dist = [-1] * graph.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for v in graph.adj[u]:
            if dist[v] < 0:
                dist[v] = dist[u] + 1
                queue.append(v)
    return dist


def closeness_all(graph: Graph) -> list[float]:
    """Component-size-scaled closeness (Wasserman-Faust).

    For node i with reachable set of size r_i (excluding i) and distance sum
    S_i: (r_i / (n-1)) * (r_i / S_i). Reduces to (n-1)/S on connected
    graphs; isolated nodes get 0.
    """
    n = graph.n
    values = []
    for i in range(n):
        dist = _bfs(graph, i)
        reachable = [d for d in dist if d > 0]
        if not reachable or n == 1:
            values.append(0.0)
            continue
        r = len(reachable)
        values.append((r / (n - 1)) * (r / sum(reachable)))
    return values


def betweenness_all(graph: Graph) -> list[float]:
    """Shortest-path betweenness (Brandes), endpoints excluded, normalized
    by (n-1)(n-2)/2. All zeros for n < 3."""
    n = graph.n
    score = [0.0] * n
    if n < 3:
        return score
    for s in range(n):
        stack: list[int] = []
        preds: list[list[int]] = [[] for _ in range(n)]
        sigma = [0.0] * n
        dist = [-1] * n
        sigma[s] = 1.0
        dist[s] = 0
        queue = deque([s])
        while queue:
            v = queue.popleft()
            stack.append(v)
            for w in graph.adj[v]:
                if dist[w] < 0:
                    dist[w] = dist[v] + 1
                    queue.append(w)
                if dist[w] == dist[v] + 1:
                    sigma[w] += sigma[v]
                    preds[w].append(v)
        delta = [0.0] * n
        while stack:
            w = stack.pop()
            coeff = (1.0 + delta[w]) / sigma[w] if sigma[w] else 0.0
            for v in preds[w]:
                delta[v] += sigma[v] * coeff
            if w != s:
                score[w] += delta[w]
        # each unordered pair counted from both endpoints
    norm = (n - 1) * (n - 2)  # == 2 * (n-1)(n-2)/2, absorbing the double count
    return [x / norm for x in score]


def eccentricity_all(graph: Graph) -> list[float]:
    """Maximum BFS distance within the node's component; isolated nodes 0."""
    values = []
    for i in range(graph.n):
        dist = _bfs(graph, i)
        values.append(float(max((d for d in dist if d > 0), default=0)))
    return values


def coreness_all(graph: Graph) -> list[float]:
    """k-core index by iterative minimum-degree peeling (lazy min-heap)."""
    n = graph.n
    degree = [graph.degree(i) for i in range(n)]
    core = [0] * n
    removed = [False] * n
    heap = [(d, v) for v, d in enumerate(degree)]
    heapq.heapify(heap)
    level = 0
    while heap:
        d, v = heapq.heappop(heap)
        if removed[v] or d != degree[v]:
            continue  # stale entry
        removed[v] = True
        level = max(level, d)
        core[v] = level
        for u in graph.adj[v]:
            if not removed[u]:
                degree[u] -= 1
                heapq.heappush(heap, (degree[u], u))
    return [float(c) for c in core]


_METRIC_FUNCS = {
    "degree": degree_all,
    "clustering": clustering_all,
    "closeness": closeness_all,
    "betweenness": betweenness_all,
    "eccentricity": eccentricity_all,
    "coreness": coreness_all,
}


def compute_metric(graph: Graph, metric: str, graph_ref: str = "") -> NodeMetricVector:
    """Compute one named metric as a NodeMetricVector."""
    if metric not in _METRIC_FUNCS:
        raise ValueError(f"unknown metric {metric!r}; choose from {METRIC_NAMES}")
    return NodeMetricVector(
        metric=metric, values=tuple(_METRIC_FUNCS[metric](graph)), graph_ref=graph_ref
    )
