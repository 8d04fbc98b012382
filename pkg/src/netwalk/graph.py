"""Immutable undirected simple graph with dense integer node ids, plus
edge-list file I/O and connectivity utilities."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence


class EdgeListParseError(ValueError):
    """Raised when an edge-list line does not have exactly two tokens."""

    def __init__(self, line_number: int, line: str):
        self.line_number = line_number
        self.line = line
        super().__init__(f"line {line_number}: expected two tokens, got {line!r}")


class Graph:
    """Undirected, unweighted simple graph over nodes 0..n-1.

    Immutable after construction; safe to share across threads/processes.
    Self-loops and duplicate edges passed to the constructor are dropped.
    """

    __slots__ = ("n", "m", "adj", "_degrees")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]]):
        if n < 0:
            raise ValueError("node count must be nonnegative")
        neighbor_sets: list[set[int]] = [set() for _ in range(n)]
        m = 0
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v or v in neighbor_sets[u]:
                continue
            neighbor_sets[u].add(v)
            neighbor_sets[v].add(u)
            m += 1
        self.n = n
        self.m = m
        self.adj: tuple[tuple[int, ...], ...] = tuple(
            tuple(sorted(s)) for s in neighbor_sets
        )
        self._degrees: tuple[int, ...] = tuple(len(a) for a in self.adj)

    def degree(self, i: int) -> int:
        if not (0 <= i < self.n):
            raise IndexError(f"node id {i} out of range for n={self.n}")
        return self._degrees[i]

    @property
    def degrees(self) -> tuple[int, ...]:
        return self._degrees

    def neighbors(self, i: int) -> tuple[int, ...]:
        if not (0 <= i < self.n):
            raise IndexError(f"node id {i} out of range for n={self.n}")
        return self.adj[i]

    def has_edge(self, u: int, v: int) -> bool:
        if self._degrees[u] > self._degrees[v]:
            u, v = v, u
        return v in self.adj[u]

    def edges(self) -> Iterable[tuple[int, int]]:
        """Yield each undirected edge once as (u, v) with u < v."""
        for u in range(self.n):
            for v in self.adj[u]:
                if u < v:
                    yield u, v

    def edge_set(self) -> set[tuple[int, int]]:
        return set(self.edges())

    def is_connected(self) -> bool:
        if self.n == 0:
            return True
        return len(bfs_order(self, 0)) == self.n

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and self.adj == other.adj

    def __hash__(self):
        return hash(self.adj)


@dataclass
class EdgeListResult:
    """Parsed edge list: graph plus the label <-> id side table."""

    graph: Graph
    labels: list[str]  # id -> original label
    label_to_id: dict[str, int] = field(repr=False, default_factory=dict)
    dropped_self_loops: int = 0
    dropped_duplicates: int = 0


def graph_from_edge_list(text: str) -> EdgeListResult:
    """Parse an edge-list document into a Graph.

    One edge per line, two whitespace-separated labels; '#' lines and blank
    lines are ignored. Labels are compacted to ids 0..n-1 in order of first
    appearance. Duplicate edges and self-loops are dropped (counts reported).
    """
    label_to_id: dict[str, int] = {}
    labels: list[str] = []
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    self_loops = 0
    duplicates = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if len(tokens) != 2:
            raise EdgeListParseError(lineno, raw)
        ids = []
        for tok in tokens:
            if tok not in label_to_id:
                label_to_id[tok] = len(labels)
                labels.append(tok)
            ids.append(label_to_id[tok])
        u, v = ids
        if u == v:
            self_loops += 1
            continue
        key = (u, v) if u < v else (v, u)
        if key in seen:
            duplicates += 1
            continue
        seen.add(key)
        edges.append(key)
    graph = Graph(len(labels), edges)
    return EdgeListResult(
        graph=graph,
        labels=labels,
        label_to_id=label_to_id,
        dropped_self_loops=self_loops,
        dropped_duplicates=duplicates,
    )


def read_edge_list(path) -> EdgeListResult:
    with open(path, "r", encoding="utf-8") as fh:
        return graph_from_edge_list(fh.read())


def write_edge_list(graph: Graph, path, labels: Optional[Sequence[str]] = None) -> None:
    """Write a graph as an edge-list file, optionally restoring labels."""
    with open(path, "w", encoding="utf-8") as fh:
        for u, v in graph.edges():
            if labels is not None:
                fh.write(f"{labels[u]} {labels[v]}\n")
            else:
                fh.write(f"{u} {v}\n")


def bfs_order(graph: Graph, source: int) -> list[int]:
    """Nodes reachable from source, in BFS order."""
    visited = [False] * graph.n
    visited[source] = True
    order = [source]
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for v in graph.adj[u]:
            if not visited[v]:
                visited[v] = True
                order.append(v)
                queue.append(v)
    return order


def bfs_distances(graph: Graph, source: int) -> list[int]:
    """Shortest-path distance from source to every node; -1 if unreachable."""
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


def connected_components(graph: Graph) -> list[list[int]]:
    """Connected components as sorted node lists, ordered by smallest member."""
    seen = [False] * graph.n
    components = []
    for start in range(graph.n):
        if seen[start]:
            continue
        comp = bfs_order(graph, start)
        for node in comp:
            seen[node] = True
        components.append(sorted(comp))
    return components


def largest_connected_component(graph: Graph) -> tuple[Graph, list[int]]:
    """Return the largest connected component and its id map.

    The map is a list: new id -> original id. Ties on component size are
    broken by the lowest contained original id. New ids preserve the
    ascending order of the original ids, so a connected input yields the
    identity map.
    """
    if graph.n < 1:
        raise ValueError("graph must have at least one node")
    components = connected_components(graph)
    best = max(components, key=lambda c: (len(c), -c[0]))
    old_to_new = {old: new for new, old in enumerate(best)}
    edges = [
        (old_to_new[u], old_to_new[v])
        for u, v in graph.edges()
        if u in old_to_new and v in old_to_new
    ]
    return Graph(len(best), edges), best
