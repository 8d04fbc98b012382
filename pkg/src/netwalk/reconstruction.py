"""Co-occurrence reconstruction: build a graph from the adjacent pairs of a
walk sequence and measure knowledge acquisition."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from netwalk.graph import Graph


@dataclass(frozen=True)
class ReconstructedGraph:
    """A reconstructed graph plus the id maps back to the original graph.

    Recon ids are assigned in first-visit order; to_original[r] is the
    original id of recon node r, from_original its (partial) inverse.
    """

    graph: Graph
    to_original: tuple[int, ...]
    from_original: dict[int, int]

    @property
    def n(self) -> int:
        return self.graph.n


def reconstruct(sequence) -> ReconstructedGraph:
    """Link every pair of consecutively visited nodes.

    Accepts a WalkSequence or any sequence of original node ids. Repeat
    traversals collapse (unweighted); defensive drop of (x, x) pairs.
    """
    nodes: Sequence[int] = getattr(sequence, "nodes", sequence)
    if len(nodes) == 0:
        raise ValueError("sequence is empty")
    from_original: dict[int, int] = {}
    to_original: list[int] = []
    edges: set[tuple[int, int]] = set()
    prev = None
    for original in nodes:
        if original not in from_original:
            from_original[original] = len(to_original)
            to_original.append(original)
        if prev is not None and prev != original:
            u, v = from_original[prev], from_original[original]
            edges.add((u, v) if u < v else (v, u))
        prev = original
    graph = Graph(len(to_original), sorted(edges))
    return ReconstructedGraph(
        graph=graph, to_original=tuple(to_original), from_original=from_original
    )


def knowledge_fraction(recon: ReconstructedGraph, original: Graph) -> float:
    """Fraction of the original graph's nodes present in the reconstruction."""
    return recon.graph.n / original.n


def reconstruct_prefixes(
    nodes: Sequence[int], checkpoints: Iterable[int]
) -> list[tuple[int, ReconstructedGraph]]:
    """Reconstructions of walk prefixes at the given lengths (ascending).

    Checkpoints beyond the walk length reuse the full walk.
    """
    nodes = getattr(nodes, "nodes", nodes)
    checkpoints = sorted(set(checkpoints))
    if not checkpoints or checkpoints[0] < 1:
        raise ValueError("checkpoints must be positive")
    out = []
    for w in checkpoints:
        out.append((w, reconstruct(nodes[: min(w, len(nodes))])))
    return out
