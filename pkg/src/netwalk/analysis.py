"""Original-vs-reconstructed comparison: matched-node Pearson/Spearman
correlations, partition NMI, and recovery-vs-walk-length series."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from netwalk.communities import Partition, detect_communities
from netwalk.dynamics import DynamicsId, generate_sequence
from netwalk.graph import Graph
from netwalk.metrics import compute_metric
from netwalk.reconstruction import ReconstructedGraph, knowledge_fraction, reconstruct


@dataclass(frozen=True)
class CorrelationResult:
    """Pearson/Spearman correlation of one metric over matched nodes.

    pearson/spearman are None when undefined (constant vector or fewer
    than two matched nodes)."""

    metric: str
    pearson: Optional[float]
    spearman: Optional[float]
    n_matched: int


@dataclass(frozen=True)
class RecoveryPoint:
    """One cell of a recovery sweep."""

    w: int
    realization: int
    knowledge: float
    correlation: CorrelationResult
    nmi: Optional[float] = None


def pearson(x: Sequence[float], y: Sequence[float]) -> Optional[float]:
    """Product-moment correlation; None if undefined (zero variance, n < 2)."""
    n = len(x)
    if n != len(y):
        raise ValueError("vectors must have equal length")
    if n < 2:
        return None
    mx = sum(x) / n
    my = sum(y) / n
    sxx = sum((a - mx) ** 2 for a in x)
    syy = sum((b - my) ** 2 for b in y)
    if sxx == 0.0 or syy == 0.0:
        return None
    sxy = sum((a - mx) * (b - my) for a, b in zip(x, y))
    return sxy / math.sqrt(sxx * syy)


def _average_ranks(x: Sequence[float]) -> list[float]:
    """Ranks 1..n with ties assigned the mean rank."""
    order = sorted(range(len(x)), key=lambda i: x[i])
    ranks = [0.0] * len(x)
    i = 0
    while i < len(order):
        j = i
        while j + 1 < len(order) and x[order[j + 1]] == x[order[i]]:
            j += 1
        mean_rank = (i + j) / 2.0 + 1.0
        for k in range(i, j + 1):
            ranks[order[k]] = mean_rank
        i = j + 1
    return ranks


def spearman(x: Sequence[float], y: Sequence[float]) -> Optional[float]:
    """Pearson correlation of average-ranked data."""
    if len(x) != len(y):
        raise ValueError("vectors must have equal length")
    if len(x) < 2:
        return None
    return pearson(_average_ranks(x), _average_ranks(y))


def matched_metric_correlation(
    original: Graph,
    recon: ReconstructedGraph,
    metric: str,
    original_values: Optional[Sequence[float]] = None,
) -> CorrelationResult:
    """Correlate a metric between the reconstruction and the original,
    aligned over exactly the reconstructed nodes.

    original_values, when given, must be the metric on the full original
    graph (cached by callers to avoid recomputation)."""
    if original_values is None:
        original_values = compute_metric(original, metric).values
    recon_values = compute_metric(recon.graph, metric).values
    matched_original = [original_values[orig] for orig in recon.to_original]
    n_matched = len(recon_values)
    if n_matched < 2:
        return CorrelationResult(metric, None, None, n_matched)
    return CorrelationResult(
        metric=metric,
        pearson=pearson(list(recon_values), matched_original),
        spearman=spearman(list(recon_values), matched_original),
        n_matched=n_matched,
    )


def nmi(p: Partition, q: Partition) -> float:
    """Normalized mutual information 2I/(H(p)+H(q)) between hard partitions.

    Defined as 1.0 when both are identical single-block partitions and 0.0
    when one entropy is zero but the partitions differ."""
    if len(p) != len(q):
        raise ValueError("partitions must cover the same node universe")
    n = len(p)
    if n == 0:
        raise ValueError("partitions are empty")
    counts_p: dict[int, int] = {}
    counts_q: dict[int, int] = {}
    joint: dict[tuple[int, int], int] = {}
    for a, b in zip(p.membership, q.membership):
        counts_p[a] = counts_p.get(a, 0) + 1
        counts_q[b] = counts_q.get(b, 0) + 1
        joint[(a, b)] = joint.get((a, b), 0) + 1

    def entropy(counts: dict[int, int]) -> float:
        return -sum((c / n) * math.log(c / n) for c in counts.values() if c)

    hp, hq = entropy(counts_p), entropy(counts_q)
    if hp == 0.0 and hq == 0.0:
        return 1.0  # both single-block over the same universe
    if hp == 0.0 or hq == 0.0:
        return 0.0
    mi = 0.0
    for (a, b), c in joint.items():
        pab = c / n
        mi += pab * math.log(pab * n * n / (counts_p[a] * counts_q[b]))
    return max(0.0, min(1.0, 2.0 * mi / (hp + hq)))


def restrict_partition(p: Partition, node_subset: Sequence[int]) -> Partition:
    """Partition induced on a node subset (given in the subset's order)."""
    return Partition.from_membership([p.membership[i] for i in node_subset])


def recovery_series(
    graph: Graph,
    dynamics: DynamicsId,
    metric: str,
    w_grid: Sequence[int],
    realizations: int,
    seed: int,
    reference_partition: Optional[Partition] = None,
    compute_nmi: bool = False,
    original_values: Optional[Sequence[float]] = None,
) -> list[RecoveryPoint]:
    """Recovery sweep: correlation and knowledge at each walk length.

    Each realization is one long walk of max(w_grid) nodes, sampled at the
    grid checkpoints (prefixes), so knowledge is non-decreasing within a
    realization. Per-realization seeds derive from (seed, realization).
    Undefined correlations are carried as None, never aborting the sweep.
    """
    if not w_grid:
        raise ValueError("w_grid is empty")
    if realizations < 1:
        raise ValueError("need at least one realization")
    grid = sorted(w_grid)
    if original_values is None:
        original_values = compute_metric(graph, metric).values
    if compute_nmi and reference_partition is None:
        reference_partition = detect_communities(graph, seed=seed)
    points: list[RecoveryPoint] = []
    for realization in range(realizations):
        walk_seed = derive_seed(seed, realization)
        sequence = generate_sequence(graph, dynamics, grid[-1], walk_seed)
        for w in grid:
            recon = reconstruct(sequence.nodes[:w])
            corr = matched_metric_correlation(graph, recon, metric, original_values)
            value_nmi = None
            if compute_nmi and reference_partition is not None and recon.graph.n >= 2:
                recon_part = detect_communities(recon.graph, seed=walk_seed)
                ref_part = restrict_partition(reference_partition, recon.to_original)
                value_nmi = nmi(recon_part, ref_part)
            points.append(
                RecoveryPoint(
                    w=w,
                    realization=realization,
                    knowledge=knowledge_fraction(recon, graph),
                    correlation=corr,
                    nmi=value_nmi,
                )
            )
    return points


def derive_seed(master: int, *indices: int) -> int:
    """Stable per-cell seed from a master seed and canonical indices."""
    ss = np.random.SeedSequence(entropy=master, spawn_key=tuple(indices))
    return int(ss.generate_state(2, dtype=np.uint64)[0])


def mean_over_realizations(points: list[RecoveryPoint]) -> dict[int, dict[str, Optional[float]]]:
    """Mean knowledge/pearson/spearman/nmi per walk length, skipping
    undefined values."""
    by_w: dict[int, list[RecoveryPoint]] = {}
    for pt in points:
        by_w.setdefault(pt.w, []).append(pt)

    def mean(values):
        values = [v for v in values if v is not None]
        return sum(values) / len(values) if values else None

    out = {}
    for w, pts in sorted(by_w.items()):
        out[w] = {
            "knowledge": mean([p.knowledge for p in pts]),
            "pearson": mean([p.correlation.pearson for p in pts]),
            "spearman": mean([p.correlation.spearman for p in pts]),
            "nmi": mean([p.nmi for p in pts]),
        }
    return out
