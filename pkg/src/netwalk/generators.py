"""Seeded generators for the four synthetic topologies: Erdos-Renyi,
Barabasi-Albert, Waxman (geographic) and a simplified LFR benchmark."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from netwalk.graph import Graph
from netwalk.communities import Partition

WAXMAN_ALPHA_DEFAULT = 0.1
LFR_REWIRE_SWEEPS = 100


class GenerationError(RuntimeError):
    """Raised when a generator cannot satisfy its target parameters."""


@dataclass
class GeneratorSpec:
    """Parameters for one synthetic topology."""

    model: str  # one of {"ER", "BA", "WAX", "LFR"}
    n: int
    k_avg: float
    seed: int = 0
    # BA
    attachments: Optional[int] = None  # defaults to round(k_avg / 2)
    # Waxman
    waxman_alpha: float = WAXMAN_ALPHA_DEFAULT
    waxman_beta: Optional[float] = None  # None -> auto-calibrated
    # LFR
    n_communities: int = 5
    degree_exponent: float = 3.0
    community_size_exponent: float = 0.0
    mu: float = 0.05

    def __post_init__(self):
        self.model = self.model.upper()
        if self.model not in {"ER", "BA", "WAX", "LFR"}:
            raise ValueError(f"unknown model {self.model!r}")
        if self.n < 10:
            raise ValueError("n must be at least 10")
        if self.k_avg <= 0:
            raise ValueError("k_avg must be positive")
        if self.model == "LFR" and not (0.0 <= self.mu <= 1.0):
            raise ValueError("mu must be in [0, 1]")


def generate(spec: GeneratorSpec):
    """Dispatch on spec.model; LFR returns (Graph, Partition), others Graph."""
    if spec.model == "ER":
        return gen_er(spec)
    if spec.model == "BA":
        return gen_ba(spec)
    if spec.model == "WAX":
        return gen_waxman(spec)
    return gen_lfr(spec)


def _rng(seed: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence(seed)))


def gen_er(spec: GeneratorSpec) -> Graph:
    """G(n, p) with p = k_avg / (n - 1), sampled pair by pair."""
    n = spec.n
    p = spec.k_avg / (n - 1)
    if p >= 1.0:
        raise ValueError("k_avg must be below n - 1")
    rng = _rng(spec.seed)
    iu, ju = np.triu_indices(n, k=1)
    mask = rng.random(iu.size) < p
    edges = list(zip(iu[mask].tolist(), ju[mask].tolist()))
    return Graph(n, edges)


def gen_ba(spec: GeneratorSpec) -> Graph:
    """Preferential-attachment growth from an (m+1)-clique seed.

    Each arriving node attaches m distinct edges; targets are drawn with
    probability proportional to current degree (roulette over a repeated
    node list, which stays proportional to the degree sum).
    """
    m = spec.attachments if spec.attachments is not None else round(spec.k_avg / 2)
    if m < 1:
        raise ValueError("attachments per new node must be >= 1")
    if spec.n <= m:
        raise ValueError("n must exceed the attachments count")
    rng = _rng(spec.seed)
    edges: list[tuple[int, int]] = []
    # repeated[i] appears once per unit of degree
    repeated: list[int] = []
    seed_size = m + 1
    for u in range(seed_size):
        for v in range(u + 1, seed_size):
            edges.append((u, v))
            repeated.append(u)
            repeated.append(v)
    for new in range(seed_size, spec.n):
        targets: set[int] = set()
        while len(targets) < m:
            targets.add(repeated[rng.integers(len(repeated))])
        for t in sorted(targets):
            edges.append((t, new))
            repeated.append(t)
            repeated.append(new)
    return Graph(spec.n, edges)


def _waxman_pair_weights(positions: np.ndarray, alpha: float) -> np.ndarray:
    """exp(-d_ij / (alpha * sqrt(2))) for all pairs i < j."""
    iu, ju = np.triu_indices(positions.shape[0], k=1)
    d = np.linalg.norm(positions[iu] - positions[ju], axis=1)
    return np.exp(-d / (alpha * math.sqrt(2.0)))


def calibrate_waxman_beta(
    weights: np.ndarray, target_edges: float, max_steps: int = 50, rel_tol: float = 1e-6
) -> float:
    """Bisect beta so the expected edge count sum(min(1, beta*w)) hits target."""

    def expected(beta: float) -> float:
        return float(np.minimum(1.0, beta * weights).sum())

    lo, hi = 0.0, 1.0
    while expected(hi) < target_edges:
        hi *= 2.0
        if hi > 1e12:
            raise GenerationError("Waxman beta calibration diverged")
    for _ in range(max_steps):
        mid = 0.5 * (lo + hi)
        value = expected(mid)
        if abs(value - target_edges) <= rel_tol * target_edges:
            return mid
        if value < target_edges:
            lo = mid
        else:
            hi = mid
    raise GenerationError(
        f"Waxman beta calibration did not converge in {max_steps} bisection steps"
    )


def gen_waxman(spec: GeneratorSpec) -> Graph:
    """Geographic model: nodes uniform in the unit square, link probability
    beta * exp(-d / (alpha * sqrt(2)))."""
    rng = _rng(spec.seed)
    positions = rng.random((spec.n, 2))
    weights = _waxman_pair_weights(positions, spec.waxman_alpha)
    if spec.waxman_beta is None:
        beta = calibrate_waxman_beta(weights, target_edges=spec.n * spec.k_avg / 2.0)
    else:
        beta = spec.waxman_beta
    probs = np.minimum(1.0, beta * weights)
    iu, ju = np.triu_indices(spec.n, k=1)
    mask = rng.random(probs.size) < probs
    edges = list(zip(iu[mask].tolist(), ju[mask].tolist()))
    return Graph(spec.n, edges)


def _sample_powerlaw_degrees(
    n: int, exponent: float, k_avg: float, rng: np.random.Generator
) -> np.ndarray:
    """Integer degree sequence ~ k^-exponent on [2, sqrt(n*k_avg)], rescaled
    so the mean lands within 5% of k_avg."""
    k_min, k_max = 2.0, math.sqrt(n * k_avg)
    if k_max <= k_min:
        raise GenerationError("degree range collapsed; increase n or k_avg")
    u = rng.random(n)
    a = 1.0 - exponent
    # inverse CDF of the truncated continuous power law
    raw = (k_min**a + u * (k_max**a - k_min**a)) ** (1.0 / a)
    scale = 1.0
    for _ in range(50):
        degrees = np.clip(np.rint(raw * scale), 2, int(k_max)).astype(int)
        mean = degrees.mean()
        if abs(mean - k_avg) <= 0.05 * k_avg:
            return degrees
        scale *= k_avg / mean
    raise GenerationError("could not rescale degree sequence to the target mean")


def _match_stubs(
    stubs: list[int],
    rng: np.random.Generator,
    existing: set[tuple[int, int]],
    forbid_same_block: Optional[np.ndarray] = None,
) -> list[tuple[int, int]]:
    """Configuration-model matching with rewiring of bad pairs.

    A pair is bad if it is a self-loop, a duplicate of an existing or already
    matched edge, or (when forbid_same_block is given) joins two nodes of the
    same block. Up to LFR_REWIRE_SWEEPS shuffle-and-swap passes; leftover bad
    pairs after that are dropped (reported by caller tolerance checks).
    """
    stubs = list(stubs)
    if len(stubs) % 2 == 1:
        stubs.pop()  # parity fixed by caller; defensive
    order = np.array(stubs)
    rng.shuffle(order)
    pairs = [(int(order[i]), int(order[i + 1])) for i in range(0, len(order), 2)]

    def canon(u: int, v: int) -> tuple[int, int]:
        return (u, v) if u < v else (v, u)

    def bad(u: int, v: int, accepted: set[tuple[int, int]]) -> bool:
        if u == v:
            return True
        key = canon(u, v)
        if key in existing or key in accepted:
            return True
        if forbid_same_block is not None and forbid_same_block[u] == forbid_same_block[v]:
            return True
        return False

    for _ in range(LFR_REWIRE_SWEEPS):
        accepted: set[tuple[int, int]] = set()
        bad_pairs = []
        for u, v in pairs:
            if bad(u, v, accepted):
                bad_pairs.append((u, v))
            else:
                accepted.add(canon(u, v))
        if not bad_pairs:
            return sorted(accepted)
        # swap partners between bad pairs and random good pairs
        good = sorted(accepted)
        new_pairs = []
        for u, v in bad_pairs:
            if good:
                idx = int(rng.integers(len(good)))
                a, b = good.pop(idx)
                if rng.random() < 0.5:
                    new_pairs.extend([(u, a), (v, b)])
                else:
                    new_pairs.extend([(u, b), (v, a)])
            else:
                new_pairs.append((v, u) if rng.random() < 0.5 else (u, v))
        pairs = good + new_pairs
    # final pass: keep whatever is valid
    accepted = set()
    for u, v in pairs:
        if not bad(u, v, accepted):
            accepted.add(canon(u, v))
    return sorted(accepted)


def gen_lfr(spec: GeneratorSpec) -> tuple[Graph, Partition]:
    """Simplified LFR benchmark: power-law degrees, equal-size planted
    communities, per-node intra/inter stub split at the mixing parameter,
    configuration-model matching with rewiring.

    Returns the graph and the planted membership. The inter-community stub
    count per node is mu*k with stochastic rounding, so realized mixing is
    unbiased around mu.
    """
    n, n_c, mu = spec.n, spec.n_communities, spec.mu
    rng = _rng(spec.seed)
    degrees = _sample_powerlaw_degrees(n, spec.degree_exponent, spec.k_avg, rng)

    # equal community sizes (community_size_exponent == 0); remainder spread
    base, extra = divmod(n, n_c)
    membership = np.repeat(np.arange(n_c), [base + (1 if c < extra else 0) for c in range(n_c)])

    # stochastic rounding keeps E[inter stubs] = mu * k per node
    exact = mu * degrees
    inter = np.floor(exact).astype(int)
    inter += (rng.random(n) < (exact - inter)).astype(int)
    inter = np.minimum(inter, degrees)
    intra = degrees - inter

    # parity fixes: intra stub total must be even per community, inter overall
    for c in range(n_c):
        members = np.flatnonzero(membership == c)
        if intra[members].sum() % 2 == 1:
            eligible = members[intra[members] > 0]
            j = eligible[int(rng.integers(len(eligible)))]
            if mu > 0:
                intra[j] -= 1
                inter[j] += 1
            else:
                intra[j] -= 1  # drop one stub; negligible at benchmark sizes
    if inter.sum() % 2 == 1:
        candidates = np.flatnonzero(inter > 0)
        j = candidates[int(rng.integers(len(candidates)))]
        inter[j] -= 1
        intra[j] += 1

    edges: set[tuple[int, int]] = set()
    for c in range(n_c):
        members = np.flatnonzero(membership == c)
        stubs = [int(i) for i in members for _ in range(intra[i])]
        edges.update(_match_stubs(stubs, rng, edges))
    if inter.sum() > 0:
        stubs = [int(i) for i in range(n) for _ in range(inter[i])]
        edges.update(_match_stubs(stubs, rng, edges, forbid_same_block=membership))

    target_m = int(degrees.sum()) // 2
    graph = Graph(n, sorted(edges))
    if graph.m < 0.9 * target_m:
        raise GenerationError(
            f"LFR stub matching lost too many edges ({graph.m} of {target_m})"
        )
    return graph, Partition.from_membership(membership.tolist())


def write_partition(partition: Partition, path) -> None:
    """Two-column 'node community' text export."""
    with open(path, "w", encoding="utf-8") as fh:
        for node, community in enumerate(partition.membership):
            fh.write(f"{node} {community}\n")
