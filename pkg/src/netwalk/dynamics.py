"""Walk dynamics: per-step transition rules over a graph and sequence
generation. Five rules: uniform (rw), degree-biased (rwd), inverse-degree
(rwid), and the two true self-avoiding variants (tsaw-node, tsaw-edge)."""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from typing import Optional

from netwalk.graph import Graph

LAMBDA_DEFAULT = math.log(2.0)

DYNAMICS_NAMES = ("rw", "rwd", "rwid", "tsaw-node", "tsaw-edge")


class DeadEndError(RuntimeError):
    """Walker sits on an isolated node; cannot happen on a connected graph."""


@dataclass(frozen=True)
class DynamicsId:
    """A walk rule plus its avoidance strength (TSAW variants only)."""

    kind: str
    lam: float = LAMBDA_DEFAULT

    def __post_init__(self):
        if self.kind not in DYNAMICS_NAMES:
            raise ValueError(f"unknown dynamics {self.kind!r}; choose from {DYNAMICS_NAMES}")
        if self.lam < 0:
            raise ValueError("lambda must be nonnegative")

    @classmethod
    def from_name(cls, name: str, lam: float = LAMBDA_DEFAULT) -> "DynamicsId":
        return cls(kind=name.lower().replace("_", "-"), lam=lam)


@dataclass
class WalkerState:
    """Mutable per-walk memory: current node, visit counters, step count."""

    current: int
    node_visits: dict[int, int] = field(default_factory=dict)
    edge_visits: dict[tuple[int, int], int] = field(default_factory=dict)
    steps_taken: int = 0

    @classmethod
    def start_at(cls, node: int) -> "WalkerState":
        return cls(current=node, node_visits={node: 1})

    def record_step(self, target: int) -> None:
        key = (self.current, target) if self.current < target else (target, self.current)
        self.edge_visits[key] = self.edge_visits.get(key, 0) + 1
        self.node_visits[target] = self.node_visits.get(target, 0) + 1
        self.current = target
        self.steps_taken += 1


@dataclass(frozen=True)
class WalkSequence:
    """Ordered visited nodes plus provenance."""

    nodes: tuple[int, ...]
    dynamics: DynamicsId
    seed: int
    graph_ref: Optional[str] = None

    def __len__(self) -> int:
        return len(self.nodes)


def _transition_weights(graph: Graph, state: WalkerState, dynamics: DynamicsId) -> list[float]:
    """Unnormalized transition weights aligned with graph.neighbors(current)."""
    neighbors = graph.adj[state.current]
    if not neighbors:
        raise DeadEndError(f"node {state.current} has no neighbors")
    kind = dynamics.kind
    if kind == "rw":
        return [1.0] * len(neighbors)
    if kind == "rwd":
        return [float(graph.degree(j)) for j in neighbors]
    if kind == "rwid":
        return [1.0 / graph.degree(j) for j in neighbors]
    if kind == "tsaw-node":
        lam = dynamics.lam
        visits = state.node_visits
        return [math.exp(-lam * visits.get(j, 0)) for j in neighbors]
    # tsaw-edge
    lam = dynamics.lam
    i = state.current
    edge_visits = state.edge_visits
    return [
        math.exp(-lam * edge_visits.get((i, j) if i < j else (j, i), 0))
        for j in neighbors
    ]


def transition_distribution(graph: Graph, state: WalkerState, dynamics: DynamicsId) -> list[float]:
    """Transition probabilities over the neighbors of the current node,
    in neighbor-list order. Sums to 1 within 1e-12."""
    weights = _transition_weights(graph, state, dynamics)
    total = sum(weights)
    return [w / total for w in weights]


def generate_sequence(
    graph: Graph,
    dynamics: DynamicsId,
    w: int,
    seed: int,
    graph_ref: Optional[str] = None,
    start: Optional[int] = None,
) -> WalkSequence:
    """Walk w nodes (w-1 traversals) under the given dynamics.

    The start node is drawn uniformly unless given. Sampling is
    cumulative-sum inversion over the neighbor list, one private RNG per
    walk, so results are reproducible from (graph, dynamics, w, seed).
    """
    if w < 1:
        raise ValueError("sequence length must be at least 1")
    if graph.n == 0:
        raise ValueError("graph is empty")
    rng = random.Random(seed)
    if start is None:
        start = rng.randrange(graph.n)
    state = WalkerState.start_at(start)
    nodes = [start]
    for _ in range(w - 1):
        neighbors = graph.adj[state.current]
        weights = _transition_weights(graph, state, dynamics)
        r = rng.random() * sum(weights)
        acc = 0.0
        target = neighbors[-1]
        for j, weight in zip(neighbors, weights):
            acc += weight
            if r < acc:
                target = j
                break
        state.record_step(target)
        nodes.append(target)
    return WalkSequence(nodes=tuple(nodes), dynamics=dynamics, seed=seed, graph_ref=graph_ref)


def write_sequence(seq: WalkSequence, path) -> None:
    """One visited node id per line."""
    with open(path, "w", encoding="utf-8") as fh:
        for node in seq.nodes:
            fh.write(f"{node}\n")


def read_sequence_nodes(path) -> list[int]:
    with open(path, "r", encoding="utf-8") as fh:
        return [int(line) for line in fh if line.strip()]
