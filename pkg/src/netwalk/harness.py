"""Configuration-driven experiment runner: sweeps (topology, dynamics,
walk length, realization) cells and writes records.csv / summary.csv."""

from __future__ import annotations

import json
import math
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Optional, Sequence

from netwalk.analysis import (
    derive_seed,
    matched_metric_correlation,
    nmi,
    restrict_partition,
)
from netwalk.communities import Partition, detect_communities
from netwalk.dynamics import DynamicsId, generate_sequence
from netwalk.generators import GeneratorSpec, generate
from netwalk.graph import Graph, largest_connected_component, read_edge_list
from netwalk.metrics import METRIC_NAMES, compute_metric
from netwalk.reconstruction import knowledge_fraction, reconstruct

DEFAULT_W_GRID = (100, 200, 400, 500, 600, 800, 1000, 2000, 5000, 20000, 50000)
DEFAULT_REALIZATIONS = 20
DEFAULT_N = 5000
DEFAULT_K_AVG = 4.0

RECORDS_HEADER = "topology,dynamics,w,realization,metric,pearson,spearman,knowledge_fraction,nmi,runtime_ms"
SUMMARY_HEADER = (
    "topology,dynamics,w,metric,realizations,"
    "pearson_mean,pearson_std,spearman_mean,spearman_std,"
    "knowledge_mean,knowledge_std,nmi_mean,nmi_std"
)


class ConfigError(ValueError):
    """Invalid experiment configuration."""


def _default_topologies() -> list[dict]:
    models = [
        {"model": "ER"},
        {"model": "BA"},
        {"model": "WAX"},
        {"model": "LFR", "mu": 0.05},
        {"model": "LFR", "mu": 0.2},
        {"model": "LFR", "mu": 0.8},
    ]
    return models


@dataclass
class ExperimentConfig:
    """Full experiment description; defaults mirror the standard protocol
    (all topologies and dynamics, 11 walk lengths, 20 realizations)."""

    topologies: list[dict] = field(default_factory=_default_topologies)
    dynamics: list[str] = field(default_factory=lambda: ["rw", "rwd", "rwid", "tsaw-node", "tsaw-edge"])
    w_grid: list[int] = field(default_factory=lambda: list(DEFAULT_W_GRID))
    realizations: int = DEFAULT_REALIZATIONS
    metrics: list[str] = field(default_factory=lambda: list(METRIC_NAMES))
    communities: bool = True
    nmi_on_recovered_only: bool = True
    master_seed: int = 0
    output_dir: str = "."
    parallelism: int = 1
    record_runtime: bool = False  # wall-clock timing breaks byte-identical reruns

    def __post_init__(self):
        if self.realizations < 1:
            raise ConfigError("realizations must be >= 1")
        if not self.w_grid:
            raise ConfigError("w_grid is empty")
        self.w_grid = sorted(self.w_grid)
        if any(w < 1 for w in self.w_grid):
            raise ConfigError("walk lengths must be positive")
        for metric in self.metrics:
            if metric not in METRIC_NAMES:
                raise ConfigError(f"unknown metric {metric!r}")
        for name in self.dynamics:
            try:
                DynamicsId.from_name(name)
            except ValueError as exc:
                raise ConfigError(str(exc)) from exc

    @classmethod
    def from_json(cls, text: str) -> "ExperimentConfig":
        data = json.loads(text)
        known = {f for f in cls.__dataclass_fields__}
        unknown = set(data) - known
        if unknown:
            raise ConfigError(f"unknown config keys: {sorted(unknown)}")
        return cls(**data)

    @classmethod
    def from_file(cls, path) -> "ExperimentConfig":
        with open(path, "r", encoding="utf-8") as fh:
            return cls.from_json(fh.read())


def topology_name(entry: dict) -> str:
    if "name" in entry:
        return entry["name"]
    if "edge_list" in entry:
        return os.path.splitext(os.path.basename(entry["edge_list"]))[0]
    model = entry["model"].upper()
    if model == "LFR":
        return f"LFR_mu{entry.get('mu', 0.05)}"
    return model


@dataclass
class PreparedTopology:
    """A topology reduced to its largest component, with cached originals."""

    name: str
    graph: Graph
    metric_values: dict[str, tuple[float, ...]]
    reference_partition: Optional[Partition]


def prepare_topology(entry: dict, index: int, cfg: ExperimentConfig) -> PreparedTopology:
    """Build or load one topology, reduce to the giant component, cache the
    original metric vectors and the community reference partition."""
    name = topology_name(entry)
    planted: Optional[Partition] = None
    if "edge_list" in entry:
        graph = read_edge_list(entry["edge_list"]).graph
    else:
        params = dict(entry)
        params.pop("name", None)
        params.setdefault("n", DEFAULT_N)
        params.setdefault("k_avg", DEFAULT_K_AVG)
        params.setdefault("seed", derive_seed(cfg.master_seed, 101, index))
        spec = GeneratorSpec(**params)
        result = generate(spec)
        if spec.model == "LFR":
            graph, planted = result
        else:
            graph = result
    graph, id_map = largest_connected_component(graph)
    if planted is not None:
        planted = restrict_partition(planted, id_map)
    metric_values = {m: compute_metric(graph, m).values for m in cfg.metrics}
    reference: Optional[Partition] = None
    if cfg.communities:
        reference = planted if planted is not None else detect_communities(
            graph, seed=derive_seed(cfg.master_seed, 202, index)
        )
    return PreparedTopology(
        name=name, graph=graph, metric_values=metric_values, reference_partition=reference
    )


def _run_cell(args) -> list[dict]:
    """One (topology, dynamics, realization): a single long walk sampled at
    every w in the grid, one row per metric per checkpoint."""
    (topo, dyn_name, t_idx, d_idx, realization, cfg) = args
    started = time.perf_counter()
    dynamics = DynamicsId.from_name(dyn_name)
    walk_seed = derive_seed(cfg.master_seed, t_idx, d_idx, realization)
    sequence = generate_sequence(topo.graph, dynamics, max(cfg.w_grid), walk_seed)
    rows = []
    for w in cfg.w_grid:
        recon = reconstruct(sequence.nodes[:w])
        knowledge = knowledge_fraction(recon, topo.graph)
        cell_nmi: Optional[float] = None
        if topo.reference_partition is not None and recon.graph.n >= 2:
            recon_part = detect_communities(recon.graph, seed=walk_seed)
            if cfg.nmi_on_recovered_only:
                ref = restrict_partition(topo.reference_partition, recon.to_original)
                cell_nmi = nmi(recon_part, ref)
            else:
                # unseen nodes become singletons appended to the recon partition
                full = list(topo.reference_partition.membership)
                seen = set(recon.to_original)
                extended = list(recon_part.membership)
                extra = recon_part.k
                order = list(recon.to_original)
                for node in range(topo.graph.n):
                    if node not in seen:
                        order.append(node)
                        extended.append(extra)
                        extra += 1
                ref = Partition.from_membership([full[i] for i in order])
                cell_nmi = nmi(Partition.from_membership(extended), ref)
        runtime_ms = (time.perf_counter() - started) * 1000.0
        for metric in cfg.metrics:
            corr = matched_metric_correlation(
                topo.graph, recon, metric, topo.metric_values[metric]
            )
            rows.append(
                {
                    "topology": topo.name,
                    "dynamics": dyn_name,
                    "w": w,
                    "realization": realization,
                    "metric": metric,
                    "pearson": corr.pearson,
                    "spearman": corr.spearman,
                    "knowledge_fraction": knowledge,
                    "nmi": cell_nmi,
                    "runtime_ms": runtime_ms if cfg.record_runtime else None,
                }
            )
    return rows


def _fmt(value) -> str:
    if value is None:
        return ""
    if isinstance(value, float):
        return repr(value)
    return str(value)


def run_experiment(cfg: ExperimentConfig) -> tuple[str, str]:
    """Run the full sweep; returns (records_path, summary_path).

    Output is a pure function of the config (master seed included) and is
    independent of the worker count: results are keyed and sorted before
    writing."""
    os.makedirs(cfg.output_dir, exist_ok=True)
    prepared = [
        prepare_topology(entry, i, cfg) for i, entry in enumerate(cfg.topologies)
    ]
    tasks = [
        (topo, dyn_name, t_idx, d_idx, realization, cfg)
        for t_idx, topo in enumerate(prepared)
        for d_idx, dyn_name in enumerate(cfg.dynamics)
        for realization in range(cfg.realizations)
    ]
    jobs = max(1, cfg.parallelism)
    if jobs == 1 or len(tasks) <= 1:
        results = [_run_cell(t) for t in tasks]
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_run_cell, tasks))
    rows = [row for cell in results for row in cell]
    topo_order = {t.name: i for i, t in enumerate(prepared)}
    dyn_order = {d: i for i, d in enumerate(cfg.dynamics)}
    metric_order = {m: i for i, m in enumerate(cfg.metrics)}
    rows.sort(
        key=lambda r: (
            topo_order[r["topology"]],
            dyn_order[r["dynamics"]],
            r["w"],
            r["realization"],
            metric_order[r["metric"]],
        )
    )
    records_path = os.path.join(cfg.output_dir, "records.csv")
    with open(records_path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(RECORDS_HEADER + "\n")
        for r in rows:
            fh.write(
                ",".join(
                    _fmt(r[col])
                    for col in RECORDS_HEADER.split(",")
                )
                + "\n"
            )
    summary_path = os.path.join(cfg.output_dir, "summary.csv")
    _write_summary(rows, summary_path, topo_order, dyn_order, metric_order)
    return records_path, summary_path


def _mean_std(values: list[float]) -> tuple[Optional[float], Optional[float]]:
    if not values:
        return None, None
    mean = sum(values) / len(values)
    var = sum((v - mean) ** 2 for v in values) / len(values)
    return mean, math.sqrt(var)


def _write_summary(rows, path, topo_order, dyn_order, metric_order) -> None:
    groups: dict[tuple, list[dict]] = {}
    for r in rows:
        groups.setdefault((r["topology"], r["dynamics"], r["w"], r["metric"]), []).append(r)
    keys = sorted(
        groups,
        key=lambda k: (topo_order[k[0]], dyn_order[k[1]], k[2], metric_order[k[3]]),
    )
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(SUMMARY_HEADER + "\n")
        for key in keys:
            cell = groups[key]
            fields = [key[0], key[1], str(key[2]), key[3], str(len(cell))]
            for col in ("pearson", "spearman", "knowledge_fraction", "nmi"):
                mean, std = _mean_std([r[col] for r in cell if r[col] is not None])
                fields.append(_fmt(mean))
                fields.append(_fmt(std))
            fh.write(",".join(fields) + "\n")
