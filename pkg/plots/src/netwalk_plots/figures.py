"""Render figures from experiment CSV outputs.

This module only depends on the documented CSV schemas:

* summary.csv: topology,dynamics,w,metric,realizations,pearson_mean,pearson_std,
  spearman_mean,spearman_std,knowledge_mean,knowledge_std,nmi_mean,nmi_std
* records.csv: topology,dynamics,w,realization,metric,pearson,spearman,
  knowledge_fraction,nmi,runtime_ms

Series values are taken from the CSV as-is; no smoothing or rescaling.
"""

import csv
import sys
from dataclasses import dataclass, field
from pathlib import Path
from typing import Dict, List, Optional, Sequence, Tuple

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt

FIGURE_KINDS = ("scatter-grid", "corr-vs-length", "corr-vs-knowledge")

SUMMARY_COLUMNS = (
    "topology", "dynamics", "w", "metric",
    "pearson_mean", "spearman_mean", "knowledge_mean", "nmi_mean",
)
RECORDS_COLUMNS = (
    "topology", "dynamics", "w", "realization", "metric", "pearson", "spearman",
)


class SchemaError(ValueError):
    """Raised when the input CSV lacks a column a figure kind needs."""


@dataclass
class FigureSpec:
    input_path: str
    kind: str
    output_dir: str
    topologies: Optional[Sequence[str]] = None
    metrics: Optional[Sequence[str]] = None
    dpi: int = 100

    def __post_init__(self):
        if self.kind not in FIGURE_KINDS:
            raise ValueError(f"unknown figure kind {self.kind!r}")


def load_rows(path, required_columns):
    """Read a CSV into dict rows, checking the required columns exist."""
    with open(path, newline="") as fh:
        reader = csv.DictReader(fh)
        header = reader.fieldnames or []
        missing = [c for c in required_columns if c not in header]
        if missing:
            raise SchemaError(f"{path}: missing columns {', '.join(missing)}")
        return list(reader)


def _num(text):
    return float(text) if text not in (None, "") else None


def _ordered(values):
    seen = []
    for v in values:
        if v not in seen:
            seen.append(v)
    return seen


def length_series(rows, topology, metric, value_column="pearson_mean"):
    """Map dynamics -> (walk lengths, values) for one topology/metric.

    Rows whose value field is empty (undefined correlation) are skipped.
    """
    out: Dict[str, Tuple[List[int], List[float]]] = {}
    for row in rows:
        if row["topology"] != topology or row["metric"] != metric:
            continue
        value = _num(row[value_column])
        if value is None:
            continue
        xs, ys = out.setdefault(row["dynamics"], ([], []))
        xs.append(int(row["w"]))
        ys.append(value)
    for xs, ys in out.values():
        order = sorted(range(len(xs)), key=xs.__getitem__)
        xs[:], ys[:] = [xs[i] for i in order], [ys[i] for i in order]
    return out


def knowledge_series(rows, topology, metric, value_column="pearson_mean"):
    """Map dynamics -> (knowledge fractions, values), ordered by walk length."""
    out: Dict[str, Tuple[List[float], List[float]]] = {}
    by_dyn: Dict[str, List[Tuple[int, float, float]]] = {}
    for row in rows:
        if row["topology"] != topology or row["metric"] != metric:
            continue
        value, know = _num(row[value_column]), _num(row["knowledge_mean"])
        if value is None or know is None:
            continue
        by_dyn.setdefault(row["dynamics"], []).append((int(row["w"]), know, value))
    for dyn, triples in by_dyn.items():
        triples.sort()
        out[dyn] = ([k for _, k, _ in triples], [v for _, _, v in triples])
    return out


def nmi_series(rows, topology):
    """Map dynamics -> (walk lengths, mean NMI); empty when the column is blank."""
    out: Dict[str, Tuple[List[int], List[float]]] = {}
    seen: Dict[Tuple[str, int], float] = {}
    for row in rows:
        if row["topology"] != topology:
            continue
        value = _num(row["nmi_mean"])
        if value is None:
            continue
        seen[(row["dynamics"], int(row["w"]))] = value
    for (dyn, w), value in sorted(seen.items()):
        xs, ys = out.setdefault(dyn, ([], []))
        xs.append(w)
        ys.append(value)
    return out


def scatter_points(rows, topology, metric, dynamics):
    """Per-realization (pearson, spearman) pairs for one cell family."""
    xs, ys = [], []
    for row in rows:
        if (row["topology"], row["metric"], row["dynamics"]) != (topology, metric, dynamics):
            continue
        p, s = _num(row["pearson"]), _num(row["spearman"])
        if p is None or s is None:
            continue
        xs.append(p)
        ys.append(s)
    return xs, ys


def _select(values, wanted):
    return [v for v in values if wanted is None or v in wanted]


def _style_axis(ax, title):
    ax.set_title(title, fontsize=9)
    ax.tick_params(labelsize=7)
    ax.grid(True, alpha=0.3)


def _render_line_figure(spec, rows, topology, metrics, x_from_knowledge):
    dynamics = _ordered(r["dynamics"] for r in rows if r["topology"] == topology)
    panels = [("metric", m) for m in metrics]
    nmi = nmi_series(rows, topology)
    if nmi:
        panels.append(("nmi", "community NMI"))
    else:
        print(f"warning: no NMI values for topology {topology}; NMI panel omitted",
              file=sys.stderr)
    fig, axes = plt.subplots(1, len(panels), figsize=(3.2 * len(panels), 3.0),
                             squeeze=False)
    for ax, (panel_kind, name) in zip(axes[0], panels):
        for dyn in dynamics:
            if panel_kind == "metric":
                series = (knowledge_series(rows, topology, name) if x_from_knowledge
                          else length_series(rows, topology, name))
            else:
                series = nmi
            if dyn not in series:
                continue
            xs, ys = series[dyn]
            ax.plot(xs, ys, marker="o", markersize=3, linewidth=1, label=dyn)
        if not x_from_knowledge:
            ax.set_xscale("log")
            ax.set_xlabel("walk length", fontsize=8)
        else:
            ax.set_xlabel("knowledge fraction", fontsize=8)
        _style_axis(ax, name)
    axes[0][0].set_ylabel("mean correlation", fontsize=8)
    axes[0][-1].legend(fontsize=7)
    fig.suptitle(topology, fontsize=10)
    fig.tight_layout()
    return fig


def _render_scatter_grid(spec, rows, topology, metrics):
    dynamics = _ordered(r["dynamics"] for r in rows if r["topology"] == topology)
    fig, axes = plt.subplots(len(metrics), len(dynamics),
                             figsize=(2.4 * len(dynamics), 2.4 * len(metrics)),
                             squeeze=False)
    for i, metric in enumerate(metrics):
        for j, dyn in enumerate(dynamics):
            ax = axes[i][j]
            xs, ys = scatter_points(rows, topology, metric, dyn)
            ax.scatter(xs, ys, s=8, alpha=0.6)
            if xs:
                cp, cs = sum(xs) / len(xs), sum(ys) / len(ys)
                ax.annotate(f"$C_p$={cp:.2f}\n$C_s$={cs:.2f}", xy=(0.03, 0.97),
                            xycoords="axes fraction", va="top", fontsize=7)
            _style_axis(ax, f"{metric} / {dyn}")
            if i == len(metrics) - 1:
                ax.set_xlabel("pearson", fontsize=8)
            if j == 0:
                ax.set_ylabel("spearman", fontsize=8)
    fig.suptitle(topology, fontsize=10)
    fig.tight_layout()
    return fig


def render(spec):
    """Render one image per topology; returns the written file paths."""
    per_record = spec.kind == "scatter-grid"
    rows = load_rows(spec.input_path,
                     RECORDS_COLUMNS if per_record else SUMMARY_COLUMNS)
    topologies = _select(_ordered(r["topology"] for r in rows), spec.topologies)
    metrics = _select(_ordered(r["metric"] for r in rows), spec.metrics)
    if not topologies or not metrics:
        raise ValueError(f"{spec.input_path}: no matching rows to plot")
    out_dir = Path(spec.output_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    written = []
    for topology in topologies:
        if per_record:
            fig = _render_scatter_grid(spec, rows, topology, metrics)
        else:
            fig = _render_line_figure(spec, rows, topology, metrics,
                                      x_from_knowledge=spec.kind == "corr-vs-knowledge")
        path = out_dir / f"{spec.kind}_{topology}.png"
        fig.savefig(path, dpi=spec.dpi)
        plt.close(fig)
        written.append(str(path))
    return written
