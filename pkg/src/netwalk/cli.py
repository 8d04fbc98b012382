"""Command-line interface: generate, walk, reconstruct, metrics, correlate,
communities, experiment."""

from __future__ import annotations

import argparse
import os
import sys

from netwalk.analysis import CorrelationResult, pearson, spearman
from netwalk.communities import detect_communities
from netwalk.dynamics import DynamicsId, LAMBDA_DEFAULT, generate_sequence
from netwalk.generators import GeneratorSpec, generate, write_partition
from netwalk.graph import read_edge_list, write_edge_list
from netwalk.harness import ExperimentConfig, run_experiment
from netwalk.metrics import METRIC_NAMES, compute_metric
from netwalk.reconstruction import reconstruct


def _env_jobs():
    env = os.environ.get("NETWALK_JOBS")
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            pass
    return None


def _add_common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--seed", type=int, default=0, help="random seed")
    parser.add_argument("--jobs", type=int, default=None,
                        help="worker count (default: NETWALK_JOBS or the config value)")
    parser.add_argument("--output", default=None, help="output file or directory")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="netwalk")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("generate", help="generate a synthetic topology edge list")
    p.add_argument("--model", required=True, choices=["ER", "BA", "WAX", "LFR"])
    p.add_argument("--n", type=int, default=5000)
    p.add_argument("--k-avg", type=float, default=4.0)
    p.add_argument("--mu", type=float, default=0.05, help="LFR mixing parameter")
    p.add_argument("--partition-output", default=None,
                   help="where to write the planted LFR partition")
    _add_common(p)

    p = sub.add_parser("walk", help="walk a graph and emit the visited-node sequence")
    p.add_argument("--graph", required=True)
    p.add_argument("--dynamics", required=True,
                   choices=["rw", "rwd", "rwid", "tsaw-node", "tsaw-edge"])
    p.add_argument("--length", type=int, required=True)
    p.add_argument("--lambda", dest="lam", type=float, default=LAMBDA_DEFAULT)
    _add_common(p)

    p = sub.add_parser("reconstruct", help="co-occurrence graph from a sequence file")
    p.add_argument("--sequence", required=True)
    _add_common(p)

    p = sub.add_parser("metrics", help="per-node metric CSV for a graph")
    p.add_argument("--graph", required=True)
    p.add_argument("--metric", default="all",
                   choices=["all", *METRIC_NAMES])
    _add_common(p)

    p = sub.add_parser("correlate", help="matched-node correlations between two graphs")
    p.add_argument("--graph-a", required=True, help="original graph")
    p.add_argument("--graph-b", required=True, help="reconstructed graph")
    p.add_argument("--metric", default="all", choices=["all", *METRIC_NAMES])
    _add_common(p)

    p = sub.add_parser("communities", help="Leiden partition CSV for a graph")
    p.add_argument("--graph", required=True)
    _add_common(p)

    p = sub.add_parser("experiment", help="run a configured sweep")
    p.add_argument("--config", required=True)
    _add_common(p)
    return parser


def _out_stream(path):
    return open(path, "w", encoding="utf-8") if path else sys.stdout


def cmd_generate(args) -> int:
    spec = GeneratorSpec(model=args.model, n=args.n, k_avg=args.k_avg,
                         mu=args.mu, seed=args.seed)
    result = generate(spec)
    if spec.model == "LFR":
        graph, planted = result
        if args.partition_output:
            write_partition(planted, args.partition_output)
    else:
        graph = result
    out = args.output or f"{args.model.lower()}_edges.txt"
    write_edge_list(graph, out)
    print(f"wrote {graph.n} nodes, {graph.m} edges to {out}")
    return 0


def cmd_walk(args) -> int:
    parsed = read_edge_list(args.graph)
    dynamics = DynamicsId(kind=args.dynamics, lam=args.lam)
    seq = generate_sequence(parsed.graph, dynamics, args.length, args.seed)
    out = args.output or "sequence.txt"
    with open(out, "w", encoding="utf-8") as fh:
        for node in seq.nodes:
            fh.write(parsed.labels[node] + "\n")
    print(f"wrote {len(seq.nodes)}-node sequence to {out}")
    return 0


def cmd_reconstruct(args) -> int:
    with open(args.sequence, "r", encoding="utf-8") as fh:
        symbols = [line.strip() for line in fh if line.strip()]
    if not symbols:
        print("error: sequence file is empty", file=sys.stderr)
        return 1
    ids, labels = symbols_to_ids(symbols)
    recon = reconstruct(ids)
    out = args.output or "reconstructed_edges.txt"
    write_edge_list(recon.graph, out, labels=[labels[i] for i in recon.to_original])
    print(f"wrote {recon.graph.n} nodes, {recon.graph.m} edges to {out}")
    return 0


def symbols_to_ids(symbols: list[str]) -> tuple[list[int], list[str]]:
    """Compact a symbol sequence to integer ids (first-appearance order)."""
    mapping: dict[str, int] = {}
    labels: list[str] = []
    ids = []
    for s in symbols:
        if s not in mapping:
            mapping[s] = len(labels)
            labels.append(s)
        ids.append(mapping[s])
    return ids, labels


def cmd_metrics(args) -> int:
    parsed = read_edge_list(args.graph)
    names = list(METRIC_NAMES) if args.metric == "all" else [args.metric]
    stream = _out_stream(args.output)
    try:
        if len(names) == 1:
            stream.write("node,value\n")
            for i, v in enumerate(compute_metric(parsed.graph, names[0]).values):
                stream.write(f"{parsed.labels[i]},{v!r}\n")
        else:
            stream.write("node," + ",".join(names) + "\n")
            columns = [compute_metric(parsed.graph, m).values for m in names]
            for i in range(parsed.graph.n):
                stream.write(parsed.labels[i] + "," + ",".join(repr(c[i]) for c in columns) + "\n")
    finally:
        if stream is not sys.stdout:
            stream.close()
    return 0


def cmd_correlate(args) -> int:
    original = read_edge_list(args.graph_a)
    recon = read_edge_list(args.graph_b)
    missing = [lab for lab in recon.labels if lab not in original.label_to_id]
    if missing:
        print(f"error: {len(missing)} nodes of {args.graph_b} missing from {args.graph_a}",
              file=sys.stderr)
        return 1
    names = list(METRIC_NAMES) if args.metric == "all" else [args.metric]
    stream = _out_stream(args.output)
    try:
        stream.write("metric,pearson,spearman,n_matched\n")
        for metric in names:
            values_a = compute_metric(original.graph, metric).values
            values_b = compute_metric(recon.graph, metric).values
            matched = [values_a[original.label_to_id[lab]] for lab in recon.labels]
            result = CorrelationResult(
                metric=metric,
                pearson=pearson(list(values_b), matched),
                spearman=spearman(list(values_b), matched),
                n_matched=len(matched),
            )
            cp = "" if result.pearson is None else repr(result.pearson)
            cs = "" if result.spearman is None else repr(result.spearman)
            stream.write(f"{metric},{cp},{cs},{result.n_matched}\n")
    finally:
        if stream is not sys.stdout:
            stream.close()
    return 0


def cmd_communities(args) -> int:
    parsed = read_edge_list(args.graph)
    partition = detect_communities(parsed.graph, seed=args.seed)
    stream = _out_stream(args.output)
    try:
        stream.write("node,community\n")
        for i, c in enumerate(partition.membership):
            stream.write(f"{parsed.labels[i]},{c}\n")
    finally:
        if stream is not sys.stdout:
            stream.close()
    return 0


def cmd_experiment(args) -> int:
    cfg = ExperimentConfig.from_file(args.config)
    if args.output:
        cfg.output_dir = args.output
    jobs = args.jobs if args.jobs else _env_jobs()
    if jobs:
        cfg.parallelism = jobs
    records, summary = run_experiment(cfg)
    print(f"wrote {records} and {summary}")
    return 0


_COMMANDS = {
    "generate": cmd_generate,
    "walk": cmd_walk,
    "reconstruct": cmd_reconstruct,
    "metrics": cmd_metrics,
    "correlate": cmd_correlate,
    "communities": cmd_communities,
    "experiment": cmd_experiment,
}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (ValueError, RuntimeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
