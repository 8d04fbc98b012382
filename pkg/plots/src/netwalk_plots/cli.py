"""Command-line entry point: render figures from experiment CSV files."""

import argparse
import sys

from .figures import FIGURE_KINDS, FigureSpec, SchemaError, render


def build_parser():
    parser = argparse.ArgumentParser(
        prog="plots",
        description="Render figures from netwalk experiment CSV outputs.",
    )
    parser.add_argument("--input", required=True,
                        help="summary.csv (line kinds) or records.csv (scatter-grid)")
    parser.add_argument("--kind", required=True, choices=FIGURE_KINDS)
    parser.add_argument("--out", required=True, help="output directory for images")
    parser.add_argument("--topology", action="append", dest="topologies",
                        help="restrict to a topology (repeatable)")
    parser.add_argument("--metric", action="append", dest="metrics",
                        help="restrict to a metric (repeatable)")
    parser.add_argument("--dpi", type=int, default=100)
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    spec = FigureSpec(input_path=args.input, kind=args.kind, output_dir=args.out,
                      topologies=args.topologies, metrics=args.metrics, dpi=args.dpi)
    try:
        for path in render(spec):
            print(path)
    except (FileNotFoundError, SchemaError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
