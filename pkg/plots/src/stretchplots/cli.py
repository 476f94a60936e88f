"""CLI: render figure families from a sweep CSV to SVG and PNG files."""

from __future__ import annotations

import argparse
import os
import sys

from .errors import PlotsError
from .figures import FIGURES, census_plot, render

ALL_IDS = list(FIGURES) + ["census"]


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="plots", description="Render sweep-CSV figures"
    )
    parser.add_argument("--csv", required=True, help="sweep CSV input")
    parser.add_argument(
        "--figures", required=True,
        help="comma-separated figure ids, or 'all' "
             f"(known: {', '.join(ALL_IDS)})",
    )
    parser.add_argument("--out", required=True, help="output directory")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.figures.strip() == "all":
        wanted = ALL_IDS
    else:
        wanted = [f.strip() for f in args.figures.split(",") if f.strip()]
        unknown = [f for f in wanted if f not in ALL_IDS]
        if unknown:
            print(f"error: unknown figure id(s): {', '.join(unknown)}",
                  file=sys.stderr)
            return 2
    os.makedirs(args.out, exist_ok=True)
    try:
        for fid in wanted:
            if fid == "census":
                paths = census_plot(args.csv, args.out)
            else:
                paths = render(args.csv, FIGURES[fid], args.out)
            print(f"{fid}: wrote {', '.join(paths)}")
    except PlotsError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
