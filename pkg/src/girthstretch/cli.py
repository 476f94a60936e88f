"""Command-line interface: generate, stretch, leafmin, optimize, gossip, sweep.

Graphs are exchanged as edge-list text files (header ``n m``, one ``u v``
line per edge). Sweeps read a ``key = value`` config file and write CSV.
"""

from __future__ import annotations

import argparse
import sys

from . import gossip
from . import graph as G
from . import harness
from . import metrics
from .errors import GirthStretchError
from .generators import FAMILIES, sample_params, generate_connected
from .leafmin import LeafMinMethod, minimise_leaves
from .optimizer import optimise
from .stretching import StretchMethod, stretch


def _add_generate(sub):
    p = sub.add_parser("generate", help="sample a connected random graph")
    p.add_argument("--family", choices=FAMILIES, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--n-min", type=int, default=25)
    p.add_argument("--n-max", type=int, default=100)
    p.add_argument("--out", required=True, help="edge-list output path")


def _add_graph_transform(sub, name, help_text):
    p = sub.add_parser(name, help=help_text)
    p.add_argument("--in", dest="infile", required=True, help="edge-list input")
    p.add_argument("--girth", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", required=True, help="edge-list output path")
    p.add_argument("--report", help="optional per-step log output path")
    return p


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="girthstretch",
        description="Girth stretching and convergence optimisation toolkit",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    _add_generate(sub)

    p = _add_graph_transform(sub, "stretch", "raise girth by edge removal")
    p.add_argument("--method", choices=[m.value for m in StretchMethod],
                   default=StretchMethod.MOST_CYCLES.value)

    p = _add_graph_transform(sub, "leafmin", "add edges to reduce leaves")
    p.add_argument("--method",
                   choices=[m.value for m in LeafMinMethod if m.value != "none"],
                   default=LeafMinMethod.CLOSEST.value)

    p = _add_graph_transform(sub, "optimize",
                             "greedy heuristic optimisation of the edge set")
    p.add_argument("--heuristic", choices=[h.value for h in metrics.Heuristic],
                   default=metrics.Heuristic.EIGENRATIO.value)

    p = sub.add_parser("gossip", help="measure distributed-averaging rounds")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--instances", type=int, default=gossip.DEFAULT_INSTANCES)
    p.add_argument("--threshold", type=float, default=gossip.DEFAULT_THRESHOLD)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--norm", choices=[gossip.NORM_MEAN, gossip.NORM_INITIAL],
                   default=gossip.NORM_MEAN)
    p.add_argument("--max-rounds", type=int, default=gossip.DEFAULT_MAX_ROUNDS)

    p = sub.add_parser("sweep", help="run an experiment sweep to CSV")
    p.add_argument("--config", required=True, help="key = value config file")
    p.add_argument("--out", required=True, help="CSV output path")
    p.add_argument("--resume", action="store_true",
                   help="extend an existing partial CSV")

    return parser


def _write_report(path, lines):
    if path:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write("\n".join(lines) + ("\n" if lines else ""))


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "generate":
            params = sample_params(args.family, args.seed,
                                   (args.n_min, args.n_max))
            graph, attempts = generate_connected(params, args.seed)
            G.write_graph(graph, args.out)
            print(f"{params} connected after {attempts} attempt(s); "
                  f"n={graph.n} m={graph.m}")
        elif args.command == "stretch":
            graph = G.read_graph(args.infile)
            report = stretch(graph, args.girth, StretchMethod(args.method),
                             args.seed)
            G.write_graph(report.graph, args.out)
            _write_report(args.report, report.to_log_lines())
            print(f"removed {len(report.removed)} edges; "
                  f"girth {report.start_girth} -> {report.final_girth}")
        elif args.command == "leafmin":
            graph = G.read_graph(args.infile)
            report = minimise_leaves(graph, args.girth,
                                     LeafMinMethod(args.method), args.seed)
            G.write_graph(report.graph, args.out)
            _write_report(args.report, report.to_log_lines())
            print(f"added {report.edges_added} edges; leaves "
                  f"{report.leaves_before} -> {report.leaves_after}")
        elif args.command == "optimize":
            graph = G.read_graph(args.infile)
            report = optimise(graph, args.girth,
                              metrics.Heuristic(args.heuristic), args.seed)
            G.write_graph(report.graph, args.out)
            _write_report(args.report, report.to_log_lines())
            print(f"{report.edges_changed} moves; score "
                  f"{report.initial_score:.6g} -> {report.final_score:.6g}")
        elif args.command == "gossip":
            graph = G.read_graph(args.infile)
            mean_rounds = gossip.convergence_time(
                graph, instances=args.instances, threshold=args.threshold,
                seed=args.seed, max_rounds=args.max_rounds, norm=args.norm)
            print(f"mean convergence time: {mean_rounds} rounds "
                  f"over {args.instances} instance(s)")
        elif args.command == "sweep":
            cfg = harness.load_config(args.config)
            written = harness.run_sweep(cfg, args.out, resume=args.resume)
            print(f"wrote {written} trial row(s) to {args.out}")
    except GirthStretchError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
