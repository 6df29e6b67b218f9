"""Command-line interface.

Subcommands:
  pd       descriptor of one graph -> diagram CSV
  dist     bottleneck distance between two diagram files
  distmat  pairwise distance matrix over a manifest -> CSV
  eval     clustering-quality report over a labeled manifest
  bench    descriptor timings on synthetic graphs

Exit codes: 0 success, 1 compute/domain error, 2 usage or I/O error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .bench import run_bench, write_timings
from .bottleneck import bottleneck_distance
from .errors import DomainError, InputError
from .ingest import load_graph, load_manifest
from .pagerank import PageRankConfig, pagerank
from .persistence import lower_star_diagram, read_diagram, write_diagram
from .pipeline import (corpus_diagrams, distance_matrix, evaluate,
                       format_report, write_distance_matrix)


def _damping(text: str) -> float:
    value = float(text)
    if not 0.0 < value < 1.0:
        raise argparse.ArgumentTypeError(f"damping must be in (0, 1), got {text}")
    return value


def _positive_float(text: str) -> float:
    value = float(text)
    if value <= 0.0:
        raise argparse.ArgumentTypeError(f"expected a positive number, got {text}")
    return value


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def _add_pagerank_flags(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--damping", type=_damping, default=0.85,
                     help="damping factor (default 0.85)")
    sub.add_argument("--tol", type=_positive_float, default=1e-10,
                     help="L1 convergence tolerance (default 1e-10)")
    sub.add_argument("--max-iter", type=_positive_int, default=1000,
                     help="iteration cap (default 1000)")


def _config(args: argparse.Namespace) -> PageRankConfig:
    return PageRankConfig(damping=args.damping, tolerance=args.tol,
                          max_iterations=args.max_iter)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="prpd",
        description="PageRank persistence descriptors for graph and mesh similarity.")
    subs = parser.add_subparsers(dest="command", required=True)

    p = subs.add_parser("pd", help="compute one graph's persistence diagram")
    p.add_argument("input", help="graph file (edge list or OFF mesh)")
    p.add_argument("--format", choices=["edgelist", "off"], default=None,
                   help="input format (default: by .off extension)")
    _add_pagerank_flags(p)
    p.add_argument("--out", default=None, help="output diagram CSV (default stdout)")
    p.set_defaults(func=cmd_pd)

    p = subs.add_parser("dist", help="bottleneck distance between two diagram files")
    p.add_argument("diagram_a")
    p.add_argument("diagram_b")
    p.add_argument("--with-essential", action="store_true",
                   help="also match essential births (infinite if counts differ)")
    p.set_defaults(func=cmd_dist)

    p = subs.add_parser("distmat", help="pairwise distance matrix over a manifest")
    p.add_argument("manifest", help="CSV manifest 'path,label'")
    p.add_argument("--format", choices=["edgelist", "off"], default=None,
                   help="force one input format (default: per-file by extension)")
    _add_pagerank_flags(p)
    p.add_argument("--with-essential", action="store_true")
    p.add_argument("--jobs", type=_positive_int, default=1,
                   help="worker processes for the pairwise distances")
    p.add_argument("--out", default=None, help="output CSV (default stdout)")
    p.set_defaults(func=cmd_distmat)

    p = subs.add_parser("eval", help="clustering-quality report over a labeled manifest")
    p.add_argument("manifest")
    p.add_argument("--format", choices=["edgelist", "off"], default=None)
    _add_pagerank_flags(p)
    p.add_argument("--with-essential", action="store_true")
    p.add_argument("--jobs", type=_positive_int, default=1)
    p.add_argument("--out", default=None, help="write the report as JSON here")
    p.set_defaults(func=cmd_eval)

    p = subs.add_parser("bench", help="time descriptor stages on synthetic graphs")
    p.add_argument("--edges", type=_positive_int, nargs="+", required=True,
                   help="target edge counts, e.g. --edges 10000 100000 1000000")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--repeat", type=_positive_int, default=1,
                   help="runs per size; best time is reported")
    p.add_argument("--compare-backends", action="store_true",
                   help="also time the pure-numpy fallback kernels")
    _add_pagerank_flags(p)
    p.add_argument("--out", default=None, help="output CSV (default stdout)")
    p.set_defaults(func=cmd_bench)
    return parser


def cmd_pd(args: argparse.Namespace) -> int:
    graph = load_graph(args.input, args.format)
    if graph.num_vertices == 0:
        raise DomainError(f"{args.input}: empty graph has no descriptor")
    result = pagerank(graph, _config(args))
    if not result.converged:
        print(f"warning: PageRank did not converge in {result.iterations} iterations",
              file=sys.stderr)
    diagram = lower_star_diagram(graph, result.values)
    write_diagram(diagram, args.out if args.out else sys.stdout)
    return 0


def cmd_dist(args: argparse.Namespace) -> int:
    x = read_diagram(args.diagram_a)
    y = read_diagram(args.diagram_b)
    print(f"{bottleneck_distance(x, y, args.with_essential):.17g}")
    return 0


def _manifest_diagrams(args: argparse.Namespace):
    path = Path(args.manifest)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror or exc}") from exc
    try:
        manifest = load_manifest(text)
    except InputError as exc:
        raise InputError(f"{path}: {exc}") from exc
    diagrams = corpus_diagrams(manifest, _config(args), args.format,
                               base_dir=path.parent)
    return manifest, diagrams


def cmd_distmat(args: argparse.Namespace) -> int:
    _, diagrams = _manifest_diagrams(args)
    matrix = distance_matrix(diagrams, args.with_essential, jobs=args.jobs)
    write_distance_matrix(matrix, args.out if args.out else sys.stdout)
    return 0


def cmd_eval(args: argparse.Namespace) -> int:
    manifest, diagrams = _manifest_diagrams(args)
    matrix = distance_matrix(diagrams, args.with_essential, jobs=args.jobs)
    report = evaluate(manifest.labels(), matrix)
    print(format_report(report))
    if args.out:
        with open(args.out, "w", encoding="utf-8") as f:
            json.dump(report.to_json_dict(), f, indent=2)
            f.write("\n")
    return 0


def cmd_bench(args: argparse.Namespace) -> int:
    rows = run_bench(args.edges, seed=args.seed, config=_config(args),
                     compare_backends=args.compare_backends, repeat=args.repeat)
    write_timings(rows, args.out if args.out else sys.stdout)
    return 0


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
