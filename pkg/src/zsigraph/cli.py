"""Command-line front end: build models, compute invariants, run checks.

Exit codes: 0 = success (anomalies and hypothesis violations included),
1 = at least one check failed, 2 = configuration error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import __version__
from .graphs import distance, shortest_path, smallest_cycle_through_pair
from .io import (dump_json, graph_from_descriptor, graph_to_dot,
                 invariants_payload, jsonable, model_descriptor,
                 render_invariants_markdown)
from .linegraph import build_line_graph
from .model import ModelConfig, build_gamma, parse_vertex_label, vertex_index
from .verify import DEFAULT_SEED, default_sweep, run_all

N_LIMIT = 6
M_LIMIT = 6


class CliError(Exception):
    pass


def _config_from_args(args) -> ModelConfig:
    if not (1 <= args.n <= N_LIMIT):
        raise CliError(f"--n must lie in 1..{N_LIMIT}")
    if not (1 <= args.m <= M_LIMIT):
        raise CliError(f"--m must lie in 1..{M_LIMIT}")
    return ModelConfig(n=args.n, m=args.m, include_zero=args.include_zero)


def _parse_range(text: str, lo: int, hi: int, what: str) -> list[int]:
    try:
        if ".." in text:
            a, b = text.split("..", 1)
            first, last = int(a), int(b)
        else:
            first = last = int(text)
    except ValueError as exc:
        raise CliError(f"malformed {what} range {text!r} (use A..B)") from exc
    if first > last or first < lo or last > hi:
        raise CliError(f"{what} range {text!r} outside {lo}..{hi}")
    return list(range(first, last + 1))


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _vertex_id(config: ModelConfig, label: str) -> int:
    mask, copy = parse_vertex_label(label, config.n)
    return vertex_index(config, mask, copy)


# -- subcommands -------------------------------------------------------------

def cmd_build(args) -> int:
    config = _config_from_args(args)
    g = build_gamma(config)
    if args.line:
        lg = build_line_graph(g)
        if args.format == "dot":
            _emit(graph_to_dot(lg.graph, name="line_graph"), args.out)
        else:
            payload = {
                "kind": "line_graph",
                "base": config.to_json(),
                "vertices": list(lg.graph.labels),
                "edges": [[int(u), int(v)] for u, v in lg.graph.edges()],
            }
            _emit(dump_json(payload), args.out)
        return 0
    if args.format == "dot":
        _emit(graph_to_dot(g, name="gamma"), args.out)
    else:
        _emit(dump_json(model_descriptor(config, g)), args.out)
    return 0


def cmd_linegraph(args) -> int:
    args.line = True
    return cmd_build(args)


def cmd_invariants(args) -> int:
    if args.input:
        desc = json.loads(Path(args.input).read_text(encoding="utf-8"))
        _, g = graph_from_descriptor(desc)
    else:
        config = _config_from_args(args)
        g = build_gamma(config)
    payload = invariants_payload(g, max_k=args.max_k)
    if args.format == "md":
        _emit(render_invariants_markdown(payload), args.out)
    else:
        _emit(dump_json(payload), args.out)
    return 0


def cmd_verify(args) -> int:
    if args.n_range is None and args.m_range is None:
        sweep = default_sweep(include_zero=args.include_zero)
    else:
        ns = _parse_range(args.n_range or "2..5", 1, N_LIMIT, "n")
        ms = _parse_range(args.m_range or "4..4", 1, M_LIMIT, "m")
        sweep = [ModelConfig(n, m, args.include_zero) for n in ns for m in ms]
    theorems = None
    if args.theorems:
        theorems = {t.strip() for t in args.theorems.split(",") if t.strip()}
    report = run_all(sweep, theorems=theorems, seed=args.seed)
    if args.format == "md":
        _emit(report.to_markdown(), args.out)
    else:
        _emit(dump_json(report.to_json()), args.out)
    return report.exit_code


def cmd_dist(args) -> int:
    config = _config_from_args(args)
    g = build_gamma(config)
    u = _vertex_id(config, args.u)
    v = _vertex_id(config, args.v)
    d = distance(g, u, v)
    line = f"d({args.u}, {args.v}) = {jsonable(d)}"
    path = shortest_path(g, u, v)
    if path is not None:
        line += "  path: " + " - ".join(g.labels[i] for i in path)
    _emit(line + "\n", args.out)
    return 0


def cmd_cycle_through(args) -> int:
    config = _config_from_args(args)
    g = build_gamma(config)
    u = _vertex_id(config, args.u)
    v = _vertex_id(config, args.v)
    length, cycle = smallest_cycle_through_pair(g, u, v)
    line = f"c({args.u}, {args.v}) = {jsonable(length)}"
    if cycle is not None:
        line += "  cycle: " + " - ".join(g.labels[i] for i in cycle)
    _emit(line + "\n", args.out)
    return 0


# -- parser ------------------------------------------------------------------

def _add_model_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--n", type=int, required=True, help="points in the space")
    p.add_argument("--m", type=int, default=4,
                   help="copies per zero-set class (default 4)")
    p.add_argument("--include-zero", action="store_true",
                   help="include the constant zero function as a vertex")


def _add_out_args(p: argparse.ArgumentParser, formats=("json", "dot")) -> None:
    p.add_argument("--format", choices=formats, default=formats[0])
    p.add_argument("--out", default=None, help="output path (default stdout)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="zsigraph",
        description="Finite zero-set intersection graph models: builds, "
                    "invariants, line graphs and exhaustive checks.")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("build", help="build a model graph and export it")
    _add_model_args(p)
    p.add_argument("--line", action="store_true",
                   help="export the line graph instead")
    _add_out_args(p)
    p.set_defaults(fn=cmd_build)

    p = sub.add_parser("linegraph", help="export the line graph of a model")
    _add_model_args(p)
    _add_out_args(p)
    p.set_defaults(fn=cmd_linegraph)

    p = sub.add_parser("invariants",
                       help="diameter, radius, girth, chordality, domination")
    _add_model_args(p)
    p.add_argument("--input", default=None,
                   help="read a previously exported model JSON instead of "
                        "building (--n/--m ignored)")
    p.add_argument("--max-k", type=int, default=3,
                   help="domination search bound (default 3)")
    _add_out_args(p, formats=("json", "md"))
    p.set_defaults(fn=cmd_invariants)

    p = sub.add_parser("verify", help="run the check sweep")
    p.add_argument("--n-range", default=None,
                   help="A..B space sizes (default 2..5)")
    p.add_argument("--m-range", default=None,
                   help="A..B multiplicities (default 4..4 when --n-range "
                        "given, else the full default sweep)")
    p.add_argument("--include-zero", action="store_true")
    p.add_argument("--theorems", default=None,
                   help="comma-separated ids, e.g. T3.4,T5.8")
    p.add_argument("--seed", type=int, default=DEFAULT_SEED,
                   help="seed for the randomized oracle self-test")
    _add_out_args(p, formats=("json", "md"))
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("dist", help="distance between two model vertices")
    _add_model_args(p)
    p.add_argument("--u", required=True, help='vertex label, e.g. "0,2:1"')
    p.add_argument("--v", required=True)
    p.add_argument("--out", default=None)
    p.set_defaults(fn=cmd_dist)

    p = sub.add_parser("cycle-through",
                       help="smallest cycle through two model vertices")
    _add_model_args(p)
    p.add_argument("--u", required=True)
    p.add_argument("--v", required=True)
    p.add_argument("--out", default=None)
    p.set_defaults(fn=cmd_cycle_through)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.fn(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, KeyError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
