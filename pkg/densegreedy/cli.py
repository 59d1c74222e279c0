# densegreedy/cli.py
"""Command line entry point: ``python -m densegreedy <subcommand>``.

stdout carries results only; logs and errors go to stderr, errors as a single JSON line.
Exit codes: 0 success, 1 domain or I/O error, 2 usage error.
"""
from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path
from typing import IO, Sequence

from pydantic import ValidationError

from densegreedy import deps
from densegreedy.analysis import bound_report, dense_edge_threshold
from densegreedy.errors import ArgumentError, DenseGreedyError
from densegreedy.experiments import emit_plot_data, emit_report, partition_seed, run_experiment, sweep_greedy_density
from densegreedy.graph import Graph, generate_gnp, read_edge_list, write_edge_list
from densegreedy.greedy import default_k, greedy_dense, partition_vertices
from densegreedy.models import ExperimentConfig, Mode, OutputFormat
from densegreedy.oracle import count_dense_subgraphs, max_clique_exact, max_density_subgraph_exact

logger = logging.getLogger(__name__)

EXIT_ERROR = 1
EXIT_USAGE = 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _fail(kind: str, detail: str, stream: IO[str]) -> None:
    stream.write(json.dumps({"error": kind, "detail": detail}) + "\n")


def _open_out(path: str | None):
    return sys.stdout if path in (None, "-") else open(path, "w", encoding="utf-8", newline="")


def _emit(text: str, path: str | None) -> None:
    if path in (None, "-"):
        sys.stdout.write(text)
        return
    Path(path).write_text(text, encoding="utf-8", newline="")


def _validation_detail(e: ValidationError) -> str:
    return "; ".join(f"{'.'.join(map(str, err['loc'])) or 'config'}: {err['msg']}" for err in e.errors())


def _require_half(p: float) -> None:
    if p != 0.5:
        raise ArgumentError(f"the analytical predictions assume p = 1/2, got p={p}")


# ---------- graph input shared by greedy / oracle ----------
def _add_graph_args(sp: argparse.ArgumentParser) -> None:
    sp.add_argument("--n", type=int, help="vertices of a fresh G(n, p) draw")
    sp.add_argument("--p", type=float, default=0.5)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--graph", help="edge-list file to read instead of drawing a graph")


def _load_graph(args) -> Graph:
    if args.graph:
        return read_edge_list(args.graph)
    if args.n is None:
        raise UsageError("either --n or --graph is required")
    return generate_gnp(args.n, args.p, args.seed)


# ---------- subcommands ----------
def cmd_generate(args) -> None:
    g = generate_gnp(args.n, args.p, args.seed)
    if args.out in (None, "-"):
        write_edge_list(g, sys.stdout)
    else:
        write_edge_list(g, args.out)
    logger.info("generated n=%d m=%d seed=%d", g.n, g.edge_count, args.seed)


def cmd_greedy(args) -> None:
    g = _load_graph(args)
    k = args.k if args.k is not None else default_k(g.n)
    seed = args.partition_seed if args.partition_seed is not None else partition_seed(args.seed)
    trace = greedy_dense(g, partition_vertices(g.n, k, seed))
    _emit(trace.to_csv() if args.format == "csv" else trace.to_json() + "\n", args.out)
    logger.info("greedy k=%d: %d edges, density %.6f", k, trace.final_edges, trace.final_density)


def cmd_bounds(args) -> None:
    _require_half(args.p)
    k = args.k if args.k is not None else default_k(args.n)
    report = bound_report(args.n, k, args.delta, args.tol)
    _emit(report.to_text() if args.format == "text" else json.dumps(report.to_dict(), indent=2) + "\n", args.out)


def cmd_oracle(args) -> None:
    g = _load_graph(args)
    if args.problem == "densest":
        if args.k is None:
            raise UsageError("--k is required for the densest-subgraph oracle")
        out = max_density_subgraph_exact(g, args.k, budget=args.budget, prune=not args.no_prune).to_dict()
    elif args.problem == "count":
        if args.k is None:
            raise UsageError("--k is required for counting")
        out = {
            "k": args.k,
            "delta": args.delta,
            "threshold_edges": dense_edge_threshold(args.k, args.delta),
            "count": count_dense_subgraphs(g, args.k, args.delta, budget=args.budget),
        }
    else:
        clique = max_clique_exact(g, limit=args.budget)
        out = {"size": len(clique), "clique": list(clique)}
    _emit(json.dumps(out) + "\n", args.out)


def cmd_experiment(args) -> None:
    _require_half(args.p)
    fmt = OutputFormat(args.format)
    if fmt is OutputFormat.PLOT:
        if args.mode != Mode.GREEDY_DENSITY.value:
            raise ArgumentError("plot data is a greedy-density k sweep")
        ks = args.ks or [args.k if args.k is not None else default_k(args.n)]
        points = sweep_greedy_density(args.n, ks, args.trials, args.seed, workers=args.workers)
        out = _open_out(args.out)
        try:
            emit_plot_data(points, out)
        finally:
            if out is not sys.stdout:
                out.close()
        return

    fields = {
        "mode": args.mode,
        "n": args.n,
        "k": args.k,
        "delta": args.delta,
        "trials": args.trials,
        "master_seed": args.seed,
        "format": fmt,
        "scan_width": args.scan_width,
    }
    if args.budget is not None:
        fields["count_budget"] = args.budget
    if args.min_pass_rate is not None:
        fields["min_pass_rate"] = args.min_pass_rate
    config = ExperimentConfig(**fields)

    result = run_experiment(config, workers=args.workers)
    out = _open_out(args.out)
    try:
        emit_report(result, out)
    finally:
        if out is not sys.stdout:
            out.close()


# ---------- parser ----------
def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="densegreedy", description="Dense subgraphs in G(n, 1/2): greedy, bounds and exact oracles.")
    parser.add_argument("--log-level", default=None, help=f"default {deps.LOG_LEVEL} (DENSEGREEDY_LOG_LEVEL)")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    sp = sub.add_parser("generate", help="draw G(n, p) and write its edge list")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--p", type=float, default=0.5)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_generate)

    sp = sub.add_parser("greedy", help="run the partitioned greedy and print its trace")
    _add_graph_args(sp)
    sp.add_argument("--k", type=int)
    sp.add_argument("--partition-seed", type=int)
    sp.add_argument("--format", choices=["csv", "json"], default="json")
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_greedy)

    sp = sub.add_parser("bounds", help="print the analytical predictions for (n, k, delta)")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--k", type=int)
    sp.add_argument("--delta", type=float, default=0.049)
    sp.add_argument("--tol", type=float)
    sp.add_argument("--p", type=float, default=0.5)
    sp.add_argument("--format", choices=["json", "text"], default="json")
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_bounds)

    sp = sub.add_parser("oracle", help="exact densest subgraph, dense-subgraph count or maximum clique")
    _add_graph_args(sp)
    sp.add_argument("--problem", choices=["densest", "count", "clique"], default="densest")
    sp.add_argument("--k", type=int)
    sp.add_argument("--delta", type=float, default=0.049)
    sp.add_argument("--budget", type=int, help="node budget (densest), subset budget (count) or vertex limit (clique)")
    sp.add_argument("--no-prune", action="store_true")
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_oracle)

    sp = sub.add_parser("experiment", help="seeded Monte Carlo run")
    sp.add_argument("--mode", choices=[m.value for m in Mode], required=True)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--k", type=int)
    sp.add_argument("--ks", type=int, nargs="+", help="k values for --format plot")
    sp.add_argument("--delta", type=float, default=0.049)
    sp.add_argument("--trials", type=int, default=1)
    sp.add_argument("--seed", type=int, default=0, help="master seed")
    sp.add_argument("--p", type=float, default=0.5)
    sp.add_argument("--format", choices=[f.value for f in OutputFormat], default="csv")
    sp.add_argument("--out")
    sp.add_argument("--workers", type=int)
    sp.add_argument("--budget", type=int)
    sp.add_argument("--min-pass-rate", type=float)
    sp.add_argument("--scan-width", type=int, default=2)
    sp.set_defaults(func=cmd_experiment)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        deps.configure_logging(args.log_level)
        args.func(args)
    except UsageError as e:
        _fail("usage", str(e), sys.stderr)
        return EXIT_USAGE
    except DenseGreedyError as e:
        logger.debug("command failed", exc_info=True)
        sys.stderr.write(json.dumps(e.to_dict()) + "\n")
        return EXIT_ERROR
    except ValidationError as e:
        _fail("argument", _validation_detail(e), sys.stderr)
        return EXIT_ERROR
    except OSError as e:
        _fail("io", str(e), sys.stderr)
        return EXIT_ERROR
    return 0
