"""Command-line interface for the enumerators, Tutte engines and verifier."""

from __future__ import annotations

import argparse
import json
import os
import sys

from .enumerators import connected_edge_enumerator, inversion_enumerator
from .matroid import RankOracleMatroid, tutte_by_rank_sum
from .multigraph import MultiGraph, banana_graph, complete_graph, cycle_graph, load_graph_file, path_graph
from .parking import gpf_sum_enumerator, pf_sum_enumerator
from .polyalg import BivariatePolynomial, IntPolynomial, lc_diagnostics
from .tutte import tutte_delcon
from .verify import results_table, results_to_json, run_default_suite


def resolve_graph(ref: str) -> MultiGraph:
    """Accept a named graph (complete:N, banana, cycle:N, path:N) or a JSON file path."""
    name, _, arg = ref.partition(":")
    builders = {"complete": complete_graph, "cycle": cycle_graph, "path": path_graph}
    if name in builders:
        if not arg:
            raise ValueError(f"named graph {name!r} needs a size, e.g. {name}:4")
        try:
            k = int(arg)
        except ValueError:
            raise ValueError(f"bad size {arg!r} in graph name {ref!r}") from None
        return builders[name](k)
    if ref == "banana":
        return banana_graph()
    if os.path.exists(ref):
        return load_graph_file(ref)
    raise ValueError(
        f"unknown graph {ref!r}: expected complete:N, banana, cycle:N, path:N "
        f"or a path to a JSON graph file"
    )


def _emit_poly(poly: IntPolynomial, fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(poly.to_json_dict(), sort_keys=True))
    elif fmt == "csv":
        for e, c in sorted(poly.coeffs.items()):
            print(f"{e},{c}")
    else:
        print(poly)


def _emit_bipoly(poly: BivariatePolynomial, fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(poly.to_json_dict(), sort_keys=True))
    elif fmt == "csv":
        for (i, j), c in sorted(poly.coeffs.items()):
            print(f"{i},{j},{c}")
    else:
        print(poly)


def _threads(args) -> int:
    if args.threads is not None:
        if args.threads < 1:
            raise ValueError("--threads must be at least 1")
        return args.threads
    return os.cpu_count() or 1


def cmd_pf_poly(args) -> int:
    _emit_poly(pf_sum_enumerator(args.n, threads=_threads(args)), args.format)
    return 0


def cmd_inv_poly(args) -> int:
    _emit_poly(inversion_enumerator(args.n, threads=_threads(args)), args.format)
    return 0


def cmd_connected_poly(args) -> int:
    _emit_poly(connected_edge_enumerator(args.n, threads=_threads(args)), args.format)
    return 0


def cmd_gpf(args) -> int:
    g = resolve_graph(args.graph)
    _emit_poly(gpf_sum_enumerator(g, threads=_threads(args)), args.format)
    return 0


def cmd_tutte(args) -> int:
    g = resolve_graph(args.graph)
    t = tutte_delcon(g)
    if args.at is not None:
        print(t.evaluate(args.at[0], args.at[1]))
        return 0
    _emit_bipoly(t, args.format)
    return 0


def cmd_dual_tutte(args) -> int:
    g = resolve_graph(args.graph)
    t = tutte_by_rank_sum(RankOracleMatroid.graphic(g).dual())
    if args.at is not None:
        print(t.evaluate(args.at[0], args.at[1]))
        return 0
    _emit_bipoly(t, args.format)
    return 0


def cmd_verify(args) -> int:
    if args.suite != "default":
        raise ValueError(f"unknown suite {args.suite!r}; available: default")
    results = run_default_suite(max_n=args.max_n, threads=_threads(args))
    if args.format == "json":
        sys.stdout.write(results_to_json(results))
    else:
        sys.stdout.write(results_table(results))
    return 0 if all(r.passed for r in results) else 1


def cmd_diagnostics(args) -> int:
    try:
        with open(args.poly, "r", encoding="utf-8") as fh:
            data = json.load(fh)
    except OSError as exc:
        raise ValueError(f"cannot read polynomial file {args.poly}: {exc}") from None
    except json.JSONDecodeError as exc:
        raise ValueError(f"malformed polynomial file {args.poly}: {exc}") from None
    poly = IntPolynomial.from_json_dict(data)
    report = lc_diagnostics(poly)
    if args.format == "json":
        print(
            json.dumps(
                {
                    "is_log_concave": report.is_log_concave,
                    "is_unimodal": report.is_unimodal,
                    "has_internal_zeros": report.has_internal_zeros,
                    "first_violation": report.first_violation,
                },
                sort_keys=True,
            )
        )
    else:
        print(f"log-concave:    {report.is_log_concave}")
        print(f"unimodal:       {report.is_unimodal}")
        print(f"internal zeros: {report.has_internal_zeros}")
        if report.first_violation is not None:
            print(f"first violation at exponent {report.first_violation}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="parklc",
        description="Exact enumerators for parking functions, tree inversions and "
        "Tutte polynomials, with log-concavity diagnostics.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, fmt_choices=("human", "json", "csv")):
        p.add_argument("--format", choices=fmt_choices, default="human")
        p.add_argument("--threads", type=int, default=None,
                       help="worker count (default: available parallelism)")

    p = sub.add_parser("pf-poly", help="parking-function sum enumerator")
    p.add_argument("n", type=int)
    add_common(p)
    p.set_defaults(func=cmd_pf_poly)

    p = sub.add_parser("inv-poly", help="labeled-tree inversion enumerator")
    p.add_argument("n", type=int)
    add_common(p)
    p.set_defaults(func=cmd_inv_poly)

    p = sub.add_parser("connected-poly", help="connected-graph edge enumerator")
    p.add_argument("n", type=int)
    add_common(p)
    p.set_defaults(func=cmd_connected_poly)

    p = sub.add_parser("gpf", help="graph-relative parking sum enumerator")
    p.add_argument("--graph", required=True)
    add_common(p)
    p.set_defaults(func=cmd_gpf)

    p = sub.add_parser("tutte", help="Tutte polynomial by deletion-contraction")
    p.add_argument("--graph", required=True)
    p.add_argument("--at", nargs=2, type=int, metavar=("X", "Y"),
                   help="evaluate at an integer point instead of printing coefficients")
    add_common(p)
    p.set_defaults(func=cmd_tutte)

    p = sub.add_parser("dual-tutte", help="Tutte polynomial of the dual matroid (rank-sum)")
    p.add_argument("--graph", required=True)
    p.add_argument("--at", nargs=2, type=int, metavar=("X", "Y"))
    add_common(p)
    p.set_defaults(func=cmd_dual_tutte)

    p = sub.add_parser("verify", help="run the identity and log-concavity checks")
    p.add_argument("--suite", default="default")
    p.add_argument("--max-n", type=int, default=None)
    add_common(p, fmt_choices=("human", "json"))
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("diagnostics", help="log-concavity diagnostics for a polynomial file")
    p.add_argument("--poly", required=True)
    add_common(p, fmt_choices=("human", "json"))
    p.set_defaults(func=cmd_diagnostics)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
