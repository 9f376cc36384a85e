"""Machine checks for the enumerator identities and log-concavity claims."""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache

from .enumerators import connected_edge_enumerator, inversion_enumerator
from .matroid import RankOracleMatroid, tutte_by_rank_sum
from .multigraph import (
    MultiGraph,
    banana_graph,
    complete_graph,
    cycle_graph,
    enumerate_connected_multigraphs,
    path_graph,
)
from .parking import gpf_sum_enumerator, pf_sum_enumerator
from .polyalg import (
    BivariatePolynomial,
    IntPolynomial,
    lc_diagnostics,
    reciprocal_reverse,
    shift_compose,
)
from .tutte import specialize, tutte_delcon


@dataclass
class CheckResult:
    check_name: str
    instance: str
    passed: bool
    lhs: dict | None = None
    rhs: dict | None = None
    detail: str | None = None

    def to_dict(self) -> dict:
        return {
            "check_name": self.check_name,
            "instance": self.instance,
            "passed": self.passed,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "detail": self.detail,
        }


def _first_mismatch(lhs, rhs) -> str:
    if isinstance(lhs, BivariatePolynomial):
        keys = sorted(set(lhs.coeffs) | set(rhs.coeffs))
        for i, j in keys:
            a, b = lhs.coefficient(i, j), rhs.coefficient(i, j)
            if a != b:
                return f"coefficient mismatch at x^{i}y^{j}: {a} != {b}"
    else:
        keys = sorted(set(lhs.coeffs) | set(rhs.coeffs))
        for e in keys:
            a, b = lhs.coefficient(e), rhs.coefficient(e)
            if a != b:
                return f"coefficient mismatch at x^{e}: {a} != {b}"
    return "polynomials differ"


def identity_check(check_name: str, instance: str, lhs, rhs) -> CheckResult:
    """Exact coefficient-by-coefficient comparison of two polynomials."""
    passed = lhs == rhs
    return CheckResult(
        check_name=check_name,
        instance=instance,
        passed=passed,
        lhs=lhs.to_json_dict(),
        rhs=rhs.to_json_dict(),
        detail=None if passed else _first_mismatch(lhs, rhs),
    )


def diagnostics_check(check_name: str, instance: str, poly: IntPolynomial,
                      passed: bool, detail: str | None) -> CheckResult:
    return CheckResult(
        check_name=check_name,
        instance=instance,
        passed=passed,
        lhs=poly.to_json_dict(),
        rhs=None,
        detail=detail,
    )


# ── identity checks ──────────────────────────────────────────────────────────


def check_eq_pftree(n: int, *, threads: int = 1) -> CheckResult:
    """Sum enumerator of length-n parking functions vs. the reversed
    inversion enumerator of trees on n+1 vertices."""
    lhs = pf_sum_enumerator(n, threads=threads)
    rhs = reciprocal_reverse(inversion_enumerator(n + 1, threads=threads), n * (n + 1) // 2)
    return identity_check("eq_pftree", f"n={n}", lhs, rhs)


def check_tutte_inversion(n: int, *, threads: int = 1) -> CheckResult:
    """Inversion enumerator of trees on n vertices vs. T(1, y) of the complete graph."""
    lhs = inversion_enumerator(n, threads=threads)
    rhs = specialize(tutte_delcon(complete_graph(n)), pin="x")
    return identity_check("tutte_inversion", f"n={n}", lhs, rhs)


def check_duality(g: MultiGraph, instance: str | None = None) -> CheckResult:
    """Engine Tutte polynomial with variables swapped vs. the rank-sum
    polynomial of the dual matroid."""
    lhs = tutte_delcon(g).swap_variables()
    rhs = tutte_by_rank_sum(RankOracleMatroid.graphic(g).dual())
    return identity_check("duality", instance or graph_label(g), lhs, rhs)


def check_connected_identity(n: int, *, threads: int = 1) -> CheckResult:
    """Connected-graph edge enumerator vs. x^(n-1) times the shifted
    inversion enumerator."""
    lhs = connected_edge_enumerator(n, threads=threads)
    # the single-vertex tree has no inversions, so the n=1 enumerator is 1
    inv = IntPolynomial({0: 1}) if n == 1 else inversion_enumerator(n, threads=threads)
    rhs = IntPolynomial.monomial(n - 1) * shift_compose(inv)
    return identity_check("connected_identity", f"n={n}", lhs, rhs)


def check_gpf_identity(g: MultiGraph, instance: str | None = None, *,
                       threads: int = 1) -> CheckResult:
    """T(1, y) of the graph vs. the reversed graph-parking sum enumerator."""
    lhs = specialize(tutte_delcon(g), pin="x")
    rhs = reciprocal_reverse(gpf_sum_enumerator(g, threads=threads), len(g.edges))
    return identity_check("gpf_identity", instance or graph_label(g), lhs, rhs)


# ── default corpus ───────────────────────────────────────────────────────────


def graph_label(g: MultiGraph) -> str:
    body = "+".join(f"{u}{v}" for u, v in sorted(g.edges))
    return f"{g.vertex_count}v{len(g.edges)}e:{body}" if body else f"{g.vertex_count}v0e"


@lru_cache(maxsize=None)
def _corpus_4v6e() -> tuple[MultiGraph, ...]:
    return tuple(enumerate_connected_multigraphs(4, 6, loops=False))


def duality_instances(max_k: int = 6) -> list[tuple[str, MultiGraph]]:
    """Complete graphs, named small graphs (loops included) and the exhaustive
    small-multigraph corpus."""
    items: list[tuple[str, MultiGraph]] = []
    for k in range(2, max_k + 1):
        items.append((f"K{k}", complete_graph(k)))
    items.append(("banana", banana_graph()))
    for k in range(3, 7):
        items.append((f"cycle{k}", cycle_graph(k)))
    for k in range(2, 5):
        items.append((f"path{k}", path_graph(k)))
    items.append(("loop", MultiGraph(1, [(0, 0)])))
    items.append(("loop+bridge", MultiGraph(2, [(0, 1), (1, 1)])))
    for g in _corpus_4v6e():
        items.append((graph_label(g), g))
    return items


def gpf_instances(max_k: int = 5) -> list[tuple[str, MultiGraph]]:
    """Loopless connected graphs for the graph-parking identity."""
    items: list[tuple[str, MultiGraph]] = [("banana", banana_graph())]
    for k in range(3, 7):
        items.append((f"cycle{k}", cycle_graph(k)))
    for k in range(3, max_k + 1):
        items.append((f"K{k}", complete_graph(k)))
    for g in _corpus_4v6e():
        items.append((graph_label(g), g))
    return items


# ── log-concavity suite ──────────────────────────────────────────────────────


def _lc_result(kind: str, instance: str, poly: IntPolynomial) -> CheckResult:
    report = lc_diagnostics(poly)
    if kind == "logconcavity":
        passed = report.is_log_concave
        detail = (
            None if passed else f"log-concavity violated at exponent {report.first_violation}"
        )
    elif kind == "internal_zeros":
        passed = not report.has_internal_zeros
        detail = None if passed else "internal zero inside the support range"
    else:
        raise ValueError(f"unknown diagnostics kind {kind!r}")
    return diagnostics_check(kind, instance, poly, passed, detail)


def logconcavity_suite(items=None, *, max_n: int | None = None,
                       threads: int = 1) -> list[CheckResult]:
    """Log-concavity checks over the default polynomial instances.

    items, when given, is an iterable of (label, IntPolynomial) pairs and
    replaces the default set. The default set covers the parking-sum
    enumerators, connected-graph enumerators, graph-parking enumerators over
    the corpus, and both one-variable Tutte specializations of every matroid
    instance the suite constructs. The tree inversion enumerators feeding the
    shift step are also checked for internal zeros, and their shifts for
    log-concavity.
    """
    if items is not None:
        return [_lc_result("logconcavity", label, poly) for label, poly in items]

    def cap(k: int) -> int:
        return k if max_n is None else min(k, max_n)

    results: list[CheckResult] = []
    for n in range(1, cap(8) + 1):
        pn = pf_sum_enumerator(n, threads=threads)
        results.append(_lc_result("logconcavity", f"P[n={n}]", pn))
        results.append(_lc_result("internal_zeros", f"P[n={n}]", pn))
    for n in range(1, cap(6) + 1):
        cn = connected_edge_enumerator(n, threads=threads)
        results.append(_lc_result("logconcavity", f"C[n={n}]", cn))
    for n in range(2, cap(8) + 1):
        inv = inversion_enumerator(n, threads=threads)
        results.append(_lc_result("internal_zeros", f"I[n={n}]", inv))
        shifted = shift_compose(inv)
        results.append(_lc_result("logconcavity", f"shift(I[n={n}])", shifted))
    for label, g in gpf_instances(cap(5)):
        results.append(_lc_result("logconcavity", f"P_G[{label}]", gpf_sum_enumerator(g)))
    tutte_graphs = list(duality_instances(cap(6)))
    if cap(7) >= 7:
        tutte_graphs.append(("K7", complete_graph(7)))
    for label, g in tutte_graphs:
        t = tutte_delcon(g)
        results.append(_lc_result("logconcavity", f"T(x,1)[{label}]", specialize(t, pin="y")))
        results.append(_lc_result("logconcavity", f"T(1,y)[{label}]", specialize(t, pin="x")))
    return results


# ── suite orchestration ──────────────────────────────────────────────────────


def run_default_suite(*, max_n: int | None = None, threads: int = 1) -> list[CheckResult]:
    """Run every default check; results come back in a stable order."""

    def cap(k: int) -> int:
        return k if max_n is None else min(k, max_n)

    results: list[CheckResult] = []
    for n in range(1, cap(7) + 1):
        results.append(check_eq_pftree(n, threads=threads))
    for n in range(2, cap(7) + 1):
        results.append(check_tutte_inversion(n, threads=threads))
    for n in range(1, cap(6) + 1):
        results.append(check_connected_identity(n, threads=threads))
    for label, g in duality_instances(cap(6)):
        results.append(check_duality(g, label))
    for label, g in gpf_instances(cap(5)):
        results.append(check_gpf_identity(g, label, threads=threads))
    results.extend(logconcavity_suite(max_n=max_n, threads=threads))
    results.sort(key=lambda r: (r.check_name, r.instance))
    return results


def results_to_json(results) -> str:
    return json.dumps([r.to_dict() for r in results], sort_keys=True, indent=2) + "\n"


def results_table(results) -> str:
    rows = []
    name_w = max((len(r.check_name) for r in results), default=10)
    inst_w = max((len(r.instance) for r in results), default=10)
    for r in results:
        status = "PASS" if r.passed else "FAIL"
        line = f"{status}  {r.check_name:<{name_w}}  {r.instance:<{inst_w}}"
        if r.detail:
            line += f"  {r.detail}"
        rows.append(line.rstrip())
    npass = sum(1 for r in results if r.passed)
    rows.append(f"{npass}/{len(results)} checks passed")
    return "\n".join(rows) + "\n"
