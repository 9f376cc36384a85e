"""Tutte polynomials by memoized deletion-contraction."""

from __future__ import annotations

from .multigraph import (
    CanonicalizationCapError,
    MultiGraph,
    canonical_key,
    component_count,
    contract_edge,
    delete_edge,
)
from .polyalg import BivariatePolynomial, IntPolynomial

_CACHE: dict[bytes, BivariatePolynomial] = {}


def clear_cache() -> None:
    _CACHE.clear()


def cache_size() -> int:
    return len(_CACHE)


def _classify_edges(g: MultiGraph):
    """Split edge indices into loops, bridges and the rest (lowest index first)."""
    loops = []
    rest = []
    for i, (u, v) in enumerate(g.edges):
        if u == v:
            loops.append(i)
        else:
            rest.append(i)
    base = component_count(g)
    bridges = []
    working = []
    nonloop = set(rest)
    for i in rest:
        others = [j for j in nonloop if j != i]
        if component_count(g, others) > base:
            bridges.append(i)
        else:
            working.append(i)
    return loops, bridges, working


def tutte_delcon(g: MultiGraph) -> BivariatePolynomial:
    """Tutte polynomial via deletion-contraction.

    Recursion: a graph whose edges are all loops or bridges contributes
    x^(#bridges) * y^(#loops); otherwise the lowest-indexed edge that is
    neither is deleted and contracted. Results are memoized under the
    isomorphism-canonical key; graphs past the canonicalization cap are
    recomputed instead of cached. Disconnected inputs are fine: the
    recursion reaches the product over components on its own.
    """
    try:
        key = canonical_key(g)
    except CanonicalizationCapError:
        key = None
    if key is not None:
        hit = _CACHE.get(key)
        if hit is not None:
            return hit
    loops, bridges, working = _classify_edges(g)
    if not working:
        result = BivariatePolynomial.monomial(len(bridges), len(loops))
    else:
        e = working[0]
        result = tutte_delcon(delete_edge(g, e)) + tutte_delcon(contract_edge(g, e))
    if key is not None:
        _CACHE[key] = result
    return result


def specialize(t: BivariatePolynomial, pin: str) -> IntPolynomial:
    """Substitute 1 for the pinned variable ("x" or "y"); returns a
    polynomial in the survivor."""
    if pin not in ("x", "y"):
        raise ValueError(f'pin must be "x" or "y", got {pin!r}')
    out: dict[int, int] = {}
    for (i, j), c in t.coeffs.items():
        k = j if pin == "x" else i
        out[k] = out.get(k, 0) + c
    return IntPolynomial(out)


def spanning_tree_count(g: MultiGraph) -> int:
    """Number of spanning trees; equals the Tutte polynomial at (1, 1)."""
    return tutte_delcon(g).evaluate(1, 1)
