"""Parking functions, classical and graph-relative, graded by entry sum."""

from __future__ import annotations

import math

import numpy as np

from . import kernels
from .multigraph import MultiGraph, is_connected
from .polyalg import IntPolynomial

PF_ENUM_CAP = 8
GPF_SUBSET_CAP = 20
GPF_TABLE_CAP = 16
GPF_SPACE_CAP = 10**7
GPF_WORK_CAP = 2 * 10**9


def _validate_entries(entries) -> list[int]:
    out = []
    for a in entries:
        if not isinstance(a, int) or isinstance(a, bool):
            raise ValueError(f"entries must be integers, got {a!r}")
        if a < 1:
            raise ValueError(f"entries must be positive, got {a}")
        out.append(a)
    return out


def is_parking_function(entries) -> bool:
    """True iff the sorted entries b satisfy b_i <= i (1-indexed).

    Entries must be positive integers; the empty sequence qualifies.
    """
    vals = sorted(_validate_entries(entries))
    return all(b <= i for i, b in enumerate(vals, start=1))


def sum_statistic(entries) -> int:
    return sum(_validate_entries(entries))


def pf_sum_enumerator(n: int, *, threads: int = 1) -> IntPolynomial:
    """Sum enumerator over all parking functions of length n."""
    if not isinstance(n, int) or n < 0:
        raise ValueError(f"length must be a nonnegative integer, got {n!r}")
    if n > PF_ENUM_CAP:
        raise ValueError(f"length {n} exceeds the enumeration cap of {PF_ENUM_CAP}")
    if n == 0:
        return IntPolynomial({0: 1})
    hist = kernels.run_partitioned(kernels.parking_sum_hist, n**n, threads, args=(n,))
    return IntPolynomial({e: int(c) for e, c in enumerate(hist) if c})


def _validate_gpf_graph(g: MultiGraph) -> int:
    if g.has_loops():
        raise ValueError("graph-relative parking requires a loopless graph")
    if not is_connected(g):
        raise ValueError("graph-relative parking requires a connected graph")
    return g.vertex_count - 1


def d_out(g: MultiGraph, subset, i: int) -> int:
    """Edges from vertex i to vertices outside the subset.

    subset must be a nonempty set of non-root vertices (the root is 0)
    containing i.
    """
    n = _validate_gpf_graph(g)
    s = set(subset)
    if not s:
        raise ValueError("subset must be nonempty")
    for v in s:
        if not isinstance(v, int) or not 1 <= v <= n:
            raise ValueError(f"subset member {v!r} is not a non-root vertex")
    if i not in s:
        raise ValueError(f"vertex {i} is not in the subset")
    count = 0
    for u, v in g.edges:
        if u == i and v not in s:
            count += 1
        elif v == i and u not in s:
            count += 1
    return count


def is_gparking(g: MultiGraph, entries) -> bool:
    """True iff entries form a parking function relative to g (root 0).

    Checks every nonempty subset of the non-root vertices directly.
    """
    n = _validate_gpf_graph(g)
    vals = _validate_entries(entries)
    if len(vals) != n:
        raise ValueError(f"expected {n} entries for {g.vertex_count} vertices, got {len(vals)}")
    if n > GPF_SUBSET_CAP:
        raise ValueError(f"{n} non-root vertices exceed the subset-check cap of {GPF_SUBSET_CAP}")
    for mask in range(1, 1 << n):
        subset = {p + 1 for p in range(n) if mask >> p & 1}
        if not any(vals[i - 1] <= d_out(g, subset, i) for i in subset):
            return False
    return True


def _dtab(g: MultiGraph, n: int) -> np.ndarray:
    """dtab[mask, p] = edges from vertex p+1 to vertices outside the subset
    encoded by mask (bit q set means vertex q+1 is in the subset)."""
    adj = g.adjacency_counts()
    bits = (
        np.arange(1 << n, dtype=np.int64)[:, None] >> np.arange(n, dtype=np.int64)[None, :] & 1
    ).astype(np.int64)
    inner = adj[1:, 1:]
    return adj[1:, 0][None, :] + (1 - bits) @ inner.T


def gpf_sum_enumerator(g: MultiGraph, *, threads: int = 1) -> IntPolynomial:
    """Sum enumerator over parking functions relative to g.

    Candidates range over 1..deg(i) per vertex (the singleton-subset bound);
    the search space is capped both in size and in total subset-check work.
    """
    n = _validate_gpf_graph(g)
    if n == 0:
        return IntPolynomial({0: 1})
    if n > GPF_TABLE_CAP:
        raise ValueError(f"{n} non-root vertices exceed the enumeration cap of {GPF_TABLE_CAP}")
    degs = [g.degree(v) for v in range(1, g.vertex_count)]
    space = math.prod(degs)
    if space > GPF_SPACE_CAP:
        raise ValueError(
            f"candidate space of size {space} exceeds the cap of {GPF_SPACE_CAP}"
        )
    if space * ((1 << n) - 1) > GPF_WORK_CAP:
        raise ValueError(
            f"candidate space times subset checks exceeds the work cap of {GPF_WORK_CAP}"
        )
    maxvals = np.array(degs, np.int64)
    dtab = _dtab(g, n)
    hist = kernels.run_partitioned(
        kernels.gparking_sum_hist, space, threads, args=(maxvals, dtab)
    )
    return IntPolynomial({e: int(c) for e, c in enumerate(hist) if c})
