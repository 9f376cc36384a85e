"""Rank-oracle matroids (graphic and dual) and the subset-sum Tutte oracle."""

from __future__ import annotations

from math import comb

import numpy as np

from . import kernels
from .multigraph import MultiGraph, component_count
from .polyalg import BivariatePolynomial

RANK_SUM_CAP = 22


def graphic_rank(g: MultiGraph, edge_subset) -> int:
    """Rank of an edge subset in the graphic matroid: vertices minus components."""
    return g.vertex_count - component_count(g, edge_subset)


class RankOracleMatroid:
    """Matroid presented by a rank oracle.

    Constructed either from a multigraph (graphic matroid on its edge list)
    or as the dual of another instance. Subsets are iterables of ground-set
    indices; for a graphic matroid these are edge indices.
    """

    __slots__ = ("_kind", "_graph", "_inner", "_full_rank")

    def __init__(self, kind: str, graph: MultiGraph | None = None,
                 inner: "RankOracleMatroid | None" = None):
        if kind not in ("graphic", "dual"):
            raise ValueError(f"unknown matroid kind {kind!r}")
        self._kind = kind
        self._graph = graph
        self._inner = inner
        self._full_rank = None

    @classmethod
    def graphic(cls, g: MultiGraph) -> "RankOracleMatroid":
        return cls("graphic", graph=g)

    def dual(self) -> "RankOracleMatroid":
        return RankOracleMatroid("dual", inner=self)

    @property
    def kind(self) -> str:
        return self._kind

    @property
    def graph(self) -> MultiGraph | None:
        return self._graph

    @property
    def ground_size(self) -> int:
        if self._kind == "graphic":
            return len(self._graph.edges)
        return self._inner.ground_size

    def rank(self, subset) -> int:
        s = frozenset(subset)
        for i in s:
            if not 0 <= i < self.ground_size:
                raise ValueError(f"ground element {i} out of range")
        if self._kind == "graphic":
            return graphic_rank(self._graph, s)
        return dual_rank(self._inner, s)

    @property
    def full_rank(self) -> int:
        if self._full_rank is None:
            self._full_rank = self.rank(range(self.ground_size))
        return self._full_rank

    def describe(self) -> str:
        if self._kind == "graphic":
            return f"graphic({self._graph.vertex_count}v,{len(self._graph.edges)}e)"
        return f"dual({self._inner.describe()})"


def dual_rank(m: RankOracleMatroid, subset) -> int:
    """Rank of a subset in the dual of m: |S| + rank(E - S) - rank(E)."""
    s = frozenset(subset)
    complement = [i for i in range(m.ground_size) if i not in s]
    return len(s) + m.rank(complement) - m.full_rank


def _expand_corank_nullity(counts: dict[tuple[int, int], int]) -> BivariatePolynomial:
    """Sum of w * (x-1)^c * (y-1)^n over the (corank, nullity) count table."""
    out: dict[tuple[int, int], int] = {}
    for (c, n), w in counts.items():
        if not w:
            continue
        for a in range(c + 1):
            xa = comb(c, a) * (-1) ** (c - a)
            for b in range(n + 1):
                term = w * xa * comb(n, b) * (-1) ** (n - b)
                key = (a, b)
                out[key] = out.get(key, 0) + term
    return BivariatePolynomial(out)


def _rank_sum_generic(m: RankOracleMatroid) -> BivariatePolynomial:
    size = m.ground_size
    full = m.full_rank
    counts: dict[tuple[int, int], int] = {}
    for mask in range(1 << size):
        subset = [i for i in range(size) if mask >> i & 1]
        r = m.rank(subset)
        key = (full - r, len(subset) - r)
        counts[key] = counts.get(key, 0) + 1
    return _expand_corank_nullity(counts)


def tutte_by_rank_sum(m: RankOracleMatroid) -> BivariatePolynomial:
    """Tutte polynomial by direct summation over all ground-set subsets.

    Exhaustive by design; independent of the deletion-contraction engine.
    """
    if m.ground_size > RANK_SUM_CAP:
        raise ValueError(
            f"ground set of size {m.ground_size} exceeds the rank-sum cap of "
            f"{RANK_SUM_CAP}; use the deletion-contraction engine instead"
        )
    if m.kind == "graphic":
        g = m.graph
        eu = np.array([u for u, _ in g.edges], np.int64)
        ev = np.array([v for _, v in g.edges], np.int64)
        w = kernels.corank_nullity_counts(
            eu, ev, g.vertex_count, m.full_rank, 0, 1 << len(g.edges)
        )
        counts = {
            (i, j): int(w[i, j])
            for i in range(w.shape[0])
            for j in range(w.shape[1])
            if w[i, j]
        }
        return _expand_corank_nullity(counts)
    return _rank_sum_generic(m)
