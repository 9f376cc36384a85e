"""Labeled-tree and connected-graph enumerators graded by exact statistics."""

from __future__ import annotations

import numpy as np

from . import kernels
from .polyalg import IntPolynomial

TREE_ENUM_CAP = 9
CONNECTED_ENUM_CAP = 7


class LabeledTree:
    """Tree on vertices {0..n-1} rooted at 0, stored as a parent array.

    parent[v] is v's neighbor on the path toward 0; parent[0] is 0 by
    convention and carries no edge.
    """

    __slots__ = ("parent",)

    def __init__(self, parent):
        parent = tuple(parent)
        n = len(parent)
        if n < 1:
            raise ValueError("a tree needs at least one vertex")
        if parent[0] != 0:
            raise ValueError("parent[0] must be 0 (the root)")
        for v in range(1, n):
            p = parent[v]
            if not isinstance(p, int) or not 0 <= p < n:
                raise ValueError(f"parent[{v}] = {p!r} out of range")
            if p == v:
                raise ValueError(f"vertex {v} cannot be its own parent")
        # every chain must reach the root
        for v in range(1, n):
            seen = 0
            w = v
            while w != 0:
                w = parent[w]
                seen += 1
                if seen > n:
                    raise ValueError("parent array contains a cycle")
        self.parent = parent

    @property
    def vertex_count(self) -> int:
        return len(self.parent)

    def edges(self) -> tuple[tuple[int, int], ...]:
        return tuple((v, self.parent[v]) for v in range(1, len(self.parent)))

    def __eq__(self, other):
        if not isinstance(other, LabeledTree):
            return NotImplemented
        return self.parent == other.parent

    def __hash__(self):
        return hash(self.parent)

    def __repr__(self):
        return f"LabeledTree({list(self.parent)})"


def prufer_decode(seq) -> LabeledTree:
    """Decode a label sequence of length n-2 into the tree on {0..n-1} it encodes."""
    seq = list(seq)
    n = len(seq) + 2
    for s in seq:
        if not isinstance(s, int) or not 0 <= s < n:
            raise ValueError(f"sequence label {s!r} out of range for {n} vertices")
    deg = [1] * n
    for s in seq:
        deg[s] += 1
    edges = []
    for s in seq:
        leaf = deg.index(1)
        edges.append((leaf, s))
        deg[leaf] -= 1
        deg[s] -= 1
    u = deg.index(1)
    deg[u] -= 1
    v = deg.index(1)
    edges.append((u, v))
    # orient toward 0
    parent = [0] * n
    known = [False] * n
    known[0] = True
    for _ in range(n - 1):
        for a, b in edges:
            if known[a] and not known[b]:
                parent[b] = a
                known[b] = True
            elif known[b] and not known[a]:
                parent[a] = b
                known[a] = True
    return LabeledTree(parent)


def inversion_count(tree: LabeledTree) -> int:
    """Number of pairs (i, j), 0 < i < j, with j on the path from i to the root."""
    inv = 0
    parent = tree.parent
    for i in range(1, len(parent)):
        v = parent[i]
        while v != 0:
            if v > i:
                inv += 1
            v = parent[v]
    return inv


def inversion_enumerator(n: int, *, threads: int = 1) -> IntPolynomial:
    """Inversion enumerator over all labeled trees on n vertices {0..n-1}."""
    if not isinstance(n, int) or n < 2:
        raise ValueError(f"tree vertex count must be an integer >= 2, got {n!r}")
    if n > TREE_ENUM_CAP:
        raise ValueError(f"tree vertex count {n} exceeds the enumeration cap of {TREE_ENUM_CAP}")
    total = n ** (n - 2)
    hist = kernels.run_partitioned(kernels.tree_inversion_hist, total, threads, args=(n,))
    return IntPolynomial({e: int(c) for e, c in enumerate(hist) if c})


def connected_edge_enumerator(n: int, *, threads: int = 1) -> IntPolynomial:
    """Edge-count enumerator over connected simple graphs on n labeled vertices."""
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"vertex count must be an integer >= 1, got {n!r}")
    if n > CONNECTED_ENUM_CAP:
        raise ValueError(f"vertex count {n} exceeds the enumeration cap of {CONNECTED_ENUM_CAP}")
    if n == 1:
        return IntPolynomial({0: 1})
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    eu = np.array([u for u, _ in pairs], np.int64)
    ev = np.array([v for _, v in pairs], np.int64)
    total = 1 << len(pairs)
    hist = kernels.run_partitioned(
        kernels.connected_count_hist, total, threads, args=(eu, ev, n)
    )
    return IntPolynomial({e: int(c) for e, c in enumerate(hist) if c})
