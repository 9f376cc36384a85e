"""Labeled multigraphs: minors, connectivity, canonical forms, small-graph corpora."""

from __future__ import annotations

import json
import struct

import numpy as np

from . import kernels

CANONICAL_VERTEX_CAP = 10


class CanonicalizationCapError(ValueError):
    """Raised when a graph has too many non-isolated vertices to canonicalize."""


class MultiGraph:
    """Multigraph on vertices {0..vertex_count-1}.

    Edges are an ordered tuple of (u, v) pairs with u <= v; parallel edges
    repeat and loops have u == v. Instances are treated as immutable; edge
    indices refer to positions in the edge tuple.
    """

    __slots__ = ("vertex_count", "edges")

    def __init__(self, vertex_count: int, edges=()):
        if not isinstance(vertex_count, int) or vertex_count < 0:
            raise ValueError(f"vertex_count must be a nonnegative integer, got {vertex_count!r}")
        norm = []
        for e in edges:
            u, v = e
            if not (isinstance(u, int) and isinstance(v, int)):
                raise ValueError(f"edge endpoints must be integers, got {e!r}")
            if not (0 <= u < vertex_count and 0 <= v < vertex_count):
                raise ValueError(f"edge {e!r} out of range for {vertex_count} vertices")
            norm.append((u, v) if u <= v else (v, u))
        self.vertex_count = vertex_count
        self.edges = tuple(norm)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        """Edge ends incident to v; a loop contributes 2."""
        d = 0
        for a, b in self.edges:
            if a == v:
                d += 1
            if b == v:
                d += 1
        return d

    def has_loops(self) -> bool:
        return any(u == v for u, v in self.edges)

    def adjacency_counts(self) -> np.ndarray:
        """Symmetric multiplicity matrix; the diagonal holds loop counts."""
        adj = np.zeros((self.vertex_count, self.vertex_count), np.int64)
        for u, v in self.edges:
            if u == v:
                adj[u, u] += 1
            else:
                adj[u, v] += 1
                adj[v, u] += 1
        return adj

    def __eq__(self, other):
        if not isinstance(other, MultiGraph):
            return NotImplemented
        return self.vertex_count == other.vertex_count and self.edges == other.edges

    def __hash__(self):
        return hash((self.vertex_count, self.edges))

    def __repr__(self):
        return f"MultiGraph({self.vertex_count}, {list(self.edges)})"


def complete_graph(n: int) -> MultiGraph:
    return MultiGraph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def cycle_graph(n: int) -> MultiGraph:
    if n < 3:
        raise ValueError(f"cycle needs at least 3 vertices, got {n}")
    return MultiGraph(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> MultiGraph:
    if n < 1:
        raise ValueError(f"path needs at least 1 vertex, got {n}")
    return MultiGraph(n, [(i, i + 1) for i in range(n - 1)])


def banana_graph() -> MultiGraph:
    """Two vertices joined by two parallel edges."""
    return MultiGraph(2, [(0, 1), (0, 1)])


def delete_edge(g: MultiGraph, e: int) -> MultiGraph:
    """Remove the edge at index e; vertices are kept."""
    if not 0 <= e < len(g.edges):
        raise ValueError(f"edge index {e} out of range")
    return MultiGraph(g.vertex_count, g.edges[:e] + g.edges[e + 1 :])


def contract_edge(g: MultiGraph, e: int) -> MultiGraph:
    """Contract the edge at index e, merging its endpoints.

    Contracting a loop just removes it. Parallel copies of the contracted
    edge become loops on the merged vertex. Vertices above the removed one
    shift down by one.
    """
    if not 0 <= e < len(g.edges):
        raise ValueError(f"edge index {e} out of range")
    u, v = g.edges[e]
    if u == v:
        return delete_edge(g, e)

    def remap(w: int) -> int:
        if w == v:
            return u
        return w - 1 if w > v else w

    edges = [
        tuple(sorted((remap(a), remap(b))))
        for i, (a, b) in enumerate(g.edges)
        if i != e
    ]
    return MultiGraph(g.vertex_count - 1, edges)


def component_count(g: MultiGraph, edge_subset=None) -> int:
    """Number of connected components of the spanning subgraph on the given edges.

    edge_subset is an iterable of edge indices; None means all edges.
    """
    parent = list(range(g.vertex_count))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    idxs = range(len(g.edges)) if edge_subset is None else edge_subset
    comps = g.vertex_count
    for i in idxs:
        u, v = g.edges[i]
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[ru] = rv
            comps -= 1
    return comps


def is_connected(g: MultiGraph) -> bool:
    return g.vertex_count >= 1 and component_count(g) == 1


def relabeled(g: MultiGraph, perm) -> MultiGraph:
    """Apply a vertex permutation (perm[v] is the new label of v)."""
    perm = list(perm)
    if sorted(perm) != list(range(g.vertex_count)):
        raise ValueError("perm must be a permutation of the vertex set")
    return MultiGraph(g.vertex_count, [(perm[u], perm[v]) for u, v in g.edges])


def canonical_key(g: MultiGraph) -> bytes:
    """Isomorphism-invariant key: equal keys iff the multigraphs are isomorphic.

    Isolated vertices are dropped before the permutation search (they carry
    no edges); their number is folded into the key header so graphs that
    differ only by isolated vertices still get distinct keys. The search is
    exhaustive over vertex permutations, capped at CANONICAL_VERTEX_CAP
    non-isolated vertices; beyond the cap CanonicalizationCapError is raised
    and callers skip memoization.
    """
    used = sorted({w for e in g.edges for w in e})
    if len(used) > CANONICAL_VERTEX_CAP:
        raise CanonicalizationCapError(
            f"{len(used)} non-isolated vertices exceed the canonicalization cap "
            f"of {CANONICAL_VERTEX_CAP}"
        )
    header = struct.pack("<qq", g.vertex_count, len(used))
    if not used:
        return header
    remap = {w: i for i, w in enumerate(used)}
    k = len(used)
    adj = np.zeros((k, k), np.int64)
    for u, v in g.edges:
        a, b = remap[u], remap[v]
        if a == b:
            adj[a, a] += 1
        else:
            adj[a, b] += 1
            adj[b, a] += 1
    canon = kernels.canonical_adj_min(adj)
    return header + np.ascontiguousarray(canon, dtype="<i8").tobytes()


# ── serialization ────────────────────────────────────────────────────────────


def graph_to_dict(g: MultiGraph) -> dict:
    return {"vertices": g.vertex_count, "edges": [[u, v] for u, v in g.edges]}


def graph_from_dict(data) -> MultiGraph:
    if not isinstance(data, dict):
        raise ValueError("graph JSON must be an object")
    if "vertices" not in data or "edges" not in data:
        raise ValueError('graph JSON needs "vertices" and "edges" fields')
    nv = data["vertices"]
    edges = data["edges"]
    if not isinstance(nv, int):
        raise ValueError(f'"vertices" must be an integer, got {nv!r}')
    if not isinstance(edges, list):
        raise ValueError('"edges" must be a list of [u, v] pairs')
    pairs = []
    for e in edges:
        if not isinstance(e, list) or len(e) != 2:
            raise ValueError(f"edge entries must be [u, v] pairs, got {e!r}")
        pairs.append((e[0], e[1]))
    return MultiGraph(nv, pairs)


def load_graph_file(path: str) -> MultiGraph:
    with open(path, "r", encoding="utf-8") as fh:
        try:
            data = json.load(fh)
        except json.JSONDecodeError as exc:
            raise ValueError(f"malformed graph file {path}: {exc}") from None
    return graph_from_dict(data)


# ── exhaustive small-graph corpus ────────────────────────────────────────────


def _multiplicity_vectors(slots: int, max_total: int):
    """Yield all tuples of nonnegative multiplicities with sum <= max_total."""
    vec = [0] * slots

    def rec(pos: int, left: int):
        if pos == slots:
            yield tuple(vec)
            return
        for m in range(left + 1):
            vec[pos] = m
            yield from rec(pos + 1, left - m)
        vec[pos] = 0

    yield from rec(0, max_total)


def enumerate_connected_multigraphs(max_vertices: int, max_edges: int, *,
                                    loops: bool = False) -> list[MultiGraph]:
    """All connected multigraphs with at most the given sizes, one per
    isomorphism class, in a deterministic order."""
    reps: dict[bytes, MultiGraph] = {}
    for nv in range(1, max_vertices + 1):
        slots = [(i, j) for i in range(nv) for j in range(i + 1, nv)]
        if loops:
            slots += [(i, i) for i in range(nv)]
        npairs = nv * (nv - 1) // 2
        for vec in _multiplicity_vectors(len(slots), max_edges):
            if nv > 1:
                parent = list(range(nv))

                def find(a):
                    while parent[a] != a:
                        parent[a] = parent[parent[a]]
                        a = parent[a]
                    return a

                comps = nv
                for t in range(npairs):
                    if vec[t]:
                        ru, rv = find(slots[t][0]), find(slots[t][1])
                        if ru != rv:
                            parent[ru] = rv
                            comps -= 1
                if comps != 1:
                    continue
            edges = []
            for t, m in enumerate(vec):
                edges.extend([slots[t]] * m)
            g = MultiGraph(nv, edges)
            key = canonical_key(g)
            if key not in reps:
                reps[key] = g
    return sorted(reps.values(), key=lambda g: (g.vertex_count, len(g.edges), canonical_key(g)))
