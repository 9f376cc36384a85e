"""Pure-numpy kernel implementations (fallback backend).

Every function mirrors the numba backend signature and flat-index layout
exactly, so partial results computed over the same index ranges agree
between backends.
"""

from __future__ import annotations

import itertools
from functools import lru_cache

import numpy as np

BACKEND_NAME = "numpy"

_CHUNK = 1 << 16


def parking_sum_hist(n: int, start: int, stop: int) -> np.ndarray:
    """Histogram of entry sums over parking functions inside {1..n}^n.

    Candidate index idx encodes entries a_k = ((idx // n^k) % n) + 1.
    """
    if start < 0 or stop > n ** n:
        raise ValueError("index range outside the enumeration space")
    max_sum = n * (n + 1) // 2
    hist = np.zeros(max_sum + 1, np.int64)
    if stop <= start:
        return hist
    powers = n ** np.arange(n, dtype=np.int64)
    bound = np.arange(1, n + 1, dtype=np.int64)
    for c0 in range(start, stop, _CHUNK):
        idx = np.arange(c0, min(c0 + _CHUNK, stop), dtype=np.int64)
        entries = (idx[:, None] // powers[None, :]) % n + 1
        srt = np.sort(entries, axis=1)
        ok = (srt <= bound).all(axis=1)
        sums = entries.sum(axis=1)
        hist += np.bincount(sums[ok], minlength=max_sum + 1)
    return hist


def gparking_sum_hist(maxvals: np.ndarray, dtab: np.ndarray, start: int, stop: int) -> np.ndarray:
    """Histogram of entry sums over valid assignments a with 1 <= a_p <= maxvals[p].

    dtab[mask, p] is the out-degree bound for position p against the subset
    encoded by mask (bit p set means position p belongs to the subset). A
    candidate is counted when every nonempty mask has some member p with
    a_p <= dtab[mask, p]. Index idx uses mixed radix with position 0 fastest.
    """
    n = len(maxvals)
    maxvals = np.asarray(maxvals, np.int64)
    if start < 0 or stop > int(np.prod(maxvals)):
        raise ValueError("index range outside the enumeration space")
    max_sum = int(maxvals.sum())
    hist = np.zeros(max_sum + 1, np.int64)
    if stop <= start:
        return hist
    strides = np.ones(n, np.int64)
    for k in range(1, n):
        strides[k] = strides[k - 1] * maxvals[k - 1]
    nmask = dtab.shape[0]
    members = [[p for p in range(n) if mask >> p & 1] for mask in range(nmask)]
    for c0 in range(start, stop, _CHUNK):
        idx = np.arange(c0, min(c0 + _CHUNK, stop), dtype=np.int64)
        a = (idx[:, None] // strides[None, :]) % maxvals[None, :] + 1
        valid = np.ones(len(idx), bool)
        for mask in range(1, nmask):
            ps = members[mask]
            sat = (a[:, ps] <= dtab[mask, ps][None, :]).any(axis=1)
            valid &= sat
            if not valid.any():
                break
        sums = a[valid].sum(axis=1)
        hist += np.bincount(sums, minlength=max_sum + 1)
    return hist


def tree_inversion_hist(n: int, start: int, stop: int) -> np.ndarray:
    """Histogram of inversion counts over labeled trees on {0..n-1}.

    Trees are enumerated through length-(n-2) sequences over {0..n-1};
    sequence index idx encodes seq[t] = (idx // n^t) % n.
    """
    if start < 0 or stop > n ** (n - 2):
        raise ValueError("index range outside the enumeration space")
    max_inv = (n - 1) * (n - 2) // 2
    hist = np.zeros(max_inv + 1, np.int64)
    if stop <= start:
        return hist
    if n == 2:
        if start <= 0 < stop:
            hist[0] += 1
        return hist
    ln = n - 2
    powers = n ** np.arange(ln, dtype=np.int64)
    vidx = np.arange(n, dtype=np.int64)[None, :]
    for c0 in range(start, stop, _CHUNK):
        idx = np.arange(c0, min(c0 + _CHUNK, stop), dtype=np.int64)
        rows = np.arange(len(idx))
        seqs = (idx[:, None] // powers[None, :]) % n
        deg = np.ones((len(idx), n), np.int64)
        np.add.at(deg, (np.repeat(rows, ln), seqs.ravel()), 1)
        eu = np.empty((len(idx), n - 1), np.int64)
        ev = np.empty((len(idx), n - 1), np.int64)
        for t in range(ln):
            leaf = (deg == 1).argmax(axis=1)
            other = seqs[:, t]
            eu[:, t] = leaf
            ev[:, t] = other
            deg[rows, leaf] -= 1
            deg[rows, other] -= 1
        u = (deg == 1).argmax(axis=1)
        deg[rows, u] -= 1
        v = (deg == 1).argmax(axis=1)
        eu[:, ln] = u
        ev[:, ln] = v
        # orient every edge toward vertex 0
        parent = np.zeros((len(idx), n), np.int64)
        known = np.zeros((len(idx), n), bool)
        known[:, 0] = True
        for _ in range(n - 1):
            for t in range(n - 1):
                a = eu[:, t]
                b = ev[:, t]
                ka = known[rows, a]
                kb = known[rows, b]
                m = ka & ~kb
                parent[rows[m], b[m]] = a[m]
                known[rows[m], b[m]] = True
                m = kb & ~ka
                parent[rows[m], a[m]] = b[m]
                known[rows[m], a[m]] = True
        inv = np.zeros(len(idx), np.int64)
        cur = np.tile(np.arange(n, dtype=np.int64), (len(idx), 1))
        for _ in range(n - 1):
            cur = parent[rows[:, None], cur]
            inv += (cur > vidx).sum(axis=1)
        hist += np.bincount(inv, minlength=max_inv + 1)
    return hist


def _component_counts(eu, ev, nv, idx):
    """Component counts of the spanning subgraphs selected by each mask in idx."""
    m = len(eu)
    bits = (idx[:, None] >> np.arange(m, dtype=np.int64)[None, :] & 1).astype(bool)
    labels = np.tile(np.arange(nv, dtype=np.int64), (len(idx), 1))
    # min-label propagation; nv sweeps suffice on <= nv vertices
    for _ in range(nv):
        for t in range(m):
            u, v = eu[t], ev[t]
            if u == v:
                continue
            lu = labels[:, u]
            lv = labels[:, v]
            mn = np.minimum(lu, lv)
            on = bits[:, t]
            labels[on, u] = mn[on]
            labels[on, v] = mn[on]
    comps = (labels == np.arange(nv, dtype=np.int64)[None, :]).sum(axis=1)
    return bits, comps


def connected_count_hist(eu: np.ndarray, ev: np.ndarray, nv: int, start: int, stop: int) -> np.ndarray:
    """Histogram by edge count of connected spanning subgraphs among masks [start, stop)."""
    m = len(eu)
    if start < 0 or stop > (1 << m):
        raise ValueError("index range outside the enumeration space")
    hist = np.zeros(m + 1, np.int64)
    if stop <= start:
        return hist
    for c0 in range(start, stop, _CHUNK):
        idx = np.arange(c0, min(c0 + _CHUNK, stop), dtype=np.int64)
        bits, comps = _component_counts(eu, ev, nv, idx)
        pops = bits.sum(axis=1)
        hist += np.bincount(pops[comps == 1], minlength=m + 1)
    return hist


def corank_nullity_counts(eu: np.ndarray, ev: np.ndarray, nv: int, full_rank: int,
                          start: int, stop: int) -> np.ndarray:
    """Count edge subsets by (corank, nullity) for the graphic matroid.

    rank(S) = nv - components(S); corank = full_rank - rank; nullity = |S| - rank.
    Returns a (full_rank+1, m-full_rank+1) int64 matrix.
    """
    m = len(eu)
    if start < 0 or stop > (1 << m):
        raise ValueError("index range outside the enumeration space")
    counts = np.zeros((full_rank + 1, m - full_rank + 1), np.int64)
    if stop <= start:
        return counts
    for c0 in range(start, stop, _CHUNK):
        idx = np.arange(c0, min(c0 + _CHUNK, stop), dtype=np.int64)
        bits, comps = _component_counts(eu, ev, nv, idx)
        rank = nv - comps
        pops = bits.sum(axis=1)
        np.add.at(counts, (full_rank - rank, pops - rank), 1)
    return counts


@lru_cache(maxsize=None)
def _perm_table(k: int) -> np.ndarray:
    return np.array(list(itertools.permutations(range(k))), dtype=np.int8)


def canonical_adj_min(adj: np.ndarray) -> np.ndarray:
    """Lexicographically minimal upper triangle (diagonal included) of adj
    over all simultaneous row/column permutations.

    adj is a symmetric (k, k) int64 multiplicity matrix; the diagonal holds
    loop counts. Returns a 1-D int64 array of length k*(k+1)//2.
    """
    adj = np.asarray(adj, np.int64)
    k = adj.shape[0]
    iu = np.triu_indices(k)
    if k <= 1:
        return adj[iu].copy()
    perms = _perm_table(k)
    best = None
    block = 8192
    for b0 in range(0, len(perms), block):
        p = perms[b0 : b0 + block].astype(np.int64)
        sub = adj[p[:, :, None], p[:, None, :]]
        flat = sub[:, iu[0], iu[1]]
        cand = np.arange(len(flat))
        for col in range(flat.shape[1]):
            vals = flat[cand, col]
            mv = vals.min()
            cand = cand[vals == mv]
            if len(cand) == 1:
                break
        row = flat[cand[0]]
        if best is None or tuple(row) < tuple(best):
            best = row
    return np.ascontiguousarray(best, np.int64)
