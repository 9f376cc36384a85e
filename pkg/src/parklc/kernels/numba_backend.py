"""Numba-compiled kernel implementations (default backend).

Flat-index layouts match the numpy backend exactly; see that module for the
encoding conventions.
"""

from __future__ import annotations

import numpy as np
from numba import njit

BACKEND_NAME = "numba"


@njit(cache=True, nogil=True)
def parking_sum_hist(n, start, stop):
    # parking iff every prefix of the value histogram covers its index:
    # #{entries <= k} >= k for k = 1..n
    space = 1
    for _ in range(n):
        space *= n
    if start < 0 or stop > space:
        raise ValueError("index range outside the enumeration space")
    max_sum = n * (n + 1) // 2
    hist = np.zeros(max_sum + 1, np.int64)
    if stop <= start:
        return hist
    digits = np.empty(n, np.int64)
    cnt = np.zeros(n, np.int64)
    r = start
    total = n  # entries are digits + 1
    for k in range(n):
        digits[k] = r % n
        r //= n
        total += digits[k]
        cnt[digits[k]] += 1
    for idx in range(start, stop):
        ok = True
        seen = 0
        for k in range(n):
            seen += cnt[k]
            if seen < k + 1:
                ok = False
                break
        if ok:
            hist[total] += 1
        if idx + 1 < stop:
            k = 0
            while True:
                cnt[digits[k]] -= 1
                digits[k] += 1
                total += 1
                if digits[k] == n:
                    digits[k] = 0
                    total -= n
                    cnt[0] += 1
                    k += 1
                else:
                    cnt[digits[k]] += 1
                    break
    return hist


@njit(cache=True, nogil=True)
def gparking_sum_hist(maxvals, dtab, start, stop):
    n = maxvals.shape[0]
    nmask = dtab.shape[0]
    space = 1
    max_sum = 0
    for k in range(n):
        space *= maxvals[k]
        max_sum += maxvals[k]
    if start < 0 or stop > space:
        raise ValueError("index range outside the enumeration space")
    hist = np.zeros(max_sum + 1, np.int64)
    if stop <= start:
        return hist
    a = np.empty(n, np.int64)
    r = start
    s = 0
    for k in range(n):
        a[k] = r % maxvals[k] + 1
        r //= maxvals[k]
        s += a[k]
    for idx in range(start, stop):
        ok = True
        for mask in range(1, nmask):
            good = False
            mm = mask
            p = 0
            while mm:
                if mm & 1:
                    if a[p] <= dtab[mask, p]:
                        good = True
                        break
                mm >>= 1
                p += 1
            if not good:
                ok = False
                break
        if ok:
            hist[s] += 1
        if idx + 1 < stop:
            k = 0
            while True:
                a[k] += 1
                s += 1
                if a[k] > maxvals[k]:
                    s -= maxvals[k]
                    a[k] = 1
                    k += 1
                else:
                    break
    return hist


@njit(cache=True, nogil=True)
def tree_inversion_hist(n, start, stop):
    space = 1
    for _ in range(n - 2):
        space *= n
    if start < 0 or stop > space:
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
    seq = np.empty(ln, np.int64)
    deg = np.empty(n, np.int64)
    eu = np.empty(n - 1, np.int64)
    ev = np.empty(n - 1, np.int64)
    parent = np.empty(n, np.int64)
    known = np.empty(n, np.uint8)
    for idx in range(start, stop):
        r = idx
        for t in range(ln):
            seq[t] = r % n
            r //= n
        for v in range(n):
            deg[v] = 1
        for t in range(ln):
            deg[seq[t]] += 1
        for t in range(ln):
            leaf = -1
            for v in range(n):
                if deg[v] == 1:
                    leaf = v
                    break
            other = seq[t]
            eu[t] = leaf
            ev[t] = other
            deg[leaf] -= 1
            deg[other] -= 1
        u = -1
        for v in range(n):
            if deg[v] == 1:
                u = v
                break
        deg[u] -= 1
        w = -1
        for v in range(n):
            if deg[v] == 1:
                w = v
                break
        eu[ln] = u
        ev[ln] = w
        for v in range(n):
            parent[v] = 0
            known[v] = 0
        known[0] = 1
        for _ in range(n - 1):
            for t in range(n - 1):
                a = eu[t]
                b = ev[t]
                if known[a] and not known[b]:
                    parent[b] = a
                    known[b] = 1
                elif known[b] and not known[a]:
                    parent[a] = b
                    known[a] = 1
        inv = 0
        for i in range(1, n):
            v = parent[i]
            while v != 0:
                if v > i:
                    inv += 1
                v = parent[v]
        hist[inv] += 1
    return hist


@njit(cache=True, nogil=True)
def connected_count_hist(eu, ev, nv, start, stop):
    m = eu.shape[0]
    if start < 0 or stop > (1 << m):
        raise ValueError("index range outside the enumeration space")
    hist = np.zeros(m + 1, np.int64)
    par = np.empty(nv, np.int64)
    for mask in range(start, stop):
        for v in range(nv):
            par[v] = v
        comps = nv
        pop = 0
        mm = mask
        t = 0
        while mm:
            if mm & 1:
                pop += 1
                a = eu[t]
                while par[a] != a:
                    a = par[a]
                b = ev[t]
                while par[b] != b:
                    b = par[b]
                if a != b:
                    par[a] = b
                    comps -= 1
            mm >>= 1
            t += 1
        if comps == 1:
            hist[pop] += 1
    return hist


@njit(cache=True, nogil=True)
def corank_nullity_counts(eu, ev, nv, full_rank, start, stop):
    m = eu.shape[0]
    if start < 0 or stop > (1 << m):
        raise ValueError("index range outside the enumeration space")
    counts = np.zeros((full_rank + 1, m - full_rank + 1), np.int64)
    par = np.empty(nv, np.int64)
    for mask in range(start, stop):
        for v in range(nv):
            par[v] = v
        comps = nv
        pop = 0
        mm = mask
        t = 0
        while mm:
            if mm & 1:
                pop += 1
                a = eu[t]
                while par[a] != a:
                    a = par[a]
                b = ev[t]
                while par[b] != b:
                    b = par[b]
                if a != b:
                    par[a] = b
                    comps -= 1
            mm >>= 1
            t += 1
        rank = nv - comps
        counts[full_rank - rank, pop - rank] += 1
    return counts


@njit(cache=True, nogil=True)
def canonical_adj_min(adj):
    k = adj.shape[0]
    tl = k * (k + 1) // 2
    best = np.empty(tl, np.int64)
    t = 0
    for i in range(k):
        for j in range(i, k):
            best[t] = adj[i, j]
            t += 1
    if k <= 1:
        return best
    total = 1
    for i in range(2, k + 1):
        total *= i
    fact = np.empty(k, np.int64)
    fact[0] = 1
    for i in range(1, k):
        fact[i] = fact[i - 1] * i
    perm = np.empty(k, np.int64)
    avail = np.empty(k, np.int64)
    for r in range(1, total):
        rem = r
        for v in range(k):
            avail[v] = v
        cnt = k
        for i in range(k):
            f = fact[k - 1 - i]
            d = rem // f
            rem -= d * f
            perm[i] = avail[d]
            for z in range(d, cnt - 1):
                avail[z] = avail[z + 1]
            cnt -= 1
        # lazy lexicographic comparison against the current best
        t = 0
        verdict = 0  # 0: equal so far, 1: strictly smaller (now copying)
        stop_scan = False
        for i in range(k):
            pi = perm[i]
            for j in range(i, k):
                v = adj[pi, perm[j]]
                if verdict == 0:
                    if v < best[t]:
                        verdict = 1
                        best[t] = v
                    elif v > best[t]:
                        stop_scan = True
                        break
                else:
                    best[t] = v
                t += 1
            if stop_scan:
                break
    return best
