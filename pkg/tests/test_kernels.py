"""Backend equivalence: the numba kernels and the numpy fallback must agree
exactly, on full ranges and on arbitrary partitions."""

import subprocess
import sys

import numpy as np
import pytest

from parklc.kernels import numba_backend as nb
from parklc.kernels import numpy_backend as npb
from parklc.kernels import run_partitioned


def pairs_of(n):
    ps = [(i, j) for i in range(n) for j in range(i + 1, n)]
    return (
        np.array([u for u, _ in ps], np.int64),
        np.array([v for _, v in ps], np.int64),
    )


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5, 6])
def test_parking_hist_backends_agree(n):
    a = nb.parking_sum_hist(n, 0, n**n)
    b = npb.parking_sum_hist(n, 0, n**n)
    assert (a == b).all()


def test_parking_hist_partial_ranges_agree():
    total = 7**7
    cuts = [0, 1, 12345, 500_000, total]
    for lo, hi in zip(cuts, cuts[1:]):
        assert (nb.parking_sum_hist(7, lo, hi) == npb.parking_sum_hist(7, lo, hi)).all()


@pytest.mark.parametrize("n", [2, 3, 4, 5, 6, 7])
def test_tree_hist_backends_agree(n):
    a = nb.tree_inversion_hist(n, 0, n ** (n - 2))
    b = npb.tree_inversion_hist(n, 0, n ** (n - 2))
    assert (a == b).all()


@pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
def test_connected_hist_backends_agree(n):
    eu, ev = pairs_of(n)
    total = 1 << len(eu)
    a = nb.connected_count_hist(eu, ev, n, 0, total)
    b = npb.connected_count_hist(eu, ev, n, 0, total)
    assert (a == b).all()


def test_corank_nullity_backends_agree():
    for n in (2, 3, 4, 5):
        eu, ev = pairs_of(n)
        total = 1 << len(eu)
        a = nb.corank_nullity_counts(eu, ev, n, n - 1, 0, total)
        b = npb.corank_nullity_counts(eu, ev, n, n - 1, 0, total)
        assert (a == b).all()
    # with a loop and a parallel edge
    eu = np.array([0, 0, 0, 1], np.int64)
    ev = np.array([1, 1, 0, 2], np.int64)
    a = nb.corank_nullity_counts(eu, ev, 3, 2, 0, 16)
    b = npb.corank_nullity_counts(eu, ev, 3, 2, 0, 16)
    assert (a == b).all()


def test_gparking_backends_agree():
    # triangle with root 0: positions 1, 2 with degree bounds 2, 2
    maxvals = np.array([2, 2], np.int64)
    dtab = np.array([[0, 0], [2, 0], [0, 2], [1, 1]], np.int64)
    a = nb.gparking_sum_hist(maxvals, dtab, 0, 4)
    b = npb.gparking_sum_hist(maxvals, dtab, 0, 4)
    assert (a == b).all()
    for lo, hi in [(0, 1), (1, 3), (3, 4)]:
        assert (
            nb.gparking_sum_hist(maxvals, dtab, lo, hi)
            == npb.gparking_sum_hist(maxvals, dtab, lo, hi)
        ).all()


def rng_adj(rng, k, hi=3):
    adj = rng.integers(0, hi, size=(k, k))
    adj = adj + adj.T
    return adj.astype(np.int64)


def test_canonical_backends_agree():
    rng = np.random.default_rng(7)
    for k in range(1, 7):
        for _ in range(20):
            adj = rng_adj(rng, k)
            a = nb.canonical_adj_min(adj)
            b = npb.canonical_adj_min(adj)
            assert (np.asarray(a) == np.asarray(b)).all(), (k, adj)


def test_canonical_is_permutation_invariant():
    rng = np.random.default_rng(11)
    for k in range(2, 7):
        adj = rng_adj(rng, k)
        base = np.asarray(nb.canonical_adj_min(adj))
        for _ in range(10):
            perm = rng.permutation(k)
            shuffled = adj[np.ix_(perm, perm)]
            assert (np.asarray(nb.canonical_adj_min(shuffled)) == base).all()


def test_run_partitioned_is_partition_independent():
    total = 6**6
    whole = run_partitioned(nb.parking_sum_hist, total, 1, args=(6,))
    threaded = run_partitioned(nb.parking_sum_hist, total, 8, args=(6,))
    assert (whole == threaded).all()
    # manual uneven split
    pieces = [(0, 17), (17, 40_000), (40_000, total)]
    merged = sum(nb.parking_sum_hist(6, lo, hi) for lo, hi in pieces)
    assert (whole == merged).all()


def test_env_flag_selects_backend():
    code = "import parklc.kernels as k; print(k.backend_name())"
    for value, expect in [("numpy", "numpy"), ("numba", "numba")]:
        out = subprocess.run(
            [sys.executable, "-c", code],
            capture_output=True,
            text=True,
            env={"PATH": "/usr/bin:/bin", "PARKLC_BACKEND": value},
        )
        assert out.returncode == 0, out.stderr
        assert out.stdout.strip() == expect


def test_index_range_guards():
    # windows beyond the enumeration space must be rejected, not walked
    eu, ev = pairs_of(4)
    maxvals = np.array([2, 2], dtype=np.int64)
    dtab = np.zeros((4, 2), dtype=np.int64)
    for mod in (nb, npb):
        with pytest.raises(ValueError):
            mod.parking_sum_hist(4, 0, 4**4 + 1)
        with pytest.raises(ValueError):
            mod.parking_sum_hist(4, -1, 4**4)
        with pytest.raises(ValueError):
            mod.tree_inversion_hist(5, 0, 5**3 + 1)
        with pytest.raises(ValueError):
            mod.gparking_sum_hist(maxvals, dtab, 0, 5)
        with pytest.raises(ValueError):
            mod.connected_count_hist(eu, ev, 4, 0, 2**6 + 1)
        with pytest.raises(ValueError):
            mod.corank_nullity_counts(eu, ev, 4, 3, 0, 2**6 + 1)
