"""Hot enumeration kernels with selectable backend.

The default backend compiles the kernels with numba; setting
PARKLC_BACKEND=numpy selects the pure-numpy fallback instead. When numba is
not importable the fallback is used automatically.
"""

from __future__ import annotations

import os
import warnings
from concurrent.futures import ThreadPoolExecutor

_choice = os.environ.get("PARKLC_BACKEND", "").strip().lower()
if _choice not in ("", "numba", "numpy"):
    raise ValueError(f"PARKLC_BACKEND must be 'numba' or 'numpy', got {_choice!r}")

if _choice == "numpy":
    from . import numpy_backend as _impl
else:
    try:
        from . import numba_backend as _impl
    except ImportError:
        if _choice == "numba":
            raise
        warnings.warn("numba is unavailable; using the numpy kernel fallback")
        from . import numpy_backend as _impl

parking_sum_hist = _impl.parking_sum_hist
gparking_sum_hist = _impl.gparking_sum_hist
tree_inversion_hist = _impl.tree_inversion_hist
connected_count_hist = _impl.connected_count_hist
corank_nullity_counts = _impl.corank_nullity_counts
canonical_adj_min = _impl.canonical_adj_min


def backend_name() -> str:
    return _impl.BACKEND_NAME


_MIN_PARALLEL = 1 << 16


def run_partitioned(kernel, total: int, threads: int, args: tuple = ()):
    """Split the index range [0, total) across workers and merge by addition.

    Every kernel returns an integer histogram of fixed shape, so the merge
    is exact and independent of the partitioning.
    """
    threads = max(1, int(threads))
    if threads == 1 or total < _MIN_PARALLEL:
        return kernel(*args, 0, total)
    nchunks = threads * 4
    bounds = [total * i // nchunks for i in range(nchunks + 1)]
    spans = [(a, b) for a, b in zip(bounds, bounds[1:]) if b > a]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        parts = list(pool.map(lambda s: kernel(*args, s[0], s[1]), spans))
    out = parts[0].copy()
    for p in parts[1:]:
        out += p
    return out
