"""Hot kernels with a compiled core and a pure-Python fallback.

The compiled extension is used when it imports; setting
``KAKIMIZU_PURE_PYTHON=1`` forces the fallback.  ``KAKIMIZU_THREADS`` caps
the number of worker threads used by the compiled path (the fallback holds
the GIL and always runs serially).
"""
from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor

import numpy as np

from . import _fallback

try:
    if os.environ.get("KAKIMIZU_PURE_PYTHON", "") not in ("", "0"):
        raise ImportError("pure Python kernels requested")
    from . import _core as _impl
    BACKEND = "compiled"
except ImportError:
    _impl = _fallback
    BACKEND = "python"


def worker_count() -> int:
    raw = os.environ.get("KAKIMIZU_THREADS")
    if raw:
        try:
            return max(1, int(raw))
        except ValueError:
            pass
    return max(1, min(8, os.cpu_count() or 1))


def _chunks(total: int, parts: int) -> list[tuple[int, int]]:
    parts = max(1, min(parts, total))
    step, extra = divmod(total, parts)
    out, lo = [], 0
    for i in range(parts):
        hi = lo + step + (1 if i < extra else 0)
        out.append((lo, hi))
        lo = hi
    return out


def cycle_arrays(n: int, rank, impl=None, threads: int | None = None):
    """Every canonical cycle of the linear tree on ``n`` vertices.

    Returns ``(paths, orders)`` arrays of shape ``(C, n)``.  Row order is
    unspecified; callers sort.
    """
    impl = impl or _impl
    rank_arr = np.ascontiguousarray(rank, dtype=np.int64)
    roots = np.argsort(rank_arr, kind="stable").astype(np.int64)
    threads = 1 if impl is _fallback else (threads or worker_count())
    if threads == 1 or len(roots) < 2:
        return impl.cycles_from_roots(n, rank_arr, roots)
    # interleave roots: low ranks own far more cycles than high ones
    parts = [np.ascontiguousarray(roots[i::threads]) for i in range(threads)]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        results = list(pool.map(lambda r: impl.cycles_from_roots(n, rank_arr, r), parts))
    return (
        np.concatenate([p for p, _ in results]).reshape(-1, n),
        np.concatenate([o for _, o in results]).reshape(-1, n),
    )


def all_pairs_distances(indptr, indices, impl=None, threads: int | None = None):
    """Dense ``(V, V)`` int32 distance matrix, ``-1`` where unreachable."""
    impl = impl or _impl
    indptr = np.ascontiguousarray(indptr, dtype=np.int64)
    indices = np.ascontiguousarray(indices, dtype=np.int64)
    nv = len(indptr) - 1
    out = np.empty((nv, nv), dtype=np.int32)
    if nv == 0:
        return out
    threads = 1 if impl is _fallback else (threads or worker_count())
    spans = _chunks(nv, threads)
    if len(spans) == 1:
        impl.bfs_rows(indptr, indices, 0, nv, out)
        return out

    def work(span):
        lo, hi = span
        block = np.empty((hi - lo, nv), dtype=np.int32)
        impl.bfs_rows(indptr, indices, lo, hi, block)
        out[lo:hi] = block

    with ThreadPoolExecutor(max_workers=len(spans)) as pool:
        list(pool.map(work, spans))
    return out


def implementations() -> dict:
    """Available kernel modules keyed by backend name."""
    found = {"python": _fallback}
    try:
        from . import _core

        found["compiled"] = _core
    except ImportError:
        pass
    return found
