# distutils: language = c++
# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled inner loops: sink-reversal cycle search and all-pairs BFS."""
import numpy as np
cimport numpy as cnp
from libcpp.vector cimport vector

cnp.import_array()


cdef inline bint _is_sink(long bits, int n, int j) noexcept nogil:
    if n == 1:
        return j == 1
    if j > 1 and ((bits >> (j - 2)) & 1) == 0:
        return False
    if j < n and ((bits >> (j - 1)) & 1) == 1:
        return False
    return True


cdef inline long _flip(long bits, int n, int j) noexcept nogil:
    if j > 1:
        bits ^= (1 << (j - 2))
    if j < n:
        bits ^= (1 << (j - 1))
    return bits


cdef void _dfs(int n, long root, long cur, int depth, long used,
               const long* rank, long* path, int* order,
               vector[long]& out_path, vector[int]& out_order) noexcept nogil:
    cdef int j, k
    cdef long nxt
    cdef bint seen
    if depth == n:
        if cur == root:
            for k in range(n):
                out_path.push_back(path[k])
                out_order.push_back(order[k])
        return
    for j in range(1, n + 1):
        if (used >> j) & 1:
            continue
        if not _is_sink(cur, n, j):
            continue
        nxt = _flip(cur, n, j)
        order[depth] = j
        if depth + 1 == n:
            if nxt == root:
                _dfs(n, root, nxt, depth + 1, used | (1 << j), rank, path, order,
                     out_path, out_order)
            continue
        # canonical rotations start at their lexicographically smallest member
        if rank[nxt] <= rank[root]:
            continue
        seen = False
        for k in range(depth + 1):
            if path[k] == nxt:
                seen = True
                break
        if seen:
            continue
        path[depth + 1] = nxt
        _dfs(n, root, nxt, depth + 1, used | (1 << j), rank, path, order,
             out_path, out_order)


def cycles_from_roots(int n, cnp.int64_t[::1] rank, cnp.int64_t[::1] roots):
    """Canonical cycles whose smallest orientation is one of ``roots``.

    Returns ``(paths, orders)`` as ``(C, n)`` arrays of orientation bits and
    1-based tree vertices.
    """
    cdef vector[long] out_path
    cdef vector[int] out_order
    cdef long path[64]
    cdef int order[64]
    cdef Py_ssize_t i, count
    cdef long root
    cdef const long* rank_ptr = <const long*> &rank[0]
    cdef Py_ssize_t nroots = roots.shape[0]
    with nogil:
        for i in range(nroots):
            root = roots[i]
            path[0] = root
            _dfs(n, root, root, 0, 0, rank_ptr, path, order, out_path, out_order)
    count = out_order.size() // n
    paths = np.empty((count, n), dtype=np.int64)
    orders = np.empty((count, n), dtype=np.int64)
    cdef cnp.int64_t[:, ::1] pv = paths
    cdef cnp.int64_t[:, ::1] ov = orders
    cdef Py_ssize_t r, c
    for r in range(count):
        for c in range(n):
            pv[r, c] = out_path[r * n + c]
            ov[r, c] = out_order[r * n + c]
    return paths, orders


def bfs_rows(cnp.int64_t[::1] indptr, cnp.int64_t[::1] indices,
             Py_ssize_t src_lo, Py_ssize_t src_hi, cnp.int32_t[:, ::1] out):
    """Fill ``out[s - src_lo]`` with BFS distances from every ``s`` in range."""
    cdef Py_ssize_t nv = indptr.shape[0] - 1
    cdef Py_ssize_t s, head, tail, u, w, e
    cdef vector[Py_ssize_t] queue
    queue.resize(nv)
    with nogil:
        for s in range(src_lo, src_hi):
            for u in range(nv):
                out[s - src_lo, u] = -1
            out[s - src_lo, s] = 0
            queue[0] = s
            head = 0
            tail = 1
            while head < tail:
                u = queue[head]
                head += 1
                for e in range(indptr[u], indptr[u + 1]):
                    w = indices[e]
                    if out[s - src_lo, w] < 0:
                        out[s - src_lo, w] = out[s - src_lo, u] + 1
                        queue[tail] = w
                        tail += 1
