"""Pure-Python versions of the compiled kernels, same signatures."""
from collections import deque

import numpy as np

from ..orientation import flip_at, sink_test


def cycles_from_roots(n, rank, roots):
    paths, orders = [], []
    path = [0] * n
    order = [0] * n

    def dfs(root, cur, depth, used):
        if depth == n:
            if cur == root:
                paths.append(list(path))
                orders.append(list(order))
            return
        for j in range(1, n + 1):
            if used >> j & 1 or not sink_test(cur, n, j):
                continue
            nxt = flip_at(cur, n, j)
            order[depth] = j
            if depth + 1 == n:
                if nxt == root:
                    dfs(root, nxt, depth + 1, used | 1 << j)
                continue
            if rank[nxt] <= rank[root] or nxt in path[: depth + 1]:
                continue
            path[depth + 1] = nxt
            dfs(root, nxt, depth + 1, used | 1 << j)

    for root in roots:
        path[0] = int(root)
        dfs(int(root), int(root), 0, 0)
    shape = (len(paths), n)
    return (
        np.array(paths, dtype=np.int64).reshape(shape),
        np.array(orders, dtype=np.int64).reshape(shape),
    )


def bfs_rows(indptr, indices, src_lo, src_hi, out):
    nv = len(indptr) - 1
    for s in range(src_lo, src_hi):
        dist = [-1] * nv
        dist[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for e in range(indptr[u], indptr[u + 1]):
                w = indices[e]
                if dist[w] < 0:
                    dist[w] = dist[u] + 1
                    queue.append(w)
        out[s - src_lo, :] = dist
