"""Invariant factors of sparse integer matrices.

Unit pivots are eliminated first on a sparse row/column structure, which
for boundary matrices of simplicial complexes clears almost everything.
Whatever is left is reduced densely to Smith normal form.  All arithmetic
is on Python integers, so entries never overflow.
"""
from __future__ import annotations

from typing import Iterable, Mapping


def invariant_factors(entries: Mapping[tuple[int, int], int] | Iterable, nrows: int, ncols: int) -> list[int]:
    """Non-zero diagonal of the Smith normal form, each dividing the next.

    ``entries`` maps ``(row, col)`` to a non-zero integer.
    """
    items = entries.items() if isinstance(entries, Mapping) else entries
    rows: dict[int, dict[int, int]] = {}
    cols: dict[int, set[int]] = {}
    for (i, j), v in items:
        if v:
            rows.setdefault(i, {})[j] = v
            cols.setdefault(j, set()).add(i)

    units = 0
    progress = True
    while progress:
        progress = False
        for p in sorted(rows, key=lambda r: len(rows[r])):
            row_p = rows.get(p)
            if not row_p:
                continue
            q = min((j for j, v in row_p.items() if v in (1, -1)),
                     key=lambda j: len(cols[j]), default=None)
            if q is None:
                continue
            _eliminate_unit(rows, cols, p, q)
            units += 1
            progress = True

    rest_rows = sorted(r for r in rows if rows[r])
    rest_cols = sorted({j for r in rest_rows for j in rows[r]})
    if not rest_rows:
        return [1] * units
    cidx = {j: k for k, j in enumerate(rest_cols)}
    dense = [[0] * len(rest_cols) for _ in rest_rows]
    for a, r in enumerate(rest_rows):
        for j, v in rows[r].items():
            dense[a][cidx[j]] = v
    return [1] * units + smith_diagonal(dense)


def _eliminate_unit(rows, cols, p, q):
    u = rows[p][q]
    row_p = rows[p]
    for r in list(cols[q]):
        if r == p:
            continue
        row_r = rows[r]
        factor = row_r[q] * u  # u is its own inverse
        for j, v in row_p.items():
            nv = row_r.get(j, 0) - factor * v
            if nv:
                if j not in row_r:
                    cols[j].add(r)
                row_r[j] = nv
            elif j in row_r:
                del row_r[j]
                cols[j].discard(r)
    # column q now holds only the pivot; row p can be cleared by column ops
    for j in row_p:
        cols[j].discard(p)
    del rows[p]
    del cols[q]


def smith_diagonal(a: list[list[int]]) -> list[int]:
    """Dense Smith normal form; returns the non-zero diagonal (positive)."""
    m = [list(r) for r in a]
    nr = len(m)
    nc = len(m[0]) if nr else 0
    diag = []
    t = 0
    while t < min(nr, nc):
        piv = None
        for i in range(t, nr):
            for j in range(t, nc):
                if m[i][j] and (piv is None or abs(m[i][j]) < abs(m[piv[0]][piv[1]])):
                    piv = (i, j)
        if piv is None:
            break
        i, j = piv
        m[t], m[i] = m[i], m[t]
        for row in m:
            row[t], row[j] = row[j], row[t]
        done = False
        while not done:
            done = True
            p = m[t][t]
            for i in range(t + 1, nr):
                if m[i][t]:
                    f = m[i][t] // p
                    if f:
                        mi, mt = m[i], m[t]
                        for j in range(t, nc):
                            mi[j] -= f * mt[j]
                    if m[i][t]:
                        m[t], m[i] = m[i], m[t]
                        done = False
                        break
            if not done:
                continue
            for j in range(t + 1, nc):
                if m[t][j]:
                    f = m[t][j] // p
                    if f:
                        for row in m[t:]:
                            row[j] -= f * row[t]
                    if m[t][j]:
                        for row in m:
                            row[t], row[j] = row[j], row[t]
                        done = False
                        break
            if not done:
                continue
            # pivot must divide the rest of the submatrix
            for i in range(t + 1, nr):
                if any(m[i][j] % p for j in range(t + 1, nc)):
                    mi, mt = m[i], m[t]
                    for j in range(t, nc):
                        mt[j] += mi[j]
                    done = False
                    break
        diag.append(abs(m[t][t]))
        t += 1
    return diag


def divisibility_ok(diag: list[int]) -> bool:
    return all(b % a == 0 for a, b in zip(diag, diag[1:]))
