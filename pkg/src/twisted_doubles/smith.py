"""Smith normal form over the integers with transformation matrices.

``smith_normal_form(D)`` returns ``(S, U, V)`` with ``U D V = S`` diagonal,
``U`` and ``V`` unimodular and each diagonal entry dividing the next.  Rows
are plain Python int lists, so entries never overflow.
"""
from __future__ import annotations

from typing import Sequence


def _identity(n: int) -> list[list[int]]:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def smith_normal_form(mat: Sequence[Sequence[int]]):
    a = [list(map(int, row)) for row in mat]
    m = len(a)
    n = len(a[0]) if m else 0
    u = _identity(m)
    v = _identity(n)

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for row in a:
            row[i], row[j] = row[j], row[i]
        for row in v:
            row[i], row[j] = row[j], row[i]

    def add_row(dst, src, q):
        # row[dst] -= q * row[src]
        ra, rs = a[dst], a[src]
        for k in range(n):
            if rs[k]:
                ra[k] -= q * rs[k]
        ua, us = u[dst], u[src]
        for k in range(m):
            if us[k]:
                ua[k] -= q * us[k]

    def add_col(dst, src, q):
        for row in a:
            if row[src]:
                row[dst] -= q * row[src]
        for row in v:
            if row[src]:
                row[dst] -= q * row[src]

    for t in range(min(m, n)):
        best = None
        for i in range(t, m):
            row = a[i]
            for j in range(t, n):
                x = row[j]
                if x and (best is None or abs(x) < best[0]):
                    best = (abs(x), i, j)
                    if best[0] == 1:
                        break
            if best and best[0] == 1:
                break
        if best is None:
            break
        _, i, j = best
        swap_rows(t, i)
        swap_cols(t, j)
        while True:
            piv = a[t][t]
            changed = False
            for i in range(t + 1, m):
                if a[i][t]:
                    add_row(i, t, a[i][t] // piv)
                    if a[i][t]:
                        changed = True
            for j in range(t + 1, n):
                if a[t][j]:
                    add_col(j, t, a[t][j] // piv)
                    if a[t][j]:
                        changed = True
            if changed:
                # move the smallest remaining entry of row/column t into the pivot
                cands = [(abs(a[i][t]), i, t) for i in range(t, m) if a[i][t]]
                cands += [(abs(a[t][j]), t, j) for j in range(t, n) if a[t][j]]
                _, i, j = min(cands)
                swap_rows(t, i)
                swap_cols(t, j)
                continue
            bad = next(((i, j) for i in range(t + 1, m) for j in range(t + 1, n)
                        if a[i][j] % piv), None)
            if bad is None:
                break
            add_row(t, bad[0], -1)
        if a[t][t] < 0:
            a[t] = [-x for x in a[t]]
            u[t] = [-x for x in u[t]]
    return a, u, v


def diagonal(s: Sequence[Sequence[int]]) -> list[int]:
    return [s[i][i] for i in range(min(len(s), len(s[0]) if s else 0))]


def rank(s: Sequence[Sequence[int]]) -> int:
    return sum(1 for d in diagonal(s) if d)
