"""Specht modules in the polytabloid basis.

A tableau is a tuple of rows, each a tuple of entries 1..t.  Permutations act
by relabelling entries, and ``e_T`` is the polytabloid of ``T``.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from functools import lru_cache
from typing import Mapping, Sequence

from ..algebra import sign
from .partitions import Partition

Tableau = tuple[tuple[int, ...], ...]


@lru_cache(maxsize=None)
def standard_tableaux(lam: Partition) -> tuple[Tableau, ...]:
    """All standard tableaux of shape lam, sorted by row-reading word."""
    t = lam.size
    out = []

    def rec(k: int, rows: list[list[int]]):
        if k > t:
            out.append(tuple(tuple(r) for r in rows))
            return
        for i, p in enumerate(lam.parts):
            if len(rows[i]) < p and (i == 0 or len(rows[i - 1]) > len(rows[i])):
                rows[i].append(k)
                rec(k + 1, rows)
                rows[i].pop()

    rec(1, [[] for _ in lam.parts])
    return tuple(sorted(out, key=lambda T: tuple(x for row in T for x in row)))


def shape_of(T: Tableau) -> Partition:
    return Partition(tuple(len(r) for r in T))


def columns(T: Tableau) -> list[list[int]]:
    ncols = len(T[0]) if T else 0
    return [[row[j] for row in T if len(row) > j] for j in range(ncols)]


def is_standard(T: Tableau) -> bool:
    rows_ok = all(a < b for row in T for a, b in zip(row, row[1:]))
    cols_ok = all(a < b for col in columns(T) for a, b in zip(col, col[1:]))
    return rows_ok and cols_ok


def relabel(T: Tableau, perm: Sequence[int]) -> Tableau:
    """Replace entry k by perm[k-1]."""
    return tuple(tuple(perm[x - 1] for x in row) for row in T)


def tabloid(T: Tableau) -> tuple[tuple[int, ...], ...]:
    return tuple(tuple(sorted(row)) for row in T)


def polytabloid(T: Tableau) -> dict[tuple, int]:
    """``e_T = sum over column permutations c of sign(c) {c T}`` in the tabloid basis."""
    cols = columns(T)
    pos = [[(i, j) for i in range(len(col))] for j, col in enumerate(cols)]
    out: dict = {}
    for choice in itertools.product(*(itertools.permutations(range(len(c))) for c in cols)):
        s = 1
        rows = [list(r) for r in T]
        for j, (col, p) in enumerate(zip(cols, choice)):
            s *= sign([x + 1 for x in p])
            for i, k in enumerate(p):
                rows[i][j] = col[k]
        key = tabloid(tuple(tuple(r) for r in rows))
        out[key] = out.get(key, 0) + s
    return {k: v for k, v in out.items() if v}


def specht_form(S: Tableau, T: Tableau) -> int:
    """Standard inner product of e_S and e_T in the permutation module."""
    a, b = polytabloid(S), polytabloid(T)
    return sum(v * b.get(k, 0) for k, v in a.items())


# ---------------------------------------------------------------------------
# Garnir straightening


def _column_sort(T: Tableau) -> tuple[int, Tableau]:
    cols = columns(T)
    s = 1
    new_cols = []
    for col in cols:
        order = sorted(range(len(col)), key=lambda k: col[k])
        s *= sign([k + 1 for k in order])
        new_cols.append([col[k] for k in order])
    rows = tuple(tuple(new_cols[j][i] for j in range(len(T[i]))) for i in range(len(T)))
    return s, rows


def _row_descent(T: Tableau) -> tuple[int, int] | None:
    for i, row in enumerate(T):
        for j in range(len(row) - 1):
            if row[j] > row[j + 1]:
                return i, j
    return None


@lru_cache(maxsize=None)
def straighten(T: Tableau) -> tuple[tuple[Tableau, int], ...]:
    """Coefficients of e_T in the standard polytabloid basis, via Garnir relations."""
    s, T = _column_sort(T)
    desc = _row_descent(T)
    if desc is None:
        return ((T, s),)
    i, j = desc
    # A: column j from row i down; B: column j+1 from the top to row i
    a_pos = [(k, j) for k in range(i, len(T)) if len(T[k]) > j]
    b_pos = [(k, j + 1) for k in range(0, i + 1)]
    positions = a_pos + b_pos
    values = [T[k][c] for k, c in positions]
    out: dict[Tableau, int] = {}
    for chosen in itertools.combinations(range(len(values)), len(a_pos)):
        if chosen == tuple(range(len(a_pos))):
            continue
        rest = [k for k in range(len(values)) if k not in chosen]
        new_vals = sorted(values[k] for k in chosen) + sorted(values[k] for k in rest)
        mapping = {old: new for old, new in zip(values, new_vals)}
        perm = sign_of_mapping(mapping)
        rows = [list(r) for r in T]
        for (k, c), v in zip(positions, new_vals):
            rows[k][c] = v
        for S, c in straighten(tuple(tuple(r) for r in rows)):
            out[S] = out.get(S, 0) - perm * c
    return tuple((S, s * c) for S, c in sorted(out.items()) if c)


def sign_of_mapping(mapping: Mapping[int, int]) -> int:
    """Sign of a permutation of a finite set given as old -> new."""
    keys = sorted(mapping)
    index = {k: n for n, k in enumerate(keys)}
    return sign([index[mapping[k]] + 1 for k in keys])


def straighten_dict(T: Tableau) -> dict[Tableau, int]:
    return dict(straighten(T))


def express_by_tabloids(T: Tableau) -> dict[Tableau, Fraction]:
    """Oracle for :func:`straighten`: solve e_T = sum c_S e_S directly in the tabloid basis."""
    lam = shape_of(T)
    std = standard_tableaux(lam)
    vecs = [polytabloid(S) for S in std]
    keys = sorted({k for v in vecs for k in v} | set(polytabloid(T)))
    kidx = {k: m for m, k in enumerate(keys)}
    # augmented system: rows = tabloids, columns = standard polytabloids + target
    rows = [[Fraction(0)] * (len(std) + 1) for _ in keys]
    for c, v in enumerate(vecs):
        for k, x in v.items():
            rows[kidx[k]][c] = Fraction(x)
    for k, x in polytabloid(T).items():
        rows[kidx[k]][len(std)] = Fraction(x)
    piv_cols = []
    rank = 0
    for c in range(len(std)):
        p = next((m for m in range(rank, len(rows)) if rows[m][c]), None)
        if p is None:
            continue
        rows[rank], rows[p] = rows[p], rows[rank]
        inv = 1 / rows[rank][c]
        rows[rank] = [x * inv for x in rows[rank]]
        for m in range(len(rows)):
            if m != rank and rows[m][c]:
                f = rows[m][c]
                rows[m] = [x - f * y for x, y in zip(rows[m], rows[rank])]
        piv_cols.append(c)
        rank += 1
    if any(row[-1] for row in rows[rank:]):
        raise ArithmeticError("polytabloid outside the span of standard polytabloids")
    return {std[c]: rows[m][-1] for m, c in enumerate(piv_cols) if rows[m][-1]}
