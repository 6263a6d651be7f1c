"""Exact linear algebra over the rationals.

Row-echelon machinery shared by the Groebner, algebra and differentials
layers.  Vectors are sequences of `fractions.Fraction`; all routines are
deterministic (first usable pivot wins) so every downstream basis is
reproducible.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

ZERO = Fraction(0)
ONE = Fraction(1)


def rref(rows: Sequence[Sequence[Fraction]]):
    """Reduced row echelon form.

    Returns (reduced_rows, pivot_columns); zero rows are dropped and
    pivot columns are strictly increasing.
    """
    work = [list(r) for r in rows if any(c != 0 for c in r)]
    if not work:
        return [], []
    ncols = len(work[0])
    out: list[list[Fraction]] = []
    pivots: list[int] = []
    for col in range(ncols):
        pivot_row = None
        for r in work:
            if r[col] != 0:
                pivot_row = r
                break
        if pivot_row is None:
            continue
        work.remove(pivot_row)
        inv = ONE / pivot_row[col]
        pivot_row = [c * inv for c in pivot_row]
        for prev, pcol in zip(out, pivots):
            f = prev[col]
            if f != 0:
                for k in range(col, ncols):
                    prev[k] -= f * pivot_row[k]
        rest = []
        for r in work:
            f = r[col]
            if f != 0:
                r = [a - f * b for a, b in zip(r, pivot_row)]
            if any(c != 0 for c in r):
                rest.append(r)
        work = rest
        out.append(list(pivot_row))
        pivots.append(col)
    return out, pivots


def reduce_vector(vec, rows, pivots):
    """Subtract row multiples so every pivot coordinate of vec is zero."""
    v = list(vec)
    for row, p in zip(rows, pivots):
        f = v[p]
        if f != 0:
            for k in range(p, len(v)):
                v[k] -= f * row[k]
    return v


def in_span(vec, rows, pivots) -> bool:
    return all(c == 0 for c in reduce_vector(vec, rows, pivots))


def rank(rows) -> int:
    """Row rank via forward elimination only (no back substitution)."""
    work = [list(r) for r in rows if any(c != 0 for c in r)]
    if not work:
        return 0
    ncols = len(work[0])
    count = 0
    for col in range(ncols):
        pivot = None
        for r in work:
            if r[col] != 0:
                pivot = r
                break
        if pivot is None:
            continue
        work.remove(pivot)
        count += 1
        if not work:
            break
        inv = ONE / pivot[col]
        rest = []
        for r in work:
            f = r[col]
            if f != 0:
                f *= inv
                r = [a - f * b for a, b in zip(r, pivot)]
            if any(c != 0 for c in r):
                rest.append(r)
        work = rest
    return count


def kernel_basis(rows, ncols: int):
    """Basis of {x : M x = 0} for the matrix with the given rows.

    Returned vectors have a 1 in their free coordinate and are listed in
    increasing free-column order, so the result is already in echelon
    form up to column permutation.
    """
    red, pivots = rref(rows)
    pivot_set = set(pivots)
    free = [j for j in range(ncols) if j not in pivot_set]
    basis = []
    for j in free:
        v = [ZERO] * ncols
        v[j] = ONE
        for row, p in zip(red, pivots):
            v[p] = -row[j]
        basis.append(v)
    return basis


def intersect_rowspaces(rows_a, rows_b, ncols: int):
    """Row-space basis (RREF) of span(rows_a) ∩ span(rows_b)."""
    a = [list(r) for r in rows_a]
    b = [list(r) for r in rows_b]
    if not a or not b:
        return [], []
    # columns: coefficients on a-rows then b-rows; equations per coordinate
    eqs = []
    for c in range(ncols):
        eqs.append([r[c] for r in a] + [-r[c] for r in b])
    combos = kernel_basis(eqs, len(a) + len(b))
    vectors = []
    for combo in combos:
        v = [ZERO] * ncols
        for coef, row in zip(combo[: len(a)], a):
            if coef != 0:
                for k in range(ncols):
                    v[k] += coef * row[k]
        vectors.append(v)
    return rref(vectors)


def invert_matrix(rows):
    """Inverse of a square matrix; raises ValueError when singular."""
    n = len(rows)
    aug = [list(r) + [ONE if i == j else ZERO for j in range(n)] for i, r in enumerate(rows)]
    red, pivots = rref(aug)
    if len(red) != n or pivots != list(range(n)):
        raise ValueError("matrix is singular")
    return [row[n:] for row in red]


def mat_vec(rows, vec):
    return [sum((a * b for a, b in zip(row, vec)), ZERO) for row in rows]
