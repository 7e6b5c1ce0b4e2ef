"""Dense exact linear algebra over the rationals.

Matrices are lists of Fraction rows.  Pivoting is deterministic: first
nonzero entry scanning columns left to right, rows top to bottom.
"""

from __future__ import annotations

from fractions import Fraction


def rref(rows, ncols):
    """Reduced row echelon form; returns (rows, pivot column indices)."""
    m = [[Fraction(x) for x in row] for row in rows]
    pivots = []
    r = 0
    for c in range(ncols):
        pivot = None
        for i in range(r, len(m)):
            if m[i][c] != 0:
                pivot = i
                break
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        pv = m[r][c]
        m[r] = [x / pv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                factor = m[i][c]
                m[i] = [a - factor * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def rank(rows, ncols):
    return len(rref(rows, ncols)[1])


def nullspace(rows, ncols):
    """Basis of the right kernel, one vector per free column."""
    red, pivots = rref(rows, ncols)
    pivot_set = set(pivots)
    free = [c for c in range(ncols) if c not in pivot_set]
    basis = []
    for fc in free:
        v = [Fraction(0)] * ncols
        v[fc] = Fraction(1)
        for r, pc in enumerate(pivots):
            v[pc] = -red[r][fc]
        basis.append(v)
    return basis


def rank_of_span(vectors, ncols):
    """Rank of the row span of the given coordinate vectors."""
    if not vectors:
        return 0
    return rank(vectors, ncols)


def in_span(vectors, target, ncols):
    """True iff target lies in the row span of the vectors."""
    base = rank_of_span(vectors, ncols)
    return rank_of_span(list(vectors) + [target], ncols) == base
