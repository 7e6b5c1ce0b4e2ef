"""Module-level Groebner machinery over the quotient ring.

Syzygies, finite chunks of minimal free resolutions, and presentation
minimization.  A matrix presents the cokernel of the map it defines over
its ring (relations included); syzygies over the quotient are computed in
the ambient ring by augmenting with relation multiples of the free
generators and projecting back.
"""

from __future__ import annotations

from . import groebner
from .groebner import ModuleGB, poly_to_vec
from .matfac import GradedMatrix
from .polyring import Polynomial


def _column_vector(m, j):
    vec = {}
    for i in range(m.nrows):
        for mono, c in m.entries[i][j].terms.items():
            vec[(i, mono)] = c
    return vec


def _relation_vectors(ring, ncomp):
    out = []
    for rel in ring.relations:
        for i in range(ncomp):
            out.append({(i, mono): c for mono, c in rel.terms.items()})
    return out


def _vec_to_column(vec, ring, ncomp):
    terms = [{} for _ in range(ncomp)]
    for (i, mono), c in vec.items():
        terms[i][mono] = c
    return [ring.nf(Polynomial(ring, t, _clean=True)) for t in terms]


def _seeded_membership(ring, ncomp):
    engine = ModuleGB(ring.order)
    for v in _relation_vectors(ring, ncomp):
        engine.add(v, complete=False)
    engine.complete()
    return engine


def minimal_generator_columns(columns, ring, ncomp, degrees=None):
    """Indices of a minimal generating subset of the given column vectors.

    Columns are taken in increasing degree order, so by the graded Nakayama
    lemma the greedy membership filter returns a minimal generating set.
    """
    order = list(range(len(columns)))
    if degrees is not None:
        order.sort(key=lambda j: (degrees[j], j))
    engine = _seeded_membership(ring, ncomp)
    keep = []
    for j in order:
        if engine.add(columns[j]):
            keep.append(j)
    keep.sort()
    return keep


def syzygies(m, minimal=True):
    """Generators of the kernel of the column map of m over its quotient ring.

    The result's rows are indexed by m's columns (row twists = m's column
    twists); column twists are inferred from homogeneity.  The zero map
    returns an identity-sized free syzygy.
    """
    ring = m.ring
    n0, n = m.nrows, m.ncols
    if n == 0:
        return GradedMatrix.zero_matrix(ring, 0, 0)
    if m.is_zero():
        return GradedMatrix.identity(ring, n, twists=m.col_twists)
    gens = [_column_vector(m, j) for j in range(n)]
    aug = _relation_vectors(ring, n0)
    total = len(gens) + len(aug)
    embedded = []
    for k, g in enumerate(gens + aug):
        v = dict(g)
        v[(n0 + k, (0,) * ring.nvars)] = 1
        embedded.append(v)
    gb = groebner.buchberger_vectors(embedded, ring.order, skip_component=n0)
    raw = []
    for v in gb:
        if any(comp < n0 for (comp, _) in v):
            continue
        shifted = {(comp - n0, mono): c for (comp, mono), c in v.items()
                   if comp - n0 < n}
        col = _vec_to_column(shifted, ring, n)
        if any(not p.is_zero() for p in col):
            raw.append(col)
    if not raw:
        # empty kernel: keep one zero placeholder column so the free rank of
        # later cokernels survives transposition
        return GradedMatrix.zero_matrix(ring, n, 1, row_twists=m.col_twists,
                                        col_twists=(0,))
    col_twists = [_syzygy_twist(col, m.col_twists) for col in raw]
    if minimal:
        vecs = [{(i, mono): c for i, p in enumerate(col) for mono, c in p.terms.items()}
                for col in raw]
        keep = minimal_generator_columns(vecs, ring, n, degrees=col_twists)
        raw = [raw[j] for j in keep]
        col_twists = [col_twists[j] for j in keep]
    pairs = sorted(zip(col_twists, raw), key=lambda t: t[0])
    entries = [[pair[1][i] for pair in pairs] for i in range(n)]
    return GradedMatrix(ring, entries, row_twists=m.col_twists,
                        col_twists=[p[0] for p in pairs])


def _syzygy_twist(column, row_twists):
    twist = None
    for i, p in enumerate(column):
        if p.is_zero():
            continue
        t = row_twists[i] + p.homogeneous_degree()
        if twist is None:
            twist = t
        elif twist != t:
            raise ValueError("syzygy column is not homogeneous")
    return twist


def prune(m):
    """Split off unit entries by row/column operations over the quotient ring.

    Pivots on the lowest-index constant entry until none remain; the
    cokernel is unchanged.  Rows and columns of the pivot are deleted.
    """
    ring = m.ring
    entries = [[ring.nf(e) for e in row] for row in m.entries]
    row_twists = list(m.row_twists)
    col_twists = list(m.col_twists)
    while True:
        pivot = None
        ncols_now = len(entries[0]) if entries else 0
        for i in range(len(entries)):
            for j in range(ncols_now):
                e = entries[i][j]
                if not e.is_zero() and e.is_constant():
                    pivot = (i, j)
                    break
            if pivot:
                break
        if not pivot:
            break
        i, j = pivot
        c = entries[i][j].constant_value()
        for r in range(len(entries)):
            if r == i or entries[r][j].is_zero():
                continue
            factor = entries[r][j].scale(1 / c)
            entries[r] = [ring.nf(entries[r][l] - factor * entries[i][l])
                          for l in range(len(entries[0]))]
        for l in range(len(entries[0])):
            if l == j or entries[i][l].is_zero():
                continue
            factor = entries[i][l].scale(1 / c)
            for r in range(len(entries)):
                entries[r][l] = ring.nf(entries[r][l] - factor * entries[r][j])
        entries = [row[:j] + row[j + 1:] for k, row in enumerate(entries) if k != i]
        del row_twists[i]
        del col_twists[j]
        if not entries:
            break
    nrows = len(entries)
    ncols = len(entries[0]) if entries else 0
    if nrows == 0:
        return GradedMatrix.zero_matrix(ring, 0, 0)
    return GradedMatrix(ring, entries, row_twists, col_twists[:ncols], check=False)


def drop_zero_columns(m):
    keep = [j for j in range(m.ncols)
            if any(not m.ring.nf(m.entries[i][j]).is_zero() for i in range(m.nrows))]
    if len(keep) == m.ncols:
        return m
    return m.submatrix(range(m.nrows), keep)


def minimal_presentation(m):
    """Prune units, drop zero and redundant columns; cokernel is unchanged."""
    m = drop_zero_columns(prune(m))
    if m.nrows == 0 or m.ncols == 0:
        return m
    columns = [_column_vector(m, j) for j in range(m.ncols)]
    keep = minimal_generator_columns(columns, m.ring, m.nrows,
                                     degrees=list(m.col_twists))
    if len(keep) != m.ncols:
        m = m.submatrix(range(m.nrows), keep)
    return m


def resolve(m, steps):
    """First matrices of a minimal free resolution of coker(m).

    Element 1 is the minimized presentation, element k+1 the minimal
    syzygies of element k; consecutive products vanish over the quotient.
    """
    if steps < 1:
        raise ValueError("steps must be >= 1")
    out = [minimal_presentation(m)]
    for _ in range(steps - 1):
        out.append(syzygies(out[-1], minimal=True))
    return out


class PresentedModule:
    """Cokernel of a graded presentation matrix over the quotient ring."""

    def __init__(self, matrix):
        self.matrix = matrix
        self._minimal = None

    def minimal(self):
        if self._minimal is None:
            self._minimal = minimal_presentation(self.matrix)
        return self._minimal

    @property
    def min_generators(self):
        """Minimal number of generators after pruning."""
        return self.minimal().nrows

    def __repr__(self):
        return f"PresentedModule({self.matrix.nrows} generators)"
