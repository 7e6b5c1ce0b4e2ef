"""Homological procedures over the nodal quotient ring.

Reflexive hull via three resolution steps of the transpose, tensor product
of maximal Cohen-Macaulay modules as the hull of the naive tensor
presentation, and the rank-two module obtained from the second syzygy of
the maximal ideal.
"""

from __future__ import annotations

from . import modres
from .matfac import GradedMatrix, MatrixFactorization, infer_twists, make_mf
from .rings import f_polynomial, nodal_ring


def _regrade(m, anchor=0):
    """Twists recomputed from entry homogeneity (transposition discards them)."""
    rows, cols = infer_twists(m.ring, m.entries, anchor)
    return GradedMatrix(m.ring, m.entries, rows, cols, check=False)


def reflexive_hull(m):
    """Presentation of the double dual: third resolution step of the
    transpose, transposed back and pruned.

    A free module of rank r comes back as an r x 1 zero matrix.
    """
    ring = m.ring
    n = modres.resolve(_regrade(m.transpose()), 3)[2]
    hull = modres.prune(_regrade(n.transpose()))
    hull = modres.drop_zero_columns(hull)
    if hull.ncols == 0 and hull.nrows > 0:
        hull = GradedMatrix.zero_matrix(ring, hull.nrows, 1,
                                        row_twists=hull.row_twists,
                                        col_twists=(0,) * 1)
    return _regrade(hull)


def tensor_presentation(phi, psi):
    """Presentation of coker(phi) (x) coker(psi): [Id (x) psi | phi (x) Id]."""
    if phi.ring != psi.ring:
        raise ValueError("ring mismatch")
    id_left = GradedMatrix.identity(phi.ring, phi.nrows, twists=phi.row_twists)
    id_right = GradedMatrix.identity(psi.ring, psi.nrows, twists=psi.row_twists)
    return id_left.kron(psi).hstack(phi.kron(id_right))


def tensor_cm(phi, psi):
    """Reflexive hull of the tensor product of the two cokernels."""
    return reflexive_hull(tensor_presentation(phi, psi))


def maximal_ideal_resolution(steps=3, ring=None):
    """Minimal free resolution of <y1, y2, y3> over the nodal quotient ring.

    The first matrix is the generator row, the second has shape 3x4 and the
    third 4x4 (a rank-two matrix-factorization matrix).
    """
    ring = ring or nodal_ring()
    row = GradedMatrix.from_strings(ring, [["y1", "y2", "y3"]],
                                    row_twists=(0,), col_twists=(1, 1, 1))
    return modres.resolve(row, steps)


def build_M2(ring=None):
    """Rank-two factorization of the second syzygy of the maximal ideal.

    Pipeline: resolve the maximal ideal three steps, transpose the third
    matrix, take syzygies over the quotient, transpose back; the partner is
    recovered from the adjugate.
    """
    ring = ring or nodal_ring()
    third = maximal_ideal_resolution(3, ring)[2]
    syz = modres.syzygies(_regrade(third.transpose()))
    c = _regrade(syz.transpose())
    return make_mf(c, f_polynomial(ring))


def omega1_M2(ring=None):
    """Factorization presenting the first syzygy of the M2 module."""
    ring = ring or nodal_ring()
    c = build_M2(ring).a
    d = _regrade(modres.syzygies(c).transpose())
    return make_mf(d, f_polynomial(ring))
