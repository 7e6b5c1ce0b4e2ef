"""Graded matrix factorizations of maximal Cohen-Macaulay modules over the
affine cone of the nodal plane cubic, with the extension-construction
machinery that classifies them."""

from .groebner import Ideal, groebner_basis, ideal_equal, interreduce, normal_form
from .matfac import (CurvePoint, GradedMatrix, MatrixFactorization,
                     equivalence_invariants, fitting_ideal, locally_free_test,
                     make_mf, mf_dual, mf_shift, mf_verify)
from .polyring import MonomialOrder, ParseError, Polynomial, Ring
from .rings import ambient_ring, extension_ring, f_polynomial, nodal_ring, parametric_ring

__all__ = [
    "CurvePoint", "GradedMatrix", "Ideal", "MatrixFactorization",
    "MonomialOrder", "ParseError", "Polynomial", "Ring",
    "ambient_ring", "equivalence_invariants", "extension_ring", "f_polynomial",
    "fitting_ideal", "groebner_basis", "ideal_equal", "interreduce",
    "locally_free_test", "make_mf", "mf_dual", "mf_shift", "mf_verify",
    "nodal_ring", "normal_form", "parametric_ring",
]

__version__ = "0.1.0"
