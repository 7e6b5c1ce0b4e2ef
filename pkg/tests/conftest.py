import random
from fractions import Fraction

import pytest

from gradedmf.matfac import GradedMatrix, make_mf
from gradedmf.polyring import Polynomial
from gradedmf.rings import f_polynomial, nodal_ring, parametric_ring


@pytest.fixture(scope="session")
def R():
    return nodal_ring()


@pytest.fixture(scope="session")
def f(R):
    return f_polynomial(R)


@pytest.fixture(scope="session")
def PR():
    return parametric_ring()


def _mat(R, rows, rt, ct):
    return GradedMatrix.from_strings(R, rows, rt, ct)


@pytest.fixture(scope="session")
def fixtures(R, f):
    """The standard matrices at the named points."""
    out = {
        "phi_xi": _mat(R, [["y1+y3", "y2*y3"], ["y2", "y1^2"]], (1, 1), (2, 3)),
        "psi_xi": _mat(R, [["y1^2", "-y2*y3"], ["-y2", "y1+y3"]], (0, 1), (2, 2)),
        "phi_s": _mat(R, [["y1", "y2*y3"], ["y2", "y1^2+y1*y3"]], (1, 1), (2, 3)),
        "psi_s": _mat(R, [["y1^2+y1*y3", "-y2*y3"], ["-y2", "y1"]], (0, 1), (2, 2)),
        "phi_l0": _mat(R, [["y1+y3", "y2^2"], ["y3", "y1^2"]], (1, 1), (2, 3)),
        "psi_l0": _mat(R, [["y1^2", "-y2^2"], ["-y3", "y1+y3"]], (0, 1), (2, 2)),
        "alpha_xi": _mat(R, [["0", "y1+y3", "y2"], ["y1", "y2", "0"],
                             ["y3", "0", "-y1"]], (1, 1, 1), (2, 2, 2)),
        "alpha_s": _mat(R, [["0", "y1", "y2"], ["y1", "y2", "0"],
                            ["y3", "0", "-y1-y3"]], (1, 1, 1), (2, 2, 2)),
        "alpha_36": _mat(R, [["0", "y1-3*y3", "y2-6*y3"], ["y1", "y2+6*y3", "12*y3"],
                             ["y3", "0", "-y1-4*y3"]], (1, 1, 1), (2, 2, 2)),
    }
    return out


@pytest.fixture(scope="session")
def mfs(fixtures, f):
    return {name: make_mf(m, f) for name, m in fixtures.items()}


def random_poly(ring, rng, max_terms=4, max_deg=3, names=None):
    names = names or ring.names
    idxs = [ring.index[nm] for nm in names]
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        exps = [0] * ring.nvars
        for _ in range(rng.randint(0, max_deg)):
            exps[rng.choice(idxs)] += 1
        c = Fraction(rng.randint(-5, 5))
        if c:
            terms[tuple(exps)] = terms.get(tuple(exps), 0) + c
    return Polynomial(ring, {m: c for m, c in terms.items() if c})


def random_homogeneous(ring, rng, degree, names=("y1", "y2", "y3")):
    from gradedmf.extsolver import graded_monomials
    monos = graded_monomials(ring, degree, names)
    terms = {}
    for m in monos:
        c = Fraction(rng.randint(-3, 3))
        if c:
            terms[m] = c
    return Polynomial(ring, terms)


def random_invertible(rng, n):
    """Random integer matrix with nonzero determinant, entries in [-3, 3]."""
    while True:
        rows = [[Fraction(rng.randint(-3, 3)) for _ in range(n)] for _ in range(n)]
        if _det_frac(rows) != 0:
            return rows


def _det_frac(rows):
    n = len(rows)
    m = [row[:] for row in rows]
    det = Fraction(1)
    for c in range(n):
        pivot = next((i for i in range(c, n) if m[i][c] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != c:
            m[c], m[pivot] = m[pivot], m[c]
            det = -det
        det *= m[c][c]
        for i in range(c + 1, n):
            factor = m[i][c] / m[c][c]
            m[i] = [a - factor * b for a, b in zip(m[i], m[c])]
    return det


def constant_matrix(ring, rows):
    return GradedMatrix(ring, [[ring.const(c) for c in row] for row in rows],
                        (0,) * len(rows), (0,) * len(rows[0]), check=False)


def transform(m, u_rows, v_rows):
    """U * m * V for constant square U, V; twists preserved."""
    ring = m.ring
    u = GradedMatrix(ring, [[ring.const(c) for c in row] for row in u_rows],
                     m.row_twists, m.row_twists, check=False)
    v = GradedMatrix(ring, [[ring.const(c) for c in row] for row in v_rows],
                     m.col_twists, m.col_twists, check=False)
    return u * m * v


@pytest.fixture
def rng():
    return random.Random(20260810)
