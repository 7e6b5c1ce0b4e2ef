"""Extensions of maximal Cohen-Macaulay modules via block factorizations.

Given factorizations (A, A') and (B, B') of f presenting L and F, the
extensions of F by L correspond to matrices D, homogeneous per a degree
template, with A'*D*B' = 0 over the quotient ring; D of the shape
A*U + V*B give the split classes.  The block pair

    M  = [[A, D], [0, B]]      M' = [[A', -C], [0, B']]

with C the exact quotient of A'*D*B' by f is again a factorization and
presents the extension module.

Numeric base points reduce everything to exact rational linear algebra;
parametric base points go through the condition-ideal pipeline instead.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations_with_replacement

from . import groebner, linalg
from .groebner import Ideal
from .matfac import GradedMatrix, MatrixFactorization, block_matrix, mf_verify
from .polyring import Polynomial


# ------------------------------------------------------------- templates


def degree_template(a, b, twist=0):
    """Required entry degrees for D in [[A, D], [0, B(twist)]].

    Entry (i,j) needs degree colTwist_B(j) + twist - rowTwist_A(i); negative
    values mean a forced zero.  An all-negative template admits only the
    zero extension.
    """
    return [[b.col_twists[j] + twist - a.row_twists[i] for j in range(b.ncols)]
            for i in range(a.nrows)]


def graded_monomials(ring, degree, names=("y1", "y2", "y3")):
    """All monomials in the named weight-1 variables of the given degree."""
    if degree < 0:
        return []
    idxs = [ring.index[nm] for nm in names]
    out = []
    for combo in combinations_with_replacement(idxs, degree):
        exps = [0] * ring.nvars
        for i in combo:
            exps[i] += 1
        out.append(tuple(exps))
    out.sort(key=ring.order.key, reverse=True)
    return out


def _monomial_layout(ring, template):
    """Unknown slots: one per (row, col, monomial of the required degree)."""
    slots = []
    for i, row in enumerate(template):
        for j, deg in enumerate(row):
            if deg < 0:
                continue
            for mono in graded_monomials(ring, deg):
                slots.append((i, j, mono))
    return slots


@dataclass
class ExtProblem:
    """Left and right factorizations plus the twist applied to the right.

    ``twist`` is added to the right-hand twist integers, i.e. the right
    module is tensored by R(-twist).
    """

    left: MatrixFactorization
    right: MatrixFactorization
    twist: int = 0

    def __post_init__(self):
        if self.left.a.ring != self.right.a.ring:
            raise ValueError("factorizations live over different rings")
        self.ring = self.left.a.ring
        self.template = degree_template(self.left.a, self.right.a, self.twist)

    @property
    def shifted_right(self):
        return self.right.shift(-self.twist)


@dataclass
class ExtSolutionSpace:
    problem: ExtProblem
    slots: list
    solution_coords: list
    trivial_coords: list
    quotient_dimension: int = field(init=False)

    def __post_init__(self):
        n = len(self.slots)
        self.quotient_dimension = (linalg.rank_of_span(self.solution_coords, n)
                                   - linalg.rank_of_span(self.trivial_coords, n))

    def solution_basis(self):
        return [self._to_matrix(v) for v in self.solution_coords]

    def trivial_basis(self):
        return [self._to_matrix(v) for v in self.trivial_coords]

    def _to_matrix(self, coords):
        return matrix_from_coords(self.problem, self.slots, coords)


def matrix_from_coords(problem, slots, coords):
    ring = problem.ring
    a, b = problem.left.a, problem.shifted_right.a
    ent = [[ring.zero() for _ in range(b.ncols)] for _ in range(a.nrows)]
    for (i, j, mono), c in zip(slots, coords):
        if c:
            ent[i][j] = ent[i][j] + Polynomial(ring, {mono: Fraction(c)})
    return GradedMatrix(ring, ent, a.row_twists, b.col_twists, check=False)


def _coords_of_matrix(d, slots, slot_index):
    coords = [Fraction(0)] * len(slots)
    for i, row in enumerate(d.entries):
        for j, e in enumerate(row):
            for mono, c in e.terms.items():
                coords[slot_index[(i, j, mono)]] = c
    return coords


def condition_matrix(problem, slots):
    """Linear conditions on the unknown coefficients from A'*D*B' = 0 in R.

    One row per monomial slot of the reduced product entries, one column per
    unknown.
    """
    ring = problem.ring
    a_ = problem.left.b
    b_ = problem.shifted_right.b
    gb = ring.relation_gb()
    columns = []
    row_index = {}
    for (i, j, mono) in slots:
        unit = GradedMatrix.zero_matrix(ring, a_.ncols, b_.nrows)
        ent = [list(r) for r in unit.entries]
        ent[i][j] = Polynomial(ring, {mono: Fraction(1)})
        unit = GradedMatrix(ring, ent, check=False)
        prod = a_ * unit * b_
        col = {}
        for r in range(prod.nrows):
            for c in range(prod.ncols):
                e = groebner.normal_form(prod.entries[r][c], gb)
                for m, coeff in e.terms.items():
                    key = (r, c, m)
                    if key not in row_index:
                        row_index[key] = len(row_index)
                    col[row_index[key]] = coeff
        columns.append(col)
    rows = [[Fraction(0)] * len(slots) for _ in range(len(row_index))]
    for jcol, col in enumerate(columns):
        for irow, coeff in col.items():
            rows[irow][jcol] = coeff
    return rows


def trivial_generators(problem, slots, slot_index):
    """Coordinates of A*U + V*B over all homogeneous unit choices of U, V."""
    ring = problem.ring
    a = problem.left.a
    b = problem.shifted_right.a
    out = []
    # U maps the source of B(twist) to the source of A
    for k in range(a.ncols):
        for j in range(b.ncols):
            deg = b.col_twists[j] - a.col_twists[k]
            for mono in graded_monomials(ring, deg):
                u = GradedMatrix.zero_matrix(ring, a.ncols, b.ncols)
                ent = [list(r) for r in u.entries]
                ent[k][j] = Polynomial(ring, {mono: Fraction(1)})
                u = GradedMatrix(ring, ent, check=False)
                out.append(_coords_of_matrix(a * u, slots, slot_index))
    # V maps the target of B(twist) to the target of A
    for i in range(a.nrows):
        for k in range(b.nrows):
            deg = b.row_twists[k] - a.row_twists[i]
            for mono in graded_monomials(ring, deg):
                v = GradedMatrix.zero_matrix(ring, a.nrows, b.nrows)
                ent = [list(r) for r in v.entries]
                ent[i][k] = Polynomial(ring, {mono: Fraction(1)})
                v = GradedMatrix(ring, ent, check=False)
                out.append(_coords_of_matrix(v * b, slots, slot_index))
    return out


def solve_extensions(problem):
    """Solution space, split classes, and the quotient dimension dim Ext^1."""
    ring = problem.ring
    if ring.param_relations():
        raise ValueError("parametric base point: use condext for the "
                         "condition ideal instead")
    slots = _monomial_layout(ring, problem.template)
    slot_index = {s: k for k, s in enumerate(slots)}
    if not slots:
        return ExtSolutionSpace(problem, slots, [], [])
    conditions = condition_matrix(problem, slots)
    solutions = linalg.nullspace(conditions, len(slots))
    trivials = trivial_generators(problem, slots, slot_index)
    return ExtSolutionSpace(problem, slots, solutions, trivials)


def build_extension(problem, d):
    """Block factorization [[A, D], [0, B]] for a condition-satisfying D.

    C is the exact quotient of A'*D*B' by f (failure of the division means D
    violates the condition).
    """
    ring = problem.ring
    f = problem.left.f
    a, a_ = problem.left.a, problem.left.b
    right = problem.shifted_right
    b, b_ = right.a, right.b
    if (d.nrows, d.ncols) != (a.nrows, b.ncols):
        raise ValueError("D has the wrong shape")
    prod = a_ * d * b_
    c_entries = []
    for row in prod.entries:
        out = []
        for e in row:
            q = groebner.divide_modulo(e, f, ring)
            if q is None:
                raise ValueError("A'*D*B' is not divisible by f: "
                                 "D violates the extension condition")
            out.append(ring.param_nf(q))
        c_entries.append(out)
    c = GradedMatrix(ring, c_entries, a_.row_twists, b_.col_twists, check=False)
    zero = GradedMatrix.zero_matrix(ring, b.nrows, a.ncols,
                                    row_twists=b.row_twists,
                                    col_twists=a.col_twists)
    zero2 = GradedMatrix.zero_matrix(ring, b_.nrows, a_.ncols,
                                     row_twists=b_.row_twists,
                                     col_twists=a_.col_twists)
    m = block_matrix(a, d, zero, b)
    m_ = block_matrix(a_, c.map_entries(lambda e: -e, check=False), zero2, b_)
    report = mf_verify(m, m_, f)
    if not report.ok:
        raise ValueError("block factorization failed: " + "; ".join(report.failures))
    return MatrixFactorization(m, m_, f, report.rank)


def twist_scan(left, right, twists):
    """Quotient dimension per twist; the paper-style split/decompose cases
    show up as zeros."""
    out = {}
    for t in twists:
        problem = ExtProblem(left, right, t)
        out[t] = solve_extensions(problem).quotient_dimension
    return out


# ------------------------------------------------------- condition ideals


def condext(a, b, d, strip_vars=("y2", "y3"), split_var="y1"):
    """Condition ideal for symbolic D: adj(A)*D*adj(B) = 0 over the ring.

    Reduces each product entry modulo the defining relations, collects the
    coefficients of all powers of ``split_var``, interreduces, and strips
    monomial factors in ``strip_vars``.  Vanishing of the generators is
    equivalent to the reduced product being zero.
    """
    ring = a.ring
    if b.ring != ring or d.ring != ring:
        raise ValueError("ring mismatch")
    prod = a.adjugate() * d * b.adjugate()
    gens = []
    for row in prod.entries:
        for e in row:
            g = ring.nf(e)
            if g.is_zero():
                continue
            for _, coeff in g.coeff_split(split_var):
                gens.append(coeff)
    gens = groebner.interreduce(gens, ring)
    gens = [g.strip_monomial_factors(strip_vars) for g in gens if not g.is_zero()]
    return Ideal(ring, gens)


def symbolic_matrix(ring, nrows, ncols, start=1, overrides=None):
    """Matrix of unknowns d<start>, d<start+1>, ... in row-major order."""
    k = start
    ent = []
    for i in range(nrows):
        row = []
        for j in range(ncols):
            row.append(ring.var(f"d{k}"))
            k += 1
        ent.append(row)
    m = [list(r) for r in ent]
    if overrides:
        for (i, j), value in overrides.items():
            m[i][j] = ring.parse(value) if isinstance(value, str) else value
    return GradedMatrix(ring, m, (0,) * nrows, (0,) * ncols, check=False)


# ---------------------------------------------------------- stability


def stability_dimension(mf):
    """Dimension of self-extension classes: solutions of A'*D*A' = 0 in R
    modulo D ~ D' iff D - D' = U*A - A*V.

    Defined for locally free modules over the nodal quotient with numeric
    entries; dimension 1 characterizes the stable ones.  Free factorizations
    are rejected.
    """
    from .matfac import locally_free_test

    ring = mf.a.ring
    if ring.param_relations():
        raise ValueError("parametric input not supported")
    if mf.rank == 0:
        raise ValueError("free factorization has no stability dimension")
    lf = locally_free_test(mf.a, mf.rank)
    if not lf.locally_free:
        raise ValueError("stability requires a locally free module")
    a, a_ = mf.a, mf.b
    template = [[a.col_twists[j] - a.row_twists[i] for j in range(a.ncols)]
                for i in range(a.nrows)]
    slots = []
    for i, row in enumerate(template):
        for j, deg in enumerate(row):
            for mono in graded_monomials(ring, deg):
                slots.append((i, j, mono))
    if not slots:
        return 0
    slot_index = {s: k for k, s in enumerate(slots)}
    gb = ring.relation_gb()
    rows_index = {}
    columns = []
    for (i, j, mono) in slots:
        ent = [[ring.zero() for _ in range(a.ncols)] for _ in range(a.nrows)]
        ent[i][j] = Polynomial(ring, {mono: Fraction(1)})
        unit = GradedMatrix(ring, ent, check=False)
        prod = a_ * unit * a_
        col = {}
        for r in range(prod.nrows):
            for c in range(prod.ncols):
                e = groebner.normal_form(prod.entries[r][c], gb)
                for m, coeff in e.terms.items():
                    key = (r, c, m)
                    if key not in rows_index:
                        rows_index[key] = len(rows_index)
                    col[rows_index[key]] = coeff
        columns.append(col)
    rows = [[Fraction(0)] * len(slots) for _ in range(len(rows_index))]
    for jcol, col in enumerate(columns):
        for irow, coeff in col.items():
            rows[irow][jcol] = coeff
    solutions = linalg.nullspace(rows, len(slots))

    trivials = []
    # U acts on the target, V on the source
    for i in range(a.nrows):
        for k in range(a.nrows):
            deg = a.row_twists[k] - a.row_twists[i]
            for mono in graded_monomials(ring, deg):
                ent = [[ring.zero() for _ in range(a.nrows)] for _ in range(a.nrows)]
                ent[i][k] = Polynomial(ring, {mono: Fraction(1)})
                u = GradedMatrix(ring, ent, check=False)
                trivials.append(_coords_of_stability(u * a, slots, slot_index))
    for k in range(a.ncols):
        for j in range(a.ncols):
            deg = a.col_twists[j] - a.col_twists[k]
            for mono in graded_monomials(ring, deg):
                ent = [[ring.zero() for _ in range(a.ncols)] for _ in range(a.ncols)]
                ent[k][j] = Polynomial(ring, {mono: Fraction(1)})
                v = GradedMatrix(ring, ent, check=False)
                trivials.append(_coords_of_stability(a * v, slots, slot_index))
    return (linalg.rank_of_span(solutions, len(slots))
            - linalg.rank_of_span(trivials, len(slots)))


def _coords_of_stability(d, slots, slot_index):
    coords = [Fraction(0)] * len(slots)
    for i, row in enumerate(d.entries):
        for j, e in enumerate(row):
            for mono, c in e.terms.items():
                key = (i, j, mono)
                if key not in slot_index:
                    raise ValueError("trivial matrix leaves the template space")
                coords[slot_index[key]] = c
    return coords
