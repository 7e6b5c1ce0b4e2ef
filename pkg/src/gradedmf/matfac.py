"""Graded matrices and matrix factorizations of a hypersurface polynomial.

A graded matrix maps a source twisted free module (+)R(-d_j) to a target
(+)R(-e_i); entry (i,j) is homogeneous of degree d_j - e_i or zero.  A
matrix factorization is a pair (A, B) with A*B = B*A = f*Id -- exact up to
the ring's parameter relations only, never up to f itself -- together with
the rank r read off from det A = c*f^r.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import groebner
from .groebner import Ideal
from .polyring import Polynomial


class GradedMatrix:
    """Matrix of homogeneous polynomials with source/target twist vectors."""

    def __init__(self, ring, entries, row_twists=None, col_twists=None, check=True):
        self.ring = ring
        self.entries = tuple(tuple(e) for e in entries)
        self.nrows = len(self.entries)
        if self.nrows:
            self.ncols = len(self.entries[0])
        else:
            self.ncols = len(col_twists) if col_twists is not None else 0
        if any(len(r) != self.ncols for r in self.entries):
            raise ValueError("ragged matrix")
        if row_twists is None or col_twists is None:
            row_twists, col_twists = infer_twists(ring, self.entries)
        self.row_twists = tuple(row_twists)
        self.col_twists = tuple(col_twists)
        if len(self.row_twists) != self.nrows or len(self.col_twists) != self.ncols:
            raise ValueError("twist vector lengths do not match the shape")
        if check:
            problem = self.grading_violation()
            if problem:
                raise ValueError(problem)

    # -- construction -------------------------------------------------------

    @classmethod
    def from_strings(cls, ring, rows, row_twists=None, col_twists=None):
        entries = [[ring.parse(e) if isinstance(e, str) else e for e in row]
                   for row in rows]
        return cls(ring, entries, row_twists, col_twists)

    @classmethod
    def identity(cls, ring, n, twists=None):
        twists = tuple(twists) if twists is not None else (0,) * n
        one, zero = ring.one(), ring.zero()
        ent = [[one if i == j else zero for j in range(n)] for i in range(n)]
        return cls(ring, ent, twists, twists)

    @classmethod
    def zero_matrix(cls, ring, nrows, ncols, row_twists=None, col_twists=None):
        z = ring.zero()
        ent = [[z] * ncols for _ in range(nrows)]
        rt = row_twists if row_twists is not None else (0,) * nrows
        ct = col_twists if col_twists is not None else (0,) * ncols
        return cls(ring, ent, rt, ct)

    # -- grading ------------------------------------------------------------

    def grading_violation(self):
        for i in range(self.nrows):
            for j in range(self.ncols):
                e = self.entries[i][j]
                if e.is_zero():
                    continue
                want = self.col_twists[j] - self.row_twists[i]
                if not e.is_homogeneous() or e.degree() != want:
                    return (f"entry ({i},{j}) = {e} is not homogeneous of degree "
                            f"{want}")
        return None

    def is_graded(self):
        return self.grading_violation() is None

    # -- combinators ----------------------------------------------------------

    def __mul__(self, other):
        if isinstance(other, GradedMatrix):
            if self.ncols != other.nrows:
                raise ValueError("shape mismatch")
            out = []
            for i in range(self.nrows):
                row = []
                for j in range(other.ncols):
                    acc = self.ring.zero()
                    for k in range(self.ncols):
                        acc = acc + self.entries[i][k] * other.entries[k][j]
                    row.append(acc)
                out.append(row)
            return GradedMatrix(self.ring, out, self.row_twists, other.col_twists,
                                check=False)
        if isinstance(other, (Polynomial, int, Fraction)):
            return self.map_entries(lambda e: e * other, check=False)
        return NotImplemented

    def __add__(self, other):
        if self.nrows != other.nrows or self.ncols != other.ncols:
            raise ValueError("shape mismatch")
        out = [[self.entries[i][j] + other.entries[i][j] for j in range(self.ncols)]
               for i in range(self.nrows)]
        return GradedMatrix(self.ring, out, self.row_twists, self.col_twists,
                            check=False)

    def __sub__(self, other):
        return self + other.map_entries(lambda e: -e, check=False)

    def __eq__(self, other):
        if not isinstance(other, GradedMatrix):
            return NotImplemented
        return (self.entries == other.entries
                and self.row_twists == other.row_twists
                and self.col_twists == other.col_twists)

    def same_entries(self, other):
        return self.entries == other.entries

    def map_entries(self, fn, check=True):
        out = [[fn(e) for e in row] for row in self.entries]
        return GradedMatrix(self.ring, out, self.row_twists, self.col_twists,
                            check=check)

    def transpose(self):
        out = [[self.entries[i][j] for i in range(self.nrows)]
               for j in range(self.ncols)]
        return GradedMatrix(self.ring, out,
                            row_twists=tuple(-d for d in self.col_twists),
                            col_twists=tuple(-e for e in self.row_twists),
                            check=False)

    def shift(self, k):
        """Tensor with R(k): all twist integers drop by k, entries unchanged."""
        return GradedMatrix(self.ring, self.entries,
                            tuple(t - k for t in self.row_twists),
                            tuple(t - k for t in self.col_twists), check=False)

    def direct_sum(self, other):
        z = self.ring.zero()
        top = [list(r) + [z] * other.ncols for r in self.entries]
        bot = [[z] * self.ncols + list(r) for r in other.entries]
        return GradedMatrix(self.ring, top + bot,
                            self.row_twists + other.row_twists,
                            self.col_twists + other.col_twists, check=False)

    def hstack(self, other):
        if self.nrows != other.nrows:
            raise ValueError("row count mismatch")
        if self.row_twists != other.row_twists:
            raise ValueError("row twist mismatch")
        rows = [list(a) + list(b) for a, b in zip(self.entries, other.entries)]
        return GradedMatrix(self.ring, rows, self.row_twists,
                            self.col_twists + other.col_twists, check=False)

    def kron(self, other):
        """Kronecker product; twists add blockwise."""
        rows = []
        for i in range(self.nrows):
            for k in range(other.nrows):
                row = []
                for j in range(self.ncols):
                    for l in range(other.ncols):
                        row.append(self.entries[i][j] * other.entries[k][l])
                rows.append(row)
        rt = [a + b for a in self.row_twists for b in other.row_twists]
        ct = [a + b for a in self.col_twists for b in other.col_twists]
        return GradedMatrix(self.ring, rows, rt, ct, check=False)

    def submatrix(self, rows, cols):
        ent = [[self.entries[i][j] for j in cols] for i in rows]
        return GradedMatrix(self.ring, ent,
                            tuple(self.row_twists[i] for i in rows),
                            tuple(self.col_twists[j] for j in cols), check=False)

    def nf(self, ring=None):
        """Entrywise normal form modulo the (given or own) ring's relations."""
        ring = ring or self.ring
        return self.map_entries(ring.nf, check=False)

    def subs(self, mapping, target=None):
        target = target or self.ring
        out = [[e.subs(mapping, target) for e in row] for row in self.entries]
        return GradedMatrix(target, out, self.row_twists, self.col_twists,
                            check=False)

    def normalized(self, anchor=0):
        """Shift twists so the smallest source twist equals the anchor."""
        if not self.col_twists:
            return self
        k = min(self.col_twists) - anchor
        return GradedMatrix(self.ring, self.entries,
                            tuple(t - k for t in self.row_twists),
                            tuple(t - k for t in self.col_twists), check=False)

    def is_zero(self):
        return all(e.is_zero() for row in self.entries for e in row)

    # -- determinants ----------------------------------------------------------

    def det(self):
        if self.nrows != self.ncols:
            raise ValueError("determinant of a non-square matrix")
        return _det(self.ring, self.entries, tuple(range(self.nrows)),
                    tuple(range(self.ncols)), {})

    def minor(self, rows, cols):
        return _det(self.ring, self.entries, tuple(rows), tuple(cols), {})

    def minors(self, size):
        """All size x size minors, row/column index sets in lexicographic order."""
        from itertools import combinations
        if size == 0:
            return [self.ring.one()]
        cache = {}
        out = []
        for rows in combinations(range(self.nrows), size):
            for cols in combinations(range(self.ncols), size):
                out.append(_det(self.ring, self.entries, rows, cols, cache))
        return out

    def adjugate(self):
        """Transpose cofactor matrix: A * adj(A) = det(A) * Id."""
        if self.nrows != self.ncols:
            raise ValueError("adjugate of a non-square matrix")
        n = self.nrows
        if n == 0:
            return self
        cache = {}
        rows_all = list(range(n))
        ent = [[None] * n for _ in range(n)]
        for i in range(n):
            for j in range(n):
                rows = tuple(r for r in rows_all if r != j)
                cols = tuple(c for c in rows_all if c != i)
                m = _det(self.ring, self.entries, rows, cols, cache)
                ent[i][j] = m if (i + j) % 2 == 0 else -m
        total = sum(self.col_twists) - sum(self.row_twists)
        rt = tuple(total - d for d in self.col_twists)
        ct = tuple(total - e for e in self.row_twists)
        return GradedMatrix(self.ring, ent, rt, ct, check=False)

    def __str__(self):
        rows = [", ".join(str(e) for e in row) for row in self.entries]
        return " ;\n".join(rows)

    def __repr__(self):
        return (f"GradedMatrix({self.nrows}x{self.ncols}, rows={self.row_twists}, "
                f"cols={self.col_twists})")


def block_matrix(a, b, c, d):
    """[[a, b], [c, d]] from blocks with compatible twists."""
    top = a.hstack(b)
    bottom = c.hstack(d)
    rows = list(top.entries) + list(bottom.entries)
    return GradedMatrix(a.ring, rows,
                        top.row_twists + bottom.row_twists,
                        top.col_twists, check=False)


def _det(ring, entries, rows, cols, cache):
    if not rows:
        return ring.one()
    key = (rows, cols)
    hit = cache.get(key)
    if hit is not None:
        return hit
    j = cols[0]
    rest = cols[1:]
    acc = ring.zero()
    for pos, i in enumerate(rows):
        e = entries[i][j]
        if e.is_zero():
            continue
        sub = _det(ring, entries, rows[:pos] + rows[pos + 1:], rest, cache)
        term = e * sub
        acc = acc + term if pos % 2 == 0 else acc - term
    cache[key] = acc
    return acc


def infer_twists(ring, entries, anchor=0):
    """Recover twist vectors from entry degrees; zero rows/columns anchor at 0.

    Walks the bipartite row/column graph of nonzero entries and solves
    d_j - e_i = deg(entry).  Raises when the degrees are inconsistent.
    """
    nrows = len(entries)
    ncols = len(entries[0]) if nrows else 0
    row_t = [None] * nrows
    col_t = [None] * ncols
    for start in range(nrows):
        if row_t[start] is not None:
            continue
        row_t[start] = anchor
        queue = [("r", start)]
        while queue:
            kind, idx = queue.pop()
            if kind == "r":
                for j in range(ncols):
                    e = entries[idx][j]
                    if e.is_zero():
                        continue
                    d = row_t[idx] + e.homogeneous_degree()
                    if col_t[j] is None:
                        col_t[j] = d
                        queue.append(("c", j))
                    elif col_t[j] != d:
                        raise ValueError("inconsistent grading in matrix")
            else:
                for i in range(nrows):
                    e = entries[i][idx]
                    if e.is_zero():
                        continue
                    d = col_t[idx] - e.homogeneous_degree()
                    if row_t[i] is None:
                        row_t[i] = d
                        queue.append(("r", i))
                    elif row_t[i] != d:
                        raise ValueError("inconsistent grading in matrix")
    return (tuple(t if t is not None else anchor for t in row_t),
            tuple(t if t is not None else anchor for t in col_t))


# --------------------------------------------------------- factorizations


@dataclass
class MFReport:
    ok: bool
    rank: int | None
    failures: list

    def __bool__(self):
        return self.ok


def rank_from_det(det, f, ring):
    """r and unit c with det = c * f^r modulo parameter relations; None if not."""
    d = ring.param_nf(det)
    r = 0
    while not d.is_constant():
        q = groebner.divide_modulo(d, f, ring)
        if q is None:
            return None, None
        d = ring.param_nf(q)
        r += 1
    c = d.constant_value()
    if c == 0:
        return None, None
    return r, c


def mf_verify(a, b, f):
    """Check A*B = B*A = f*Id and det A = c*f^rank; grading included.

    Products are compared exactly, allowing reduction only by parameter
    relations (grading-degree-0 relations of the ring), never by f.
    """
    failures = []
    ring = a.ring
    if a.nrows != a.ncols or b.nrows != b.ncols or a.nrows != b.nrows:
        return MFReport(False, None, ["matrices must be square and of equal size"])
    for m, name in ((a, "A"), (b, "B")):
        problem = m.grading_violation()
        if problem:
            failures.append(f"{name}: {problem}")
    if a.col_twists != b.row_twists:
        failures.append("twist mismatch: source of A must equal target of B")
    df = f.homogeneous_degree()
    if tuple(t + df for t in a.row_twists) != b.col_twists:
        failures.append("twist mismatch: source of B must be target of A shifted by deg f")
    n = a.nrows
    for left, right, name in ((a, b, "A*B"), (b, a, "B*A")):
        prod = left * right
        for i in range(n):
            for j in range(n):
                want = f if i == j else ring.zero()
                if not ring.param_nf(prod.entries[i][j] - want).is_zero():
                    failures.append(f"{name} entry ({i},{j}) differs from f*Id")
    rank, unit = rank_from_det(a.det(), f, ring)
    if rank is None:
        failures.append("det A is not a unit times a power of f")
    return MFReport(not failures, rank, failures)


@dataclass
class MatrixFactorization:
    a: GradedMatrix
    b: GradedMatrix
    f: Polynomial
    rank: int

    @classmethod
    def verified(cls, a, b, f):
        report = mf_verify(a, b, f)
        if not report.ok:
            raise ValueError("not a matrix factorization: " + "; ".join(report.failures))
        return cls(a, b, f, report.rank)

    @property
    def size(self):
        return self.a.nrows

    def shift(self, k):
        return MatrixFactorization(self.a.shift(k), self.b.shift(k), self.f, self.rank)

    def direct_sum(self, other):
        return MatrixFactorization(self.a.direct_sum(other.a),
                                   self.b.direct_sum(other.b),
                                   self.f, self.rank + other.rank)

    def dual(self):
        """(B^t, A^t) with negated twists; the double dual is the original."""
        return MatrixFactorization(self.b.transpose(), self.a.transpose(),
                                   self.f, self.size - self.rank)

    def normalized(self, anchor=0):
        if not self.a.col_twists:
            return self
        k = min(self.a.col_twists) - anchor
        return MatrixFactorization(self.a.shift(k), self.b.shift(k), self.f, self.rank)


def mf_dual(mf):
    return mf.dual()


def mf_shift(mf, k):
    return mf.shift(k)


def partner(a, f):
    """The matrix B with A*B = B*A = f*Id, via adj(A) = f^(rank-1) * B.

    Division is exact up to parameter relations; failure means A is not a
    matrix-factorization matrix for f.
    """
    ring = a.ring
    rank, _ = rank_from_det(a.det(), f, ring)
    if rank is None:
        raise ValueError("det A is not a unit times a power of f")
    adj = a.adjugate()
    if rank == 0:
        # free module: adj(A) = det(A)/f^0 ... A is unimodular, B = f * A^{-1}
        c = a.det().constant_value()
        ent = [[ring.param_nf(e * f).scale(Fraction(1, 1) / c) for e in row]
               for row in adj.entries]
    else:
        ent = []
        for row in adj.entries:
            out = []
            for e in row:
                q = e
                for _ in range(rank - 1):
                    q = groebner.divide_modulo(q, f, ring)
                    if q is None:
                        raise ValueError("adjugate is not divisible by f^(rank-1)")
                out.append(ring.param_nf(q))
            ent.append(out)
    df = f.homogeneous_degree()
    rt = tuple(a.col_twists)
    ct = tuple(t + df for t in a.row_twists)
    return GradedMatrix(ring, ent, rt, ct, check=False)


def make_mf(a, f):
    """Matrix factorization from the A-side alone."""
    b = partner(a, f)
    return MatrixFactorization.verified(a, b, f)


# ----------------------------------------------------------- curve points


@dataclass(frozen=True)
class CurvePoint:
    """Point of the nodal cubic y2^2 = y1^3 + y1^2 in the affine chart y3 = 1.

    Kinds: affine (on-curve rational coordinates), infinity (0:1:0),
    singular (0:0:1), parametric (symbolic a, b with a^3 + a^2 - b^2 = 0).
    """

    kind: str
    l1: Fraction = Fraction(0)
    l2: Fraction = Fraction(0)

    @classmethod
    def affine(cls, l1, l2):
        l1, l2 = Fraction(l1), Fraction(l2)
        if l1 ** 3 + l1 ** 2 - l2 ** 2 != 0:
            raise ValueError(f"({l1}, {l2}) does not satisfy l1^3 + l1^2 = l2^2")
        if l1 == 0 and l2 == 0:
            return cls("singular")
        return cls("affine", l1, l2)

    @classmethod
    def infinity(cls):
        return cls("infinity")

    @classmethod
    def singular(cls):
        return cls("singular")

    @classmethod
    def parametric(cls):
        return cls("parametric")

    @property
    def is_regular(self):
        return self.kind in ("affine", "infinity")

    def __str__(self):
        if self.kind == "affine":
            return f"({self.l1}:{self.l2}:1)"
        return {"infinity": "(0:1:0)", "singular": "(0:0:1)",
                "parametric": "(a:b:1)"}[self.kind]


# --------------------------------------------------------- fitting ideals


def fitting_ideal(m, k):
    """Ideal of (n-k)-minors, n = min(rows, cols); the paper-calibrated index.

    k = n gives the unit ideal, k = 0 the ideal of maximal minors.
    """
    n = min(m.nrows, m.ncols)
    if k < 0 or k > n:
        raise ValueError(f"fitting index {k} out of range 0..{n}")
    size = n - k
    gens = [g for g in m.minors(size) if not g.is_zero()]
    # deduplicate up to scaling for readable output
    seen = []
    for g in gens:
        gp = g.primitive()
        if gp not in seen:
            seen.append(gp)
    return Ideal(m.ring, seen)


@dataclass
class LocalFreeness:
    verdict: str            # "locallyFree" | "notLocallyFree" | "conditional"
    condition: Ideal | None

    @property
    def locally_free(self):
        return self.verdict == "locallyFree"


def locally_free_test(m, k):
    """Freeness along the singular line via Fitting-ideal evaluation.

    Substitutes y1 = 0, y2 = 0, y3 = 1 into the Fitt_k generators.  Numeric
    entries give a verdict; symbolic entries give the condition ideal in the
    parameters whose vanishing characterizes notLocallyFree.  Valid because
    the singular prime is generated by variables, so evaluation agrees with
    localization.
    """
    ring = m.ring
    for nm in ("y1", "y2", "y3"):
        if nm not in ring.index:
            raise ValueError("matrix ring must contain y1, y2, y3")
    fit = fitting_ideal(m, k)
    point = {"y1": 0, "y2": 0, "y3": 1}
    values = []
    for g in fit.gens:
        v = ring.param_nf(g.subs(point))
        if not v.is_zero():
            values.append(v)
    if not values:
        return LocalFreeness("notLocallyFree", None)
    if any(v.is_constant() for v in values):
        return LocalFreeness("locallyFree", None)
    cond = Ideal(ring, groebner.interreduce(values, ring))
    return LocalFreeness("conditional", cond)


# ----------------------------------------------- equivalence invariants


def _normalized_twist_pair(m):
    if not m.col_twists:
        return ((), ())
    k = min(m.col_twists)
    return (tuple(sorted(t - k for t in m.row_twists)),
            tuple(sorted(t - k for t in m.col_twists)))


def equivalence_invariants(m1, m2, f=None, ks=None):
    """Separate two presentations by invariants.

    Returns ("distinct", reason) when sizes, shift-normalized twist
    multisets, determinant rank, or any Fitting ideal differ; otherwise
    ("undetermined", None).  No completeness claim.  ``ks`` restricts which
    Fitting indices are compared (all by default).
    """
    if m1.ring != m2.ring:
        raise ValueError("ring mismatch")
    if (m1.nrows, m1.ncols) != (m2.nrows, m2.ncols):
        return ("distinct", "size")
    if _normalized_twist_pair(m1) != _normalized_twist_pair(m2):
        return ("distinct", "twists")
    if f is not None and m1.nrows == m1.ncols:
        r1, _ = rank_from_det(m1.det(), f, m1.ring)
        r2, _ = rank_from_det(m2.det(), f, m2.ring)
        if r1 != r2:
            return ("distinct", "rank")
    n = min(m1.nrows, m1.ncols)
    for k in (range(n + 1) if ks is None else ks):
        f1 = fitting_ideal(m1, k)
        f2 = fitting_ideal(m2, k)
        if not groebner.ideal_equal(list(f1.gens), list(f2.gens), m1.ring):
            return ("distinct", f"fitting ideal {k}")
    return ("undetermined", None)
