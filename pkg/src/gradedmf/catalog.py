"""Executable catalog of every matrix family, parametrized by curve points
and integers, with a verification report.

Point-parametrized families are written once with symbolic (a, b); affine
points substitute rational coordinates, the singular point substitutes
(0, 0), and the point at infinity uses its own displayed matrix where one
exists.  Rank-two block families carry the twist data of the extensions
they come from.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import catalog_data, groebner, homalg
from .catalog_data import FAMILIES, FITTING_GOLDEN, NAMED_POINTS
from .matfac import (CurvePoint, GradedMatrix, MatrixFactorization,
                     fitting_ideal, locally_free_test, make_mf, mf_verify)
from .rings import f_polynomial, nodal_ring, parametric_ring

FAMILY_NAMES = list(FAMILIES)


@dataclass
class FamilySpec:
    name: str
    point: CurvePoint | None = None
    m: int | None = None

    def label(self):
        bits = [self.name]
        if self.point is not None:
            bits.append(str(self.point))
        if self.m is not None:
            bits.append(f"m={self.m}")
        return " ".join(bits)


def named_point(name):
    kind, *coords = NAMED_POINTS[name]
    if kind == "affine":
        return CurvePoint.affine(*coords)
    return CurvePoint(kind)


# ------------------------------------------------------------ displays
#
# Point families are given by their symbolic (a, b) display plus, where the
# family has one, a separate display at the point at infinity.

_PHI_AB = [["y1-a*y3", "y2*y3+b*y3^2"],
           ["y2-b*y3", "y1^2+(a+1)*y1*y3+(a^2+a)*y3^2"]]
_PHI_INF = [["y1+y3", "y2^2"], ["y3", "y1^2"]]

_PSI_AB = [["y1^2+(a+1)*y1*y3+(a^2+a)*y3^2", "-(y2*y3+b*y3^2)"],
           ["-(y2-b*y3)", "y1-a*y3"]]
_PSI_INF = [["y1^2", "-y2^2"], ["-y3", "y1+y3"]]

_ALPHA_AB = [["0", "y1-a*y3", "y2-b*y3"],
             ["y1", "y2+b*y3", "(a^2+a)*y3"],
             ["y3", "0", "-y1-(a+1)*y3"]]

_ALPHA_PSI_AB = [
    ["0", "y1", "y2", "b*y3", "-a*y3"],
    ["y1", "y2", "0", "-(a+a^2)*y3", "b*y3"],
    ["y3", "0", "-y1-y3", "a*y3", "0"],
    ["0", "0", "0", "y1^2+(a+1)*y1*y3+(a^2+a)*y3^2", "-y2*y3-b*y3^2"],
    ["0", "0", "0", "-y2+b*y3", "y1-a*y3"]]
_ALPHA_PSI_INF = [
    ["0", "y1", "y2", "0", "0"],
    ["y1", "y2", "0", "y2", "-y2"],
    ["y3", "0", "-y1-y3", "0", "y2"],
    ["0", "0", "0", "y1^2", "-y2^2"],
    ["0", "0", "0", "-y3", "y1+y3"]]

_PHI_PSI_AB = [
    ["y1", "y2*y3", "-b*y3", "a*y3"],
    ["y2", "y1^2+y1*y3", "a*y1+(a^2+a)*y3", "-b*y3"],
    ["0", "0", "y1^2+(a+1)*y1*y3+(a^2+a)*y3^2", "-y2*y3-b*y3^2"],
    ["0", "0", "-y2+b*y3", "y1-a*y3"]]
_PHI_PSI_INF = [
    ["y1", "y2*y3", "0", "y2"],
    ["y2", "y1^2+y1*y3", "y1", "0"],
    ["0", "0", "y1^2", "-y2^2"],
    ["0", "0", "-y3", "y1+y3"]]


def _delta(m):
    t = f"y3^{m}" if m > 1 else "y3"
    return [["0", "y1", "y2", "0", t, f"-{t}"],
            ["y1", "y2", "0", "0", t, f"-{t}"],
            ["y3", "0", "-y1-y3", "0", "0", t],
            ["0", "0", "0", "0", "y1", "y2"],
            ["0", "0", "0", "y1", "y2", "0"],
            ["0", "0", "0", "y3", "0", "-y1-y3"]]


def _pow(m):
    return f"y3^{m}" if m > 1 else ("y3" if m == 1 else "1")


def _alpha_psi_m(m, second):
    t = _pow(m)
    if not second:
        d = [[t, f"-{t}"], [f"-{t}", t], [t, "0"]]
    else:
        d = [[t, t], [t, t], [f"-{t}", "0"]]
    return [["0", "y1", "y2", d[0][0], d[0][1]],
            ["y1", "y2", "0", d[1][0], d[1][1]],
            ["y3", "0", "-y1-y3", d[2][0], d[2][1]],
            ["0", "0", "0", "y1^2+y1*y3", "-y2*y3"],
            ["0", "0", "0", "-y2", "y1"]]


def _alpha_phi_m(m, second):
    t, t1 = _pow(m), _pow(m + 1)
    if not second:
        d = [[t, t1], [f"-{t}", f"-{t1}"], ["0", t1]]
    else:
        d = [[t, f"-{t1}"], [t, f"-{t1}"], ["0", t1]]
    return [["0", "y1", "y2", d[0][0], d[0][1]],
            ["y1", "y2", "0", d[1][0], d[1][1]],
            ["y3", "0", "-y1-y3", d[2][0], d[2][1]],
            ["0", "0", "0", "y1", "y2*y3"],
            ["0", "0", "0", "y2", "y1^2+y1*y3"]]


def _phi_psi_m(m, second):
    t = _pow(m)
    mixed = f"y1*{_pow(m - 1)}+{t}" if m > 1 else f"y1+{t}"
    if not second:
        d = [[t, t], [mixed, t]]
    else:
        d = [[f"-{t}", t], [mixed, f"-{t}"]]
    return [["y1", "y2*y3", d[0][0], d[0][1]],
            ["y2", "y1^2+y1*y3", d[1][0], d[1][1]],
            ["0", "0", "y1^2+y1*y3", "-y2*y3"],
            ["0", "0", "-y2", "y1"]]


def _psi_phi_m(m, second):
    t, t1, t2 = _pow(m), _pow(m + 1), _pow(m + 2)
    if not second:
        d = [[t1, f"y1*{t1}+{t2}"], [t, t1]]
    else:
        d = [[t1, f"-y1*{t1}-{t2}"], [f"-{t}", t1]]
    return [["y1^2+y1*y3", "-y2*y3", d[0][0], d[0][1]],
            ["-y2", "y1", d[1][0], d[1][1]],
            ["0", "0", "y1", "y2*y3"],
            ["0", "0", "y2", "y1^2+y1*y3"]]


def _phi_phi_m(m, second):
    t, t1 = _pow(m), _pow(m + 1)
    if not second:
        d = [[t, f"-{t1}"], [t, f"-y1*{t}-{t1}"]]
    else:
        d = [[f"-{t}", f"-{t1}"], [t, f"y1*{t}+{t1}"]]
    return [["y1", "y2*y3", d[0][0], d[0][1]],
            ["y2", "y1^2+y1*y3", d[1][0], d[1][1]],
            ["0", "0", "y1", "y2*y3"],
            ["0", "0", "y2", "y1^2+y1*y3"]]


_M2_PHI = [["y1^2+y1*y3", "-y2", "-y3", "0"],
           ["-y2*y3", "y1", "0", "-y3"],
           ["0", "0", "y1", "y2"],
           ["0", "0", "y2*y3", "y1^2+y1*y3"]]
_M2_PSI = [["y1", "y2", "y3", "0"],
           ["y2*y3", "y1^2+y1*y3", "0", "y3"],
           ["0", "0", "y1^2+y1*y3", "-y2"],
           ["0", "0", "-y2*y3", "y1"]]


def _point_matrix(rows_ab, rows_inf, point, row_twists, col_twists):
    if point.kind == "parametric":
        ring = parametric_ring()
        return GradedMatrix.from_strings(ring, rows_ab, row_twists, col_twists)
    if point.kind == "infinity":
        if rows_inf is None:
            raise ValueError("family is not defined at the point at infinity")
        ring = nodal_ring()
        return GradedMatrix.from_strings(ring, rows_inf, row_twists, col_twists)
    ring = nodal_ring()
    pring = parametric_ring()
    symbolic = GradedMatrix.from_strings(pring, rows_ab, row_twists, col_twists)
    return symbolic.subs({"a": point.l1, "b": point.l2}, ring)


def instantiate(spec):
    """Matrix factorization for the family at the given parameters.

    Raises for parameters outside the family's domain (off-curve points,
    missing m, disallowed point kinds).
    """
    name = spec.name
    if name not in FAMILIES:
        raise KeyError(f"unknown family {name!r}")
    data = FAMILIES[name]
    if data["params"] == "point":
        point = spec.point
        if point is None:
            raise ValueError(f"{name} needs a curve point")
        kinds = data["points"]
        kind = point.kind
        if kind == "affine" and "affine" not in kinds and "affine-regular" not in kinds:
            raise ValueError(f"{name} is not defined at affine points")
        if kind == "singular" and not any(k == "singular" for k in kinds):
            raise ValueError(f"{name} is not defined at the singular point")
        if kind == "infinity" and "infinity" not in kinds:
            raise ValueError(f"{name} is not defined at the point at infinity")
        if kind == "parametric" and "parametric" not in kinds:
            raise ValueError(f"{name} has no parametric form")
        if name == "beta_lambda":
            base = instantiate(FamilySpec("alpha_lambda", point=point))
            a = base.b.shift(2)
        else:
            rows_ab, rows_inf = _POINT_DISPLAYS[name]
            a = _point_matrix(rows_ab, rows_inf, point,
                              data["row_twists"], data["col_twists"])
    elif data["params"] == "m":
        m = spec.m
        if m is None or m < 1:
            raise ValueError(f"{name} needs an integer m >= 1")
        builder = _M_DISPLAYS[name]
        ring = nodal_ring()
        if name == "delta_m_t":
            base = FAMILIES["delta_m"]
            a = GradedMatrix.from_strings(ring, builder(m), base["row_twists"](m),
                                          base["col_twists"](m)).transpose()
        else:
            a = GradedMatrix.from_strings(ring, builder(m),
                                          data["row_twists"](m), data["col_twists"](m))
    else:
        ring = nodal_ring()
        rows = _M2_PHI if name == "M2" else _M2_PSI
        a = GradedMatrix.from_strings(ring, rows,
                                      data["row_twists"], data["col_twists"])
    return make_mf(a, f_polynomial(a.ring))


_POINT_DISPLAYS = {
    "phi_lambda": (_PHI_AB, _PHI_INF),
    "psi_lambda": (_PSI_AB, _PSI_INF),
    "alpha_lambda": (_ALPHA_AB, None),
    "beta_lambda": (_ALPHA_AB, None),      # adjoint taken below
    "alpha_psi_lambda": (_ALPHA_PSI_AB, _ALPHA_PSI_INF),
    "phi_psi_lambda": (_PHI_PSI_AB, _PHI_PSI_INF),
}

_M_DISPLAYS = {
    "delta_m": _delta,
    "delta_m_t": _delta,
    "alpha_psi1_m": lambda m: _alpha_psi_m(m, False),
    "alpha_psi2_m": lambda m: _alpha_psi_m(m, True),
    "alpha_phi1_m": lambda m: _alpha_phi_m(m, False),
    "alpha_phi2_m": lambda m: _alpha_phi_m(m, True),
    "phi_psi1_m": lambda m: _phi_psi_m(m, False),
    "phi_psi2_m": lambda m: _phi_psi_m(m, True),
    "psi_phi1_m": lambda m: _psi_phi_m(m, False),
    "psi_phi2_m": lambda m: _psi_phi_m(m, True),
    "phi_phi1_m": lambda m: _phi_phi_m(m, False),
    "phi_phi2_m": lambda m: _phi_phi_m(m, True),
}


def admissible_specs(name, points, ms):
    """Specs within the family's domain for the given parameter samples."""
    data = FAMILIES[name]
    if data["params"] == "point":
        kinds = data["points"]
        out = []
        for p in points:
            ok = (p.kind in kinds
                  or (p.kind == "affine" and "affine-regular" in kinds and p.is_regular))
            if ok:
                out.append(FamilySpec(name, point=p))
        return out
    if data["params"] == "m":
        return [FamilySpec(name, m=m) for m in ms]
    return [FamilySpec(name)]


def _expected_locally_free(name, spec):
    lf = FAMILIES[name]["locally_free"]
    if isinstance(lf, dict):
        return lf.get(spec.point.kind)
    return lf


def verify_instance(spec):
    """All checks for one instance; returns a report dict."""
    data = FAMILIES[spec.name]
    row = {"family": spec.name, "label": spec.label(), "checks": {}, "ok": True}

    def record(key, ok, detail=None):
        row["checks"][key] = ok if detail is None else (ok, detail)
        row["ok"] = row["ok"] and bool(ok)

    try:
        mf = instantiate(spec)
    except ValueError as exc:
        row["ok"] = False
        row["error"] = str(exc)
        return row
    f = f_polynomial(mf.a.ring)
    report = mf_verify(mf.a, mf.b, f)
    record("factorization", report.ok, report.failures or None)
    record("rank", report.rank == data["rank"],
           f"got {report.rank}, want {data['rank']}")
    record("size", mf.size == data["size"])
    record("generator_bound", mf.size <= 3 * data["rank"])
    expected_lf = _expected_locally_free(spec.name, spec)
    parametric = spec.point is not None and spec.point.kind == "parametric"
    if expected_lf is not None and not parametric:
        lf = locally_free_test(mf.a, data["rank"])
        record("locally_free", lf.locally_free == expected_lf,
               f"got {lf.verdict}")
    key = (spec.name, spec.point.kind) if spec.point is not None else None
    if key in FITTING_GOLDEN:
        ring = mf.a.ring
        subs = {}
        if spec.point.kind == "affine":
            subs = {"l1": spec.point.l1, "l2": spec.point.l2}
        golden = [ring.parse(t.format(**{k: f"({v})" for k, v in subs.items()}))
                  for t in FITTING_GOLDEN[key]]
        fit = fitting_ideal(mf.a, 1)
        record("fitting_golden",
               groebner.ideal_equal(list(fit.gens), golden, ring))
    return row


def verify_catalog(points=None, ms=(1, 2, 3), include_parametric=False):
    """Verification report over all families and the given parameter ranges."""
    if points is None:
        points = [named_point("xi"), named_point("lambda0"), named_point("s")]
    if include_parametric:
        points = list(points) + [CurvePoint.parametric()]
    rows = []
    for name in FAMILY_NAMES:
        for spec in admissible_specs(name, points, ms):
            rows.append(verify_instance(spec))
    return {"ok": all(r["ok"] for r in rows), "instances": rows}


def beta_factorization(spec):
    """beta = adjugate of alpha; swap the roles in the alpha factorization."""
    base = instantiate(FamilySpec("alpha_lambda", point=spec.point))
    b = base.b.normalized(0)
    return make_mf(b, base.f)
