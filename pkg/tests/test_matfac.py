import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from gradedmf import groebner
from gradedmf.matfac import (CurvePoint, GradedMatrix, equivalence_invariants,
                             fitting_ideal, infer_twists, locally_free_test,
                             make_mf, mf_verify, partner)
from gradedmf.rings import ambient_ring, extension_ring, nodal_ring, parametric_ring

from conftest import constant_matrix, random_homogeneous, random_invertible, transform


def test_mf_verify_fixtures(mfs, f):
    for name in ("phi_xi", "psi_xi", "phi_s", "phi_l0", "alpha_xi", "alpha_s"):
        report = mf_verify(mfs[name].a, mfs[name].b, f)
        assert report.ok, (name, report.failures)
        assert report.rank == 1


def test_mf_verify_two_sided(mfs, f):
    # (B, A) is again a factorization once A absorbs the degree-3 twist
    for mf in mfs.values():
        report = mf_verify(mf.b, mf.a.shift(-f.homogeneous_degree()), f)
        assert report.ok, report.failures


def test_mf_verify_free(R, f):
    a = GradedMatrix.identity(R, 2)
    b = a.map_entries(lambda e: e * f, check=False).shift(-3)
    b = GradedMatrix(R, b.entries, a.col_twists, tuple(t + 3 for t in a.row_twists),
                     check=False)
    report = mf_verify(a, b, f)
    assert report.ok and report.rank == 0


def test_mf_verify_rejects_junk(R, f):
    a = GradedMatrix.from_strings(R, [["y1", "0"], ["0", "y2"]], (0, 0), (1, 1))
    rep = mf_verify(a, a.shift(-3), f)
    assert not rep.ok


def test_adjoint_example(R):
    phi_s = GradedMatrix.from_strings(R, [["y1", "y2*y3"], ["y2", "y1^2+y1*y3"]],
                                      (1, 1), (2, 3))
    adj = phi_s.adjugate()
    assert [[str(e) for e in row] for row in adj.entries] == [
        ["y1^2+y1*y3", "-y2*y3"], ["-y2", "y1"]]
    i3 = GradedMatrix.identity(R, 3)
    assert i3.adjugate().entries == i3.entries


def test_adjoint_identity_random(R, rng):
    for _ in range(30):
        n = rng.choice((2, 3))
        rows = [[random_homogeneous(R, rng, 1) for _ in range(n)] for _ in range(n)]
        m = GradedMatrix(R, rows, (0,) * n, (1,) * n, check=False)
        prod = m * m.adjugate()
        det = m.det()
        for i in range(n):
            for j in range(n):
                want = det if i == j else R.zero()
                assert prod.entries[i][j] == want


def test_dual_involution(mfs):
    for name in ("phi_xi", "alpha_xi"):
        mf = mfs[name]
        dd = mf.dual().dual()
        assert dd.a.entries == mf.a.entries
        assert dd.a.row_twists == mf.a.row_twists
        assert dd.a.col_twists == mf.a.col_twists


def test_dual_presents_partner_module(mfs, fixtures, f):
    dual = mfs["phi_xi"].dual()
    verdict, _ = equivalence_invariants(dual.a.normalized(),
                                        fixtures["psi_xi"].normalized(), f)
    assert verdict == "undetermined"


def test_shift(mfs):
    mf = mfs["alpha_xi"]
    assert mf.shift(0).a.col_twists == mf.a.col_twists
    assert mf.shift(2).shift(-2).a.col_twists == mf.a.col_twists
    k = 3
    assert mf.shift(k).a.col_twists == tuple(2 - k for _ in range(3))


def test_fitting_goldens(R, fixtures, f):
    cases = [
        ("phi_xi", ["y1+y3", "y2", "y3^2"]),
        ("phi_l0", ["y1", "y3", "y2^2"]),
        ("phi_s", ["y1", "y2"]),
    ]
    for name, golden in cases:
        fit = fitting_ideal(fixtures[name], 1)
        assert groebner.ideal_equal(list(fit.gens),
                                    [R.parse(g) for g in golden], R), name


def test_fitting_range_and_zero(R):
    z = GradedMatrix.zero_matrix(R, 2, 2, (0, 0), (0, 0))
    assert fitting_ideal(z, 0).is_zero()
    assert not fitting_ideal(z, 2).is_zero()  # unit ideal
    with pytest.raises(ValueError):
        fitting_ideal(z, 3)


def test_fitting_invariant_under_transform(fixtures, rng):
    R = fixtures["phi_xi"].ring
    m = fixtures["phi_xi"]
    for _ in range(20):
        u = random_invertible(rng, 2)
        v = random_invertible(rng, 2)
        m2 = transform(m, u, v)
        for k in (0, 1):
            assert groebner.ideal_equal(list(fitting_ideal(m, k).gens),
                                        list(fitting_ideal(m2, k).gens), R)


def test_rank_additivity(mfs):
    s = mfs["phi_xi"].direct_sum(mfs["alpha_xi"])
    assert s.rank == 2
    report = mf_verify(s.a, s.b, mfs["phi_xi"].f)
    assert report.ok and report.rank == 2


def test_locally_free_classification(fixtures):
    assert locally_free_test(fixtures["phi_s"], 1).verdict == "notLocallyFree"
    assert locally_free_test(fixtures["psi_s"], 1).verdict == "notLocallyFree"
    assert locally_free_test(fixtures["phi_xi"], 1).verdict == "locallyFree"
    assert locally_free_test(fixtures["alpha_xi"], 1).verdict == "locallyFree"
    assert locally_free_test(fixtures["alpha_s"], 1).verdict == "notLocallyFree"


def test_locally_free_parametric_condition():
    PR = parametric_ring()
    alpha = GradedMatrix.from_strings(PR, [
        ["0", "y1-a*y3", "y2-b*y3"],
        ["y1", "y2+b*y3", "(a^2+a)*y3"],
        ["y3", "0", "-y1-(a+1)*y3"]], (1, 1, 1), (2, 2, 2))
    lf = locally_free_test(alpha, 1)
    assert lf.verdict == "conditional"
    assert groebner.ideal_equal(list(lf.condition.gens),
                                [PR.parse("a"), PR.parse("b")], PR)


def test_locally_free_delta_symbolic_condition():
    # symbolic six-generated block with two remaining unknown coefficients
    ring = extension_ring(9)
    rows = [
        ["0", "y1", "y2", "0", "d9*y3", "-d5*y3"],
        ["y1", "y2", "0", "0", "d5*y3", "-d9*y3"],
        ["y3", "0", "-y1-y3", "0", "0", "d9*y3"],
        ["0", "0", "0", "0", "y1", "y2"],
        ["0", "0", "0", "y1", "y2", "0"],
        ["0", "0", "0", "y3", "0", "-y1-y3"]]
    s = GradedMatrix.from_strings(ring, rows, (1, 1, 1, 1, 1, 1),
                                  (2, 2, 2, 2, 2, 2))
    lf = locally_free_test(s, 2)
    assert lf.verdict == "conditional"
    golden = [ring.parse("d5^2-d9^2")]
    assert groebner.ideal_equal(list(lf.condition.gens), golden, ring)


def test_equivalence_invariants(fixtures, f, rng):
    phi, psi = fixtures["phi_xi"], fixtures["psi_xi"]
    verdict, reason = equivalence_invariants(phi, psi, f)
    assert verdict == "distinct" and reason == "twists"
    phi_other = GradedMatrix.from_strings(
        phi.ring, [["y1-3*y3", "y2*y3+6*y3^2"],
                   ["y2-6*y3", "y1^2+4*y1*y3+12*y3^2"]], (1, 1), (2, 3))
    verdict, reason = equivalence_invariants(phi, phi_other, f)
    assert verdict == "distinct" and reason.startswith("fitting")
    u, v = random_invertible(rng, 2), random_invertible(rng, 2)
    verdict, _ = equivalence_invariants(phi, transform(phi, u, v), f)
    assert verdict == "undetermined"


def test_curve_points():
    p = CurvePoint.affine(-1, 0)
    assert p.is_regular and p.kind == "affine"
    assert CurvePoint.affine(0, 0).kind == "singular"
    q = CurvePoint.affine(Fraction(-3, 4), Fraction(-3, 8))
    assert q.is_regular
    with pytest.raises(ValueError):
        CurvePoint.affine(1, 1)
    assert not CurvePoint.singular().is_regular
    assert CurvePoint.infinity().is_regular


def test_infer_twists(R):
    rows = [[R.parse("y1+y3"), R.parse("y2*y3")], [R.parse("y2"), R.parse("y1^2")]]
    rt, ct = infer_twists(R, rows)
    assert ct[1] - ct[0] == 1 and rt[0] == rt[1]
    bad = [[R.parse("y1"), R.parse("y2^2")], [R.parse("y3"), R.parse("y1")]]
    with pytest.raises(ValueError):
        infer_twists(R, bad)


def test_partner_of_rank_two(R, f):
    from gradedmf.homalg import build_M2
    mf = build_M2()
    b = partner(mf.a, f)
    assert mf_verify(mf.a, b, f).ok
