import random
from fractions import Fraction

import pytest

from gradedmf import groebner, linalg
from gradedmf.extsolver import (ExtProblem, build_extension, condext,
                                degree_template, graded_monomials,
                                solve_extensions, stability_dimension,
                                symbolic_matrix, twist_scan)
from gradedmf.matfac import GradedMatrix, fitting_ideal, make_mf, mf_verify
from gradedmf.rings import extension_ring, nodal_ring

from conftest import constant_matrix, random_invertible


def test_degree_template(mfs):
    t = degree_template(mfs["alpha_s"].a, mfs["alpha_s"].a, 2)
    assert t == [[3, 3, 3]] * 3
    t = degree_template(mfs["alpha_s"].a, mfs["phi_xi"].a, 0)
    assert t == [[1, 2]] * 3
    t = degree_template(mfs["alpha_s"].a, mfs["alpha_s"].a, -2)
    assert all(d < 0 for row in t for d in row)


def test_all_negative_template_gives_zero(mfs):
    space = solve_extensions(ExtProblem(mfs["alpha_s"], mfs["alpha_s"], -2))
    assert space.quotient_dimension == 0
    assert not space.solution_coords


def test_ext_dimension_golden(mfs):
    space = solve_extensions(ExtProblem(mfs["alpha_xi"], mfs["psi_xi"], 0))
    assert space.quotient_dimension == 1


def test_solutions_satisfy_condition(mfs, R):
    problem = ExtProblem(mfs["alpha_xi"], mfs["psi_xi"], 0)
    space = solve_extensions(problem)
    a_, b_ = problem.left.b, problem.shifted_right.b
    for d in space.solution_basis():
        prod = a_ * d * b_
        assert all(R.nf(e).is_zero() for row in prod.entries for e in row)


def test_trivials_inside_solutions(mfs, rng):
    problem = ExtProblem(mfs["alpha_xi"], mfs["psi_xi"], 0)
    space = solve_extensions(problem)
    n = len(space.slots)
    sol_rank = linalg.rank_of_span(space.solution_coords, n)
    for t in space.trivial_coords:
        assert linalg.in_span(space.solution_coords, t, n)
    assert sol_rank >= linalg.rank_of_span(space.trivial_coords, n)


def test_random_trivials_satisfy_condition(mfs, R, rng):
    # A*U + V*B always lies in the solution space, for random constant U, V
    problem = ExtProblem(mfs["alpha_xi"], mfs["psi_xi"], 0)
    a, b = problem.left.a, problem.shifted_right.a
    a_, b_ = problem.left.b, problem.shifted_right.b
    for _ in range(100):
        u = GradedMatrix(R, [[R.const(rng.randint(-3, 3)) for _ in range(2)]
                             for _ in range(3)], a.col_twists, b.col_twists,
                         check=False)
        v_rows = [[R.zero(), R.const(rng.randint(-3, 3))] for _ in range(3)]
        v = GradedMatrix(R, v_rows, a.row_twists, b.row_twists, check=False)
        d = a * u + v * b
        prod = a_ * d * b_
        assert all(R.nf(e).is_zero() for row in prod.entries for e in row)


def test_build_extension_T_matrix(mfs, R, f):
    problem = ExtProblem(mfs["alpha_xi"], mfs["psi_xi"], 0)
    d = GradedMatrix.from_strings(R, [["y3", "0"], ["0", "y3"], ["0", "0"]],
                                  (1, 1, 1), (2, 2))
    T = build_extension(problem, d)
    assert T.rank == 2 and T.size == 5
    golden = [
        ["0", "y1+y3", "y2", "y3", "0"],
        ["y1", "y2", "0", "0", "y3"],
        ["y3", "0", "-y1", "0", "0"],
        ["0", "0", "0", "y1^2", "-y2*y3"],
        ["0", "0", "0", "-y2", "y1+y3"]]
    assert T.a.entries == GradedMatrix.from_strings(R, golden,
                                                    T.a.row_twists,
                                                    T.a.col_twists).entries


def test_build_extension_delta1(mfs, R, f):
    from gradedmf.catalog import FamilySpec, instantiate
    problem = ExtProblem(mfs["alpha_s"], mfs["alpha_s"], 0)
    d = GradedMatrix.from_strings(
        R, [["0", "y3", "-y3"], ["0", "y3", "-y3"], ["0", "0", "y3"]],
        (1, 1, 1), (2, 2, 2))
    built = build_extension(problem, d)
    catalog_delta = instantiate(FamilySpec("delta_m", m=1))
    assert built.a.entries == catalog_delta.a.entries
    assert built.a.row_twists == catalog_delta.a.row_twists


def test_build_extension_zero_is_direct_sum(mfs, R):
    problem = ExtProblem(mfs["alpha_s"], mfs["alpha_s"], 0)
    d = GradedMatrix.zero_matrix(R, 3, 3, (1, 1, 1), (2, 2, 2))
    built = build_extension(problem, d)
    assert built.a.entries == mfs["alpha_s"].direct_sum(mfs["alpha_s"]).a.entries


def test_build_extension_rejects_bad_d(mfs, R):
    problem = ExtProblem(mfs["alpha_s"], mfs["alpha_s"], 0)
    d = GradedMatrix.from_strings(
        R, [["y3", "0", "0"], ["0", "0", "0"], ["0", "0", "0"]],
        (1, 1, 1), (2, 2, 2))
    with pytest.raises(ValueError):
        build_extension(problem, d)


def test_snake_contract_fitting_containment(mfs, R, f):
    # the extension module surjects onto the right factor
    problem = ExtProblem(mfs["alpha_xi"], mfs["psi_xi"], 0)
    d = GradedMatrix.from_strings(R, [["y3", "0"], ["0", "y3"], ["0", "0"]],
                                  (1, 1, 1), (2, 2))
    T = build_extension(problem, d)
    for i in range(3, 5):
        for j in range(3):
            assert T.a.entries[i][j].is_zero()
    for k in (1, 2):
        big = fitting_ideal(T.a, k)
        small = groebner.Ideal(R, list(fitting_ideal(mfs["psi_xi"].a, k).gens))
        small_gb = groebner.groebner_basis(list(small.gens), R)
        for g in big.gens:
            assert groebner.normal_form(g, small_gb).is_zero()


def test_quotient_dim_invariant_under_presentation_change(mfs, rng):
    base = solve_extensions(ExtProblem(mfs["alpha_xi"], mfs["psi_xi"], 0))
    R = mfs["alpha_xi"].a.ring
    f = mfs["alpha_xi"].f
    for _ in range(10):
        u = random_invertible(rng, 3)
        v = random_invertible(rng, 3)
        a2 = constant_matrix(R, u) * mfs["alpha_xi"].a * constant_matrix(R, v)
        a2 = GradedMatrix(R, a2.entries, mfs["alpha_xi"].a.row_twists,
                          mfs["alpha_xi"].a.col_twists, check=False)
        left = make_mf(a2, f)
        space = solve_extensions(ExtProblem(left, mfs["psi_xi"], 0))
        assert space.quotient_dimension == base.quotient_dimension


def test_twist_scan_split_region(mfs):
    dims = twist_scan(mfs["alpha_s"], mfs["alpha_s"], range(-3, 1))
    assert dims[-3] == 0 and dims[-2] == 0
    assert dims[0] > 0


def test_condext_zero_d(R):
    ring = extension_ring(6)
    alpha = GradedMatrix.from_strings(ring, [
        ["0", "y1-a*y3", "y2-b*y3"],
        ["y1", "y2+b*y3", "(a^2+a)*y3"],
        ["y3", "0", "-y1-(a+1)*y3"]], (1, 1, 1), (2, 2, 2))
    z = GradedMatrix.zero_matrix(ring, 3, 3, (0, 0, 0), (0, 0, 0))
    assert condext(alpha, alpha, z).is_zero()


def test_condext_rejects_ring_mismatch(R, mfs):
    ring = extension_ring(6)
    d = symbolic_matrix(ring, 3, 2)
    with pytest.raises(ValueError):
        condext(mfs["alpha_xi"].a, mfs["psi_xi"].a, d)


def test_stability_values(mfs):
    assert stability_dimension(mfs["phi_xi"]) == 1
    assert stability_dimension(mfs["psi_xi"]) == 1
    assert stability_dimension(mfs["alpha_xi"]) == 1
    assert stability_dimension(mfs["phi_xi"].direct_sum(mfs["phi_xi"])) >= 2


def test_stability_rejects_non_locally_free_and_free(mfs, R, f):
    with pytest.raises(ValueError):
        stability_dimension(mfs["phi_s"])
    free_a = GradedMatrix.identity(R, 1)
    free_b = GradedMatrix(R, [[f]], (0,), (3,), check=False)
    from gradedmf.matfac import MatrixFactorization
    free = MatrixFactorization(free_a, free_b, f, 0)
    with pytest.raises(ValueError):
        stability_dimension(free)


def test_graded_monomials(R):
    assert graded_monomials(R, 0) == [(0,) * R.nvars]
    assert len(graded_monomials(R, 2)) == 6
    assert graded_monomials(R, -1) == []
