from fractions import Fraction
from itertools import product as iproduct

import pytest
from hypothesis import given
from hypothesis import strategies as st

import oracles
from conftest import CATALOG, SMALL, algebras, matrices, small_ints
from oracles import SymAlgebra, SymRep
from hompre import (
    Matrix,
    SingularMatrixError,
    VerificationError,
    b_sharp,
    check_hessian,
    check_nijenhuis,
    check_o_operator,
    dual_rep,
    hessian_to_o_operator,
    lift_to_semidirect_nijenhuis,
    o_operator_to_hessian,
    regular_rep,
    solve_hessian,
    trivial_rep,
)
from hompre.linalg import DimensionError
from hompre.operators import form_value


def grid(rows, cols):
    for entries in iproduct((-1, 0, 1), repeat=rows * cols):
        yield Matrix([list(entries[r * cols:(r + 1) * cols]) for r in range(rows)])


def symmetric_grid(n):
    pairs = [(i, j) for i in range(n) for j in range(i, n)]
    for entries in iproduct((-1, 0, 1), repeat=len(pairs)):
        M = [[0] * n for _ in range(n)]
        for c, (i, j) in zip(entries, pairs):
            M[i][j] = M[j][i] = c
        yield Matrix(M)


def dual_regular(A):
    return dual_rep(A, regular_rep(A))


# -- O-operators ----------------------------------------------------------------------

def test_fixture_o_operators(E):
    R = regular_rep(E)
    assert check_o_operator(E, R, Matrix.zeros(2, 2)).ok
    assert check_o_operator(E, R, Matrix([[0, 1], [0, 0]])).ok
    # with T = I the right side is 2 (u . v)
    report = check_o_operator(E, R, Matrix.identity(2))
    assert report.passed("intertwines_twist") and not report.passed("o_operator_identity")
    v = next(v for v in report.violations if v.basis == (1, 1))
    assert v.residual == tuple(-c for c in E.multiply((0, 1), (0, 1)))


def test_o_operator_shape_error(E):
    with pytest.raises(DimensionError):
        check_o_operator(E, trivial_rep(E), Matrix.identity(2))


def test_all_grid_operators_on_fixture(E):
    # all 81 operators with entries in {-1, 0, 1}: package, sympy and the lift agree
    R = regular_rep(E)
    alg, rep = SymAlgebra.of(E), SymRep.of(R)
    seen = set()
    for T in grid(2, 2):
        direct = check_o_operator(E, R, T).ok
        S, lift = lift_to_semidirect_nijenhuis(E, R, T)
        assert direct == oracles.is_o_operator(alg, rep, T)
        assert direct == check_nijenhuis(S, lift).ok
        seen.add(direct)
    assert seen == {True, False}


def test_lift_shape(E):
    R = regular_rep(E)
    T = Matrix([[0, 1], [0, 0]])
    S, lift = lift_to_semidirect_nijenhuis(E, R, T)
    assert S.dim == 4 and lift.shape == (4, 4)
    assert lift.tolist()[0][3] == 1 and sum(abs(x) for x in lift.flat()) == 1


@pytest.mark.parametrize("name", sorted(SMALL))
def test_lift_agreement_on_small_algebras(name):
    A = SMALL[name]
    for R in (regular_rep(A), dual_regular(A), trivial_rep(A)):
        alg, rep = SymAlgebra.of(A), SymRep.of(R)
        for T in grid(A.dim, R.carrier_dim):
            direct = check_o_operator(A, R, T).ok
            S, lift = lift_to_semidirect_nijenhuis(A, R, T, verify=False)
            assert direct == check_nijenhuis(S, lift).ok
            assert direct == oracles.is_o_operator(alg, rep, T)


@given(algebras(max_dim=3), st.data())
def test_lift_agreement_random(A, data):
    for R in (regular_rep(A), dual_regular(A)):
        T = data.draw(matrices(A.dim, R.carrier_dim, small_ints))
        S, lift = lift_to_semidirect_nijenhuis(A, R, T, verify=False)
        assert check_o_operator(A, R, T).ok == check_nijenhuis(S, lift).ok


@given(matrices(2, 2, small_ints))
def test_zero_product_only_needs_intertwining(T):
    A = CATALOG["twisted_zero_2d"]
    R = regular_rep(A)
    assert check_o_operator(A, R, T).ok == (T @ A.alpha == A.alpha @ T)


# -- Hessian structures -----------------------------------------------------------------

def test_identity_is_not_hessian_on_fixture(E):
    report = check_hessian(E, Matrix.identity(2))
    assert report.passed("symmetry") and report.passed("nondegeneracy")
    assert not report.passed("alpha_invariance")
    assert not report.passed("hessian_cocycle")
    v = next(v for v in report.violations if v.identity == "alpha_invariance")
    # alpha^T alpha - I = [[0, 1], [1, 1]]
    assert v.residual == (0, 1, 1, 1)


def test_degenerate_and_asymmetric_forms():
    A = CATALOG["zero_algebra_2d"]
    assert not check_hessian(A, Matrix.zeros(2, 2)).passed("nondegeneracy")
    assert not check_hessian(A, Matrix([[1, 1], [0, 1]])).passed("symmetry")
    assert check_hessian(A, Matrix.identity(2)).ok


def test_solve_hessian_on_fixture(E):
    sol = solve_hessian(E)
    assert sol.basis == [Matrix.diag([0, 1])]
    assert sol.nondegenerate_basis == [False]
    assert sol.has_nondegenerate is False
    assert sol.dimension == oracles.hessian_space_dim(SymAlgebra.of(E))


def test_solve_hessian_zero_algebras():
    sol = solve_hessian(CATALOG["zero_algebra_2d"])
    assert sol.dimension == 3 and sol.has_nondegenerate is True
    sol = solve_hessian(CATALOG["zero_algebra_1d"])
    assert sol.basis == [Matrix.identity(1)] and sol.has_nondegenerate is True


def test_solve_hessian_twisted_cyclic():
    A = CATALOG["cyclic_twisted_3d"]
    sol = solve_hessian(A)
    assert sol.basis == [Matrix.identity(3)] and sol.has_nondegenerate
    T = hessian_to_o_operator(A, Matrix.identity(3))
    assert T == Matrix.identity(3)
    assert check_o_operator(A, dual_regular(A), T).ok
    assert o_operator_to_hessian(A, T) == Matrix.identity(3)


def test_solution_space_dimension_against_sympy(algebra):
    sol = solve_hessian(algebra)
    assert sol.dimension == oracles.hessian_space_dim(SymAlgebra.of(algebra))
    for B, flag in zip(sol.basis, sol.nondegenerate_basis):
        report = check_hessian(algebra, B)
        for name in ("symmetry", "alpha_invariance", "hessian_cocycle"):
            assert report.passed(name)
        assert report.passed("nondegeneracy") == flag


def test_has_nondegenerate_from_grid():
    # no basis member is invertible, but their sum is
    from hompre.operators import _has_nondegenerate
    basis = [Matrix.diag([1, 0]), Matrix.diag([0, 1])]
    assert _has_nondegenerate(basis, [False, False], 2) is True
    assert _has_nondegenerate([Matrix([[1, 1], [1, 1]])], [False], 2) is False
    assert _has_nondegenerate([], [], 2) is False


def test_zero_algebra_correspondence():
    A = CATALOG["zero_algebra_2d"]
    T = hessian_to_o_operator(A, Matrix.identity(2))
    assert T == Matrix.identity(2)
    assert check_o_operator(A, dual_regular(A), T).ok
    assert o_operator_to_hessian(A, T) == Matrix.identity(2)
    T = hessian_to_o_operator(A, Matrix.diag([1, 2]))
    assert T == Matrix.diag([1, Fraction(1, 2)])
    assert o_operator_to_hessian(A, T) == Matrix.diag([1, 2])


def test_correspondence_errors(E):
    A = CATALOG["zero_algebra_2d"]
    with pytest.raises(SingularMatrixError):
        o_operator_to_hessian(A, Matrix.zeros(2, 2))
    with pytest.raises(SingularMatrixError):
        hessian_to_o_operator(A, Matrix.diag([1, 0]), verify=False)
    with pytest.raises(VerificationError):
        hessian_to_o_operator(E, Matrix.identity(2))
    # an invertible O-operator that is not symmetric gives a non-symmetric form
    with pytest.raises(VerificationError) as err:
        o_operator_to_hessian(A, Matrix([[1, 1], [0, 1]]))
    assert not err.value.report.passed("symmetry")


@pytest.mark.parametrize("name", sorted(SMALL))
def test_correspondence_on_symmetric_grid(name):
    # forward and converse: a symmetric invertible B is Hessian iff (B^sharp)^-1 is an O-operator
    A = SMALL[name]
    D = dual_regular(A)
    alg, rep = SymAlgebra.of(A), SymRep.of(D)
    for B in symmetric_grid(A.dim):
        if B.det() == 0:
            continue
        T = b_sharp(B).inverse()
        hess = check_hessian(A, B).ok
        assert hess == check_o_operator(A, D, T).ok
        assert hess == oracles.is_o_operator(alg, rep, T)
        if hess:
            assert hessian_to_o_operator(A, B) == T
            assert o_operator_to_hessian(A, T) == B


@pytest.mark.parametrize("name", sorted(CATALOG))
def test_solution_space_members(name):
    A = CATALOG[name]
    sol = solve_hessian(A)
    D = dual_regular(A)
    for coeffs in iproduct((-1, 1, 2), repeat=min(sol.dimension, 3)):
        B = Matrix.zeros(A.dim, A.dim)
        for c, b in zip(coeffs, sol.basis):
            B = B + b * c
        if B.det() == 0:
            continue
        assert check_hessian(A, B).ok
        T = hessian_to_o_operator(A, B)
        assert check_o_operator(A, D, T).ok
        assert o_operator_to_hessian(A, T) == B


@given(algebras(max_dim=3), st.data())
def test_direct_cocycle_matches_coboundary(A, data):
    # check_hessian raises if its two evaluations of the cocycle identity disagree
    sol = solve_hessian(A)
    S = data.draw(matrices(A.dim, A.dim, small_ints))
    B = S + S.T
    for c, b in zip([data.draw(small_ints) for _ in sol.basis], sol.basis):
        B = B + b * c
    check_hessian(A, B)
    invariant = sum((b * (i + 1) for i, b in enumerate(sol.basis)), Matrix.zeros(A.dim, A.dim))
    assert check_hessian(A, invariant).passed("hessian_cocycle")


@given(matrices(2, 2, small_ints))
def test_random_symmetric_forms_on_zero_algebra(S):
    A = CATALOG["zero_algebra_2d"]
    B = S + S.T
    assert check_hessian(A, B).ok == (B.det() != 0)


@given(matrices(3, 3))
def test_b_sharp_properties(B):
    sharp = b_sharp(B)
    assert (sharp == sharp.T) == (B == B.T)
    assert (sharp.det() != 0) == (B.det() != 0)
    # <B^sharp(x), y> = B(x, y) on basis pairs
    for i, j in iproduct(range(3), repeat=2):
        ei = tuple(1 if k == i else 0 for k in range(3))
        ej = tuple(1 if k == j else 0 for k in range(3))
        assert sharp.apply(ei)[j] == form_value(B, ei, ej)


def test_b_sharp_examples():
    assert b_sharp(Matrix.identity(2)) == Matrix.identity(2)
    assert b_sharp(Matrix.diag([2, 3])) == Matrix.diag([2, 3])
