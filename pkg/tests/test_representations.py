import pytest
import sympy as sp
from hypothesis import given

from conftest import CATALOG, algebras
from oracles import smat
from hompre import (
    Matrix,
    Representation,
    adjoint_rep,
    anticommuting_mu_conditions,
    check_hom_lie_rep,
    check_hom_pre_lie,
    check_rep,
    dual_rep,
    regular_rep,
    semidirect_product,
    subadjacent,
    tensor_rep,
    trivial_rep,
)
from hompre.algebra import VerificationError
from hompre.linalg import DimensionError, SingularMatrixError
from hompre.representations import hom_lie_dual, star_data, subadjacent_rep, twisted_dual


def standard_reps(A):
    reg = regular_rep(A)
    reps = {"regular": reg, "trivial": trivial_rep(A), "dual_regular": dual_rep(A, reg)}
    if A.dim <= 2:
        reps["tensor"] = tensor_rep(A, reg, reg)
    return reps


def test_regular_rep_of_fixture(E):
    R = regular_rep(E)
    # rho = L, mu = R: L_{e2} e2 = e1 + e2 and R_{e2} e1 = e1 . e2 = 0
    assert R.rho[1].column(1) == (1, 1)
    assert R.mu[1].column(0) == (0, 0)
    assert R.mu[0].column(1) == (1, 0)
    assert R.beta == E.alpha


def test_dual_regular_matches_formula(E):
    # carrier twist (alpha^-1)^T and actions L* - R*, -R* built from the twisted dual
    D = dual_rep(E, regular_rep(E))
    assert D.beta == Matrix([[1, 0], [-1, 1]])
    Ls = twisted_dual([E.left_mult(i) for i in range(2)], E.alpha, E.alpha)
    Rs = twisted_dual([E.right_mult(i) for i in range(2)], E.alpha, E.alpha)
    assert list(D.rho) == [a - b for a, b in zip(Ls, Rs)]
    assert list(D.mu) == [-b for b in Rs]


def test_standard_reps_on_catalog(algebra):
    for name, R in standard_reps(algebra).items():
        assert check_rep(algebra, R).ok, (algebra.name, name)


def test_dual_is_involutive(algebra):
    for name, R in standard_reps(algebra).items():
        assert dual_rep(algebra, dual_rep(algebra, R)) == R, name
        assert star_data(algebra, star_data(algebra, R)) == R, name


def test_subadjacent_rep_is_hom_lie_rep(algebra):
    g = subadjacent(algebra)
    for R in standard_reps(algebra).values():
        assert check_hom_lie_rep(g, subadjacent_rep(R)).ok


def test_anticommuting_conditions_agree(algebra):
    for R in standard_reps(algebra).values():
        flags = anticommuting_mu_conditions(algebra, R)
        assert len(set(flags)) == 1


def test_anticommuting_conditions_both_values(E):
    assert anticommuting_mu_conditions(E, regular_rep(E)) == (False, False, False)
    assert anticommuting_mu_conditions(E, trivial_rep(E)) == (True, True, True)
    A = CATALOG["novikov_2_3"]
    R = regular_rep(A)
    assert any(not m.is_zero() for m in R.mu)
    assert anticommuting_mu_conditions(A, R) == (True, True, True)


def test_twisted_dual_pairing(E):
    # <rho*(x) xi, u> = -<(beta^-2)^T xi, rho(alpha x) u>, checked entrywise with sympy
    R = regular_rep(E)
    beta = smat(R.beta)
    alpha = smat(E.alpha)
    for acts in (R.rho, R.mu):
        duals = twisted_dual(acts, E.alpha, R.beta)
        for i in range(2):
            ax = alpha[:, i]
            act = sum((ax[k] * smat(acts[k]) for k in range(2)), sp.zeros(2, 2))
            inner = beta.inv() ** 2 * act  # u -> beta^-2 rho(alpha x) u
            for a in range(2):
                for b in range(2):
                    # <dual(e*_a), e_b> = -<e*_a, inner e_b>
                    assert smat(duals[i])[b, a] == -inner[a, b]


def test_tensor_rep_layout(E):
    R = regular_rep(E)
    T = tensor_rep(E, R, R)
    assert T.beta == E.alpha.kron(E.alpha)
    assert T.mu[1] == R.mu[1].kron(E.alpha)
    assert T.carrier_dim == 4


def test_semidirect_product_is_hom_pre_lie(algebra):
    for R in standard_reps(algebra).values():
        S = semidirect_product(algebra, R)
        assert check_hom_pre_lie(S).ok
        assert S.dim == algebra.dim + R.carrier_dim


def test_semidirect_detects_bad_rep(E):
    R = regular_rep(E)
    bad = Representation(R.beta, R.rho, [m * 2 for m in R.mu])
    assert not check_rep(E, bad).ok
    assert not check_hom_pre_lie(semidirect_product(E, bad, verify=False)).ok
    with pytest.raises(VerificationError):
        semidirect_product(E, bad)
    with pytest.raises(VerificationError):
        dual_rep(E, bad)


def test_trivial_rep_shape(E):
    R = trivial_rep(E)
    assert R.carrier_dim == 1 and R.beta == Matrix.identity(1)
    assert all(m.is_zero() for m in R.rho + R.mu)


def test_representation_validation():
    with pytest.raises(SingularMatrixError):
        Representation(Matrix([[0]]), [Matrix([[0]])], [Matrix([[0]])])
    with pytest.raises(DimensionError):
        Representation(Matrix.identity(2), [Matrix.identity(1)], [Matrix.identity(2)])
    with pytest.raises(DimensionError):
        Representation(Matrix.identity(1), [Matrix.identity(1)], [])


def test_hom_lie_dual_and_adjoint(algebra):
    g = subadjacent(algebra)
    ad = adjoint_rep(g)
    assert check_hom_lie_rep(g, ad).ok
    D = hom_lie_dual(g, ad)
    assert check_hom_lie_rep(g, D).ok
    assert hom_lie_dual(g, D) == ad


@given(algebras(max_dim=2))
def test_rep_properties_random(A):
    reg = regular_rep(A)
    for R in (reg, trivial_rep(A), tensor_rep(A, reg, trivial_rep(A))):
        assert check_rep(A, R).ok
        D = dual_rep(A, R)
        assert check_rep(A, D).ok
        assert dual_rep(A, D) == R
        assert len(set(anticommuting_mu_conditions(A, R))) == 1
    assert check_hom_lie_rep(subadjacent(A), subadjacent_rep(reg)).ok
