"""Representations of Hom-Lie and Hom-pre-Lie algebras and their constructions.

A representation of a Hom-pre-Lie algebra ``A`` is ``(V, beta, rho, mu)``:
``rho[i]`` and ``mu[i]`` are the matrices of ``rho(e_i)`` and ``mu(e_i)`` on
``V``. Dual spaces are carried as column vectors in the dual basis, so the
plain contragredient of a map is its negated transpose.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import product as iproduct
from typing import Sequence

from .algebra import (
    BilinearMap,
    HomLieAlgebra,
    HomPreLieAlgebra,
    VerificationError,
    ViolationReport,
    check_hom_pre_lie,
    commutator,
)
from .linalg import DimensionError, Matrix, SingularMatrixError, ZERO, mat_inverse


def _combine(mats: Sequence[Matrix], coeffs: Sequence, size: int) -> Matrix:
    out = Matrix.zeros(size, size)
    for c, m in zip(coeffs, mats):
        if c:
            out = out + m * c
    return out


def _check_twist(beta: Matrix, size: int) -> Matrix:
    if not isinstance(beta, Matrix):
        beta = Matrix(beta)
    if beta.shape != (size, size):
        raise DimensionError(f"beta must be {size}x{size}, got {beta.rows}x{beta.cols}")
    if beta.det() == 0:
        raise SingularMatrixError("beta is singular; only regular representations are supported")
    return beta


def _check_actions(mats: Sequence, size: int, what: str) -> tuple[Matrix, ...]:
    out = []
    for i, m in enumerate(mats):
        if not isinstance(m, Matrix):
            m = Matrix(m)
        if m.shape != (size, size):
            raise DimensionError(f"{what}[{i}] must be {size}x{size}, got {m.rows}x{m.cols}")
        out.append(m)
    return tuple(out)


@dataclass(frozen=True)
class HomLieRepresentation:
    beta: Matrix
    rho: tuple

    def __post_init__(self):
        beta = self.beta if isinstance(self.beta, Matrix) else Matrix(self.beta)
        object.__setattr__(self, "beta", _check_twist(beta, beta.rows))
        object.__setattr__(self, "rho", _check_actions(self.rho, beta.rows, "rho"))

    @property
    def carrier_dim(self) -> int:
        return self.beta.rows

    @cached_property
    def beta_inv(self) -> Matrix:
        return mat_inverse(self.beta)

    def rho_of(self, x: Sequence) -> Matrix:
        return _combine(self.rho, x, self.carrier_dim)


@dataclass(frozen=True)
class Representation:
    """Representation ``(V, beta, rho, mu)`` of a Hom-pre-Lie algebra."""

    beta: Matrix
    rho: tuple
    mu: tuple

    def __post_init__(self):
        beta = self.beta if isinstance(self.beta, Matrix) else Matrix(self.beta)
        object.__setattr__(self, "beta", _check_twist(beta, beta.rows))
        object.__setattr__(self, "rho", _check_actions(self.rho, beta.rows, "rho"))
        object.__setattr__(self, "mu", _check_actions(self.mu, beta.rows, "mu"))
        if len(self.rho) != len(self.mu):
            raise DimensionError("rho and mu must have one matrix per algebra basis element")

    @property
    def carrier_dim(self) -> int:
        return self.beta.rows

    @property
    def algebra_dim(self) -> int:
        return len(self.rho)

    @cached_property
    def beta_inv(self) -> Matrix:
        return mat_inverse(self.beta)

    def rho_of(self, x: Sequence) -> Matrix:
        return _combine(self.rho, x, self.carrier_dim)

    def mu_of(self, x: Sequence) -> Matrix:
        return _combine(self.mu, x, self.carrier_dim)

    def as_hom_lie(self) -> HomLieRepresentation:
        """Forget ``mu``."""
        return HomLieRepresentation(self.beta, self.rho)


def _require_dims(algebra_dim: int, rho: Sequence) -> None:
    if len(rho) != algebra_dim:
        raise DimensionError(
            f"representation has {len(rho)} action matrices, algebra has dimension {algebra_dim}")


def check_hom_lie_rep(g: HomLieAlgebra, R: HomLieRepresentation) -> ViolationReport:
    _require_dims(g.dim, R.rho)
    report = ViolationReport()
    report.declare("rho_twist_equivariance")
    report.declare("rho_bracket")
    n = g.dim
    e = [g.basis(i) for i in range(n)]
    rho_a = [R.rho_of(g.twist(v)) for v in e]
    beta = R.beta
    for i in range(n):
        report.check("rho_twist_equivariance", (i,), (rho_a[i] @ beta - beta @ R.rho[i]).flat())
    for i, j in iproduct(range(n), repeat=2):
        lhs = R.rho_of(g.br(e[i], e[j])) @ beta
        rhs = rho_a[i] @ R.rho[j] - rho_a[j] @ R.rho[i]
        report.check("rho_bracket", (i, j), (lhs - rhs).flat())
    return report


def check_rep(A: HomPreLieAlgebra, R: Representation) -> ViolationReport:
    _require_dims(A.dim, R.rho)
    g = HomLieAlgebra(commutator(A.product), A.alpha)
    report = check_hom_lie_rep(g, R.as_hom_lie())
    report.declare("mu_twist_equivariance")
    report.declare("mu_compatibility")
    n = A.dim
    e = [A.basis(i) for i in range(n)]
    rho_a = [R.rho_of(A.twist(v)) for v in e]
    mu_a = [R.mu_of(A.twist(v)) for v in e]
    beta = R.beta
    for i in range(n):
        report.check("mu_twist_equivariance", (i,), (beta @ R.mu[i] - mu_a[i] @ beta).flat())
    for i, j in iproduct(range(n), repeat=2):
        # x = e_i, y = e_j
        lhs = mu_a[j] @ R.mu[i] - R.mu_of(A.multiply(e[i], e[j])) @ beta
        rhs = mu_a[j] @ R.rho[i] - rho_a[i] @ R.mu[j]
        report.check("mu_compatibility", (i, j), (lhs - rhs).flat())
    return report


def _verified(A: HomPreLieAlgebra, R: Representation, verify: bool, what: str) -> Representation:
    if verify:
        report = check_rep(A, R)
        if not report.ok:
            raise VerificationError(f"{what} failed the representation axioms", report)
    return R


def _require_rep(A: HomPreLieAlgebra, R: Representation, verify: bool) -> None:
    if verify:
        report = check_rep(A, R)
        if not report.ok:
            raise VerificationError("input is not a representation", report)


def regular_rep(A: HomPreLieAlgebra, verify: bool = True) -> Representation:
    """``(A, alpha, L, R)`` with left and right multiplications."""
    R = Representation(A.alpha, [A.left_mult(i) for i in range(A.dim)],
                       [A.right_mult(i) for i in range(A.dim)])
    return _verified(A, R, verify, "regular representation")


def trivial_rep(A: HomPreLieAlgebra) -> Representation:
    zero = Matrix.zeros(1, 1)
    return Representation(Matrix.identity(1), [zero] * A.dim, [zero] * A.dim)


def semidirect_product(A: HomPreLieAlgebra, R: Representation, verify: bool = True) -> HomPreLieAlgebra:
    """Hom-pre-Lie structure on ``A (+) V``; basis ``e_1..e_n`` then ``v_1..v_m``.

    ``(x + u)(y + v) = x.y + rho(x)v + mu(y)u`` with twist ``alpha + beta``.
    """
    _require_dims(A.dim, R.rho)
    _require_rep(A, R, verify)
    n, m = A.dim, R.carrier_dim
    size = n + m
    zero = (ZERO,) * size
    table = [[zero] * size for _ in range(size)]
    for i in range(n):
        for j in range(n):
            table[i][j] = A.product.at(i, j) + (ZERO,) * m
        for b in range(m):
            table[i][n + b] = (ZERO,) * n + R.rho[i].column(b)
    for a in range(m):
        for j in range(n):
            table[n + a][j] = (ZERO,) * n + R.mu[j].column(a)
    S = HomPreLieAlgebra(BilinearMap(table, size), Matrix.block_diag(A.alpha, R.beta))
    if verify:
        report = check_hom_pre_lie(S)
        if not report.ok:
            raise VerificationError("semidirect product failed the Hom-pre-Lie identities", report)
    return S


def subadjacent_rep(R: Representation) -> HomLieRepresentation:
    """``(V, beta, rho - mu)`` as a representation of the sub-adjacent Hom-Lie algebra."""
    return HomLieRepresentation(R.beta, [r - m for r, m in zip(R.rho, R.mu)])


def adjoint_rep(g: HomLieAlgebra) -> HomLieRepresentation:
    return HomLieRepresentation(g.alpha, [g.ad(i) for i in range(g.dim)])


# -- duals ---------------------------------------------------------------------

def naive_dual(m: Matrix) -> Matrix:
    """Contragredient of a single map: ``<m*(xi), u> = -<xi, m(u)>``."""
    return -m.T


def twisted_dual(actions: Sequence[Matrix], alpha: Matrix, beta: Matrix) -> list[Matrix]:
    """``x -> naive_dual(action(alpha x)) o (beta^-2)^T`` for each basis element."""
    binv2t = (mat_inverse(beta) ** 2).T
    size = beta.rows
    out = []
    for i in range(alpha.cols):
        act = _combine(actions, alpha.column(i), size)
        out.append(naive_dual(act) @ binv2t)
    return out


def hom_lie_dual(g: HomLieAlgebra, R: HomLieRepresentation) -> HomLieRepresentation:
    _require_dims(g.dim, R.rho)
    return HomLieRepresentation(R.beta_inv.T, twisted_dual(R.rho, g.alpha, R.beta))


def star_data(A: HomPreLieAlgebra, R: Representation) -> Representation:
    """Componentwise twisted dual ``(V*, (beta^-1)^T, rho*, mu*)``.

    This is a representation only under the anticommutation condition checked
    by :func:`anticommuting_mu_conditions`; the constructor does not verify it.
    """
    _require_dims(A.dim, R.rho)
    return Representation(R.beta_inv.T, twisted_dual(R.rho, A.alpha, R.beta),
                          twisted_dual(R.mu, A.alpha, R.beta))


def dual_rep(A: HomPreLieAlgebra, R: Representation, verify: bool = True) -> Representation:
    """The dual representation ``(V*, (beta^-1)^T, rho* - mu*, -mu*)``."""
    _require_rep(A, R, verify)
    star = star_data(A, R)
    D = Representation(star.beta, [r - m for r, m in zip(star.rho, star.mu)],
                       [-m for m in star.mu])
    return _verified(A, D, verify, "dual representation")


def anticommuting_mu_conditions(A: HomPreLieAlgebra, R: Representation) -> tuple[bool, bool, bool]:
    """Three conditions on a representation that are equivalent to one another.

    1. ``(V, beta, rho - mu, -mu)`` is a representation;
    2. ``(V*, (beta^-1)^T, rho*, mu*)`` is a representation;
    3. ``mu(alpha x) mu(y) = -mu(alpha y) mu(x)`` for all ``x, y``.
    """
    shifted = Representation(R.beta, [r - m for r, m in zip(R.rho, R.mu)], [-m for m in R.mu])
    flag1 = check_rep(A, shifted).ok
    flag2 = check_rep(A, star_data(A, R)).ok
    n = A.dim
    mu_a = [R.mu_of(A.twist(A.basis(i))) for i in range(n)]
    flag3 = all((mu_a[i] @ R.mu[j] + mu_a[j] @ R.mu[i]).is_zero()
                for i in range(n) for j in range(n))
    return flag1, flag2, flag3


def tensor_rep(A: HomPreLieAlgebra, RV: Representation, RW: Representation,
               verify: bool = True) -> Representation:
    """Tensor product on ``V (x) W`` (basis ``v_i (x) w_j`` at ``i * dim W + j``)."""
    _require_rep(A, RV, verify)
    _require_rep(A, RW, verify)
    bv, bw = RV.beta, RW.beta
    rho = [RV.rho[i].kron(bw) + bv.kron(RW.rho[i] - RW.mu[i]) for i in range(A.dim)]
    mu = [RV.mu[i].kron(bw) for i in range(A.dim)]
    return _verified(A, Representation(bv.kron(bw), rho, mu), verify, "tensor representation")
