"""O-operators and Hessian structures.

A symmetric bilinear form ``B`` is stored as the matrix ``B[i, j] = B(e_i, e_j)``.
With the dual space carried in the dual basis, ``B^sharp`` has the matrix
``B^T`` (equal to ``B`` when ``B`` is symmetric).
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product as iproduct

from .algebra import HomPreLieAlgebra, VerificationError, Violation, ViolationReport
from .cohomology import PreLieCochain, is_cocycle
from .deformation import check_nijenhuis
from .linalg import (
    DimensionError,
    Matrix,
    SingularMatrixError,
    dot,
    kernel_basis,
    mat_inverse,
    rank,
    vsub,
)
from .representations import Representation, dual_rep, regular_rep, semidirect_product, trivial_rep

# exhaustive genericity search is skipped beyond this many grid points
GRID_LIMIT = 50_000


def check_o_operator(A: HomPreLieAlgebra, R: Representation, T: Matrix) -> ViolationReport:
    """``T beta = alpha T`` and ``T(u) . T(v) = T(rho(Tu) v + mu(Tv) u)``."""
    if T.shape != (A.dim, R.carrier_dim):
        raise DimensionError(f"O-operator must be {A.dim}x{R.carrier_dim}, got {T.rows}x{T.cols}")
    report = ViolationReport()
    report.check("intertwines_twist", (), (T @ R.beta - A.alpha @ T).flat())
    report.declare("o_operator_identity")
    m = R.carrier_dim
    images = T.columns()
    for a, b in iproduct(range(m), repeat=2):
        lhs = A.multiply(images[a], images[b])
        inner = tuple(x + y for x, y in zip(R.rho_of(images[a]).column(b), R.mu_of(images[b]).column(a)))
        report.check("o_operator_identity", (a, b), vsub(lhs, T.apply(inner)))
    return report


def lift_operator(T: Matrix, dim_a: int) -> Matrix:
    """``[[0, T], [0, 0]]`` on ``A (+) V``."""
    m = T.cols
    return Matrix.block([[Matrix.zeros(dim_a, dim_a), T], [Matrix.zeros(m, dim_a), Matrix.zeros(m, m)]])


def lift_to_semidirect_nijenhuis(A: HomPreLieAlgebra, R: Representation, T: Matrix,
                                 verify: bool = True) -> tuple[HomPreLieAlgebra, Matrix]:
    """The semidirect product and the lifted operator; ``T`` is an O-operator
    exactly when the lift is a Nijenhuis operator there."""
    S = semidirect_product(A, R, verify=verify)
    lift = lift_operator(T, A.dim)
    if verify:
        direct = check_o_operator(A, R, T).ok
        lifted = check_nijenhuis(S, lift).ok
        if direct != lifted:
            raise AssertionError("O-operator and lifted Nijenhuis verdicts disagree")
    return S, lift


def b_sharp(B: Matrix) -> Matrix:
    """Matrix of ``x -> B(x, .)`` into the dual basis."""
    return B.T


def form_value(B: Matrix, x, y):
    return dot(x, B.apply(y))


def check_hessian(A: HomPreLieAlgebra, B: Matrix, cross_check: bool = True) -> ViolationReport:
    """Symmetry, nondegeneracy, ``alpha``-invariance and the cocycle identity.

    With ``cross_check`` the direct evaluation is compared with the trivial
    coefficient coboundary of ``B``; a disagreement raises ``AssertionError``.
    """
    n = A.dim
    if B.shape != (n, n):
        raise DimensionError(f"form must be {n}x{n}, got {B.rows}x{B.cols}")
    report = ViolationReport()
    report.check("symmetry", (), (B - B.T).flat())
    report.declare("nondegeneracy")
    if rank(B) != n:
        report.violations.append(Violation("nondegeneracy", (), (B.det(),)))
    report.check("alpha_invariance", (), (A.alpha.T @ B @ A.alpha - B).flat())
    report.declare("hessian_cocycle")
    e = [A.basis(i) for i in range(n)]
    ae = A.alpha.columns()
    bf = lambda x, y: form_value(B, x, y)  # noqa: E731
    m = A.multiply
    for i, j, k in iproduct(range(n), repeat=3):
        x, y, z = e[i], e[j], e[k]
        lhs = bf(m(x, y), ae[k]) - bf(ae[i], m(y, z))
        rhs = bf(m(y, x), ae[k]) - bf(ae[j], m(x, z))
        report.check("hessian_cocycle", (i, j, k), (lhs - rhs,))
    if cross_check:
        cochain = PreLieCochain.from_function(2, n, 1, lambda block, j: (B[block[0], j],))
        if is_cocycle(A, trivial_rep(A), cochain) != report.passed("hessian_cocycle"):
            raise AssertionError("direct and coboundary forms of the Hessian cocycle disagree")
    return report


def hessian_to_o_operator(A: HomPreLieAlgebra, B: Matrix, verify: bool = True) -> Matrix:
    """``(B^sharp)^-1``, an O-operator for the dual of the regular representation."""
    if verify:
        report = check_hessian(A, B)
        if not report.ok:
            raise VerificationError("form is not a Hessian structure", report)
    try:
        T = mat_inverse(b_sharp(B))
    except SingularMatrixError:
        raise SingularMatrixError("degenerate form has no inverse sharp map") from None
    if verify:
        D = dual_rep(A, regular_rep(A))
        if not (T @ D.beta == A.alpha @ T):
            raise AssertionError("inverse sharp map does not intertwine the twists")
        report = check_o_operator(A, D, T)
        if not report.ok:
            raise VerificationError("inverse sharp map is not an O-operator", report)
    return T


def o_operator_to_hessian(A: HomPreLieAlgebra, T: Matrix, verify: bool = True) -> Matrix:
    """The form ``B`` with ``B^sharp = T^-1``; ``T`` must be invertible."""
    if T.shape != (A.dim, A.dim):
        raise DimensionError(f"operator must be {A.dim}x{A.dim}")
    if verify:
        report = check_o_operator(A, dual_rep(A, regular_rep(A)), T)
        if not report.ok:
            raise VerificationError("operator is not an O-operator for the dual regular representation",
                                    report)
    try:
        B = mat_inverse(T).T
    except SingularMatrixError:
        raise SingularMatrixError("a non-invertible O-operator has no Hessian counterpart") from None
    if verify:
        report = check_hessian(A, B)
        if not report.ok:
            raise VerificationError("resulting form is not a Hessian structure", report)
    return B


@dataclass
class HessianSolution:
    """Linear solution space of the Hessian conditions.

    ``basis`` spans every symmetric, ``alpha``-invariant form satisfying the
    cocycle identity. ``nondegenerate_basis`` flags each basis member;
    ``has_nondegenerate`` is ``True``/``False`` when decided (by a member or
    an exhaustive determinant grid) and ``None`` when the grid was too large.
    """

    basis: list[Matrix]
    nondegenerate_basis: list[bool]
    has_nondegenerate: bool | None

    @property
    def dimension(self) -> int:
        return len(self.basis)


def _sym_index(n: int) -> list[tuple[int, int]]:
    return [(i, j) for i in range(n) for j in range(i, n)]


def solve_hessian(A: HomPreLieAlgebra) -> HessianSolution:
    n = A.dim
    pairs = _sym_index(n)

    def form(coeffs) -> Matrix:
        M = [[0] * n for _ in range(n)]
        for c, (i, j) in zip(coeffs, pairs):
            M[i][j] = c
            M[j][i] = c
        return Matrix(M)

    constraint_cols = []
    e = [A.basis(i) for i in range(n)]
    ae = A.alpha.columns()
    m = A.multiply
    for p in range(len(pairs)):
        Bp = form([1 if q == p else 0 for q in range(len(pairs))])
        col = list((A.alpha.T @ Bp @ A.alpha - Bp).flat())
        for i, j, k in iproduct(range(n), repeat=3):
            x, y, z = e[i], e[j], e[k]
            col.append(form_value(Bp, m(x, y), ae[k]) - form_value(Bp, ae[i], m(y, z))
                       - form_value(Bp, m(y, x), ae[k]) + form_value(Bp, ae[j], m(x, z)))
        constraint_cols.append(col)
    system = Matrix.from_columns(constraint_cols)
    basis = [form(v) for v in kernel_basis(system)]
    flags = [rank(b) == n for b in basis]
    return HessianSolution(basis, flags, _has_nondegenerate(basis, flags, n))


def _has_nondegenerate(basis: list[Matrix], flags: list[bool], n: int) -> bool | None:
    if any(flags):
        return True
    if not basis:
        return False
    # det of a generic combination is a polynomial of degree n in len(basis)
    # variables; it vanishes identically iff it vanishes on the grid {0..n}^k
    k = len(basis)
    if (n + 1) ** k > GRID_LIMIT:
        return None
    for coeffs in iproduct(range(n + 1), repeat=k):
        M = Matrix.zeros(n, n)
        for c, b in zip(coeffs, basis):
            if c:
                M = M + b * c
        if M.det() != 0:
            return True
    return False
