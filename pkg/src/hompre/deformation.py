"""Linear deformations, Nijenhuis operators and equivalences.

Every "for all t" condition is decided by expanding in powers of ``t`` and
requiring each coefficient to vanish on basis tuples.
"""
from __future__ import annotations

from itertools import product as iproduct
from typing import NamedTuple

from .algebra import (
    BilinearMap,
    HomLieAlgebra,
    HomPreLieAlgebra,
    VerificationError,
    ViolationReport,
    commutator,
)
from .cohomology import PreLieCochain, linear_map_to_cochain, pre_lie_coboundary
from .linalg import DimensionError, Matrix, kernel_basis, solve, to_scalar, vadd, vsub
from .representations import regular_rep


def _square(N: Matrix, dim: int) -> Matrix:
    if not isinstance(N, Matrix):
        N = Matrix(N)
    if N.shape != (dim, dim):
        raise DimensionError(f"operator must be {dim}x{dim}, got {N.rows}x{N.cols}")
    return N


def _check_bilinear(omega: BilinearMap, dim: int) -> BilinearMap:
    if not isinstance(omega, BilinearMap):
        omega = BilinearMap(omega)
    if omega.dim != dim or omega.out_dim != dim:
        raise DimensionError(f"bilinear map must be {dim}-dimensional with values in the algebra")
    return omega


def twist_compatibility(alpha: Matrix, omega: BilinearMap, report: ViolationReport | None = None,
                        name: str = "twist_compatibility") -> ViolationReport:
    """``omega(alpha x, alpha y) = alpha omega(x, y)`` on basis pairs."""
    report = ViolationReport() if report is None else report
    report.declare(name)
    n = omega.dim
    cols = alpha.columns()
    for i, j in iproduct(range(n), repeat=2):
        report.check(name, (i, j), vsub(omega(cols[i], cols[j]), alpha.apply(omega.at(i, j))))
    return report


# -- Hom-pre-Lie deformations ------------------------------------------------------

class DeformationVerdict(NamedTuple):
    cocycle: bool
    integrable: bool

    @property
    def generates_deformation(self) -> bool:
        return self.cocycle and self.integrable


def linear_deformation_report(A: HomPreLieAlgebra, omega: BilinearMap) -> ViolationReport:
    """Twist compatibility, then the order-``t`` (cocycle) and order-``t^2``
    (integrability) parts of the Hom-pre-Lie identity for ``. + t omega``."""
    omega = _check_bilinear(omega, A.dim)
    report = twist_compatibility(A.alpha, omega)
    report.declare("cocycle")
    report.declare("integrability")
    n = A.dim
    e = [A.basis(i) for i in range(n)]
    ae = A.alpha.columns()
    m, w = A.multiply, omega
    for i, j, k in iproduct(range(n), repeat=3):
        x, y, z = e[i], e[j], e[k]
        ax, ay, az = ae[i], ae[j], ae[k]
        terms = [
            m(w(x, y), az), w(m(x, y), az), m(ax, w(y, z)), w(ax, m(y, z)),
            m(w(y, x), az), w(m(y, x), az), m(ay, w(x, z)), w(ay, m(x, z)),
        ]
        signs = (1, 1, -1, -1, -1, -1, 1, 1)
        total = tuple(sum(s * t[r] for s, t in zip(signs, terms)) for r in range(n))
        report.check("cocycle", (i, j, k), total)
        integ = vadd(vsub(w(w(x, y), az), w(ax, w(y, z))), vsub(w(ay, w(x, z)), w(w(y, x), az)))
        report.check("integrability", (i, j, k), integ)
    return report


def check_linear_deformation(A: HomPreLieAlgebra, omega: BilinearMap) -> DeformationVerdict:
    """``(cocycle, integrable)``; ``omega`` generates a deformation iff both hold.

    Raises :class:`VerificationError` if ``omega`` does not commute with the twist.
    """
    report = linear_deformation_report(A, omega)
    if not report.passed("twist_compatibility"):
        raise VerificationError("omega is not compatible with alpha", report)
    return DeformationVerdict(report.passed("cocycle"), report.passed("integrability"))


def deformed_algebra(A: HomPreLieAlgebra, omega: BilinearMap, t) -> HomPreLieAlgebra:
    """The algebra ``(A, . + t omega, alpha)`` at a specific rational ``t``."""
    omega = _check_bilinear(omega, A.dim)
    return A.with_product(A.product + omega * to_scalar(t))


def deformed_product(A: HomPreLieAlgebra, N: Matrix) -> BilinearMap:
    """``x ._N y = N(x).y + x.N(y) - N(x.y)``."""
    N = _square(N, A.dim)
    cols = N.columns()
    return BilinearMap([
        [tuple(a + b - c for a, b, c in zip(A.multiply(cols[i], A.basis(j)),
                                            A.multiply(A.basis(i), cols[j]),
                                            N.apply(A.product.at(i, j))))
         for j in range(A.dim)]
        for i in range(A.dim)
    ], A.dim)


def check_nijenhuis(A: HomPreLieAlgebra, N: Matrix) -> ViolationReport:
    N = _square(N, A.dim)
    report = ViolationReport()
    report.check("commutes_with_twist", (), (N @ A.alpha - A.alpha @ N).flat())
    report.declare("nijenhuis_identity")
    dp = deformed_product(A, N)
    cols = N.columns()
    for i, j in iproduct(range(A.dim), repeat=2):
        report.check("nijenhuis_identity", (i, j),
                     vsub(A.multiply(cols[i], cols[j]), N.apply(dp.at(i, j))))
    return report


def trivial_deformation_from_nijenhuis(A: HomPreLieAlgebra, N: Matrix, verify: bool = True) -> BilinearMap:
    """The deformation cocycle ``omega = ._N`` generated by a Nijenhuis operator."""
    N = _square(N, A.dim)
    if verify:
        report = check_nijenhuis(A, N)
        if not report.ok:
            raise VerificationError("operator is not a Nijenhuis operator", report)
    omega = deformed_product(A, N)
    if verify:
        report = linear_deformation_report(A, omega)
        report.extend(equivalence_report(A, BilinearMap.zero(A.dim), omega, N))
        if not report.ok:
            raise VerificationError("Nijenhuis deformation failed its own checks", report)
    return omega


def equivalence_report(A: HomPreLieAlgebra, omega1: BilinearMap, omega2: BilinearMap,
                       N: Matrix) -> ViolationReport:
    """Coefficients of ``t^0..t^3`` in ``(Id + tN)`` being a morphism from
    ``(A, . + t omega2)`` to ``(A, . + t omega1)``."""
    N = _square(N, A.dim)
    omega1 = _check_bilinear(omega1, A.dim)
    omega2 = _check_bilinear(omega2, A.dim)
    report = ViolationReport()
    report.check("commutes_with_twist", (), (N @ A.alpha - A.alpha @ N).flat())
    for name in ("order_t", "order_t2", "order_t3"):
        report.declare(name)
    cols = N.columns()
    for i, j in iproduct(range(A.dim), repeat=2):
        x, y = A.basis(i), A.basis(j)
        nx, ny = cols[i], cols[j]
        lhs1 = vsub(omega2.at(i, j), omega1.at(i, j))
        rhs1 = vsub(vadd(A.multiply(nx, y), A.multiply(x, ny)), N.apply(A.product.at(i, j)))
        report.check("order_t", (i, j), vsub(lhs1, rhs1))
        lhs2 = vadd(omega1(x, ny), omega1(nx, y))
        rhs2 = vsub(N.apply(omega2.at(i, j)), A.multiply(nx, ny))
        report.check("order_t2", (i, j), vsub(lhs2, rhs2))
        report.check("order_t3", (i, j), omega1(nx, ny))
    return report


def check_equivalence(A: HomPreLieAlgebra, omega1: BilinearMap, omega2: BilinearMap, N: Matrix) -> bool:
    return equivalence_report(A, omega1, omega2, N).ok


def coboundary_of_operator(A: HomPreLieAlgebra, N: Matrix) -> PreLieCochain:
    """``\\partial_reg(N o alpha)`` as a 2-cochain with regular coefficients."""
    N = _square(N, A.dim)
    return pre_lie_coboundary(A, regular_rep(A, verify=False), linear_map_to_cochain(N @ A.alpha))


def find_equivalence_witness(A: HomPreLieAlgebra, omega1: BilinearMap, omega2: BilinearMap,
                             search: range = range(-2, 3)) -> Matrix | None:
    """Look for ``N`` making the two deformations equivalent (dimension <= 3).

    The twist and order-``t`` conditions are linear in ``N`` and are solved
    exactly; the quadratic conditions are then tested on the particular
    solution plus small integer combinations of the homogeneous solutions.
    ``None`` means no witness was found, not that none exists, unless the
    linear conditions already have no solution.
    """
    n = A.dim
    if n > 3:
        raise ValueError("witness search is limited to dimension <= 3")
    omega1 = _check_bilinear(omega1, n)
    omega2 = _check_bilinear(omega2, n)
    unknowns = n * n  # N[r][c] at r * n + c

    def unit(k):
        return Matrix([[1 if r * n + c == k else 0 for c in range(n)] for r in range(n)])

    images = []
    for k in range(unknowns):
        Nk = unit(k)
        comm = (Nk @ A.alpha - A.alpha @ Nk).flat()
        lin = []
        for i, j in iproduct(range(n), repeat=2):
            lin.extend(vsub(vadd(A.multiply(Nk.column(i), A.basis(j)), A.multiply(A.basis(i), Nk.column(j))),
                            Nk.apply(A.product.at(i, j))))
        images.append(tuple(comm) + tuple(lin))
    target = (0,) * (n * n) + tuple(
        x for i, j in iproduct(range(n), repeat=2) for x in vsub(omega2.at(i, j), omega1.at(i, j)))
    system = Matrix.from_columns(images)
    particular = solve(system, target)
    if particular is None:
        return None
    homogeneous = kernel_basis(system)

    def as_matrix(v):
        return Matrix([[v[r * n + c] for c in range(n)] for r in range(n)])

    for coeffs in iproduct(search, repeat=len(homogeneous)):
        v = list(particular)
        for c, h in zip(coeffs, homogeneous):
            if c:
                v = [a + c * b for a, b in zip(v, h)]
        candidate = as_matrix(v)
        if check_equivalence(A, omega1, omega2, candidate):
            return candidate
    return None


# -- descent to the sub-adjacent Hom-Lie algebra -------------------------------------

def subadjacent_deformation(omega: BilinearMap) -> BilinearMap:
    """``omega_C(x, y) = omega(x, y) - omega(y, x)``."""
    return commutator(omega)


def hom_lie_deformation_report(g: HomLieAlgebra, omega: BilinearMap) -> ViolationReport:
    """Coefficients of ``t^0, t^1, t^2`` of the Hom-Jacobi identity for
    ``[.,.] + t omega``, plus skew-symmetry and twist compatibility of ``omega``."""
    omega = _check_bilinear(omega, g.dim)
    report = twist_compatibility(g.alpha, omega)
    n = g.dim
    report.declare("skew_symmetry")
    for i, j in iproduct(range(n), repeat=2):
        report.check("skew_symmetry", (i, j), vadd(omega.at(i, j), omega.at(j, i)))
    for name in ("order_1", "order_t", "order_t2"):
        report.declare(name)
    e = [g.basis(i) for i in range(n)]
    ae = g.alpha.columns()
    b, w = g.br, omega
    for i, j, k in iproduct(range(n), repeat=3):
        cyc = [(i, j, k), (j, k, i), (k, i, j)]
        t0 = t1 = t2 = (0,) * n
        for p, q, r in cyc:
            t0 = vadd(t0, b(ae[p], b(e[q], e[r])))
            t1 = vadd(t1, vadd(b(ae[p], w(e[q], e[r])), w(ae[p], b(e[q], e[r]))))
            t2 = vadd(t2, w(ae[p], w(e[q], e[r])))
        report.check("order_1", (i, j, k), t0)
        report.check("order_t", (i, j, k), t1)
        report.check("order_t2", (i, j, k), t2)
    return report


def hom_lie_deformed_product(g: HomLieAlgebra, N: Matrix) -> BilinearMap:
    """``[x, y]_N = [N x, y] + [x, N y] - N [x, y]``."""
    N = _square(N, g.dim)
    cols = N.columns()
    return BilinearMap([
        [tuple(a + b - c for a, b, c in zip(g.br(cols[i], g.basis(j)), g.br(g.basis(i), cols[j]),
                                            N.apply(g.bracket.at(i, j))))
         for j in range(g.dim)]
        for i in range(g.dim)
    ], g.dim)


def check_hom_lie_nijenhuis(g: HomLieAlgebra, N: Matrix) -> ViolationReport:
    N = _square(N, g.dim)
    report = ViolationReport()
    report.check("commutes_with_twist", (), (N @ g.alpha - g.alpha @ N).flat())
    report.declare("nijenhuis_identity")
    db = hom_lie_deformed_product(g, N)
    cols = N.columns()
    for i, j in iproduct(range(g.dim), repeat=2):
        report.check("nijenhuis_identity", (i, j), vsub(g.br(cols[i], cols[j]), N.apply(db.at(i, j))))
    return report

