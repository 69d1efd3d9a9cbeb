"""Hom-pre-Lie and Hom-Lie algebras given by structure constants and a twist."""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import product as iproduct
from typing import Callable, Iterable, NamedTuple, Sequence

from .linalg import (
    ZERO,
    DimensionError,
    Matrix,
    SingularMatrixError,
    Vector,
    is_zero,
    mat_inverse,
    to_scalar,
    unit_vector,
    vadd,
    vscale,
    vsub,
    zero_vector,
)


class Violation(NamedTuple):
    identity: str
    basis: tuple  # zero-based basis indices
    residual: Vector


@dataclass
class ViolationReport:
    """Outcome of an exhaustive identity check over basis tuples.

    ``checked`` lists every identity that was evaluated, so a passing report
    still says what it certifies.
    """

    checked: list[str] = field(default_factory=list)
    violations: list[Violation] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def __bool__(self) -> bool:
        return self.ok

    def passed(self, identity: str) -> bool:
        return not any(v.identity == identity for v in self.violations)

    def verdicts(self) -> dict[str, bool]:
        return {name: self.passed(name) for name in self.checked}

    def extend(self, other: "ViolationReport") -> "ViolationReport":
        for name in other.checked:
            if name not in self.checked:
                self.checked.append(name)
        self.violations.extend(other.violations)
        return self

    def check(self, identity: str, basis: tuple, residual: Iterable) -> None:
        if identity not in self.checked:
            self.checked.append(identity)
        residual = tuple(residual)
        if not is_zero(residual):
            self.violations.append(Violation(identity, tuple(basis), residual))

    def declare(self, identity: str) -> None:
        if identity not in self.checked:
            self.checked.append(identity)


class VerificationError(ValueError):
    """A constructor or precondition found violated identities."""

    def __init__(self, message: str, report: ViolationReport):
        super().__init__(message)
        self.report = report


class BilinearMap:
    """A bilinear map ``k^n x k^n -> k^m`` stored as ``table[i][j] = f(e_i, e_j)``."""

    __slots__ = ("dim", "out_dim", "table")

    def __init__(self, table: Sequence[Sequence[Sequence]], dim: int | None = None,
                 out_dim: int | None = None):
        n = len(table) if dim is None else dim
        if len(table) != n:
            raise DimensionError(f"expected {n} rows of products, got {len(table)}")
        rows = []
        m = out_dim
        for i, row in enumerate(table):
            if len(row) != n:
                raise DimensionError(f"row {i} has {len(row)} entries, expected {n}")
            cells = []
            for j, vec in enumerate(row):
                vec = tuple(to_scalar(x) for x in vec)
                if m is None:
                    m = len(vec)
                if len(vec) != m:
                    raise DimensionError(
                        f"value at ({i}, {j}) has length {len(vec)}, expected {m}")
                cells.append(vec)
            rows.append(tuple(cells))
        self.dim = n
        self.out_dim = n if m is None else m
        self.table = tuple(rows)

    @classmethod
    def zero(cls, dim: int, out_dim: int | None = None) -> "BilinearMap":
        m = dim if out_dim is None else out_dim
        return cls([[zero_vector(m)] * dim for _ in range(dim)], dim, m)

    @classmethod
    def from_function(cls, dim: int, fn: Callable[[Vector, Vector], Vector],
                      out_dim: int | None = None) -> "BilinearMap":
        return cls(
            [[fn(unit_vector(dim, i), unit_vector(dim, j)) for j in range(dim)] for i in range(dim)],
            dim, out_dim,
        )

    def __call__(self, x: Sequence, y: Sequence) -> Vector:
        if len(x) != self.dim or len(y) != self.dim:
            raise DimensionError(f"arguments must have length {self.dim}")
        out = [ZERO] * self.out_dim
        for i, a in enumerate(x):
            if not a:
                continue
            row = self.table[i]
            for j, b in enumerate(y):
                if not b:
                    continue
                ab = a * b
                for k, c in enumerate(row[j]):
                    if c:
                        out[k] += ab * c
        return tuple(out)

    def at(self, i: int, j: int) -> Vector:
        return self.table[i][j]

    def _combine(self, other: "BilinearMap", op) -> "BilinearMap":
        if (self.dim, self.out_dim) != (other.dim, other.out_dim):
            raise DimensionError("bilinear maps of different shapes")
        return BilinearMap(
            [[op(self.table[i][j], other.table[i][j]) for j in range(self.dim)]
             for i in range(self.dim)], self.dim, self.out_dim)

    def __add__(self, other: "BilinearMap") -> "BilinearMap":
        return self._combine(other, vadd)

    def __sub__(self, other: "BilinearMap") -> "BilinearMap":
        return self._combine(other, vsub)

    def __mul__(self, c) -> "BilinearMap":
        c = to_scalar(c)
        return BilinearMap([[vscale(c, v) for v in row] for row in self.table], self.dim, self.out_dim)

    __rmul__ = __mul__

    def __neg__(self) -> "BilinearMap":
        return self * -1

    def transpose(self) -> "BilinearMap":
        """The map ``(x, y) -> f(y, x)``."""
        return BilinearMap([[self.table[j][i] for j in range(self.dim)] for i in range(self.dim)],
                           self.dim, self.out_dim)

    def is_zero(self) -> bool:
        return all(is_zero(v) for row in self.table for v in row)

    def is_skew(self) -> bool:
        return all(self.table[i][j] == vscale(-1, self.table[j][i])
                   for i in range(self.dim) for j in range(self.dim))

    def __eq__(self, other) -> bool:
        if not isinstance(other, BilinearMap):
            return NotImplemented
        return self.table == other.table and self.out_dim == other.out_dim

    def __hash__(self) -> int:
        return hash(self.table)

    def __repr__(self) -> str:
        return f"BilinearMap(dim={self.dim}, table={[[list(map(str, v)) for v in r] for r in self.table]})"


def _regular_twist(alpha: Matrix, dim: int, what: str) -> Matrix:
    if not isinstance(alpha, Matrix):
        alpha = Matrix(alpha)
    if alpha.shape != (dim, dim):
        raise DimensionError(f"{what} must be {dim}x{dim}, got {alpha.rows}x{alpha.cols}")
    if alpha.det() == 0:
        raise SingularMatrixError(f"{what} is singular; only regular structures are supported")
    return alpha


class _Twisted:
    """Shared twist helpers for the two algebra kinds."""

    dim: int
    alpha: Matrix

    @cached_property
    def alpha_inv(self) -> Matrix:
        return mat_inverse(self.alpha)

    @cached_property
    def alpha_inv2(self) -> Matrix:
        return self.alpha_inv @ self.alpha_inv

    def basis(self, i: int) -> Vector:
        return unit_vector(self.dim, i)


@dataclass(frozen=True, eq=True)
class HomPreLieAlgebra(_Twisted):
    """``e_i . e_j = sum_k product[i][j][k] e_k`` with an invertible twist ``alpha``.

    Construction enforces shapes and invertibility of ``alpha`` only; the
    identities are checked by :func:`check_hom_pre_lie`.
    """

    product: BilinearMap
    alpha: Matrix
    name: str | None = field(default=None, compare=False)

    def __post_init__(self):
        product = self.product
        if not isinstance(product, BilinearMap):
            product = BilinearMap(product)
            object.__setattr__(self, "product", product)
        if product.out_dim != product.dim:
            raise DimensionError("product must take values in the algebra")
        object.__setattr__(self, "alpha", _regular_twist(self.alpha, product.dim, "alpha"))

    @property
    def dim(self) -> int:
        return self.product.dim

    def multiply(self, x: Sequence, y: Sequence) -> Vector:
        return self.product(x, y)

    def twist(self, x: Sequence) -> Vector:
        return self.alpha.apply(x)

    @classmethod
    def zero(cls, dim: int, alpha: Matrix | None = None, name: str | None = None) -> "HomPreLieAlgebra":
        return cls(BilinearMap.zero(dim), Matrix.identity(dim) if alpha is None else alpha, name)

    def with_product(self, product: BilinearMap) -> "HomPreLieAlgebra":
        return HomPreLieAlgebra(product, self.alpha)

    def left_mult(self, i: int) -> Matrix:
        """Matrix of ``y -> e_i . y``."""
        return Matrix.from_columns([self.product.at(i, j) for j in range(self.dim)])

    def right_mult(self, i: int) -> Matrix:
        """Matrix of ``y -> y . e_i``."""
        return Matrix.from_columns([self.product.at(j, i) for j in range(self.dim)])


@dataclass(frozen=True, eq=True)
class HomLieAlgebra(_Twisted):
    bracket: BilinearMap
    alpha: Matrix
    name: str | None = field(default=None, compare=False)

    def __post_init__(self):
        bracket = self.bracket
        if not isinstance(bracket, BilinearMap):
            bracket = BilinearMap(bracket)
            object.__setattr__(self, "bracket", bracket)
        if bracket.out_dim != bracket.dim:
            raise DimensionError("bracket must take values in the algebra")
        object.__setattr__(self, "alpha", _regular_twist(self.alpha, bracket.dim, "alpha"))

    @property
    def dim(self) -> int:
        return self.bracket.dim

    def br(self, x: Sequence, y: Sequence) -> Vector:
        return self.bracket(x, y)

    def twist(self, x: Sequence) -> Vector:
        return self.alpha.apply(x)

    def ad(self, i: int) -> Matrix:
        return Matrix.from_columns([self.bracket.at(i, j) for j in range(self.dim)])


def product_apply(A: HomPreLieAlgebra, x: Sequence, y: Sequence) -> Vector:
    return A.multiply(x, y)


def check_hom_pre_lie(A: HomPreLieAlgebra) -> ViolationReport:
    """Multiplicativity on basis pairs and the twisted left-symmetry on basis triples."""
    report = ViolationReport()
    n = A.dim
    e = [A.basis(i) for i in range(n)]
    ae = [A.twist(v) for v in e]
    report.declare("multiplicativity")
    report.declare("hom_pre_lie_identity")
    for i, j in iproduct(range(n), repeat=2):
        report.check("multiplicativity", (i, j),
                     vsub(A.twist(A.multiply(e[i], e[j])), A.multiply(ae[i], ae[j])))
    for i, j, k in iproduct(range(n), repeat=3):
        lhs = vsub(A.multiply(A.multiply(e[i], e[j]), ae[k]), A.multiply(ae[i], A.multiply(e[j], e[k])))
        rhs = vsub(A.multiply(A.multiply(e[j], e[i]), ae[k]), A.multiply(ae[j], A.multiply(e[i], e[k])))
        report.check("hom_pre_lie_identity", (i, j, k), vsub(lhs, rhs))
    return report


def check_hom_lie(g: HomLieAlgebra) -> ViolationReport:
    report = ViolationReport()
    n = g.dim
    e = [g.basis(i) for i in range(n)]
    ae = [g.twist(v) for v in e]
    for name in ("skew_symmetry", "multiplicativity", "hom_jacobi"):
        report.declare(name)
    for i, j in iproduct(range(n), repeat=2):
        report.check("skew_symmetry", (i, j), vadd(g.bracket.at(i, j), g.bracket.at(j, i)))
        report.check("multiplicativity", (i, j),
                     vsub(g.twist(g.br(e[i], e[j])), g.br(ae[i], ae[j])))
    for i, j, k in iproduct(range(n), repeat=3):
        total = vadd(vadd(g.br(ae[i], g.br(e[j], e[k])), g.br(ae[j], g.br(e[k], e[i]))),
                     g.br(ae[k], g.br(e[i], e[j])))
        report.check("hom_jacobi", (i, j, k), total)
    return report


def commutator(product: BilinearMap) -> BilinearMap:
    return product - product.transpose()


def subadjacent(A: HomPreLieAlgebra, verify: bool = True) -> HomLieAlgebra:
    """The commutator Hom-Lie algebra on the same space with the same twist."""
    if verify:
        report = check_hom_pre_lie(A)
        if not report.ok:
            raise VerificationError("input is not a Hom-pre-Lie algebra", report)
    return HomLieAlgebra(commutator(A.product), A.alpha)


def check_morphism(f: Matrix, A: HomPreLieAlgebra, A2: HomPreLieAlgebra) -> ViolationReport:
    if f.shape != (A2.dim, A.dim):
        raise DimensionError(f"morphism must be {A2.dim}x{A.dim}, got {f.rows}x{f.cols}")
    report = ViolationReport()
    report.declare("preserves_product")
    report.declare("intertwines_twist")
    for i, j in iproduct(range(A.dim), repeat=2):
        lhs = f.apply(A.multiply(A.basis(i), A.basis(j)))
        rhs = A2.multiply(f.column(i), f.column(j))
        report.check("preserves_product", (i, j), vsub(lhs, rhs))
    report.check("intertwines_twist", (), (f @ A.alpha - A2.alpha @ f).flat())
    return report
