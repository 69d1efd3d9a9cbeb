"""Exact rational matrices.

Scalars are :class:`fractions.Fraction`. Matrices are immutable, row-major,
and act on column vectors: entry ``(r, c)`` is the ``e_r`` coefficient of the
image of ``e_c``. Rank, kernel and solving use fraction-free (Bareiss)
elimination on an integer-scaled copy; the pivot is the first nonzero entry
in the column, so results are deterministic.
"""
from __future__ import annotations

import math
import re
from fractions import Fraction
from typing import Iterable, Sequence

Scalar = Fraction
Vector = tuple  # tuple[Fraction, ...]

ZERO = Fraction(0)
ONE = Fraction(1)

_SCALAR_RE = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(\d+)\s*)?$")


class SingularMatrixError(ValueError):
    """Raised when an inverse is requested for a singular matrix."""


class DimensionError(ValueError):
    """Raised on incompatible shapes."""


def to_scalar(value) -> Fraction:
    """Coerce an int, Fraction or ``"p/q"`` string to a Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError(f"not a scalar: {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_scalar(value)
    raise TypeError(f"not an exact scalar: {value!r}")


def parse_scalar(text: str) -> Fraction:
    m = _SCALAR_RE.match(text)
    if m is None:
        raise ValueError(f"unparseable scalar {text!r}")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) is not None else 1
    if den == 0:
        raise ValueError(f"unparseable scalar {text!r}: zero denominator")
    return Fraction(num, den)


def format_scalar(value: Fraction) -> str:
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


# -- vectors -----------------------------------------------------------------

def vector(values: Iterable) -> Vector:
    return tuple(to_scalar(v) for v in values)


def zero_vector(n: int) -> Vector:
    return (ZERO,) * n


def unit_vector(n: int, i: int) -> Vector:
    return tuple(ONE if k == i else ZERO for k in range(n))


def vadd(u: Sequence, v: Sequence) -> Vector:
    if len(u) != len(v):
        raise DimensionError(f"vector lengths {len(u)} and {len(v)} differ")
    return tuple(a + b for a, b in zip(u, v))


def vsub(u: Sequence, v: Sequence) -> Vector:
    if len(u) != len(v):
        raise DimensionError(f"vector lengths {len(u)} and {len(v)} differ")
    return tuple(a - b for a, b in zip(u, v))


def vscale(c, v: Sequence) -> Vector:
    return tuple(c * a for a in v)


def is_zero(v: Iterable) -> bool:
    return all(a == 0 for a in v)


def dot(u: Sequence, v: Sequence) -> Fraction:
    return sum((a * b for a, b in zip(u, v)), ZERO)


# -- matrices ----------------------------------------------------------------

class Matrix:
    """Immutable dense matrix over the rationals."""

    __slots__ = ("rows", "cols", "_data")

    def __init__(self, entries: Iterable[Iterable], cols: int | None = None):
        data = tuple(tuple(to_scalar(x) for x in row) for row in entries)
        if data:
            width = len(data[0])
            if any(len(row) != width for row in data):
                raise DimensionError("ragged matrix rows")
        else:
            width = cols or 0
        if cols is not None and data and width != cols:
            raise DimensionError(f"expected {cols} columns, got {width}")
        self.rows = len(data)
        self.cols = width
        self._data = data

    @classmethod
    def _raw(cls, data: tuple, rows: int, cols: int) -> "Matrix":
        m = cls.__new__(cls)
        m.rows, m.cols, m._data = rows, cols, data
        return m

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "Matrix":
        return cls._raw(tuple((ZERO,) * cols for _ in range(rows)), rows, cols)

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls._raw(tuple(unit_vector(n, i) for i in range(n)), n, n)

    @classmethod
    def scalar(cls, n: int, c) -> "Matrix":
        return cls.identity(n) * to_scalar(c)

    @classmethod
    def diag(cls, values: Sequence) -> "Matrix":
        n = len(values)
        return cls([[values[i] if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence], rows: int | None = None) -> "Matrix":
        if not columns:
            return cls.zeros(rows or 0, 0)
        n = len(columns[0])
        return cls._raw(
            tuple(tuple(to_scalar(col[r]) for col in columns) for r in range(n)), n, len(columns)
        )

    @classmethod
    def block(cls, blocks: Sequence[Sequence["Matrix"]]) -> "Matrix":
        out = []
        for brow in blocks:
            height = brow[0].rows
            if any(b.rows != height for b in brow):
                raise DimensionError("block row heights differ")
            for r in range(height):
                out.append(tuple(x for b in brow for x in b._data[r]))
        return cls(out)

    @classmethod
    def block_diag(cls, a: "Matrix", b: "Matrix") -> "Matrix":
        return cls.block([[a, cls.zeros(a.rows, b.cols)], [cls.zeros(b.rows, a.cols), b]])

    # -- access --
    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def __getitem__(self, key):
        r, c = key
        return self._data[r][c]

    def row(self, r: int) -> Vector:
        return self._data[r]

    def column(self, c: int) -> Vector:
        return tuple(row[c] for row in self._data)

    def columns(self) -> list[Vector]:
        return [self.column(c) for c in range(self.cols)]

    def tolist(self) -> list[list[Fraction]]:
        return [list(row) for row in self._data]

    def flat(self) -> Vector:
        return tuple(x for row in self._data for x in row)

    def __iter__(self):
        return iter(self._data)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.shape == other.shape and self._data == other._data

    def __hash__(self) -> int:
        return hash((self.rows, self.cols, self._data))

    def __repr__(self) -> str:
        body = ", ".join("[" + ", ".join(format_scalar(x) for x in row) + "]" for row in self._data)
        return f"Matrix([{body}])"

    # -- arithmetic --
    def _check_same(self, other: "Matrix") -> None:
        if self.shape != other.shape:
            raise DimensionError(f"shapes {self.shape} and {other.shape} differ")

    def __add__(self, other: "Matrix") -> "Matrix":
        self._check_same(other)
        return Matrix._raw(
            tuple(tuple(a + b for a, b in zip(r1, r2)) for r1, r2 in zip(self._data, other._data)),
            self.rows, self.cols,
        )

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._check_same(other)
        return Matrix._raw(
            tuple(tuple(a - b for a, b in zip(r1, r2)) for r1, r2 in zip(self._data, other._data)),
            self.rows, self.cols,
        )

    def __neg__(self) -> "Matrix":
        return Matrix._raw(tuple(tuple(-a for a in row) for row in self._data), self.rows, self.cols)

    def __mul__(self, c) -> "Matrix":
        if isinstance(c, Matrix):
            raise TypeError("use @ for matrix products")
        c = to_scalar(c)
        return Matrix._raw(tuple(tuple(c * a for a in row) for row in self._data), self.rows, self.cols)

    __rmul__ = __mul__

    def __matmul__(self, other: "Matrix") -> "Matrix":
        return mat_mul(self, other)

    @property
    def T(self) -> "Matrix":
        if not (self.rows and self.cols):
            return Matrix.zeros(self.cols, self.rows)
        return Matrix._raw(tuple(zip(*self._data)), self.cols, self.rows)

    def apply(self, v: Sequence) -> Vector:
        if len(v) != self.cols:
            raise DimensionError(f"cannot apply {self.shape} matrix to vector of length {len(v)}")
        nz = [(c, x) for c, x in enumerate(v) if x]
        return tuple(sum((row[c] * x for c, x in nz), ZERO) for row in self._data)

    def __pow__(self, k: int) -> "Matrix":
        if not self.is_square:
            raise DimensionError("power of a non-square matrix")
        if k < 0:
            return mat_inverse(self) ** (-k)
        out = Matrix.identity(self.rows)
        base = self
        while k:
            if k & 1:
                out = out @ base
            base = base @ base
            k >>= 1
        return out

    def kron(self, other: "Matrix") -> "Matrix":
        """Kronecker product; basis ``v_i (x) w_j`` sits at ``i * dim(W) + j``."""
        return Matrix._raw(
            tuple(
                tuple(a * b for a in r1 for b in r2)
                for r1 in self._data for r2 in other._data
            ),
            self.rows * other.rows, self.cols * other.cols,
        )

    def is_zero(self) -> bool:
        return all(x == 0 for row in self._data for x in row)

    def is_symmetric(self) -> bool:
        return self.is_square and self == self.T

    # -- elimination --
    def inverse(self) -> "Matrix":
        return mat_inverse(self)

    def rank(self) -> int:
        return rank(self)

    def kernel_basis(self) -> list[Vector]:
        return kernel_basis(self)

    def det(self) -> Fraction:
        return determinant(self)


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    if a.cols != b.rows:
        raise DimensionError(f"cannot multiply {a.shape} by {b.shape}")
    bt = list(zip(*b._data)) if b.rows else [()] * b.cols
    data = []
    for row in a._data:
        nz = [(k, x) for k, x in enumerate(row) if x]
        data.append(tuple(sum((x * col[k] for k, x in nz), ZERO) for col in bt))
    return Matrix._raw(tuple(data), a.rows, b.cols)


def _integer_rows(rows: Sequence[Sequence[Fraction]]) -> list[list[int]]:
    out = []
    for row in rows:
        scale = math.lcm(*(x.denominator for x in row)) if row else 1
        out.append([int(x * scale) for x in row])
    return out


def _bareiss(m: list[list[int]]) -> list[int]:
    """Fraction-free row echelon form in place; returns pivot columns."""
    nrows = len(m)
    ncols = len(m[0]) if nrows else 0
    prev = 1
    r = 0
    pivots = []
    for c in range(ncols):
        if r == nrows:
            break
        p = next((i for i in range(r, nrows) if m[i][c] != 0), None)
        if p is None:
            continue
        if p != r:
            m[r], m[p] = m[p], m[r]
        piv = m[r][c]
        rowr = m[r]
        for i in range(r + 1, nrows):
            rowi = m[i]
            lead = rowi[c]
            for j in range(c + 1, ncols):
                rowi[j] = (piv * rowi[j] - lead * rowr[j]) // prev
            rowi[c] = 0
        # rows above the pivot row are untouched: their later entries need no rescaling
        prev = piv
        pivots.append(c)
        r += 1
    return pivots


def _echelon(a: Matrix) -> tuple[list[list[int]], list[int]]:
    m = _integer_rows(a._data)
    pivots = _bareiss(m)
    return m, pivots


def rank(a: Matrix) -> int:
    if a.rows == 0 or a.cols == 0:
        return 0
    _, pivots = _echelon(a)
    return len(pivots)


def determinant(a: Matrix) -> Fraction:
    if not a.is_square:
        raise DimensionError("determinant of a non-square matrix")
    n = a.rows
    if n == 0:
        return ONE
    # track the row scaling and swaps so the Bareiss corner is the determinant
    scales = [math.lcm(*(x.denominator for x in row)) for row in a._data]
    m = [[int(x * s) for x in row] for row, s in zip(a._data, scales)]
    sign = 1
    prev = 1
    for c in range(n):
        p = next((i for i in range(c, n) if m[i][c] != 0), None)
        if p is None:
            return ZERO
        if p != c:
            m[c], m[p] = m[p], m[c]
            sign = -sign
        piv = m[c][c]
        for i in range(c + 1, n):
            lead = m[i][c]
            for j in range(c + 1, n):
                m[i][j] = (piv * m[i][j] - lead * m[c][j]) // prev
            m[i][c] = 0
        prev = piv
    return Fraction(sign * m[n - 1][n - 1], math.prod(scales))


def _back_substitute(m: list[list[int]], pivots: list[int], ncols: int,
                     free_values: dict[int, Fraction], rhs: list | None = None) -> list[Fraction]:
    x = [ZERO] * ncols
    for c, val in free_values.items():
        x[c] = val
    for r in range(len(pivots) - 1, -1, -1):
        c = pivots[r]
        row = m[r]
        acc = Fraction(rhs[r]) if rhs is not None else ZERO
        for j in range(c + 1, ncols):
            if row[j]:
                acc -= row[j] * x[j]
        x[c] = acc / row[c]
    return x


def kernel_basis(a: Matrix) -> list[Vector]:
    """Basis of the null space, one vector per free column (that entry set to 1)."""
    n = a.cols
    if a.rows == 0:
        return [unit_vector(n, i) for i in range(n)]
    m, pivots = _echelon(a)
    pivset = set(pivots)
    basis = []
    for f in range(n):
        if f in pivset:
            continue
        free = {c: (ONE if c == f else ZERO) for c in range(n) if c not in pivset}
        basis.append(tuple(_back_substitute(m, pivots, n, free)))
    return basis


def solve(a: Matrix, b: Sequence) -> Vector | None:
    """Return some exact solution of ``a x = b``, or ``None`` if none exists."""
    if len(b) != a.rows:
        raise DimensionError(f"right-hand side has length {len(b)}, expected {a.rows}")
    n = a.cols
    if a.rows == 0:
        return zero_vector(n)
    aug = Matrix._raw(
        tuple(row + (to_scalar(bi),) for row, bi in zip(a._data, b)), a.rows, n + 1
    )
    m, pivots = _echelon(aug)
    if pivots and pivots[-1] == n:
        return None
    rhs = [row[n] for row in m[: len(pivots)]]
    free = {c: ZERO for c in range(n) if c not in set(pivots)}
    return tuple(_back_substitute(m, pivots, n, free, rhs))


def mat_inverse(a: Matrix) -> Matrix:
    if not a.is_square:
        raise DimensionError(f"cannot invert a {a.shape} matrix")
    n = a.rows
    aug = Matrix._raw(
        tuple(row + unit_vector(n, i) for i, row in enumerate(a._data)), n, 2 * n
    )
    m, pivots = _echelon(aug)
    if pivots[:n] != list(range(n)):
        raise SingularMatrixError("matrix is singular")
    cols = []
    for k in range(n):
        # solve a x = e_k using the shared echelon form: rhs is column n + k
        rhs = [m[r][n + k] for r in range(n)]
        sub = [row[:n] for row in m[:n]]
        cols.append(_back_substitute(sub, list(range(n)), n, {}, rhs))
    return Matrix.from_columns(cols) if n else Matrix.zeros(0, 0)
