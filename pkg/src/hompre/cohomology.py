"""Cochains, coboundaries and cohomology dimensions.

Degree conventions
------------------
A Hom-pre-Lie ``n``-cochain (``n >= 1``) is a map ``wedge^{n-1} A (x) A -> V``:
antisymmetric in the first ``n - 1`` slots, arbitrary in the last. It is
stored as a flat coefficient vector indexed by (sorted ``(n-1)``-tuple in
lexicographic order, free index ``j``, carrier index ``r``).

A Hom-Lie ``k``-cochain (``k >= 0``) is a map ``wedge^k g -> W`` indexed by
(sorted ``k``-tuple, carrier index).

``Hom(A, V)`` is flattened column by column: ``f`` sits at ``j * dim V + r``
where ``r`` indexes the ``e_r`` coefficient of ``f(e_j)``.

The pre-Lie coboundary is assembled by evaluating the explicit formula on
basis cochains; the Hom-Lie route through the induced representation on
``Hom(A, V)`` gives an independent second construction of the same matrix.
"""
from __future__ import annotations

import os
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from math import comb
from typing import Sequence

from .algebra import HomLieAlgebra, HomPreLieAlgebra, commutator
from .linalg import (
    ZERO,
    DimensionError,
    Matrix,
    Vector,
    is_zero,
    rank,
    unit_vector,
    vadd,
    vscale,
    zero_vector,
)
from .representations import HomLieRepresentation, Representation

DEFAULT_MAX_COCHAIN_DIM = 10_000
MAX_COCHAIN_DIM_ENV = "HOMPRE_MAX_COCHAIN_DIM"


class CochainSizeError(ValueError):
    """The requested cochain space exceeds the configured size cap."""


def max_cochain_dim() -> int:
    raw = os.environ.get(MAX_COCHAIN_DIM_ENV)
    if raw is None:
        return DEFAULT_MAX_COCHAIN_DIM
    try:
        return int(raw)
    except ValueError:
        raise ValueError(f"{MAX_COCHAIN_DIM_ENV} must be an integer, got {raw!r}") from None


@lru_cache(maxsize=None)
def _tuples(n: int, k: int) -> tuple[tuple[int, ...], ...]:
    return tuple(combinations(range(n), k))


@lru_cache(maxsize=None)
def _tuple_index(n: int, k: int) -> dict[tuple[int, ...], int]:
    return {t: i for i, t in enumerate(_tuples(n, k))}


def _sort_with_sign(idx: Sequence[int]) -> tuple[int, tuple[int, ...]]:
    """Sort indices, returning the permutation sign (0 on a repeated index)."""
    idx = list(idx)
    if len(set(idx)) != len(idx):
        return 0, ()
    sign = 1
    # insertion sort, counting transpositions
    for i in range(1, len(idx)):
        j = i
        while j > 0 and idx[j - 1] > idx[j]:
            idx[j - 1], idx[j] = idx[j], idx[j - 1]
            sign = -sign
            j -= 1
    return sign, tuple(idx)


def _sparse(v: Sequence) -> list[tuple[int, object]]:
    return [(i, c) for i, c in enumerate(v) if c]


def prelie_cochain_dim(dim_a: int, dim_v: int, n: int) -> int:
    if n < 1:
        return 0
    return comb(dim_a, n - 1) * dim_a * dim_v


def lie_cochain_dim(dim_g: int, dim_w: int, k: int) -> int:
    if k < 0:
        return 0
    return comb(dim_g, k) * dim_w


@dataclass(frozen=True)
class PreLieCochain:
    degree: int
    dim_a: int
    dim_v: int
    coeffs: Vector

    def __post_init__(self):
        if self.degree < 1:
            raise ValueError("pre-Lie cochains have degree >= 1")
        expected = prelie_cochain_dim(self.dim_a, self.dim_v, self.degree)
        if len(self.coeffs) != expected:
            raise DimensionError(f"degree {self.degree} cochain needs {expected} coefficients, "
                                 f"got {len(self.coeffs)}")

    @classmethod
    def zero(cls, degree: int, dim_a: int, dim_v: int) -> "PreLieCochain":
        return cls(degree, dim_a, dim_v, zero_vector(prelie_cochain_dim(dim_a, dim_v, degree)))

    @classmethod
    def basis_element(cls, degree: int, dim_a: int, dim_v: int, index: int) -> "PreLieCochain":
        return cls(degree, dim_a, dim_v, unit_vector(prelie_cochain_dim(dim_a, dim_v, degree), index))

    @classmethod
    def from_function(cls, degree: int, dim_a: int, dim_v: int, fn) -> "PreLieCochain":
        """Tabulate ``fn(block, j)`` (block a sorted tuple) into a cochain."""
        coeffs: list = []
        for block in _tuples(dim_a, degree - 1):
            for j in range(dim_a):
                value = tuple(fn(block, j))
                if len(value) != dim_v:
                    raise DimensionError(f"value has length {len(value)}, expected {dim_v}")
                coeffs.extend(value)
        return cls(degree, dim_a, dim_v, tuple(coeffs))

    @classmethod
    def from_bilinear(cls, omega, dim_v: int | None = None) -> "PreLieCochain":
        """A bilinear map ``A x A -> V`` as a 2-cochain."""
        return cls.from_function(2, omega.dim, omega.out_dim if dim_v is None else dim_v,
                                 lambda block, j: omega.at(block[0], j))

    def offset(self, block: tuple[int, ...], j: int) -> int:
        return (_tuple_index(self.dim_a, self.degree - 1)[block] * self.dim_a + j) * self.dim_v

    def value(self, block: tuple[int, ...], j: int) -> Vector:
        """Value on basis arguments; ``block`` need not be sorted."""
        sign, key = _sort_with_sign(block)
        if sign == 0:
            return zero_vector(self.dim_v)
        o = self.offset(key, j)
        vals = self.coeffs[o:o + self.dim_v]
        return vals if sign == 1 else vscale(-1, vals)

    def evaluate(self, args: Sequence[Sequence]) -> Vector:
        """Multilinear evaluation on arbitrary vectors (``degree`` of them)."""
        if len(args) != self.degree:
            raise DimensionError(f"degree {self.degree} cochain takes {self.degree} arguments")
        out = [ZERO] * self.dim_v
        _accumulate(out, self, [_sparse(a) for a in args[:-1]], _sparse(args[-1]))
        return tuple(out)

    def is_zero(self) -> bool:
        return is_zero(self.coeffs)

    def __add__(self, other: "PreLieCochain") -> "PreLieCochain":
        return PreLieCochain(self.degree, self.dim_a, self.dim_v, vadd(self.coeffs, other.coeffs))

    def __sub__(self, other: "PreLieCochain") -> "PreLieCochain":
        return self + other * -1

    def __mul__(self, c) -> "PreLieCochain":
        return PreLieCochain(self.degree, self.dim_a, self.dim_v, vscale(c, self.coeffs))


def _accumulate(out: list, f: PreLieCochain, block_args: list, last: list) -> None:
    def rec(pos: int, chosen: list, coef):
        if pos == len(block_args):
            sign, key = _sort_with_sign(chosen)
            if sign == 0:
                return
            base_index = _tuple_index(f.dim_a, f.degree - 1)[key] * f.dim_a
            for j, cj in last:
                o = (base_index + j) * f.dim_v
                c = coef * cj * sign
                for r in range(f.dim_v):
                    x = f.coeffs[o + r]
                    if x:
                        out[r] += c * x
            return
        for i, ci in block_args[pos]:
            if i in chosen:
                continue
            chosen.append(i)
            rec(pos + 1, chosen, coef * ci)
            chosen.pop()

    rec(0, [], 1)


@dataclass(frozen=True)
class LieCochain:
    degree: int
    dim_g: int
    dim_w: int
    coeffs: Vector

    def __post_init__(self):
        expected = lie_cochain_dim(self.dim_g, self.dim_w, self.degree)
        if len(self.coeffs) != expected:
            raise DimensionError(f"degree {self.degree} cochain needs {expected} coefficients, "
                                 f"got {len(self.coeffs)}")

    @classmethod
    def zero(cls, degree: int, dim_g: int, dim_w: int) -> "LieCochain":
        return cls(degree, dim_g, dim_w, zero_vector(lie_cochain_dim(dim_g, dim_w, degree)))

    @classmethod
    def basis_element(cls, degree: int, dim_g: int, dim_w: int, index: int) -> "LieCochain":
        return cls(degree, dim_g, dim_w, unit_vector(lie_cochain_dim(dim_g, dim_w, degree), index))

    def value(self, args: tuple[int, ...]) -> Vector:
        sign, key = _sort_with_sign(args)
        if sign == 0:
            return zero_vector(self.dim_w)
        o = _tuple_index(self.dim_g, self.degree)[key] * self.dim_w
        vals = self.coeffs[o:o + self.dim_w]
        return vals if sign == 1 else vscale(-1, vals)

    def evaluate(self, args: Sequence[Sequence]) -> Vector:
        if len(args) != self.degree:
            raise DimensionError(f"degree {self.degree} cochain takes {self.degree} arguments")
        out = [ZERO] * self.dim_w
        sparse = [_sparse(a) for a in args]
        index = _tuple_index(self.dim_g, self.degree)

        def rec(pos: int, chosen: list, coef):
            if pos == len(sparse):
                sign, key = _sort_with_sign(chosen)
                if sign == 0:
                    return
                o = index[key] * self.dim_w
                c = coef * sign
                for r in range(self.dim_w):
                    x = self.coeffs[o + r]
                    if x:
                        out[r] += c * x
                return
            for i, ci in sparse[pos]:
                if i in chosen:
                    continue
                chosen.append(i)
                rec(pos + 1, chosen, coef * ci)
                chosen.pop()

        rec(0, [], 1)
        return tuple(out)

    def is_zero(self) -> bool:
        return is_zero(self.coeffs)


# -- Hom-Lie coboundary ---------------------------------------------------------

def _check_lie_inputs(g: HomLieAlgebra, R: HomLieRepresentation, f: LieCochain) -> None:
    if len(R.rho) != g.dim or f.dim_g != g.dim or f.dim_w != R.carrier_dim:
        raise DimensionError("cochain, algebra and representation dimensions disagree")


def lie_coboundary(g: HomLieAlgebra, R: HomLieRepresentation, f: LieCochain) -> LieCochain:
    """``d f`` on ``k + 1`` arguments, with arguments untwisted by ``alpha^-1``, ``alpha^-2``.

    ``(df)(x_1..x_{k+1}) = sum_i (-1)^{i+1} rho(x_i) f(a1 x_1 .. ^i .. a1 x_{k+1})
    + sum_{i<j} (-1)^{i+j} beta f([a2 x_i, a2 x_j], a1 x_1 .. ^i ^j .. a1 x_{k+1})``
    where ``a1 = alpha^-1``, ``a2 = alpha^-2``.
    """
    _check_lie_inputs(g, R, f)
    k = f.degree
    n = g.dim
    inv1 = [g.alpha_inv.column(i) for i in range(n)]
    inv2 = [g.alpha_inv2.column(i) for i in range(n)]
    coeffs: list = []
    for xs in _tuples(n, k + 1):
        total = zero_vector(R.carrier_dim)
        for i in range(k + 1):
            rest = [inv1[x] for p, x in enumerate(xs) if p != i]
            term = R.rho[xs[i]].apply(f.evaluate(rest))
            total = vadd(total, term if i % 2 == 0 else vscale(-1, term))
        for i in range(k + 1):
            for j in range(i + 1, k + 1):
                br = g.br(inv2[xs[i]], inv2[xs[j]])
                if is_zero(br):
                    continue
                rest = [inv1[x] for p, x in enumerate(xs) if p not in (i, j)]
                term = R.beta.apply(f.evaluate([br] + rest))
                total = vadd(total, term if (i + j) % 2 == 0 else vscale(-1, term))
        coeffs.extend(total)
    return LieCochain(k + 1, n, R.carrier_dim, tuple(coeffs))


def lie_coboundary_matrix(g: HomLieAlgebra, R: HomLieRepresentation, k: int) -> Matrix:
    rows = lie_cochain_dim(g.dim, R.carrier_dim, k + 1)
    cols = lie_cochain_dim(g.dim, R.carrier_dim, k)
    columns = [lie_coboundary(g, R, LieCochain.basis_element(k, g.dim, R.carrier_dim, c)).coeffs
               for c in range(cols)]
    return Matrix.from_columns(columns, rows) if columns else Matrix.zeros(rows, 0)


# -- induced representation on Hom(A, V) -----------------------------------------

def hom_index(dim_v: int, j: int, r: int) -> int:
    return j * dim_v + r


def hom_apply(flat: Sequence, dim_a: int, dim_v: int, x: Sequence) -> Vector:
    """Evaluate a flattened ``f in Hom(A, V)`` at ``x``."""
    out = [ZERO] * dim_v
    for j, xj in enumerate(x):
        if xj:
            for r in range(dim_v):
                c = flat[hom_index(dim_v, j, r)]
                if c:
                    out[r] += xj * c
    return tuple(out)


def hom_from_images(images: Sequence[Sequence]) -> Vector:
    """Flatten ``f`` from its images ``f(e_0), f(e_1), ...``."""
    return tuple(c for img in images for c in img)


def induced_rep_on_hom(A: HomPreLieAlgebra, R: Representation) -> HomLieRepresentation:
    """Representation of the sub-adjacent algebra on ``Hom(A, V)``.

    The twist is ``f -> beta o f o alpha^-1`` and
    ``x . f : y -> rho(x) f(alpha^-1 y) + mu(y) f(alpha^-1 x) - beta f(alpha^-2 (x . y))``.
    """
    if len(R.rho) != A.dim:
        raise DimensionError("representation does not match the algebra dimension")
    n, m = A.dim, R.carrier_dim
    size = n * m
    inv1 = [A.alpha_inv.column(i) for i in range(n)]
    inv2 = A.alpha_inv2
    ad_cols = []
    basis_homs = [unit_vector(size, c) for c in range(size)]
    for f in basis_homs:
        ad_cols.append(hom_from_images(
            [R.beta.apply(hom_apply(f, n, m, inv1[y])) for y in range(n)]))
    twist = Matrix.from_columns(ad_cols)
    actions = []
    for x in range(n):
        cols = []
        for f in basis_homs:
            images = []
            f_ax = hom_apply(f, n, m, inv1[x])
            for y in range(n):
                t1 = R.rho[x].apply(hom_apply(f, n, m, inv1[y]))
                t2 = R.mu[y].apply(f_ax)
                xy = inv2.apply(A.product.at(x, y))
                t3 = R.beta.apply(hom_apply(f, n, m, xy))
                images.append(tuple(a + b - c for a, b, c in zip(t1, t2, t3)))
            cols.append(hom_from_images(images))
        actions.append(Matrix.from_columns(cols))
    return HomLieRepresentation(twist, actions)


# -- Phi --------------------------------------------------------------------------

def phi(omega: LieCochain, dim_a: int, dim_v: int) -> PreLieCochain:
    """``Phi(omega)(x_1..x_{n-1}, x_n) = omega(x_1..x_{n-1})(x_n)``."""
    if omega.dim_g != dim_a or omega.dim_w != dim_a * dim_v:
        raise DimensionError("omega must take values in Hom(A, V)")
    return PreLieCochain.from_function(
        omega.degree + 1, dim_a, dim_v,
        lambda block, j: hom_apply(omega.value(block), dim_a, dim_v, unit_vector(dim_a, j)))


def phi_inverse(f: PreLieCochain) -> LieCochain:
    coeffs: list = []
    for block in _tuples(f.dim_a, f.degree - 1):
        coeffs.extend(hom_from_images([f.value(block, j) for j in range(f.dim_a)]))
    return LieCochain(f.degree - 1, f.dim_a, f.dim_a * f.dim_v, tuple(coeffs))


def phi_matrix(dim_a: int, dim_v: int, n: int) -> Matrix:
    """Matrix of ``Phi`` from Lie degree ``n - 1`` to pre-Lie degree ``n``."""
    size = prelie_cochain_dim(dim_a, dim_v, n)
    return Matrix.from_columns(
        [phi(LieCochain.basis_element(n - 1, dim_a, dim_a * dim_v, c), dim_a, dim_v).coeffs
         for c in range(size)], size) if size else Matrix.zeros(0, 0)


# -- Hom-pre-Lie coboundary ---------------------------------------------------------

def pre_lie_coboundary(A: HomPreLieAlgebra, R: Representation, f: PreLieCochain) -> PreLieCochain:
    """``\\partial f`` evaluated term by term on basis arguments ``x_1..x_{n+1}``.

    With ``a1 = alpha^-1`` and ``a2 = alpha^-2``::

        sum_{i<=n} (-1)^{i+1} rho(x_i) f(a1 x_1 .. ^i .. a1 x_n, a1 x_{n+1})
      + sum_{i<=n} (-1)^{i+1} mu(x_{n+1}) f(a1 x_1 .. ^i .. a1 x_n, a1 x_i)
      - sum_{i<=n} (-1)^{i+1} beta f(a1 x_1 .. ^i .. a1 x_n, a2 x_i . a2 x_{n+1})
      + sum_{i<j<=n} (-1)^{i+j} beta f([a2 x_i, a2 x_j]_C, a1 x_1 .. ^i ^j .., a1 x_{n+1})
    """
    if len(R.rho) != A.dim or f.dim_a != A.dim or f.dim_v != R.carrier_dim:
        raise DimensionError("cochain, algebra and representation dimensions disagree")
    n = f.degree
    dim = A.dim
    inv1 = [A.alpha_inv.column(i) for i in range(dim)]
    inv2 = [A.alpha_inv2.column(i) for i in range(dim)]
    bracket = commutator(A.product)
    coeffs: list = []
    for block in _tuples(dim, n):
        for last in range(dim):
            xs = list(block) + [last]
            total = zero_vector(R.carrier_dim)
            for i in range(n):
                sign = 1 if i % 2 == 0 else -1
                others = [inv1[x] for p, x in enumerate(xs[:n]) if p != i]
                t1 = R.rho[xs[i]].apply(f.evaluate(others + [inv1[last]]))
                t2 = R.mu[last].apply(f.evaluate(others + [inv1[xs[i]]]))
                prod = A.multiply(inv2[xs[i]], inv2[last])
                t3 = R.beta.apply(f.evaluate(others + [prod]))
                total = tuple(s + sign * (a + b - c) for s, a, b, c in zip(total, t1, t2, t3))
            for i in range(n):
                for j in range(i + 1, n):
                    br = bracket(inv2[xs[i]], inv2[xs[j]])
                    if is_zero(br):
                        continue
                    others = [inv1[x] for p, x in enumerate(xs[:n]) if p not in (i, j)]
                    t4 = R.beta.apply(f.evaluate([br] + others + [inv1[last]]))
                    total = vadd(total, t4 if (i + j) % 2 == 0 else vscale(-1, t4))
            coeffs.extend(total)
    return PreLieCochain(n + 1, dim, R.carrier_dim, tuple(coeffs))


def _guard(size: int, what: str) -> None:
    cap = max_cochain_dim()
    if size > cap:
        raise CochainSizeError(
            f"{what} has dimension {size}, above the cap of {cap} (set {MAX_COCHAIN_DIM_ENV})")


def pre_lie_coboundary_matrix(A: HomPreLieAlgebra, R: Representation, n: int) -> Matrix:
    """Matrix of ``\\partial: C^n -> C^{n+1}`` in the lexicographic cochain bases."""
    cols = prelie_cochain_dim(A.dim, R.carrier_dim, n)
    rows = prelie_cochain_dim(A.dim, R.carrier_dim, n + 1)
    _guard(max(rows, cols), f"C^{n}")
    columns = [pre_lie_coboundary(A, R, PreLieCochain.basis_element(n, A.dim, R.carrier_dim, c)).coeffs
               for c in range(cols)]
    return Matrix.from_columns(columns, rows) if columns else Matrix.zeros(rows, 0)


def pre_lie_coboundary_matrix_via_phi(A: HomPreLieAlgebra, R: Representation, n: int) -> Matrix:
    """The same matrix as ``Phi o d o Phi^-1`` on the Hom-Lie side."""
    g = HomLieAlgebra(commutator(A.product), A.alpha)
    hom_rep = induced_rep_on_hom(A, R)
    d = lie_coboundary_matrix(g, hom_rep, n - 1)
    p_src = phi_matrix(A.dim, R.carrier_dim, n)
    p_dst = phi_matrix(A.dim, R.carrier_dim, n + 1)
    if p_src.rows == 0:
        return Matrix.zeros(p_dst.rows, 0)
    if p_dst.rows == 0:
        return Matrix.zeros(0, p_src.rows)
    return p_dst @ d @ p_src.inverse()


def is_cocycle(A: HomPreLieAlgebra, R: Representation, f: PreLieCochain) -> bool:
    return pre_lie_coboundary(A, R, f).is_zero()


# -- cohomology tables ----------------------------------------------------------------

@dataclass(frozen=True)
class CohomologyRow:
    degree: int
    dim_cochains: int
    rank_coboundary: int
    dim_cocycles: int
    dim_coboundaries: int
    dim_cohomology: int


def _table(dims: list[int], ranks: list[int], first_degree: int) -> list[CohomologyRow]:
    rows = []
    for idx, (c, r) in enumerate(zip(dims, ranks)):
        z = c - r
        b = ranks[idx - 1] if idx > 0 else 0
        rows.append(CohomologyRow(first_degree + idx, c, r, z, b, z - b))
    return rows


def cohomology_table(A: HomPreLieAlgebra, R: Representation, n_max: int = 3) -> list[CohomologyRow]:
    """Dimensions of ``C^n, Z^n, B^n, H^n`` for ``n = 1..n_max``; ``H^1 = Z^1``."""
    if n_max < 1:
        raise ValueError("n_max must be at least 1")
    for n in range(1, n_max + 2):
        _guard(prelie_cochain_dim(A.dim, R.carrier_dim, n), f"C^{n}")
    dims = [prelie_cochain_dim(A.dim, R.carrier_dim, n) for n in range(1, n_max + 1)]
    ranks = [rank(pre_lie_coboundary_matrix(A, R, n)) for n in range(1, n_max + 1)]
    return _table(dims, ranks, 1)


def lie_cohomology_table(g: HomLieAlgebra, R: HomLieRepresentation, k_max: int) -> list[CohomologyRow]:
    """Dimensions for ``k = 0..k_max``; ``H^0 = Z^0``."""
    for k in range(0, k_max + 2):
        _guard(lie_cochain_dim(g.dim, R.carrier_dim, k), f"Lie C^{k}")
    dims = [lie_cochain_dim(g.dim, R.carrier_dim, k) for k in range(0, k_max + 1)]
    ranks = [rank(lie_coboundary_matrix(g, R, k)) for k in range(0, k_max + 1)]
    return _table(dims, ranks, 0)


def bilinear_to_cochain(omega, dim_v: int | None = None) -> PreLieCochain:
    return PreLieCochain.from_bilinear(omega, dim_v)


def linear_map_to_cochain(m: Matrix) -> PreLieCochain:
    """A linear map ``A -> V`` as a 1-cochain."""
    return PreLieCochain(1, m.cols, m.rows, hom_from_images(m.columns()))
