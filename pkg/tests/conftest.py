"""Shared algebras, operators and hypothesis strategies."""
import os
import sys

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from hompre import BilinearMap, HomPreLieAlgebra, Matrix
from hompre.formats import load_algebra, load_operator

sys.path.insert(0, os.path.dirname(__file__))

settings.register_profile(
    "default", max_examples=40, deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


def yau_twist(table, alpha: Matrix, name=None) -> HomPreLieAlgebra:
    """``(A, alpha o ., alpha)`` for a pre-Lie product and an automorphism ``alpha``."""
    n = len(table)
    return HomPreLieAlgebra([[alpha.apply(table[i][j]) for j in range(n)] for i in range(n)], alpha, name)


def transport(A: HomPreLieAlgebra, P: Matrix) -> HomPreLieAlgebra:
    """The isomorphic algebra ``x * y = P(P^-1 x . P^-1 y)``, ``alpha' = P alpha P^-1``."""
    Pi = P.inverse()
    prod = BilinearMap.from_function(A.dim, lambda x, y: P.apply(A.multiply(Pi.apply(x), Pi.apply(y))))
    return HomPreLieAlgebra(prod, P @ A.alpha @ Pi, A.name)


def truncated_novikov(n: int, lam: int) -> HomPreLieAlgebra:
    # basis t, t^2, .., t^n with t^a . t^b = b t^(a+b), twisted by t^a -> lam^a t^a
    def power(k):
        return [1 if k == i + 1 else 0 for i in range(n)]
    table = [[[b * c for c in power(a + b)] for b in range(1, n + 1)] for a in range(1, n + 1)]
    return yau_twist(table, Matrix.diag([lam ** a for a in range(1, n + 1)]), f"novikov_{n}_{lam}")


def upper_triangular_algebra(lam: int) -> HomPreLieAlgebra:
    # E11, E12, E22 with matrix multiplication, twisted by conjugation with diag(1, lam)
    prods = {(0, 0): [1, 0, 0], (0, 1): [0, 1, 0], (1, 2): [0, 1, 0], (2, 2): [0, 0, 1]}
    table = [[prods.get((i, j), [0, 0, 0]) for j in range(3)] for i in range(3)]
    return yau_twist(table, Matrix.diag([1, lam, 1]), f"upper_triangular_{lam}")


def catalog() -> dict[str, HomPreLieAlgebra]:
    algebras = {name: load_algebra(name) for name in
                ("example_3_4", "cyclic_twisted_3d", "zero_algebra_1d", "zero_algebra_2d")}
    algebras["unit_1d"] = HomPreLieAlgebra([[[1]]], Matrix.identity(1), "unit_1d")
    algebras["novikov_2_3"] = truncated_novikov(2, 3)
    algebras["novikov_3_2"] = truncated_novikov(3, 2)
    algebras["upper_triangular_3"] = upper_triangular_algebra(3)
    algebras["twisted_zero_2d"] = HomPreLieAlgebra.zero(2, Matrix([[2, 1], [1, 1]]), "twisted_zero_2d")
    algebras["example_3_4_moved"] = transport(algebras["example_3_4"], Matrix([[1, 2], [1, 3]]))
    return algebras


CATALOG = catalog()
SMALL = {k: v for k, v in CATALOG.items() if v.dim <= 2}


@pytest.fixture
def E() -> HomPreLieAlgebra:
    return load_algebra("example_3_4")


@pytest.fixture
def N() -> Matrix:
    return load_operator("example_5_5_N")


@pytest.fixture(params=sorted(CATALOG))
def algebra(request) -> HomPreLieAlgebra:
    return CATALOG[request.param]


@pytest.fixture(params=sorted(SMALL))
def small_algebra(request) -> HomPreLieAlgebra:
    return SMALL[request.param]


# -- strategies ---------------------------------------------------------------------

scalars = st.fractions(min_value=-4, max_value=4, max_denominator=3)
small_ints = st.integers(min_value=-2, max_value=2)


@st.composite
def matrices(draw, rows, cols, elements=scalars):
    return Matrix([[draw(elements) for _ in range(cols)] for _ in range(rows)])


@st.composite
def unimodular(draw, n):
    """Products of elementary matrices with small entries; always invertible."""
    M = Matrix.identity(n)
    for _ in range(draw(st.integers(0, 4))):
        i = draw(st.integers(0, n - 1))
        j = draw(st.integers(0, n - 1))
        if i == j:
            continue
        c = draw(small_ints)
        rows = Matrix.identity(n).tolist()
        rows[i][j] = c
        M = Matrix(rows) @ M
    return M


@st.composite
def algebras(draw, max_dim=3):
    """Catalog algebras moved by a random change of basis."""
    names = sorted(k for k, v in CATALOG.items() if v.dim <= max_dim)
    A = CATALOG[draw(st.sampled_from(names))]
    return transport(A, draw(unimodular(A.dim)))
