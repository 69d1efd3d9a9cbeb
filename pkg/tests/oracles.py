"""Reference implementations on top of sympy, independent of the package code.

Cochains are generic: one sympy symbol per stored coefficient. A cochain is
evaluated on arbitrary vectors through minors (an alternating multilinear map
is fixed by its values on increasing basis blocks, and the coefficient of a
block is the corresponding minor of the argument matrix). Coboundary matrices
are then read off as Jacobians of the symbolic output.
"""
from fractions import Fraction
from itertools import combinations

import sympy as sp


def Q(x):
    if isinstance(x, sp.Basic):
        return sp.Rational(x)
    x = Fraction(x)
    return sp.Rational(x.numerator, x.denominator)


def smat(m):
    """sympy copy of a package Matrix (or nested rows)."""
    rows = m.tolist() if hasattr(m, "tolist") else m
    return sp.Matrix([[Q(x) for x in row] for row in rows])


def to_fraction_rows(m):
    return [[Fraction(int(x.p), int(x.q)) for x in m.row(r)] for r in range(m.rows)]


class SymAlgebra:
    """Structure constants and twist as sympy objects."""

    def __init__(self, table, alpha):
        self.n = len(table)
        self.table = [[sp.Matrix([Q(c) for c in cell]) for cell in row] for row in table]
        self.alpha = smat(alpha)
        self.a1 = self.alpha.inv()
        self.a2 = self.a1 * self.a1

    @classmethod
    def of(cls, A):
        table = A.product.table if hasattr(A, "product") else A.bracket.table
        return cls(table, A.alpha)

    def e(self, i):
        v = sp.zeros(self.n, 1)
        v[i] = 1
        return v

    def mul(self, x, y):
        out = sp.zeros(self.n, 1)
        for i in range(self.n):
            for j in range(self.n):
                if x[i] != 0 and y[j] != 0:
                    out += x[i] * y[j] * self.table[i][j]
        return out

    def br(self, x, y):
        return self.mul(x, y) - self.mul(y, x)


class SymRep:
    def __init__(self, beta, rho, mu=None):
        self.beta = smat(beta)
        self.rho = [smat(r) for r in rho]
        self.mu = None if mu is None else [smat(m) for m in mu]
        self.m = self.beta.rows

    @classmethod
    def of(cls, R):
        return cls(R.beta, R.rho, getattr(R, "mu", None))

    def act(self, mats, x):
        out = sp.zeros(self.m, self.m)
        for c, M in zip(x, mats):
            if c != 0:
                out += c * M
        return out


class GenericCochain:
    """``k`` alternating slots, optionally followed by one free slot."""

    def __init__(self, k, dim_a, dim_v, free_slot, prefix="f"):
        self.k, self.dim_a, self.dim_v, self.free = k, dim_a, dim_v, free_slot
        self.blocks = list(combinations(range(dim_a), k))
        self.symbols = []
        self._values = {}
        tails = range(dim_a) if free_slot else [None]
        for b in self.blocks:
            for j in tails:
                col = []
                for r in range(dim_v):
                    s = sp.Symbol(f"{prefix}_{'_'.join(map(str, b))}_{j}_{r}")
                    self.symbols.append(s)
                    col.append(s)
                self._values[(b, j)] = sp.Matrix(col)

    def __call__(self, args, last=None):
        total = sp.zeros(self.dim_v, 1)
        M = sp.Matrix.hstack(*args) if args else None
        for b in self.blocks:
            coef = M.extract(list(b), list(range(self.k))).det() if self.k else 1
            if coef == 0:
                continue
            if self.free:
                for j in range(self.dim_a):
                    if last[j] != 0:
                        total += coef * last[j] * self._values[(b, j)]
            else:
                total += coef * self._values[(b, None)]
        return total


def _jacobian(outputs, symbols):
    if not outputs or not symbols:
        return sp.zeros(len(outputs), len(symbols))
    return sp.Matrix(outputs).jacobian(symbols)


def prelie_coboundary_matrix(alg: SymAlgebra, rep: SymRep, n: int):
    """Matrix of the Hom-pre-Lie coboundary on ``n``-cochains, straight from the
    four-sum formula (first ``n - 1`` slots alternating, last slot free)."""
    f = GenericCochain(n - 1, alg.n, rep.m, True)
    a1, a2, beta = alg.a1, alg.a2, rep.beta
    outputs = []
    for block in combinations(range(alg.n), n):
        for last in range(alg.n):
            x = [alg.e(i) for i in block] + [alg.e(last)]
            xl = x[n]
            val = sp.zeros(rep.m, 1)
            for i in range(n):
                sign = (-1) ** i
                hat = [a1 * x[p] for p in range(n) if p != i]
                val += sign * rep.act(rep.rho, x[i]) * f(hat, a1 * xl)
                val += sign * rep.act(rep.mu, xl) * f(hat, a1 * x[i])
                val -= sign * beta * f(hat, alg.mul(a2 * x[i], a2 * xl))
            for i in range(n):
                for j in range(i + 1, n):
                    hat = [a1 * x[p] for p in range(n) if p not in (i, j)]
                    val += (-1) ** (i + j) * beta * f([alg.br(a2 * x[i], a2 * x[j])] + hat, a1 * xl)
            outputs.extend(sp.expand(v) for v in val)
    return _jacobian(outputs, f.symbols)


def lie_coboundary_matrix(alg: SymAlgebra, bracket, rep: SymRep, k: int):
    """Hom-Lie coboundary on ``k``-cochains; ``bracket(x, y)`` on sympy columns."""
    f = GenericCochain(k, alg.n, rep.m, False)
    a1, a2, beta = alg.a1, alg.a2, rep.beta
    outputs = []
    for block in combinations(range(alg.n), k + 1):
        x = [alg.e(i) for i in block]
        val = sp.zeros(rep.m, 1)
        for i in range(k + 1):
            hat = [a1 * x[p] for p in range(k + 1) if p != i]
            val += (-1) ** i * rep.act(rep.rho, x[i]) * f(hat)
        for i in range(k + 1):
            for j in range(i + 1, k + 1):
                hat = [a1 * x[p] for p in range(k + 1) if p not in (i, j)]
                val += (-1) ** (i + j) * beta * f([bracket(a2 * x[i], a2 * x[j])] + hat)
        outputs.extend(sp.expand(v) for v in val)
    return _jacobian(outputs, f.symbols)


def hom_rep(alg: SymAlgebra, rep: SymRep) -> SymRep:
    """Induced representation of the commutator algebra on ``Hom(A, V)``,
    flattened with ``f(e_j)_r`` at ``j * dim V + r``."""
    n, m = alg.n, rep.m
    syms = sp.symbols(f"h0:{n * m}")
    F = sp.Matrix(m, n, lambda r, j: syms[j * m + r])  # column j is f(e_j)

    def flat(G):
        return [sp.expand(G[r, j]) for j in range(n) for r in range(m)]

    ad = rep.beta * F * alg.a1
    twist = _jacobian(flat(ad), syms)
    actions = []
    for i in range(n):
        x = alg.e(i)
        cols = []
        for j in range(n):
            y = alg.e(j)
            cols.append(rep.act(rep.rho, x) * F * (alg.a1 * y)
                        + rep.act(rep.mu, y) * F * (alg.a1 * x)
                        - ad * (alg.a1 * alg.mul(x, y)))
        actions.append(_jacobian(flat(sp.Matrix.hstack(*cols)), syms))
    return SymRep(twist, actions)


def rank(m) -> int:
    return m.rank() if m.rows and m.cols else 0


def cohomology_dims(mats):
    """``dim H`` per degree from consecutive coboundary matrices ``d_0, d_1, ...``;
    the first matrix has nothing mapping into it."""
    dims = []
    prev = 0
    for d in mats:
        dims.append(d.cols - rank(d) - prev)
        prev = rank(d)
    return dims


def derivation_space_dim(alg: SymAlgebra) -> int:
    """Dimension of ``{D : D(x . y) = D(x) . y + x . D(y)}`` for untwisted algebras."""
    n = alg.n
    syms = sp.symbols(f"d0:{n * n}")
    D = sp.Matrix(n, n, syms)
    eqs = []
    for i in range(n):
        for j in range(n):
            x, y = alg.e(i), alg.e(j)
            eqs.extend(D * alg.mul(x, y) - alg.mul(D * x, y) - alg.mul(x, D * y))
    J = _jacobian([sp.expand(e) for e in eqs], list(syms))
    return n * n - rank(J)


# -- identities with a formal parameter -------------------------------------------

t = sp.Symbol("t")


def bilinear_fn(*tables_with_coeffs):
    """``(x, y) -> sum c * table(x, y)`` for pairs ``(c, table)``; ``c`` may involve ``t``."""
    parts = [(c, [[sp.Matrix([Q(v) for v in cell]) for cell in row] for row in table])
             for c, table in tables_with_coeffs]

    def f(x, y):
        n = len(x)
        out = sp.zeros(len(parts[0][1][0][0]), 1)
        for c, tab in parts:
            for i in range(n):
                for j in range(n):
                    if x[i] != 0 and y[j] != 0:
                        out += c * x[i] * y[j] * tab[i][j]
        return out
    return f


def _basis(n):
    return [sp.Matrix([1 if k == i else 0 for k in range(n)]) for i in range(n)]


def _vanishes_for_all_t(exprs) -> bool:
    return all(sp.Poly(sp.expand(e), t).is_zero for e in exprs)


def is_hom_pre_lie_for_all_t(mul, alpha) -> bool:
    alpha = smat(alpha)
    e = _basis(alpha.rows)
    exprs = []
    for x in e:
        for y in e:
            exprs.extend(alpha * mul(x, y) - mul(alpha * x, alpha * y))
            for z in e:
                lhs = mul(mul(x, y), alpha * z) - mul(alpha * x, mul(y, z))
                rhs = mul(mul(y, x), alpha * z) - mul(alpha * y, mul(x, z))
                exprs.extend(lhs - rhs)
    return _vanishes_for_all_t(exprs)


def is_hom_lie_for_all_t(br, alpha) -> bool:
    alpha = smat(alpha)
    e = _basis(alpha.rows)
    exprs = []
    for x in e:
        for y in e:
            exprs.extend(br(x, y) + br(y, x))
            exprs.extend(alpha * br(x, y) - br(alpha * x, alpha * y))
            for z in e:
                exprs.extend(br(alpha * x, br(y, z)) + br(alpha * y, br(z, x)) + br(alpha * z, br(x, y)))
    return _vanishes_for_all_t(exprs)


def is_morphism_for_all_t(phi, mul_src, mul_dst, alpha) -> bool:
    """``phi(x *src y) = phi(x) *dst phi(y)`` and ``phi alpha = alpha phi``; ``phi`` a sympy matrix."""
    alpha = smat(alpha)
    e = _basis(alpha.rows)
    exprs = list(phi * alpha - alpha * phi)
    for x in e:
        for y in e:
            exprs.extend(phi * mul_src(x, y) - mul_dst(phi * x, phi * y))
    return _vanishes_for_all_t(exprs)


# -- O-operators and Hessian forms --------------------------------------------------

def o_operator_residuals(alg: SymAlgebra, rep: SymRep, T):
    """All entries of ``T beta - alpha T`` and of the O-operator identity on basis pairs."""
    T = smat(T)
    out = list(T * rep.beta - alg.alpha * T)
    for a in range(rep.m):
        for b in range(rep.m):
            u, v = sp.eye(rep.m)[:, a], sp.eye(rep.m)[:, b]
            Tu, Tv = T * u, T * v
            inner = rep.act(rep.rho, Tu) * v + rep.act(rep.mu, Tv) * u
            out.extend(alg.mul(Tu, Tv) - T * inner)
    return out


def is_o_operator(alg: SymAlgebra, rep: SymRep, T) -> bool:
    return all(sp.simplify(r) == 0 for r in o_operator_residuals(alg, rep, T))


def hessian_space_dim(alg: SymAlgebra) -> int:
    """Dimension of the symmetric, twist invariant forms obeying the cocycle identity."""
    n = alg.n
    syms = {}
    B = sp.zeros(n, n)
    for i in range(n):
        for j in range(i, n):
            s = sp.Symbol(f"b{i}{j}")
            syms[s] = None
            B[i, j] = B[j, i] = s
    eqs = list(alg.alpha.T * B * alg.alpha - B)
    form = lambda x, y: (x.T * B * y)[0, 0]  # noqa: E731
    for i in range(n):
        for j in range(n):
            for k in range(n):
                x, y, z = alg.e(i), alg.e(j), alg.e(k)
                eqs.append(form(alg.mul(x, y), alg.alpha * z) - form(alg.alpha * x, alg.mul(y, z))
                           - form(alg.mul(y, x), alg.alpha * z) + form(alg.alpha * y, alg.mul(x, z)))
    eqs = [e for e in eqs if e != 0]
    if not eqs:
        return len(syms)
    M, _ = sp.linear_eq_to_matrix(eqs, list(syms))
    return len(syms) - M.rank()
