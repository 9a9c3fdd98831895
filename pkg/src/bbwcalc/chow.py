"""Exact Schubert calculus on Gr(k, n) and characteristic classes of bundle expressions.

Schubert classes sigma_lam are indexed by partitions inside the k x (n-k) box
(at most k rows, parts <= n-k), with c_i(Q) = sigma_i and c_i(U^dual) = sigma_{1^i}.
Equivalently sigma_lam = s_lam(z) where z are the Chern roots of U^dual, and
multiplication is Littlewood-Richardson with every nu having nu_1 > n-k dropped.

Chern roots: x (of Q) and y = -z (of U).  The relation c(U) c(Q) = 1 means a
symmetric function f of the Q-roots equals (omega f)(z), so
s_alpha(x) s_beta(y) = (-1)^|beta| s_alpha'(z) s_beta(z).
"""
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

import sympy

from .bundles import GrassmannianContext, Tensor, Q, U, character, dual, rank
from .errors import DegenerateInput, InternalInconsistency, InvalidInput, NotExpressible
from .symcore import Character, Functor, conjugate, lr_coefficients, plethysm_character, schur_expand


# --------------------------------------------------------------------------
# the Chow ring

def schubert_basis(ctx, degree):
    """Partitions of ``degree`` with at most k rows and parts at most n-k."""
    k, m = ctx.k, ctx.n - ctx.k

    def gen(remaining, max_part, rows):
        if remaining == 0:
            yield ()
            return
        if rows == 0:
            return
        for first in range(min(remaining, max_part), 0, -1):
            for rest in gen(remaining - first, first, rows - 1):
                yield (first,) + rest

    return list(gen(degree, m, k))


@lru_cache(maxsize=None)
def _schubert_product(lam, mu, k, m):
    return {nu: c for nu, c in lr_coefficients(lam, mu, max_rows=k).items() if not nu or nu[0] <= m}


@dataclass(frozen=True)
class ChowClass:
    """Exact rational combination of Schubert classes on ``ctx``."""

    ctx: GrassmannianContext
    coeffs: dict = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for lam, c in self.coeffs.items():
            lam = tuple(x for x in lam if x)
            c = Fraction(c)
            if c:
                if len(lam) > self.ctx.k or (lam and lam[0] > self.ctx.n - self.ctx.k):
                    raise InvalidInput(f"sigma{list(lam)} is outside the {self.ctx.k}x{self.ctx.n - self.ctx.k} box")
                clean[lam] = clean.get(lam, 0) + c
        object.__setattr__(self, "coeffs", {k: v for k, v in sorted(clean.items()) if v})

    @classmethod
    def sigma(cls, ctx, *parts):
        return cls(ctx, {tuple(parts): 1})

    @classmethod
    def scalar(cls, ctx, c):
        return cls(ctx, {(): c})

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = ChowClass.scalar(self.ctx, other)
        return isinstance(other, ChowClass) and self.ctx == other.ctx and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.ctx, tuple(self.coeffs.items())))

    def _coerce(self, other):
        if isinstance(other, (int, Fraction)):
            return ChowClass.scalar(self.ctx, other)
        if other.ctx != self.ctx:
            raise InvalidInput("classes live on different Grassmannians")
        return other

    def __add__(self, other):
        other = self._coerce(other)
        out = Counter(self.coeffs)
        for k, v in other.coeffs.items():
            out[k] += v
        return ChowClass(self.ctx, out)

    __radd__ = __add__

    def __neg__(self):
        return ChowClass(self.ctx, {k: -v for k, v in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return ChowClass(self.ctx, {k: v * other for k, v in self.coeffs.items()})
        return mult(self, other)

    __rmul__ = __mul__

    def __truediv__(self, c):
        return self * (Fraction(1) / Fraction(c))

    def __pow__(self, e):
        out = ChowClass.scalar(self.ctx, 1)
        for _ in range(e):
            out = out * self
        return out

    def part(self, degree):
        return ChowClass(self.ctx, {k: v for k, v in self.coeffs.items() if sum(k) == degree})

    def truncate(self, degree):
        return ChowClass(self.ctx, {k: v for k, v in self.coeffs.items() if sum(k) <= degree})

    @property
    def degrees(self):
        return sorted({sum(k) for k in self.coeffs})

    def by_degree(self):
        """{degree: {partition: coefficient}} (the graded view)."""
        out = {}
        for lam, c in self.coeffs.items():
            out.setdefault(sum(lam), {})[lam] = c
        return out

    def __repr__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for lam, c in self.coeffs.items():
            name = "1" if not lam else "s" + "".join(map(str, lam)) if max(lam) < 10 else f"s{list(lam)}"
            terms.append(f"{c}*{name}")
        return " + ".join(terms)


def mult(a, b):
    """Schubert-basis product with the box cutoff."""
    if a.ctx != b.ctx:
        raise InvalidInput("classes live on different Grassmannians")
    k, m = a.ctx.k, a.ctx.n - a.ctx.k
    top = a.ctx.dim
    out = Counter()
    for lam, c in a.coeffs.items():
        for mu, d in b.coeffs.items():
            if sum(lam) + sum(mu) > top:
                continue
            for nu, e in _schubert_product(lam, mu, k, m).items():
                out[nu] += c * d * e
    return ChowClass(a.ctx, out)


def integrate(a):
    """Coefficient of the point class sigma_{(n-k)^k}."""
    point = (a.ctx.n - a.ctx.k,) * a.ctx.k
    return a.coeffs.get(point, Fraction(0))


def sigma(ctx, *parts):
    return ChowClass.sigma(ctx, *parts)


# --------------------------------------------------------------------------
# polynomials in Chern roots

def _linear_power(weight, d):
    """Monomial expansion of (sum_i weight_i v_i)^d with integer coefficients."""
    support = [(i, w) for i, w in enumerate(weight) if w]
    n = len(weight)
    out = {}
    if d == 0:
        return {(0,) * n: 1}
    if not support:
        return out

    def rec(idx, remaining, exps, coef):
        i, w = support[idx]
        if idx == len(support) - 1:
            e = list(exps)
            e[i] = remaining
            out[tuple(e)] = out.get(tuple(e), 0) + coef * w ** remaining
            return
        for t in range(remaining + 1):
            e = list(exps)
            e[i] = t
            rec(idx + 1, remaining - t, e, coef * comb(remaining, t) * w ** t)

    rec(0, d, [0] * n, 1)
    return out


def _poly_mul(a, b, max_degree):
    out = Counter()
    for ea, ca in a.items():
        da = sum(ea)
        for eb, cb in b.items():
            if da + sum(eb) <= max_degree:
                out[tuple(x + y for x, y in zip(ea, eb))] += ca * cb
    return {k: v for k, v in out.items() if v}


def _roots_to_chow(poly, ctx):
    """A homogeneous bi-symmetric integer polynomial in (x | y) as a Chow class."""
    if not poly:
        return ChowClass(ctx)
    expansion = schur_expand(Character(poly, ctx.blocks), virtual=True)
    nq, k, m = ctx.rank_Q, ctx.k, ctx.n - ctx.k
    out = Counter()
    for w, c in expansion.terms.items():
        alpha, beta = w[:nq], w[nq:]
        alpha_c = conjugate(alpha)
        beta_p = tuple(b for b in beta if b)
        if len(alpha_c) > k:
            continue
        sign = -1 if sum(beta_p) % 2 else 1
        for nu, e in _schubert_product(alpha_c, beta_p, k, m).items():
            out[nu] += sign * c * e
    return ChowClass(ctx, out)


def _as_char(expr_or_char, ctx):
    if isinstance(expr_or_char, Character):
        return expr_or_char
    return character(expr_or_char, ctx)


def chern_character(expr, ctx, truncation_degree=None):
    """ch(expr) = sum over weights w of exp(w . roots), truncated and reduced to Schubert classes."""
    top = ctx.dim if truncation_degree is None else truncation_degree
    if top > ctx.dim:
        raise InvalidInput(f"truncation degree {top} exceeds dim {ctx}")
    char = _as_char(expr, ctx)
    total = ChowClass(ctx)
    for d in range(top + 1):
        poly = Counter()
        for w, c in char.terms.items():
            for mono, a in _linear_power(w, d).items():
                poly[mono] += c * a
        total = total + _roots_to_chow({k: v for k, v in poly.items() if v}, ctx) / factorial(d)
    return total


def total_chern(expr, ctx, truncation_degree=None):
    """c(expr) = prod over weights w of (1 + w . roots), truncated and reduced to Schubert classes."""
    top = ctx.dim if truncation_degree is None else truncation_degree
    if top > ctx.dim:
        raise InvalidInput(f"truncation degree {top} exceeds dim {ctx}")
    char = _as_char(expr, ctx)
    zero = (0,) * ctx.n
    poly = {zero: 1}
    for w, c in char.terms.items():
        if c < 0:
            raise InvalidInput("total Chern class of a virtual character")
        factor = {zero: 1}
        factor.update(_linear_power(w, 1))
        for _ in range(c):
            poly = _poly_mul(poly, factor, top)
    total = ChowClass(ctx)
    for d in range(top + 1):
        part = {k: v for k, v in poly.items() if sum(k) == d}
        total = total + _roots_to_chow(part, ctx)
    return total


def chern_from_character_series(ch, rank_):
    """Total Chern class from the Chern character via Newton's identities (independent route).

    log c = sum_{d>=1} (-1)^(d-1) (d-1)! ch_d.
    """
    ctx = ch.ctx
    log_c = ChowClass(ctx)
    for d in range(1, ctx.dim + 1):
        log_c = log_c + ch.part(d) * ((-1) ** (d - 1) * factorial(d - 1))
    return exp_class(log_c)


def exp_class(a):
    """exp of a class with no degree-0 part."""
    if a.part(0):
        raise InvalidInput("exp of a class with a constant term")
    out = ChowClass.scalar(a.ctx, 1)
    term = ChowClass.scalar(a.ctx, 1)
    for m in range(1, a.ctx.dim + 1):
        term = term * a / m
        if not term:
            break
        out = out + term
    return out


def inverse_class(a):
    """1/a for a class with constant term 1."""
    if a.part(0) != ChowClass.scalar(a.ctx, 1):
        raise InvalidInput("inverse needs constant term 1")
    nil = a - 1
    out = ChowClass.scalar(a.ctx, 1)
    power = ChowClass.scalar(a.ctx, 1)
    for _ in range(a.ctx.dim):
        power = power * (-nil)
        if not power:
            break
        out = out + power
    return out


# --------------------------------------------------------------------------
# Todd classes

def _series_inverse(a, n):
    out = [Fraction(0)] * n
    out[0] = 1 / Fraction(a[0])
    for i in range(1, n):
        out[i] = -sum(a[j] * out[i - j] for j in range(1, i + 1) if j < len(a)) * out[0]
    return out


@lru_cache(maxsize=None)
def _log_todd_coefficients(n):
    """t_j with log(x / (1 - e^-x)) = sum_j t_j x^j, for j < n."""
    g = [Fraction((-1) ** m, factorial(m + 1)) for m in range(n + 1)]  # (1 - e^-x)/x
    f = _series_inverse(g, n + 1)
    # log f = integral(f'/f)
    df = [f[i + 1] * (i + 1) for i in range(n)]
    inv_f = _series_inverse(f, n)
    q = [sum(df[j] * inv_f[i - j] for j in range(i + 1)) for i in range(n)]
    return tuple([Fraction(0)] + [q[j - 1] / j for j in range(1, n)])


def todd_class(expr, ctx, sign=1):
    """td(expr) (``sign=-1`` gives td(expr)^-1) via td = exp(sum_j t_j j! ch_j)."""
    ch = chern_character(expr, ctx)
    t = _log_todd_coefficients(ctx.dim + 1)
    log_td = ChowClass(ctx)
    for j in range(1, ctx.dim + 1):
        log_td = log_td + ch.part(j) * (sign * t[j] * factorial(j))
    return exp_class(log_td)


# --------------------------------------------------------------------------
# discriminants

def discriminant(expr, ctx):
    """Delta = ch_1^2 - 2 r ch_2 (a degree-2 class)."""
    r = rank(expr, ctx) if not isinstance(expr, Character) else expr.dimension
    if r < 1:
        raise InvalidInput("discriminant of a rank-0 bundle")
    ch = chern_character(expr, ctx, min(2, ctx.dim))
    return ch.part(1) * ch.part(1) - ch.part(2) * (2 * r)


def formal_ch12(char):
    """(rank, ch_1, ch_2) of a character viewed in formal Chern roots, as {monomial: Fraction} polynomials."""
    ch1, ch2 = Counter(), Counter()
    for w, c in char.terms.items():
        for mono, a in _linear_power(w, 1).items():
            ch1[mono] += c * a
        for mono, a in _linear_power(w, 2).items():
            ch2[mono] += Fraction(c * a, 2)
    return char.dimension, _clean(ch1), _clean(ch2)


def _clean(p):
    return {k: Fraction(v) for k, v in p.items() if v}


def _padd(*terms):
    out = Counter()
    for coef, p in terms:
        for k, v in p.items():
            out[k] += coef * v
    return _clean(out)


def _psquare(p):
    out = Counter()
    for a, ca in p.items():
        for b, cb in p.items():
            out[tuple(x + y for x, y in zip(a, b))] += ca * cb
    return _clean(out)


def formal_discriminant(char):
    r, ch1, ch2 = formal_ch12(char)
    return _padd((1, _psquare(ch1)), (-2 * r, ch2))


def wedge_lambda_formula(r, p):
    if not 1 <= p <= r:
        raise InvalidInput(f"wedge degree p={p} must satisfy 1 <= p <= r={r}")
    if p == 1:
        return Fraction(1)
    return Fraction(comb(r - 1, p) * comb(r - 2, p - 2), p - 1)


def wedge_discriminant_coefficient(r, p):
    """lambda_p with Delta(wedge^p F) = lambda_p Delta(F) for F of rank r, checked in formal roots."""
    lam = wedge_lambda_formula(r, p)
    base = Character.standard(r)
    lhs = formal_discriminant(plethysm_character(Functor.wedge(p), base))
    rhs = _padd((lam, formal_discriminant(base)))
    if lhs != rhs:
        raise InternalInconsistency(f"Delta(wedge^{p}) != {lam} Delta for rank {r}")
    return lam


def sym2_discriminant_coefficient(r):
    """C(r+2, 2), checked the same way."""
    if r < 1:
        raise InvalidInput("rank must be positive")
    lam = Fraction(comb(r + 2, 2))
    base = Character.standard(r)
    lhs = formal_discriminant(plethysm_character(Functor.sym(2), base))
    if lhs != _padd((lam, formal_discriminant(base))):
        raise InternalInconsistency(f"Delta(Sym^2) != {lam} Delta for rank {r}")
    return lam


# --------------------------------------------------------------------------
# the zero locus

@dataclass(frozen=True)
class ZeroLocusClasses:
    c_TX: ChowClass
    c2X: ChowClass
    c4X: ChowClass
    ctopN: ChowClass
    h: ChowClass


@lru_cache(maxsize=32)
def zero_locus_classes(setup):
    """c(T_X) = c(T_G) / c(N) restricted from G, with T_G = U^dual (x) Q."""
    ctx = setup.ctx
    c_tg = total_chern(Tensor(dual(U()), Q()), ctx)
    c_n = total_chern(setup.normal_bundle, ctx)
    c_tx = (c_tg * inverse_class(c_n)).truncate(setup.dim_X)
    return ZeroLocusClasses(
        c_TX=c_tx,
        c2X=c_tx.part(2),
        c4X=c_tx.part(4),
        ctopN=c_n.part(setup.codim),
        h=sigma(ctx, 1),
    )


def integrate_on_X(setup, a):
    """int_X a|_X = int_G a . c_top(N)."""
    return integrate(a * zero_locus_classes(setup).ctopN)


def hrr_euler(setup, expr):
    """chi(X, expr|_X) = int_G ch(expr) td(T_G) td(N)^-1 c_top(N)."""
    ctx = setup.ctx
    ch = chern_character(expr, ctx)
    td = todd_class(Tensor(dual(U()), Q()), ctx) * todd_class(setup.normal_bundle, ctx, sign=-1)
    value = integrate(ch * td * zero_locus_classes(setup).ctopN)
    if value.denominator != 1:
        raise InternalInconsistency(f"Riemann-Roch gave a non-integer Euler characteristic {value}")
    return value


@dataclass(frozen=True)
class ModularityCertificate:
    lam: Fraction
    certified: bool
    pairings: dict  # Schubert class -> (int Delta.w, int c2X.w) on X
    assumption: str = (
        "vanishing of all pairings with restricted degree-2 classes is taken to mean "
        "Delta - lambda c2(X) = 0 in H^4(X); injectivity of restriction on span(h^2, c2(X)) is assumed"
    )


def modularity_check(setup, expr):
    ctx = setup.ctx
    delta = discriminant(expr, ctx)
    c2x = zero_locus_classes(setup).c2X
    pairings = {}
    for lam in schubert_basis(ctx, setup.dim_X - 2):
        w = sigma(ctx, *lam)
        pairings[lam] = (integrate_on_X(setup, delta * w), integrate_on_X(setup, c2x * w))
    ref = next(((a, b) for a, b in pairings.values() if b), None)
    if ref is None:
        raise DegenerateInput("c2(X) pairs to zero with every degree-2 class; lambda is undetermined")
    lam_value = ref[0] / ref[1]
    certified = all(a == lam_value * b for a, b in pairings.values())
    return ModularityCertificate(lam_value, certified, pairings)


# --------------------------------------------------------------------------
# coordinates on X

H_BASIS = {
    0: [("1", ())],
    1: [("h", (1,))],
    2: [("h^2", (1, 1)), ("h2", (2,))],
    3: [("h3", (3,))],
    4: [("h*h3", (1, 3))],
}

INTRINSIC_BASIS = {
    0: ["1"],
    1: ["h"],
    2: ["h^2", "c2X"],
    3: ["h*c2X"],
    4: ["c4X"],
}


@dataclass(frozen=True)
class BasisCoordinates:
    """Degree-wise coordinates of a class restricted to X in a named basis."""

    coords: dict  # degree -> {label: Fraction}

    def __getitem__(self, degree):
        return self.coords.get(degree, {})

    def __str__(self):
        parts = []
        for d in sorted(self.coords):
            for label, c in self.coords[d].items():
                if c:
                    parts.append(f"{c}" if label == "1" else f"({c})*{label}")
        return " + ".join(parts) or "0"


def _h_monomial(ctx, indices):
    out = ChowClass.scalar(ctx, 1)
    for i in indices:
        out = out * sigma(ctx, i)
    return out


def h_basis_classes(setup):
    ctx = setup.ctx
    return {d: [(label, _h_monomial(ctx, idx)) for label, idx in basis] for d, basis in H_BASIS.items()}


def intrinsic_basis_classes(setup):
    z = zero_locus_classes(setup)
    one = ChowClass.scalar(setup.ctx, 1)
    named = {"1": one, "h": z.h, "h^2": z.h * z.h, "c2X": z.c2X, "h*c2X": z.h * z.c2X, "c4X": z.c4X}
    return {d: [(label, named[label]) for label in labels] for d, labels in INTRINSIC_BASIS.items()}


def express_on_X(setup, a, basis):
    """Coordinates of a|_X in ``basis`` ({degree: [(label, ambient class)]}) by pairing on X."""
    ctx = setup.ctx
    coords = {}
    for d in range(setup.dim_X + 1):
        part = a.part(d)
        elems = basis.get(d, [])
        tests = [sigma(ctx, *lam) for lam in schubert_basis(ctx, setup.dim_X - d)]
        rhs = [integrate_on_X(setup, part * t) for t in tests]
        if not elems:
            if any(rhs):
                raise NotExpressible(f"degree {d} part is nonzero on X but the basis is empty", {d: rhs})
            continue
        matrix = sympy.Matrix([[sympy.Rational(integrate_on_X(setup, b * t)) for _, b in elems] for t in tests])
        vec = sympy.Matrix([sympy.Rational(v) for v in rhs])
        try:
            sol, params = matrix.gauss_jordan_solve(vec)
        except ValueError:
            residual = {str(t): r for t, r in zip(tests, rhs)}
            raise NotExpressible(f"degree {d} part of the class is outside the span of {[l for l, _ in elems]}",
                                 {d: residual}) from None
        if params.shape[0]:
            raise NotExpressible(f"basis in degree {d} is numerically degenerate on X")
        coords[d] = {label: Fraction(int(v.p), int(v.q)) for (label, _), v in zip(elems, sol)}
    return BasisCoordinates(coords)


def _require_fourfold(setup):
    if setup.dim_X != 4:
        raise InvalidInput(f"the named bases are defined for fourfolds, X has dimension {setup.dim_X}")


def to_h_basis(setup, a):
    """Coordinates in h = c_1(Q|_X), h_i = c_i(Q|_X): {1; h; h^2, h2; h3; h*h3}."""
    _require_fourfold(setup)
    return express_on_X(setup, a, h_basis_classes(setup))


def to_intrinsic_basis(setup, a):
    """Coordinates in {1; h; h^2, c2(X); h*c2(X); c4(X)}."""
    _require_fourfold(setup)
    return express_on_X(setup, a, intrinsic_basis_classes(setup))
