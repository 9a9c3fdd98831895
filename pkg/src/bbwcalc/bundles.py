"""Homogeneous bundles on Gr(k, n) and their decomposition into irreducibles.

An expression is a small immutable tree over the tautological sub-bundle ``U``
(rank k), the quotient ``Q`` (rank n-k) and line bundles ``O(t)``.  Its
character lives on GL(n-k) x GL(k): the first n-k coordinates are Q-weights,
the last k are U-weights.  The convention O(-1) = det U fixes where twists go.
"""
from collections import Counter
from dataclasses import dataclass

from .errors import InvalidInput, StructuralError
from .symcore import (
    Character,
    Functor,
    Partition,
    is_dominant,
    plethysm_character,
    rank_of_functor,
    schur_expand,
    weyl_dim,
)


@dataclass(frozen=True)
class GrassmannianContext:
    k: int
    n: int

    def __post_init__(self):
        if not 0 < self.k < self.n:
            raise InvalidInput(f"Gr({self.k},{self.n}) needs 0 < k < n")

    @property
    def rank_U(self):
        return self.k

    @property
    def rank_Q(self):
        return self.n - self.k

    @property
    def dim(self):
        return self.k * (self.n - self.k)

    @property
    def blocks(self):
        return (self.n - self.k, self.k)

    def __str__(self):
        return f"Gr({self.k},{self.n})"


# --------------------------------------------------------------------------
# expression tree

class BundleExpr:
    """Base class of expression nodes; ``str()`` prints the DSL normal form."""

    precedence = 3

    def __mul__(self, other):
        return Tensor(self, other)

    def __add__(self, other):
        return DirectSum(self, other)


@dataclass(frozen=True)
class U(BundleExpr):
    def __str__(self):
        return "U"


@dataclass(frozen=True)
class Q(BundleExpr):
    def __str__(self):
        return "Q"


@dataclass(frozen=True)
class O(BundleExpr):
    t: int = 0

    def __str__(self):
        return f"O({self.t})"


@dataclass(frozen=True)
class Dual(BundleExpr):
    arg: BundleExpr

    def __str__(self):
        return f"dual({self.arg})"


@dataclass(frozen=True)
class Tensor(BundleExpr):
    left: BundleExpr
    right: BundleExpr
    precedence = 2

    def __str__(self):
        return f"{_wrap(self.left, 2, False)}*{_wrap(self.right, 2, True)}"


@dataclass(frozen=True)
class DirectSum(BundleExpr):
    left: BundleExpr
    right: BundleExpr
    precedence = 1

    def __str__(self):
        return f"{_wrap(self.left, 1, False)}+{_wrap(self.right, 1, True)}"


def _wrap(e, prec, right):
    if e.precedence < prec or (right and e.precedence == prec):
        return f"({e})"
    return str(e)


@dataclass(frozen=True)
class Wedge(BundleExpr):
    p: int
    arg: BundleExpr

    def __post_init__(self):
        if self.p < 0:
            raise InvalidInput(f"wedge degree {self.p} < 0")

    def __str__(self):
        return f"wedge({self.p},{self.arg})"


@dataclass(frozen=True)
class Sym(BundleExpr):
    p: int
    arg: BundleExpr

    def __post_init__(self):
        if self.p < 0:
            raise InvalidInput(f"sym degree {self.p} < 0")

    def __str__(self):
        return f"sym({self.p},{self.arg})"


@dataclass(frozen=True)
class Schur(BundleExpr):
    shape: Partition
    arg: BundleExpr

    def __post_init__(self):
        if not isinstance(self.shape, Partition):
            object.__setattr__(self, "shape", Partition(tuple(self.shape)))

    def __str__(self):
        return f"schur([{','.join(map(str, self.shape.parts))}],{self.arg})"


@dataclass(frozen=True)
class End0(BundleExpr):
    arg: BundleExpr

    def __str__(self):
        return f"end0({self.arg})"


def dual(e):
    """Dual of ``e`` with the dual pushed towards the leaves where that is an identity."""
    if isinstance(e, Dual):
        return e.arg
    if isinstance(e, O):
        return O(-e.t)
    if isinstance(e, Tensor):
        return Tensor(dual(e.left), dual(e.right))
    if isinstance(e, DirectSum):
        return DirectSum(dual(e.left), dual(e.right))
    if isinstance(e, Wedge):
        return Wedge(e.p, dual(e.arg))
    if isinstance(e, Sym):
        return Sym(e.p, dual(e.arg))
    if isinstance(e, Schur):
        return Schur(e.shape, dual(e.arg))
    if isinstance(e, End0):
        return e
    return Dual(e)


# --------------------------------------------------------------------------
# summands

@dataclass(frozen=True, order=True)
class IrrSummand:
    """Sigma_alpha Q (x) Sigma_beta U with a multiplicity."""

    alpha: tuple
    beta: tuple
    multiplicity: int = 1

    def __post_init__(self):
        object.__setattr__(self, "alpha", tuple(self.alpha))
        object.__setattr__(self, "beta", tuple(self.beta))
        if not (is_dominant(self.alpha) and is_dominant(self.beta)):
            raise InvalidInput(f"non-dominant summand weight {self.alpha}|{self.beta}")
        if self.multiplicity < 1:
            raise InvalidInput("summand multiplicity must be positive")

    @property
    def weight(self):
        """The concatenated weight (alpha | beta) fed to Borel-Bott-Weil."""
        return self.alpha + self.beta

    @property
    def rank(self):
        return weyl_dim(self.alpha, len(self.alpha)) * weyl_dim(self.beta, len(self.beta))

    def normal(self):
        """Twist-normal form: move det Q powers into U via det Q = det U^-1, so alpha ends in 0."""
        c = self.alpha[-1] if self.alpha else 0
        if c == 0:
            return self
        return IrrSummand(tuple(a - c for a in self.alpha), tuple(b - c for b in self.beta), self.multiplicity)

    def twisted(self, t):
        """Tensor with O(t)."""
        return IrrSummand(self.alpha, tuple(b - t for b in self.beta), self.multiplicity)

    def is_trivial(self):
        s = self.normal()
        return not any(s.alpha) and not any(s.beta)

    def __str__(self):
        head = f"{self.multiplicity}*" if self.multiplicity != 1 else ""
        return f"{head}S{list(self.alpha)}Q(x)S{list(self.beta)}U"


def dual_summand(s):
    """Dual weight in each factor: (w_1..w_m) -> (-w_m..-w_1).  No twist renormalization."""
    return IrrSummand(tuple(-x for x in reversed(s.alpha)), tuple(-x for x in reversed(s.beta)), s.multiplicity)


# --------------------------------------------------------------------------
# characters and normalization

def _check_ctx(ctx):
    if not isinstance(ctx, GrassmannianContext):
        raise InvalidInput("expected a GrassmannianContext")


def character(expr, ctx):
    """Character of ``expr`` as a GL(n-k) x GL(k) character."""
    _check_ctx(ctx)
    return _character(expr, ctx)


def _character(e, ctx):
    blocks = ctx.blocks
    nq, k = blocks
    if isinstance(e, Q):
        return Character({tuple(int(i == j) for j in range(ctx.n)): 1 for i in range(nq)}, blocks)
    if isinstance(e, U):
        return Character({tuple(int(i == j) for j in range(ctx.n)): 1 for i in range(nq, ctx.n)}, blocks)
    if isinstance(e, O):
        return Character({(0,) * nq + (-e.t,) * k: 1}, blocks)
    if isinstance(e, Dual):
        return _character(e.arg, ctx).dual()
    if isinstance(e, Tensor):
        return _character(e.left, ctx).tensor(_character(e.right, ctx))
    if isinstance(e, DirectSum):
        return _character(e.left, ctx) + _character(e.right, ctx)
    if isinstance(e, Wedge):
        return plethysm_character(Functor.wedge(e.p), _character(e.arg, ctx))
    if isinstance(e, Sym):
        return plethysm_character(Functor.sym(e.p), _character(e.arg, ctx))
    if isinstance(e, Schur):
        return plethysm_character(Functor.schur(e.shape), _character(e.arg, ctx))
    if isinstance(e, End0):
        inner = _character(e.arg, ctx)
        full = inner.tensor(inner.dual())
        trivial = sum(s.multiplicity for s in summands_from_character(full, ctx) if s.is_trivial())
        if trivial != 1:
            raise StructuralError(
                f"end0({e.arg}): E (x) E^dual contains the trivial summand {trivial} times, expected exactly 1"
            )
        return full - Character.trivial(blocks)
    raise InvalidInput(f"not a bundle expression: {e!r}")


def summands_from_character(char, ctx):
    expansion = schur_expand(char)
    nq = ctx.rank_Q
    merged = Counter()
    for w, m in expansion.terms.items():
        merged[IrrSummand(w[:nq], w[nq:]).normal().weight] += m
    return sorted(IrrSummand(w[:nq], w[nq:], m) for w, m in merged.items())


def normalize(expr, ctx):
    """Complete decomposition into irreducible summands, twist-normal, lex-sorted on (alpha, beta)."""
    return summands_from_character(character(expr, ctx), ctx)


def rank(expr, ctx):
    """Rank computed functorially, without characters."""
    _check_ctx(ctx)
    e = expr
    if isinstance(e, Q):
        return ctx.rank_Q
    if isinstance(e, U):
        return ctx.rank_U
    if isinstance(e, O):
        return 1
    if isinstance(e, Dual):
        return rank(e.arg, ctx)
    if isinstance(e, Tensor):
        return rank(e.left, ctx) * rank(e.right, ctx)
    if isinstance(e, DirectSum):
        return rank(e.left, ctx) + rank(e.right, ctx)
    if isinstance(e, Wedge):
        return rank_of_functor(Functor.wedge(e.p), rank(e.arg, ctx))
    if isinstance(e, Sym):
        return rank_of_functor(Functor.sym(e.p), rank(e.arg, ctx))
    if isinstance(e, Schur):
        return rank_of_functor(Functor.schur(e.shape), rank(e.arg, ctx))
    if isinstance(e, End0):
        return rank(e.arg, ctx) ** 2 - 1
    raise InvalidInput(f"not a bundle expression: {e!r}")


def total_rank(summands):
    return sum(s.multiplicity * s.rank for s in summands)


def summand_expr(s):
    """An expression whose normalization is exactly the summand ``s`` (multiplicity ignored)."""
    s = s.normal()
    shift = s.beta[-1] if s.beta else 0
    beta = tuple(b - shift for b in s.beta)
    e = Schur(Partition(s.alpha), Q())
    if any(beta):
        e = Tensor(e, Schur(Partition(beta), U()))
    # Sigma_beta U (x) O(-shift) adds shift to every beta entry
    if shift:
        e = Tensor(e, O(-shift))
    return e
