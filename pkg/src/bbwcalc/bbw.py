"""Borel-Bott-Weil on Gr(k, n).

For an irreducible summand with weight lam = (alpha | beta) put
v = lam + delta, delta = (n-1, ..., 0).  A repeated entry in v means every
cohomology group vanishes; otherwise the only nonzero group sits in degree
equal to the number of inversions of v and is the GL(n)-module with highest
weight sort(v) - delta.
"""
from dataclasses import dataclass, field

from . import kernels
from .bundles import IrrSummand, normalize
from .errors import InvalidInput
from .symcore import weyl_dim


@dataclass(frozen=True)
class BBWResult:
    degree: int
    weight: tuple
    dimension: int


def inversion_count(seq):
    """Pairs i < j with seq[i] < seq[j]."""
    return kernels.inversions(list(seq))


def disorder_count(seq):
    """Adjacent transpositions needed to sort ``seq`` into non-increasing order (bubble sort)."""
    v, swaps = list(seq), 0
    changed = True
    while changed:
        changed = False
        for i in range(len(v) - 1):
            if v[i] < v[i + 1]:
                v[i], v[i + 1] = v[i + 1], v[i]
                swaps += 1
                changed = True
    return swaps


def bbw_weight(weight):
    """Apply BBW to a raw length-n weight; None when acyclic."""
    n = len(weight)
    v = [w + n - 1 - i for i, w in enumerate(weight)]
    if len(set(v)) < n:
        return None
    mu = tuple(x - (n - 1 - i) for i, x in enumerate(sorted(v, reverse=True)))
    return BBWResult(inversion_count(v), mu, weyl_dim(mu, n))


def bbw(summand, ctx):
    """Cohomology of one irreducible summand; ``None`` means acyclic.

    >>> from bbwcalc.bundles import GrassmannianContext
    >>> bbw(IrrSummand((2, 2, 0, 0), (4, 4)), GrassmannianContext(2, 6))
    BBWResult(degree=4, weight=(2, 2, 2, 2, 2, 2), dimension=1)
    """
    if len(summand.alpha) != ctx.rank_Q or len(summand.beta) != ctx.rank_U:
        raise InvalidInput(
            f"summand {summand} does not live on {ctx}: expected |alpha|={ctx.rank_Q}, |beta|={ctx.rank_U}"
        )
    return bbw_weight(summand.weight)


@dataclass
class CohomologyTable:
    """degree -> {GL(n) highest weight: multiplicity}."""

    n: int
    degrees: dict = field(default_factory=dict)
    max_degree: int = 0

    def add(self, degree, weight, mult=1):
        cell = self.degrees.setdefault(degree, {})
        cell[weight] = cell.get(weight, 0) + mult

    def entries(self, degree):
        """Sorted list of (weight, multiplicity, dimension) in ``degree``."""
        cell = self.degrees.get(degree, {})
        return [(w, m, weyl_dim(w, self.n)) for w, m in sorted(cell.items(), reverse=True)]

    def total_dim(self, degree):
        return sum(m * d for _, m, d in self.entries(degree))

    def dims(self):
        return tuple(self.total_dim(p) for p in range(self.max_degree + 1))

    @property
    def euler(self):
        return sum((-1) ** p * self.total_dim(p) for p in self.degrees)

    def is_zero(self):
        return not any(self.degrees.values())

    def merged(self, other):
        out = CohomologyTable(self.n, {}, max(self.max_degree, other.max_degree))
        for table in (self, other):
            for p, cell in table.degrees.items():
                for w, m in cell.items():
                    out.add(p, w, m)
        return out


def cohomology_of_summands(summands, ctx):
    table = CohomologyTable(ctx.n, {}, ctx.dim)
    for s in summands:
        res = bbw(s, ctx)
        if res is not None:
            table.add(res.degree, res.weight, s.multiplicity)
    return table


def cohomology_table(expr, ctx):
    """H^*(Gr(k,n), expr) assembled summand by summand."""
    return cohomology_of_summands(normalize(expr, ctx), ctx)


def euler_char_ambient(expr, ctx):
    return sum(
        (-1) ** res.degree * res.dimension * s.multiplicity
        for s in normalize(expr, ctx)
        if (res := bbw(s, ctx)) is not None
    )


def acyclic(summand, ctx):
    return bbw(summand, ctx) is None

