"""Cohomology of restrictions to the zero locus X of a general section.

With conormal bundle N^dual of rank c, the Koszul resolution of O_X gives a
spectral sequence

    E_1^{-q,p} = H^p(G, wedge^q N^dual (x) B)  =>  H^{p-q}(X, B|_X),

whose E_1 page is computed cell by cell with Borel-Bott-Weil.  Differentials
are never evaluated: when two nonzero cells could be joined by some d_r the
result is reported as indeterminate, with upper bounds.
"""
from dataclasses import dataclass, field

from .bbw import CohomologyTable, bbw
from .bundles import (
    GrassmannianContext,
    Wedge,
    character,
    dual,
    rank,
    summands_from_character,
)
from .errors import InternalInconsistency, InvalidInput
from .symcore import Functor, SchurExpansion, plethysm_character


@dataclass(frozen=True)
class ZeroLocusSetup:
    """X = zero locus in Gr(k,n) of a general section of dual(conormal)."""

    ctx: GrassmannianContext
    conormal: object

    def __post_init__(self):
        c = self.codim
        if not 0 < c < self.ctx.dim:
            raise InvalidInput(f"codimension {c} of X in {self.ctx} must satisfy 0 < codim < {self.ctx.dim}")

    @classmethod
    def cut_by(cls, ctx, bundle):
        """X = V(s) for a general section s of ``bundle`` (the normal bundle)."""
        return cls(ctx, dual(bundle))

    @property
    def normal_bundle(self):
        return dual(self.conormal)

    @property
    def codim(self):
        return rank(self.conormal, self.ctx)

    @property
    def dim_X(self):
        return self.ctx.dim - self.codim


def orient(ctx, expr):
    """Decide whether ``expr`` is the normal or the conormal bundle of the zero locus.

    A bundle cutting X must have sections; its dual (the conormal) has none.
    Returns a ZeroLocusSetup.
    """
    from .bbw import cohomology_table

    has_sections = cohomology_table(expr, ctx).total_dim(0) > 0
    dual_has_sections = cohomology_table(dual(expr), ctx).total_dim(0) > 0
    if has_sections and not dual_has_sections:
        return ZeroLocusSetup.cut_by(ctx, expr)
    if dual_has_sections and not has_sections:
        return ZeroLocusSetup(ctx, expr)
    raise InvalidInput(f"cannot tell whether {expr} is the normal or the conormal bundle")


def _wedge_characters(setup):
    base = character(setup.conormal, setup.ctx)
    return [plethysm_character(Functor.wedge(q), base) for q in range(setup.codim + 1)]


def koszul_factors(setup):
    """[summands of wedge^q N^dual for q = 0..codim]."""
    return [summands_from_character(ch, setup.ctx) for ch in _wedge_characters(setup)]


@dataclass
class E1Page:
    codim: int
    dim_G: int
    dim_X: int
    cells: dict = field(default_factory=dict)  # (q, p) -> SchurExpansion of GL(n)

    def support(self):
        return sorted(k for k, v in self.cells.items() if v)

    def cell_dim(self, q, p):
        cell = self.cells.get((q, p))
        return cell.dimension if cell else 0

    def conflicts(self):
        """Pairs of nonzero cells joined by a potential d_r: (q, p) -> (q - r, p - r + 1), r >= 1."""
        supp = set(self.support())
        out = []
        for q, p in sorted(supp):
            for r in range(1, q + 1):
                target = (q - r, p - r + 1)
                if target in supp:
                    out.append(((q, p), target))
        return out


def e1_page(setup, target):
    ctx = setup.ctx
    target_char = character(target, ctx)
    page = E1Page(setup.codim, ctx.dim, setup.dim_X)
    for q, wq in enumerate(_wedge_characters(setup)):
        for s in summands_from_character(wq.tensor(target_char), ctx):
            res = bbw(s, ctx)
            if res is None:
                continue
            key = (q, res.degree)
            page.cells[key] = page.cells.get(key, SchurExpansion({}, (ctx.n,))) + SchurExpansion(
                {res.weight: s.multiplicity}, (ctx.n,)
            )
    return page


@dataclass
class RestrictionResult:
    """Exact table of H^*(X, B|_X), or per-degree upper bounds when differentials may act."""

    exact: bool
    table: CohomologyTable
    support: list
    conflicting_cells: list
    page: E1Page

    @property
    def exactness(self):
        return "exact" if self.exact else "indeterminate"

    def dims(self):
        return self.table.dims()


def restrict_cohomology(setup, target, page=None):
    page = page if page is not None else e1_page(setup, target)
    table = CohomologyTable(setup.ctx.n, {}, setup.dim_X)
    for (q, p), cell in page.cells.items():
        for w, m in cell:
            table.add(p - q, w, m)
    conflicts = page.conflicts()
    exact = not conflicts
    if exact:
        stray = [d for d in table.degrees if not 0 <= d <= setup.dim_X and table.degrees[d]]
        if stray:
            raise InternalInconsistency(
                f"E_1 page has surviving cells in degrees {stray} outside [0, {setup.dim_X}]"
            )
    return RestrictionResult(exact, table, page.support(), conflicts, page)


def euler_char_X(setup, target):
    """chi(X, target|_X) = sum_q (-1)^q chi(G, wedge^q N^dual (x) target)."""
    ctx = setup.ctx
    target_char = character(target, ctx)
    total = 0
    for q, wq in enumerate(_wedge_characters(setup)):
        for s in summands_from_character(wq.tensor(target_char), ctx):
            res = bbw(s, ctx)
            if res is not None:
                total += (-1) ** (q + res.degree) * res.dimension * s.multiplicity
    return total


def koszul_lengths(setup):
    """Ranks of wedge^q N^dual, computed functorially."""
    return [rank(Wedge(q, setup.conormal), setup.ctx) for q in range(setup.codim + 1)]

