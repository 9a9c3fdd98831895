"""Exact combinatorics of GL(n) characters.

Weights are plain tuples of ints.  A *character* is a finite map from exponent
vectors to integer multiplicities; it may be split into blocks of variables
(``blocks=(4, 2)`` means GL(4) x GL(2) acting on the first four and last two
coordinates) so that the same machinery decomposes bundles on Grassmannians.
"""
from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import permutations
from math import comb

from . import kernels
from .errors import InconsistentCharacter, InvalidInput


# --------------------------------------------------------------------------
# partitions and weights

@dataclass(frozen=True, order=True)
class Partition:
    """Weakly decreasing non-negative parts, trailing zeros stripped."""

    parts: tuple = ()

    def __post_init__(self):
        parts = tuple(int(x) for x in self.parts)
        if any(x < 0 for x in parts) or any(a < b for a, b in zip(parts, parts[1:])):
            raise InvalidInput(f"not a partition: {list(parts)}")
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        object.__setattr__(self, "parts", parts)

    def __len__(self):
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __getitem__(self, i):
        return self.parts[i]

    @property
    def size(self):
        return sum(self.parts)

    def padded(self, n):
        if len(self.parts) > n:
            raise InvalidInput(f"{list(self.parts)} has more than {n} rows")
        return self.parts + (0,) * (n - len(self.parts))

    def conjugate(self):
        return Partition(conjugate(self.parts))

    def __repr__(self):
        return f"Partition({list(self.parts)})"


def conjugate(parts):
    parts = [p for p in parts if p > 0]
    return tuple(sum(1 for p in parts if p > j) for j in range(parts[0] if parts else 0))


def is_dominant(weight):
    return all(a >= b for a, b in zip(weight, weight[1:]))


def _as_weight(w):
    if isinstance(w, Partition):
        return w.parts
    return tuple(int(x) for x in w)


def weyl_dim(weight, n=None):
    """Dimension of the irreducible GL(n)-module of highest weight ``weight``.

    >>> weyl_dim((1, 1, 1, 0, 0, 0), 6)
    20
    """
    w = _as_weight(weight)
    if n is None:
        n = len(w)
    if len(w) < n and isinstance(weight, Partition):
        w = weight.padded(n)
    if len(w) != n:
        raise InvalidInput(f"weight {list(w)} does not have length {n}")
    if not is_dominant(w):
        raise InvalidInput(f"weight {list(w)} is not dominant")
    num = den = 1
    for i in range(n):
        for j in range(i + 1, n):
            num *= w[i] - w[j] + j - i
            den *= j - i
    q, r = divmod(num, den)
    assert r == 0
    return q


def sl_normal(weight):
    """Shift a GL weight by a power of the determinant so its last entry is 0."""
    w = _as_weight(weight)
    return tuple(x - w[-1] for x in w) if w else w


# --------------------------------------------------------------------------
# Schur polynomials

def _interlacing(lam):
    """All mu of length len(lam)-1 with lam[i+1] <= mu[i] <= lam[i]."""
    if len(lam) == 1:
        yield ()
        return
    for first in range(lam[1], lam[0] + 1):
        for rest in _interlacing(lam[1:]):
            yield (first,) + rest


@lru_cache(maxsize=None)
def _schur_nonneg(lam):
    # Gelfand-Tsetlin branching GL(r) -> GL(r-1)
    if len(lam) == 1:
        return {lam: 1}
    total = sum(lam)
    out = Counter()
    for mu in _interlacing(lam):
        e = total - sum(mu)
        for mono, c in _schur_nonneg(mu).items():
            out[mono + (e,)] += c
    return dict(out)


def schur_polynomial(weight):
    """Monomial expansion {exponent vector: coefficient} of s_weight in len(weight) variables.

    Negative dominant weights are allowed (a power of the determinant is factored out).
    """
    w = _as_weight(weight)
    if not is_dominant(w):
        raise InvalidInput(f"weight {list(w)} is not dominant")
    if not w:
        return {(): 1}
    shift = w[-1]
    base = _schur_nonneg(tuple(x - shift for x in w))
    if shift == 0:
        return base
    return {tuple(e + shift for e in mono): c for mono, c in base.items()}


def _split(weight, blocks):
    out, i = [], 0
    for b in blocks:
        out.append(weight[i:i + b])
        i += b
    return out


@lru_cache(maxsize=4096)
def _block_schur(weight, blocks):
    result = {(): 1}
    for part in _split(weight, blocks):
        poly = schur_polynomial(part)
        result = {m1 + m2: c1 * c2 for m1, c1 in result.items() for m2, c2 in poly.items()}
    return result


# --------------------------------------------------------------------------
# characters

@dataclass(frozen=True)
class Character:
    """Multiset of exponent vectors (a representation's weights) with integer multiplicities.

    Negative multiplicities are allowed in intermediate virtual characters.
    """

    terms: dict = field(default_factory=dict)
    blocks: tuple = ()

    def __post_init__(self):
        terms = {tuple(k): int(v) for k, v in self.terms.items() if v}
        object.__setattr__(self, "terms", terms)
        blocks = tuple(self.blocks)
        if not blocks:
            r = len(next(iter(terms))) if terms else 0
            blocks = (r,)
        object.__setattr__(self, "blocks", blocks)
        r = sum(blocks)
        if any(len(k) != r for k in terms):
            raise InvalidInput("exponent vectors of inconsistent length")

    @property
    def r(self):
        return sum(self.blocks)

    @classmethod
    def trivial(cls, blocks):
        blocks = tuple(blocks)
        return cls({(0,) * sum(blocks): 1}, blocks)

    @classmethod
    def standard(cls, r):
        """Character of the defining representation of GL(r)."""
        return cls({tuple(int(i == j) for j in range(r)): 1 for i in range(r)}, (r,))

    @classmethod
    def from_weights(cls, weights, blocks=()):
        return cls(Counter(tuple(w) for w in weights), blocks)

    def _like(self, terms):
        return Character(terms, self.blocks)

    def __add__(self, other):
        self._check(other)
        out = Counter(self.terms)
        out.update(other.terms)
        return self._like(out)

    def __sub__(self, other):
        self._check(other)
        out = Counter(self.terms)
        out.subtract(other.terms)
        return self._like(out)

    def scale(self, c):
        return self._like({k: c * v for k, v in self.terms.items()})

    def _check(self, other):
        if self.blocks != other.blocks:
            raise InvalidInput(f"block structures differ: {self.blocks} vs {other.blocks}")

    def dual(self):
        return self._like({tuple(-x for x in k): v for k, v in self.terms.items()})

    def shift(self, vector):
        return self._like({tuple(x + s for x, s in zip(k, vector)): v for k, v in self.terms.items()})

    @property
    def dimension(self):
        return sum(self.terms.values())

    @property
    def max_abs(self):
        return max((abs(x) for k in self.terms for x in k), default=0)

    def is_symmetric(self):
        """Invariance under permutations of the coordinates within each block."""
        for k, v in self.terms.items():
            for i, part in enumerate(_split(k, self.blocks)):
                for j in range(len(part) - 1):
                    swapped = list(k)
                    pos = sum(self.blocks[:i]) + j
                    swapped[pos], swapped[pos + 1] = swapped[pos + 1], swapped[pos]
                    if self.terms.get(tuple(swapped), 0) != v:
                        return False
        return True

    def _packed(self, packing):
        return {packing.pack(k): v for k, v in self.terms.items()}

    def tensor(self, other):
        self._check(other)
        if not self.terms or not other.terms:
            return self._like({})
        packing = kernels.Packing.for_bound(self.r, self.max_abs + other.max_abs)
        out = kernels.tensor(self._packed(packing), other._packed(packing), packing)
        return self._like({packing.unpack(k): v for k, v in out.items()})

    def exterior_power(self, p):
        return self._power(p, kernels.exterior_power)

    def symmetric_power(self, p):
        return self._power(p, kernels.symmetric_power)

    def _power(self, p, kernel):
        if p < 0:
            raise InvalidInput(f"negative power {p}")
        if p == 0:
            return Character.trivial(self.blocks)
        if any(v < 0 for v in self.terms.values()):
            raise InconsistentCharacter("power of a virtual character")
        packing = kernels.Packing.for_bound(self.r, p * self.max_abs)
        out = kernel(self._packed(packing), p, packing)
        return self._like({packing.unpack(k): v for k, v in out.items()})


def character_of_weight(weight, blocks=None):
    """Character of the irreducible module with highest weight ``weight`` (per block)."""
    w = _as_weight(weight)
    blocks = tuple(blocks) if blocks else (len(w),)
    return Character(_block_schur(w, blocks), blocks)


# --------------------------------------------------------------------------
# Schur expansions

@dataclass(frozen=True)
class SchurExpansion:
    """Finite sum of irreducibles: {dominant weight: positive multiplicity}."""

    terms: dict = field(default_factory=dict)
    blocks: tuple = ()

    def __post_init__(self):
        terms = {tuple(k): int(v) for k, v in self.terms.items() if v}
        object.__setattr__(self, "terms", dict(sorted(terms.items(), reverse=True)))
        object.__setattr__(self, "blocks", tuple(self.blocks))

    def __eq__(self, other):
        if isinstance(other, dict):
            return self.terms == {tuple(k): v for k, v in other.items()}
        return isinstance(other, SchurExpansion) and self.terms == other.terms and self.blocks == other.blocks

    def __hash__(self):
        return hash((tuple(self.terms.items()), self.blocks))

    def __bool__(self):
        return bool(self.terms)

    def __iter__(self):
        return iter(self.terms.items())

    def __add__(self, other):
        out = Counter(self.terms)
        out.update(other.terms)
        return SchurExpansion(out, self.blocks or other.blocks)

    def weight_dim(self, weight):
        d = 1
        for part in _split(weight, self.blocks):
            d *= weyl_dim(part, len(part))
        return d

    @property
    def dimension(self):
        return sum(m * self.weight_dim(w) for w, m in self.terms.items())

    def character(self):
        out = Counter()
        for w, m in self.terms.items():
            for mono, c in _block_schur(w, self.blocks).items():
                out[mono] += m * c
        return Character(out, self.blocks)

    def __repr__(self):
        inner = " + ".join(f"{m}*s{list(w)}" if m != 1 else f"s{list(w)}" for w, m in self.terms.items())
        return f"SchurExpansion({inner or '0'})"


def schur_expand(char, virtual=False):
    """Decompose a symmetric character into irreducibles by leading-term subtraction.

    The lexicographically largest remaining exponent vector is the highest weight
    of some constituent; subtract that irreducible's character and repeat.
    Raises InconsistentCharacter when the leading term is not dominant or a
    multiplicity would become negative (unless ``virtual``).
    """
    if not char.terms:
        return SchurExpansion({}, char.blocks)
    blocks = char.blocks
    packing = kernels.Packing.for_bound(char.r, char.max_abs)

    cache = {}

    def schur_of(key):
        got = cache.get(key)
        if got is None:
            w = packing.unpack(key)
            if not all(is_dominant(part) for part in _split(w, blocks)):
                raise InconsistentCharacter(f"leading weight {list(w)} is not dominant: character not symmetric")
            got = cache[key] = {packing.pack(m): c for m, c in _block_schur(w, blocks).items()}
        return got

    try:
        out = kernels.expand(char._packed(packing), schur_of, packing, virtual=virtual)
    except ValueError as exc:
        w = packing.unpack(exc.args[0]) if exc.args and isinstance(exc.args[0], int) else None
        raise InconsistentCharacter(f"negative multiplicity at weight {w}") from None
    terms = {packing.unpack(k): v for k, v in out.items()}
    if virtual:
        return VirtualExpansion(terms, blocks)
    return SchurExpansion(terms, blocks)


class VirtualExpansion(SchurExpansion):
    """Signed combination of irreducibles (only produced with ``virtual=True``)."""


# --------------------------------------------------------------------------
# Littlewood-Richardson

def lr_coefficients(lam, mu, max_rows=None):
    """{nu: c^nu_{lam,mu}} by the Littlewood-Richardson tableau rule.

    Boxes labelled i are added to ``lam`` as a horizontal strip of length mu[i];
    the reverse reading word must stay a lattice word.
    """
    lam = list(Partition(_as_weight(lam)).parts)
    mu = list(Partition(_as_weight(mu)).parts)
    results = Counter()
    # counts[row][label] for labels placed so far
    nrows_cap = len(lam) + len(mu)
    if max_rows is not None:
        nrows_cap = min(nrows_cap, max_rows)
    if len(lam) > nrows_cap:
        return {}

    def place(label, shape, counts):
        if label == len(mu):
            results[tuple(x for x in shape if x)] += 1
            return
        old = shape + [0] * (nrows_cap - len(shape))
        new = list(old)

        def fill(row, remaining, cum_label, cum_prev):
            # cum_label: number of `label` boxes in rows < row; cum_prev: number of label-1 in rows < row
            if remaining == 0:
                added = [new[r] - old[r] for r in range(nrows_cap)]
                new_counts = [dict(c) for c in counts]
                for r, a in enumerate(added):
                    if a:
                        new_counts[r][label] = a
                place(label + 1, list(new), new_counts)
                return
            if row >= nrows_cap:
                return
            cap = remaining if row == 0 else min(remaining, old[row - 1] - old[row])
            if label > 0:
                prev_here = cum_prev  # label-1 boxes in rows strictly above
                cap = min(cap, prev_here - cum_label)
            for a in range(cap, -1, -1):
                new[row] = old[row] + a
                fill(row + 1, remaining - a, cum_label + a,
                     cum_prev + counts[row].get(label - 1, 0) if label > 0 else 0)
            new[row] = old[row]

        fill(0, mu[label], 0, 0)

    place(0, list(lam), [dict() for _ in range(nrows_cap)])
    return dict(results)


def lr_product(lam, mu, r):
    """s_lam * s_mu in r variables, as a SchurExpansion of length-r weights."""
    coeffs = lr_coefficients(lam, mu, max_rows=r)
    return SchurExpansion({tuple(nu) + (0,) * (r - len(nu)): c for nu, c in coeffs.items()}, (r,))


# --------------------------------------------------------------------------
# plethysm

@dataclass(frozen=True)
class Functor:
    """Outer functor of a plethysm: ``wedge p``, ``sym p`` or ``schur lambda``."""

    kind: str
    p: int = 0
    shape: Partition = Partition()

    @classmethod
    def wedge(cls, p):
        return cls("wedge", int(p))

    @classmethod
    def sym(cls, p):
        return cls("sym", int(p))

    @classmethod
    def schur(cls, shape):
        shape = shape if isinstance(shape, Partition) else Partition(tuple(shape))
        return cls("schur", shape.size, shape)

    def __post_init__(self):
        if self.kind not in ("wedge", "sym", "schur"):
            raise InvalidInput(f"unknown functor {self.kind!r}")
        if self.p < 0:
            raise InvalidInput(f"negative degree {self.p}")


@lru_cache(maxsize=1024)
def _plethysm_cached(outer, inner_items, blocks):
    inner = Character(dict(inner_items), blocks)
    if outer.kind == "wedge":
        return inner.exterior_power(outer.p)
    if outer.kind == "sym":
        return inner.symmetric_power(outer.p)
    # Jacobi-Trudi: s_lam = det(h_{lam_i - i + j})
    lam = outer.shape.parts
    ell = len(lam)
    if ell == 0:
        return Character.trivial(blocks)
    sym_cache = {}

    def h(m):
        if m < 0:
            return None
        if m not in sym_cache:
            sym_cache[m] = inner.symmetric_power(m)
        return sym_cache[m]

    total = Character({}, blocks)
    for perm in permutations(range(ell)):
        factors = [h(lam[i] - i + perm[i]) for i in range(ell)]
        if any(f is None for f in factors):
            continue
        term = factors[0]
        for f in factors[1:]:
            term = term.tensor(f)
        sign = _perm_sign(perm)
        total = total + term if sign > 0 else total - term
    return total


def _perm_sign(perm):
    sign, seen = 1, set()
    for i in range(len(perm)):
        if i in seen:
            continue
        j, length = i, 0
        while j not in seen:
            seen.add(j)
            j = perm[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def plethysm_character(outer, inner):
    """Character of ``outer`` applied to a representation with character ``inner``."""
    items = tuple(sorted(inner.terms.items()))
    return _plethysm_cached(outer, items, inner.blocks)


def plethysm_apply(outer, inner):
    """Decompose ``outer(inner)`` into irreducibles of the same group as ``inner``."""
    if outer.kind == "wedge" and outer.p > inner.dimension:
        return SchurExpansion({}, inner.blocks)
    return schur_expand(plethysm_character(outer, inner))


def rank_of_functor(outer, m):
    """Dimension of outer(V) for dim V = m."""
    if outer.kind == "wedge":
        return comb(m, outer.p)
    if outer.kind == "sym":
        return comb(m + outer.p - 1, outer.p) if m > 0 else int(outer.p == 0)
    if len(outer.shape) > m:
        return 0
    return weyl_dim(outer.shape.padded(m), m) if m > 0 else int(outer.shape.size == 0)
