"""Backend selection for the hot kernels.

The compiled extension ``_ckernels`` is used when it imported successfully and
``BBWCALC_PURE_PYTHON`` is unset; otherwise everything runs through
``_kernels_py``.  Individual calls fall back to Python whenever packed keys or
counts could leave the signed 64-bit range.
"""
import os
from dataclasses import dataclass
from math import comb

from . import _kernels_py as _py

try:
    from . import _ckernels as _c
except ImportError:  # extension not built
    _c = None

_LIMIT = 1 << 62

BACKEND = "cython" if _c is not None and not os.environ.get("BBWCALC_PURE_PYTHON") else "python"


def _compiled():
    return _c if BACKEND == "cython" else None


def set_backend(name):
    """Force ``"python"`` or ``"cython"``; used by the benchmark and the tests."""
    global BACKEND
    if name not in ("python", "cython"):
        raise ValueError(name)
    if name == "cython" and _c is None:
        raise RuntimeError("compiled kernels are not available")
    BACKEND = name


@dataclass(frozen=True)
class Packing:
    """Mixed-radix encoding of integer vectors of length ``r``.

    Digit ``i`` (most significant first) stores ``v[i] + half``, so the integer
    order of keys is the lexicographic order of vectors.
    """

    r: int
    half: int

    @classmethod
    def for_bound(cls, r, bound):
        half = 2
        while half <= bound:
            half *= 2
        return cls(r, half)

    @property
    def base(self):
        return 2 * self.half

    @property
    def zero(self):
        key = 0
        for _ in range(self.r):
            key = key * self.base + self.half
        return key

    @property
    def fits(self):
        return self.base ** self.r < _LIMIT

    def pack(self, v):
        key = 0
        base, half = self.base, self.half
        for x in v:
            key = key * base + x + half
        return key

    def unpack(self, key):
        base, half = self.base, self.half
        out = [0] * self.r
        for i in range(self.r - 1, -1, -1):
            key, d = divmod(key, base)
            out[i] = d - half
        return tuple(out)


def _mass(d):
    return sum(abs(v) for v in d.values())


def tensor(a, b, packing):
    c = _compiled()
    if c is not None and packing.fits and _mass(a) * _mass(b) < _LIMIT:
        return c.tensor(a, b, packing.zero)
    return _py.tensor(a, b, packing.zero)


def exterior_power(a, p, packing):
    c = _compiled()
    if c is not None and packing.fits and comb(_mass(a), p) < _LIMIT:
        return c.exterior_power(a, p, packing.zero)
    return _py.exterior_power(a, p, packing.zero)


def symmetric_power(a, p, packing):
    c = _compiled()
    if c is not None and packing.fits and comb(_mass(a) + p, p) < _LIMIT:
        return c.symmetric_power(a, p, packing.zero)
    return _py.symmetric_power(a, p, packing.zero)


def expand(char, schur_of, packing, virtual=False):
    c = _compiled()
    # honest characters keep every remainder bounded by the input mass
    if c is not None and not virtual and packing.fits and _mass(char) < (1 << 31):
        return c.expand(char, schur_of, False)
    return _py.expand(char, schur_of, virtual)


def inversions(seq):
    c = _compiled()
    if c is not None and all(abs(x) < _LIMIT for x in seq):
        return c.inversions(list(seq))
    return _py.inversions(seq)
