"""Pure-Python hot kernels on packed weight keys.

A weight vector is packed into a single integer (see ``bbwcalc.kernels.Packing``)
so that adding two weights is adding two keys and subtracting the packed zero
vector.  The compiled module ``_ckernels`` exposes the same functions with the
same signatures; ``bbwcalc.kernels`` picks one at import time.
"""
import heapq
from math import comb


def tensor(a, b, zero):
    out = {}
    get = out.get
    items_b = list(b.items())
    for ka, ca in a.items():
        shift = ka - zero
        for kb, cb in items_b:
            k = kb + shift
            out[k] = get(k, 0) + ca * cb
    return {k: c for k, c in out.items() if c}


def _power(a, p, zero, coef):
    layers = [{zero: 1}] + [{} for _ in range(p)]
    for key, c in a.items():
        if c < 0:
            raise ValueError("power of a virtual character")
        step = key - zero
        new = [dict(layer) for layer in layers]
        for j in range(p):
            layer = layers[j]
            if not layer:
                continue
            for t in range(1, min(c if coef is comb else p, p - j) + 1):
                w = coef(c, t)
                shift = t * step
                target = new[j + t]
                get = target.get
                for k, v in layer.items():
                    kk = k + shift
                    target[kk] = get(kk, 0) + v * w
        layers = new
    return {k: v for k, v in layers[p].items() if v}


def _multichoose(c, t):
    return comb(c + t - 1, t)


def exterior_power(a, p, zero):
    return _power(a, p, zero, comb)


def symmetric_power(a, p, zero):
    return _power(a, p, zero, _multichoose)


def expand(char, schur_of, virtual=False):
    """Leading-term subtraction; returns {packed highest weight: multiplicity}."""
    rem = {k: v for k, v in char.items() if v}
    heap = [-k for k in rem]
    heapq.heapify(heap)
    out = {}
    while heap:
        top = -heapq.heappop(heap)
        c = rem.get(top, 0)
        if not c:
            continue
        if c < 0 and not virtual:
            raise ValueError(top)
        out[top] = c
        for k, v in schur_of(top).items():
            old = rem.get(k, 0)
            nv = old - c * v
            if nv:
                rem[k] = nv
                if not old:
                    heapq.heappush(heap, -k)
            elif old:
                del rem[k]
    return out


def inversions(seq):
    n = len(seq)
    return sum(1 for i in range(n) for j in range(i + 1, n) if seq[i] < seq[j])
