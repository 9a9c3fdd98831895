# distutils: language = c++
# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled counterparts of ``bbwcalc._kernels_py``.

Keys and counts are held in 64-bit integers; ``bbwcalc.kernels`` only routes
a call here after checking that every key and every intermediate count fits.
"""
from libcpp.map cimport map as cmap
from libcpp.unordered_map cimport unordered_map
from libcpp.vector cimport vector
from cython.operator cimport dereference as deref, preincrement as inc, predecrement as dec

ctypedef long long i64


cdef dict _dump(unordered_map[i64, i64]& m):
    cdef dict out = {}
    cdef unordered_map[i64, i64].iterator it = m.begin()
    while it != m.end():
        if deref(it).second != 0:
            out[deref(it).first] = deref(it).second
        inc(it)
    return out


def tensor(dict a, dict b, i64 zero):
    cdef vector[i64] bk, bv, ak, av
    cdef unordered_map[i64, i64] out
    cdef size_t i, j
    cdef i64 shift, ca
    for k, v in b.items():
        bk.push_back(k)
        bv.push_back(v)
    for k, v in a.items():
        ak.push_back(k)
        av.push_back(v)
    out.reserve(ak.size() * bk.size())
    for i in range(ak.size()):
        shift = ak[i] - zero
        ca = av[i]
        for j in range(bk.size()):
            out[bk[j] + shift] += ca * bv[j]
    return _dump(out)


cdef i64 _binom(i64 n, i64 k):
    cdef i64 r = 1, i
    if k < 0 or k > n:
        return 0
    for i in range(1, k + 1):
        r = r * (n - k + i) // i
    return r


cdef dict _power(dict a, int p, i64 zero, bint sym):
    cdef vector[unordered_map[i64, i64]] layers, new
    cdef unordered_map[i64, i64].iterator it
    cdef int j, t, tmax
    cdef i64 c, step, w, shift
    layers.resize(p + 1)
    layers[0][zero] = 1
    for key, cnt in a.items():
        c = cnt
        if c < 0:
            raise ValueError("power of a virtual character")
        step = key - zero
        new = layers
        for j in range(p):
            if layers[j].empty():
                continue
            tmax = p - j
            if not sym and c < tmax:
                tmax = <int>c
            for t in range(1, tmax + 1):
                w = _binom(c + t - 1, t) if sym else _binom(c, t)
                shift = t * step
                it = layers[j].begin()
                while it != layers[j].end():
                    new[j + t][deref(it).first + shift] += deref(it).second * w
                    inc(it)
        layers.swap(new)
    return _dump(layers[p])


def exterior_power(dict a, int p, i64 zero):
    return _power(a, p, zero, False)


def symmetric_power(dict a, int p, i64 zero):
    return _power(a, p, zero, True)


def expand(dict char, schur_of, bint virtual=False):
    cdef cmap[i64, i64] rem
    cdef cmap[i64, i64].iterator it
    cdef i64 top, c, k
    cdef dict out = {}
    for key, v in char.items():
        if v:
            rem[key] = v
    while not rem.empty():
        it = rem.end()
        dec(it)
        top = deref(it).first
        c = deref(it).second
        if c < 0 and not virtual:
            raise ValueError(top)
        out[top] = c
        for key, v in schur_of(top).items():
            k = key
            rem[k] -= c * <i64>v
            if rem[k] == 0:
                rem.erase(k)
    return out


def inversions(seq):
    cdef vector[i64] s = seq
    cdef size_t i, j, n = s.size()
    cdef i64 count = 0
    for i in range(n):
        for j in range(i + 1, n):
            if s[i] < s[j]:
                count += 1
    return count
