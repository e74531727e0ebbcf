# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled versions of the hot loops in :mod:`sturmian_apr._pykernels`.

Both functions return exactly what the reference versions return.
"""

from libc.stdlib cimport malloc, realloc, free
from libc.string cimport memcmp
from libc.stdint cimport int64_t

from math import isqrt

from . import _pykernels

cdef extern from *:
    ctypedef long long i128 "__int128"

# |p|, |q| below 2**62 and p*p, q*q*d below 2**126 keep every product exact
cdef object _LIMIT = 1 << 62
cdef object _SQ_LIMIT = 1 << 126


def orbit_bits(x, y, a, b, denom, d, Py_ssize_t n):
    # orbit points stay in [0, 1): |x| <= denom + |y|*sqrt(d) after the first step
    ymax = abs(y) + n * abs(b) + abs(b)
    root = isqrt(d) + 1
    xmax = max(abs(x), denom + ymax * root) + abs(a) + denom
    if (xmax >= _LIMIT or ymax >= _LIMIT or ymax * ymax * d >= _SQ_LIMIT
            or xmax * xmax >= _SQ_LIMIT or d >= _LIMIT):
        return _pykernels.orbit_bits(x, y, a, b, denom, d, n)
    return _orbit_bits_c(x, y, a, b, denom, d, n)


cdef bytes _orbit_bits_c(int64_t x, int64_t y, int64_t a, int64_t b,
                         int64_t denom, int64_t d, Py_ssize_t n):
    cdef bytearray out = bytearray(n)
    cdef unsigned char[:] view = out
    cdef Py_ssize_t i
    cdef int64_t p, q, shift0 = denom - a
    cdef i128 pp, qq
    cdef bint below
    for i in range(n):
        p = x - a
        q = y - b
        if q == 0 or d == 0:
            below = p < 0
        elif p >= 0 and q >= 0:
            below = False
        elif p <= 0 and q <= 0:
            below = True
        else:
            pp = <i128>p * p
            qq = <i128>q * q * d
            below = (pp < qq) if p > 0 else (pp > qq)
        if below:
            x += shift0
        else:
            x -= a
            view[i] = 1
        y -= b
    return bytes(out)


def scan_prefix(const unsigned char[:] bits, Py_ssize_t n):
    cdef Py_ssize_t m = bits.shape[0]
    if n < 1 or n > m:
        raise ValueError("window length out of range")
    cdef Py_ssize_t i, r, g, prev = 0, occ = 1
    cdef Py_ssize_t nreps = 0, cap = 8
    cdef long ones = 0, target, lo, hi
    cdef bint seen
    cdef Py_ssize_t *rep_start = <Py_ssize_t *>malloc(cap * sizeof(Py_ssize_t))
    cdef Py_ssize_t *rep_len = <Py_ssize_t *>malloc(cap * sizeof(Py_ssize_t))
    cdef Py_ssize_t *tmp
    if rep_start == NULL or rep_len == NULL:
        free(rep_start)
        free(rep_len)
        raise MemoryError()
    try:
        for i in range(n):
            ones += bits[i]
        target = lo = hi = ones
        for i in range(1, m - n + 1):
            ones += bits[i + n - 1] - bits[i - 1]
            if ones < lo:
                lo = ones
            elif ones > hi:
                hi = ones
            if ones != target:
                continue
            g = i - prev
            seen = False
            for r in range(nreps):
                if rep_len[r] == g and memcmp(&bits[rep_start[r]], &bits[prev], g) == 0:
                    seen = True
                    break
            if not seen:
                if nreps == cap:
                    cap *= 2
                    tmp = <Py_ssize_t *>realloc(rep_start, cap * sizeof(Py_ssize_t))
                    if tmp == NULL:
                        raise MemoryError()
                    rep_start = tmp
                    tmp = <Py_ssize_t *>realloc(rep_len, cap * sizeof(Py_ssize_t))
                    if tmp == NULL:
                        raise MemoryError()
                    rep_len = tmp
                rep_start[nreps] = prev
                rep_len[nreps] = g
                nreps += 1
            prev = i
            occ += 1
        reps = [(rep_start[r], rep_len[r]) for r in range(nreps)]
    finally:
        free(rep_start)
        free(rep_len)
    return reps, occ, lo, hi
