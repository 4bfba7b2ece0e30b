# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled GF(2) matrix kernels over packed ``uint64`` words.

Mirrors ``_pykernels`` exactly.  Python ints cross the boundary and are
packed little-endian, so coordinate ``j`` sits at bit ``(j-1) % 64`` of
word ``(j-1) // 64``.
"""
import sys

from libc.stdint cimport uint64_t
from libc.stdlib cimport calloc, free
from libc.string cimport memcpy

if sys.byteorder != "little":
    raise ImportError("packed kernels assume a little-endian host")

NAME = "cython"

cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil
    int __builtin_ctzll(unsigned long long) nogil

cdef uint64_t EVEN = 0x5555555555555555ULL


cdef inline int _nwords(int nbits):
    return (nbits + 63) // 64 if nbits > 0 else 1


cdef inline void _load(uint64_t* dst, object x, int nw):
    cdef bytes raw = x.to_bytes(nw * 8, "little")
    memcpy(dst, <char*>raw, nw * 8)


cdef inline object _store(const uint64_t* src, int nw):
    return int.from_bytes((<const char*>src)[:nw * 8], "little")


cdef inline int _parity(const uint64_t* a, const uint64_t* b, int lo, int nw) noexcept nogil:
    cdef int t, acc = 0
    for t in range(lo, nw):
        acc ^= __builtin_popcountll(a[t] & b[t])
    return acc & 1


cdef inline void _swap_into(uint64_t* dst, const uint64_t* src, int nw) noexcept nogil:
    cdef int t
    for t in range(nw):
        dst[t] = ((src[t] & EVEN) << 1) | ((src[t] >> 1) & EVEN)


cdef class WordMatrix:
    """Mutable scratch matrix, stored column-major."""

    cdef uint64_t* data
    cdef int ncols
    cdef int nw
    cdef public int nbits

    def __cinit__(self, cols, int nbits):
        cols = list(cols)
        self.nbits = nbits
        self.ncols = len(cols)
        self.nw = _nwords(nbits)
        self.data = <uint64_t*>calloc(max(self.ncols, 1) * self.nw, sizeof(uint64_t))
        if self.data == NULL:
            raise MemoryError()
        cdef int j
        for j in range(self.ncols):
            _load(&self.data[j * self.nw], cols[j], self.nw)

    def __dealloc__(self):
        free(self.data)

    @classmethod
    def identity(cls, int nbits):
        one = 1  # Python int: C shifts overflow past bit 63
        return cls([one << j for j in range(nbits)], nbits)

    def column(self, int j):
        if j < 0 or j >= self.ncols:
            raise IndexError(j)
        return _store(&self.data[j * self.nw], self.nw)

    def columns(self):
        return [_store(&self.data[j * self.nw], self.nw) for j in range(self.ncols)]

    def apply_seq(self, hs, int start=0):
        """Left-multiply columns ``start:`` by ``Z_{hs[0]} ... Z_{hs[-1]}``."""
        vecs = [x for x in reversed(hs) if x]
        cdef int k = len(vecs)
        if k == 0:
            return
        cdef int nw = self.nw
        cdef uint64_t* buf = <uint64_t*>calloc(2 * k * nw, sizeof(uint64_t))
        if buf == NULL:
            raise MemoryError()
        cdef int t, j, u, lo = nw
        cdef uint64_t* hp
        cdef uint64_t* hswp
        cdef uint64_t* c
        try:
            for t in range(k):
                _load(&buf[2 * t * nw], vecs[t], nw)
                _swap_into(&buf[(2 * t + 1) * nw], &buf[2 * t * nw], nw)
                for u in range(nw):
                    if buf[2 * t * nw + u]:
                        if u < lo:
                            lo = u
                        break
            with nogil:
                for j in range(start, self.ncols):
                    c = &self.data[j * nw]
                    for t in range(k):
                        hp = &buf[2 * t * nw]
                        hswp = &buf[(2 * t + 1) * nw]
                        if _parity(c, hswp, lo, nw):
                            for u in range(lo, nw):
                                c[u] ^= hp[u]
        finally:
            free(buf)

    def mask_clear(self, mask, int start=0):
        cdef int nw = self.nw
        cdef uint64_t* m = <uint64_t*>calloc(nw, sizeof(uint64_t))
        if m == NULL:
            raise MemoryError()
        cdef int j, u
        cdef bint ok = True
        try:
            _load(m, mask, nw)
            for j in range(start, self.ncols):
                for u in range(nw):
                    if self.data[j * nw + u] & m[u]:
                        ok = False
                        break
                if not ok:
                    break
        finally:
            free(m)
        return ok


def mat_mul(a_cols, b_cols, int nbits):
    cdef WordMatrix a = WordMatrix(a_cols, nbits)
    cdef WordMatrix b = WordMatrix(b_cols, nbits)
    cdef WordMatrix out = WordMatrix([0] * len(b_cols), nbits)
    cdef int nw = a.nw, j, u, t, i
    cdef uint64_t word
    with nogil:
        for j in range(b.ncols):
            for u in range(nw):
                word = b.data[j * nw + u]
                while word:
                    i = u * 64 + __builtin_ctzll(word)
                    word &= word - 1
                    for t in range(nw):
                        out.data[j * nw + t] ^= a.data[i * nw + t]
    return out.columns()


def symplectic_violation(cols, int nbits):
    """First column pair ``(j, k)``, ``j < k``, breaking ``<c_j, c_k> = [k == j+1, j even]``."""
    cdef WordMatrix m = WordMatrix(cols, nbits)
    cdef int nw = m.nw, n = m.ncols, j, k, want
    cdef uint64_t* sw = <uint64_t*>calloc(max(n, 1) * nw, sizeof(uint64_t))
    if sw == NULL:
        raise MemoryError()
    cdef int bad_j = -1, bad_k = -1
    try:
        with nogil:
            for j in range(n):
                _swap_into(&sw[j * nw], &m.data[j * nw], nw)
            for j in range(n):
                for k in range(j + 1, n):
                    want = 1 if (k == j + 1 and j % 2 == 0) else 0
                    if _parity(&m.data[j * nw], &sw[k * nw], 0, nw) != want:
                        bad_j = j
                        bad_k = k
                        break
                if bad_j >= 0:
                    break
    finally:
        free(sw)
    if bad_j < 0:
        return None
    return bad_j, bad_k
