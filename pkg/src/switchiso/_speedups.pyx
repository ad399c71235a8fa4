# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled canonical-form kernels.

Mirrors switchiso._kernels but stores bit vectors in unsigned 64-bit
words, so it only handles graphs with at most 63 edges. The backend
selector falls back to the pure version beyond that.
"""

from cpython cimport array
import array

backend_name = "compiled"

ctypedef unsigned long long u64

MAX_EDGES = 63


cdef class CanonicalScanner:
    """Scans images of a signature under a fixed list of edge permutations."""

    cdef array.array _perm_store
    cdef array.array _pivot_store
    cdef array.array _row_store
    cdef long long[::1] _perms
    cdef long long[::1] _pivots
    cdef u64[::1] _rows
    cdef Py_ssize_t _n_perms
    cdef Py_ssize_t _rank
    cdef public Py_ssize_t m

    def __init__(self, edge_perms, pivots, rows, m):
        if m > MAX_EDGES:
            raise ValueError("compiled scanner is limited to 63 edges")
        flat = []
        for perm in edge_perms:
            if len(perm) != m:
                raise ValueError("edge permutation length does not match m")
            flat.extend(perm)
        if len(pivots) != len(rows):
            raise ValueError("pivot and row counts differ")
        self.m = m
        self._n_perms = len(edge_perms)
        self._rank = len(pivots)
        self._perm_store = array.array("q", flat)
        self._pivot_store = array.array("q", list(pivots))
        self._row_store = array.array("Q", list(rows))
        self._perms = self._perm_store
        self._pivots = self._pivot_store
        self._rows = self._row_store

    cdef inline u64 _reduce(self, u64 bits) noexcept nogil:
        cdef Py_ssize_t i
        for i in range(self._rank):
            if (bits >> self._pivots[i]) & 1ULL:
                bits ^= self._rows[i]
        return bits

    cdef inline u64 _apply(self, u64 bits, Py_ssize_t base) noexcept nogil:
        cdef u64 img = 0
        cdef Py_ssize_t e = 0
        while bits:
            if bits & 1ULL:
                img |= (<u64>1) << self._perms[base + e]
            bits >>= 1
            e += 1
        return img

    cdef u64 _canonical_key(self, u64 bits) noexcept nogil:
        cdef u64 best = self._reduce(bits)
        cdef u64 cand
        cdef Py_ssize_t p
        for p in range(self._n_perms):
            cand = self._reduce(self._apply(bits, p * self.m))
            if cand < best:
                best = cand
        return best

    def reduce(self, bits):
        return self._reduce(bits)

    def canonical_key(self, bits):
        cdef u64 b = bits
        cdef u64 out
        with nogil:
            out = self._canonical_key(b)
        return out

    def canonical_keys(self, bits_seq):
        cdef array.array work = array.array("Q", list(bits_seq))
        cdef u64[::1] view = work
        cdef Py_ssize_t i, count = len(work)
        with nogil:
            for i in range(count):
                view[i] = self._canonical_key(view[i])
        return list(work)

    def orbit_min(self, bits):
        cdef u64 b = bits
        cdef u64 best = b
        cdef u64 cand
        cdef Py_ssize_t p
        with nogil:
            for p in range(self._n_perms):
                cand = self._apply(b, p * self.m)
                if cand < best:
                    best = cand
        return best
