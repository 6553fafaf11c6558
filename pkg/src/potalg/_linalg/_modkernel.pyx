# cython: boundscheck=False, wraparound=False, cdivision=True, language_level=3
"""Row echelon over GF(p) with a dense int64 working buffer.

Drop-in accelerator for the pure-Python sparse echelon: same pivoting rule
(highest column first), same insert-time full reduction, identical results.
p must fit in 31 bits so products fit in int64.
"""

import array

from cpython cimport array
from cpython.mem cimport PyMem_Free, PyMem_Malloc


cdef class GFpEchelonKernel:
    cdef readonly long long p
    cdef readonly int ncols
    cdef long long* buf
    cdef int* pivrow            # col -> row index, -1 if free
    cdef list _cols             # row index -> array('i'), ascending cols
    cdef list _vals             # row index -> array('q'), monic (pivot val 1)
    cdef public list pivots     # pivot cols in insertion order
    cdef list _maps             # registered column maps, array('i')

    def __cinit__(self, int ncols, long long p):
        cdef int i
        if p <= 1 or p >= (<long long>1) << 31:
            raise ValueError("p must be a prime below 2^31")
        self.ncols = ncols
        self.p = p
        self.buf = <long long*> PyMem_Malloc(ncols * sizeof(long long))
        self.pivrow = <int*> PyMem_Malloc(ncols * sizeof(int))
        if self.buf == NULL or self.pivrow == NULL:
            raise MemoryError()
        for i in range(ncols):
            self.buf[i] = 0
            self.pivrow[i] = -1
        self._cols = []
        self._vals = []
        self.pivots = []
        self._maps = []

    def __dealloc__(self):
        if self.buf != NULL:
            PyMem_Free(self.buf)
        if self.pivrow != NULL:
            PyMem_Free(self.pivrow)

    @property
    def rank(self):
        return len(self.pivots)

    def has_pivot(self, int col):
        return self.pivrow[col] >= 0

    def pivot_cols(self):
        return set(self.pivots)

    def row(self, int pivot):
        cdef int r = self.pivrow[pivot]
        if r < 0:
            raise KeyError(pivot)
        cdef array.array ca = <array.array> self._cols[r]
        cdef array.array va = <array.array> self._vals[r]
        cdef Py_ssize_t i, n = len(ca)
        out = {}
        for i in range(n):
            out[ca.data.as_ints[i]] = va.data.as_longlongs[i]
        return out

    def export_rows(self):
        """[(pivot, cols list, vals list)] in insertion order, for lifting."""
        out = []
        for piv in self.pivots:
            r = self.pivrow[<int> piv]
            out.append((piv, list(self._cols[r]), list(self._vals[r])))
        return out

    def register_colmap(self, mapping) -> int:
        """Register a column map (list/array of target cols, -1 = undefined)."""
        cdef array.array arr = array.array('i', mapping)
        self._maps.append(arr)
        return len(self._maps) - 1

    cdef long long _modinv(self, long long a):
        cdef long long g = self.p, r = a % self.p, x = 0, x1 = 1, q, t
        while r:
            q = g // r
            t = g - q * r
            g = r
            r = t
            t = x - q * x1
            x = x1
            x1 = t
        x %= self.p
        if x < 0:
            x += self.p
        return x

    cdef int _eliminate(self, int top, bint record_pivot):
        """Walk buf from `top` down, eliminating pivot columns.

        Returns the highest surviving non-pivot column (the new pivot), or
        -1 if none survives / record_pivot is False.
        """
        cdef int c = top, r, k, n, piv = -1
        cdef long long v, t
        cdef array.array ca, va
        cdef int* rc
        cdef long long* rv
        while c >= 0:
            v = self.buf[c]
            if v != 0:
                r = self.pivrow[c]
                if r >= 0:
                    ca = <array.array> self._cols[r]
                    va = <array.array> self._vals[r]
                    rc = ca.data.as_ints
                    rv = va.data.as_longlongs
                    n = <int> len(ca)
                    for k in range(n):
                        t = self.buf[rc[k]] - v * rv[k]
                        t %= self.p
                        if t < 0:
                            t += self.p
                        self.buf[rc[k]] = t
                elif record_pivot and piv < 0:
                    piv = c
            c -= 1
        return piv

    cdef object _finish_add(self, int top):
        """Reduce the buffer and insert the surviving row; buf ends zeroed."""
        cdef int piv = self._eliminate(top, True)
        cdef int c, cnt = 0
        cdef long long inv
        cdef array.array ca, va
        if piv < 0:
            return None
        inv = self._modinv(self.buf[piv])
        for c in range(piv + 1):
            if self.buf[c] != 0:
                cnt += 1
        ca = array.array('i', bytes(4 * cnt))
        va = array.array('q', bytes(8 * cnt))
        cnt = 0
        for c in range(piv + 1):
            if self.buf[c] != 0:
                ca.data.as_ints[cnt] = c
                va.data.as_longlongs[cnt] = self.buf[c] * inv % self.p
                self.buf[c] = 0
                cnt += 1
        self.pivrow[piv] = len(self._cols)
        self._cols.append(ca)
        self._vals.append(va)
        self.pivots.append(piv)
        return piv

    cdef int _scatter_pairs(self, vec) except -2:
        cdef int top = -1, col
        cdef long long val
        for k, v in vec.items():
            col = <int> k
            val = <long long> (v % self.p)  # Python-space mod: big ints safe
            if val != 0:
                self.buf[col] = (self.buf[col] + val) % self.p
                if col > top:
                    top = col
        return top

    def add_row(self, dict vec):
        """Insert a sparse row {col: val}; returns (pivot, row dict) or None."""
        cdef int top = self._scatter_pairs(vec)
        if top < 0:
            return None
        piv = self._finish_add(top)
        if piv is None:
            return None
        return piv, self.row(<int> piv)

    def add_product_rows(self, src, int map_id, Py_ssize_t start, Py_ssize_t end):
        """Insert mapped copies of src rows [start, end) (src may be self).

        The column map sends each source column to a target column of this
        echelon; the source rows must only touch mapped columns.
        """
        cdef GFpEchelonKernel srck = <GFpEchelonKernel?> src
        cdef array.array m = <array.array> self._maps[map_id]
        cdef int* mp = m.data.as_ints
        cdef Py_ssize_t ridx
        cdef int k, n, top, col
        cdef array.array ca, va
        cdef int* rc
        cdef long long* rv
        if end > len(srck._cols):
            raise IndexError("source row range out of bounds")
        for ridx in range(start, end):
            ca = <array.array> srck._cols[ridx]
            va = <array.array> srck._vals[ridx]
            rc = ca.data.as_ints
            rv = va.data.as_longlongs
            n = <int> len(ca)
            top = -1
            for k in range(n):
                col = mp[rc[k]]
                if col < 0:
                    raise ValueError("source column not covered by map")
                self.buf[col] = (self.buf[col] + rv[k]) % self.p
                if col > top:
                    top = col
            if top >= 0:
                self._finish_add(top)

    def reduce(self, dict vec):
        """Normal form of a sparse row against the current pivots."""
        cdef int top = self._scatter_pairs(vec)
        cdef int c
        out = {}
        if top < 0:
            return out
        self._eliminate(top, False)
        for c in range(top + 1):
            if self.buf[c] != 0:
                out[c] = self.buf[c]
                self.buf[c] = 0
        return out

    def back_substitute(self):
        """Rewrite rows so no tail contains a pivot column (RREF form)."""
        cdef int piv, r, k, n, c, cnt
        cdef array.array ca, va
        cdef int* rc
        cdef long long* rv
        for piv in sorted(self.pivots, reverse=True):
            r = self.pivrow[piv]
            ca = <array.array> self._cols[r]
            va = <array.array> self._vals[r]
            rc = ca.data.as_ints
            rv = va.data.as_longlongs
            n = <int> len(ca)
            cnt = 0
            for k in range(n):
                c = rc[k]
                if c != piv and self.pivrow[c] >= 0:
                    cnt += 1
            if cnt == 0:
                continue
            # rebuild: tail into buffer, eliminate, re-collect with pivot 1
            for k in range(n):
                if rc[k] != piv:
                    self.buf[rc[k]] = rv[k]
            self._eliminate(piv - 1, False)
            cnt = 1
            for c in range(piv):
                if self.buf[c] != 0:
                    cnt += 1
            ca = array.array('i', bytes(4 * cnt))
            va = array.array('q', bytes(8 * cnt))
            cnt = 0
            for c in range(piv):
                if self.buf[c] != 0:
                    ca.data.as_ints[cnt] = c
                    va.data.as_longlongs[cnt] = self.buf[c]
                    self.buf[c] = 0
                    cnt += 1
            ca.data.as_ints[cnt] = piv
            va.data.as_longlongs[cnt] = 1
            self._cols[r] = ca
            self._vals[r] = va
