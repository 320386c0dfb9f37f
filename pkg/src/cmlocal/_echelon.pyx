# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled sparse row echelon form over GF(p), p < 2**31.

Same contract as the pure-Python ``Echelon``: rows are ``{col: value}``
dicts, pivots are smallest columns, stored rows are monic.  Stored rows live
in one growable arena; the working row is a sorted sparse buffer.
"""

from libc.stdlib cimport malloc, realloc, free
from libc.stdint cimport int64_t


cdef int64_t _inv(int64_t a, int64_t p):
    cdef int64_t t = 0, newt = 1, r = p, newr = a % p, q, tmp
    while newr != 0:
        q = r // newr
        tmp = t - q * newt
        t = newt
        newt = tmp
        tmp = r - q * newr
        r = newr
        newr = tmp
    if t < 0:
        t += p
    return t


cdef class Echelon:
    cdef int64_t p
    cdef public Py_ssize_t ncols
    cdef int64_t* start
    cdef int64_t* length
    cdef int64_t* acols
    cdef int64_t* avals
    cdef int64_t used, cap
    cdef Py_ssize_t _rank
    # working buffers
    cdef int64_t* wc
    cdef int64_t* wv
    cdef int64_t* tc
    cdef int64_t* tv
    cdef int64_t wcap

    def __cinit__(self, p, ncols):
        cdef Py_ssize_t i
        if p <= 0 or p >= 2 ** 31:
            raise ValueError("compiled echelon needs a prime 0 < p < 2**31")
        self.p = p
        self.ncols = ncols
        self.start = <int64_t*> malloc(max(ncols, 1) * sizeof(int64_t))
        self.length = <int64_t*> malloc(max(ncols, 1) * sizeof(int64_t))
        self.cap = 1024
        self.acols = <int64_t*> malloc(self.cap * sizeof(int64_t))
        self.avals = <int64_t*> malloc(self.cap * sizeof(int64_t))
        self.wcap = 64
        self.wc = <int64_t*> malloc(self.wcap * sizeof(int64_t))
        self.wv = <int64_t*> malloc(self.wcap * sizeof(int64_t))
        self.tc = <int64_t*> malloc(self.wcap * sizeof(int64_t))
        self.tv = <int64_t*> malloc(self.wcap * sizeof(int64_t))
        if (self.start == NULL or self.length == NULL or self.acols == NULL or self.avals == NULL
                or self.wc == NULL or self.wv == NULL or self.tc == NULL or self.tv == NULL):
            raise MemoryError()
        for i in range(ncols):
            self.start[i] = -1
            self.length[i] = 0
        self.used = 0
        self._rank = 0

    def __dealloc__(self):
        free(self.start)
        free(self.length)
        free(self.acols)
        free(self.avals)
        free(self.wc)
        free(self.wv)
        free(self.tc)
        free(self.tv)

    cdef void _grow_work(self, int64_t need):
        cdef int64_t cap = self.wcap
        if need <= cap:
            return
        while cap < need:
            cap *= 2
        self.wc = <int64_t*> realloc(self.wc, cap * sizeof(int64_t))
        self.wv = <int64_t*> realloc(self.wv, cap * sizeof(int64_t))
        self.tc = <int64_t*> realloc(self.tc, cap * sizeof(int64_t))
        self.tv = <int64_t*> realloc(self.tv, cap * sizeof(int64_t))
        if self.wc == NULL or self.wv == NULL or self.tc == NULL or self.tv == NULL:
            raise MemoryError()
        self.wcap = cap

    cdef int64_t _load(self, dict row) except -1:
        cdef int64_t n = 0, c, v
        cdef list keys = sorted(row)
        self._grow_work(len(keys) + 1)
        for key in keys:
            c = key
            if c < 0 or c >= self.ncols:
                raise IndexError(f"column {c} out of range")
            v = row[key] % self.p
            if v:
                self.wc[n] = c
                self.wv[n] = v
                n += 1
        return n

    cdef int64_t _eliminate(self, int64_t n, int64_t pos, bint full) except -1:
        """Reduce the working row from index ``pos``; returns its new length.

        Semi mode stops at the first non-pivot column (which ends up at
        index ``pos``).  Full mode keeps non-pivot entries in place.
        """
        cdef int64_t p = self.p
        cdef int64_t c, v, s, L, i, j, k, out, cc, a, w
        cdef int64_t* tmpc
        cdef int64_t* tmpv
        while pos < n:
            c = self.wc[pos]
            s = self.start[c]
            if s < 0:
                if not full:
                    return n
                pos += 1
                continue
            v = self.wv[pos]
            L = self.length[c]
            self._grow_work(n + L)
            # merge wc[pos+1:n] with -v * pivot[1:L]
            for k in range(pos):
                self.tc[k] = self.wc[k]
                self.tv[k] = self.wv[k]
            out = pos
            i = pos + 1
            j = 1
            while i < n or j < L:
                if j >= L or (i < n and self.wc[i] < self.acols[s + j]):
                    self.tc[out] = self.wc[i]
                    self.tv[out] = self.wv[i]
                    out += 1
                    i += 1
                elif i >= n or self.acols[s + j] < self.wc[i]:
                    cc = self.acols[s + j]
                    a = (p - v) * self.avals[s + j] % p
                    if a:
                        self.tc[out] = cc
                        self.tv[out] = a
                        out += 1
                    j += 1
                else:
                    w = (self.wv[i] + (p - v) * self.avals[s + j]) % p
                    if w:
                        self.tc[out] = self.wc[i]
                        self.tv[out] = w
                        out += 1
                    i += 1
                    j += 1
            tmpc = self.wc
            tmpv = self.wv
            self.wc = self.tc
            self.wv = self.tv
            self.tc = tmpc
            self.tv = tmpv
            n = out
        return n

    cdef dict _export(self, int64_t n):
        cdef dict out = {}
        cdef int64_t k
        for k in range(n):
            out[self.wc[k]] = self.wv[k]
        return out

    @property
    def rank(self):
        return self._rank

    def has_pivot(self, Py_ssize_t col):
        return self.start[col] >= 0

    def pivots(self):
        cdef Py_ssize_t c
        return [c for c in range(self.ncols) if self.start[c] >= 0]

    def rows(self):
        cdef Py_ssize_t c
        cdef int64_t s, k
        out = []
        for c in range(self.ncols):
            s = self.start[c]
            if s >= 0:
                out.append({self.acols[s + k]: self.avals[s + k] for k in range(self.length[c])})
        return out

    def reduce(self, dict row):
        cdef int64_t n = self._load(row)
        n = self._eliminate(n, 0, True)
        return self._export(n)

    def contains(self, dict row):
        cdef int64_t n = self._load(row)
        n = self._eliminate(n, 0, True)
        return n == 0

    def add(self, dict row):
        cdef int64_t n = self._load(row)
        n = self._eliminate(n, 0, False)
        if n == 0:
            return False
        self._store(n)
        return True

    def add_unit(self, Py_ssize_t col):
        if self.start[col] >= 0:
            return False
        self.wc[0] = col
        self.wv[0] = 1
        self._store(1)
        return True

    cdef void _store(self, int64_t n):
        cdef int64_t p = self.p, inv, k, c
        cdef int64_t cap = self.cap
        if self.used + n > cap:
            while self.used + n > cap:
                cap *= 2
            self.acols = <int64_t*> realloc(self.acols, cap * sizeof(int64_t))
            self.avals = <int64_t*> realloc(self.avals, cap * sizeof(int64_t))
            self.cap = cap
        inv = _inv(self.wv[0], p)
        c = self.wc[0]
        self.start[c] = self.used
        self.length[c] = n
        for k in range(n):
            self.acols[self.used + k] = self.wc[k]
            self.avals[self.used + k] = self.wv[k] * inv % p
        self.used += n
        self._rank += 1
