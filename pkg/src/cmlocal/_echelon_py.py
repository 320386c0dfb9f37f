"""Pure-Python sparse row echelon form over GF(p) or QQ.

Rows are ``{col: value}`` dicts.  The pivot of a row is its smallest column.
Stored rows are monic and semi-reduced (distinct pivots).
"""

from fractions import Fraction
from heapq import heapify, heappop, heappush


class Echelon:
    def __init__(self, p, ncols=None):
        self.p = p
        self.ncols = ncols
        self._rows = {}

    @property
    def rank(self):
        return len(self._rows)

    def pivots(self):
        return sorted(self._rows)

    def rows(self):
        return [dict(self._rows[c]) for c in sorted(self._rows)]

    def has_pivot(self, col):
        return col in self._rows

    def _reduce(self, row, full):
        p = self.p
        rows = self._rows
        h = {c: v for c, v in row.items() if v}
        heap = list(h)
        heapify(heap)
        out = {}
        while heap:
            c = heappop(heap)
            v = h.pop(c, None)
            if v is None:
                continue
            piv = rows.get(c)
            if piv is None:
                out[c] = v
                if not full:
                    out.update(h)
                    return out
                continue
            for cc, a in piv.items():
                if cc == c:
                    continue
                w = h.get(cc)
                if w is None:
                    w = -v * a
                    if p:
                        w %= p
                    h[cc] = w
                    heappush(heap, cc)
                else:
                    w -= v * a
                    if p:
                        w %= p
                    if w:
                        h[cc] = w
                    else:
                        del h[cc]
        return out

    def reduce(self, row):
        """Full remainder of ``row`` against the stored rows."""
        return self._reduce(row, True)

    def add(self, row):
        """Insert ``row``; returns True when it was independent."""
        r = self._reduce(row, False)
        if not r:
            return False
        c = min(r)
        v = r[c]
        p = self.p
        if v != 1:
            inv = pow(v, -1, p) if p else Fraction(1) / v
            if p:
                r = {k: w * inv % p for k, w in r.items()}
            else:
                r = {k: w * inv for k, w in r.items()}
        self._rows[c] = r
        return True

    def contains(self, row):
        return not self._reduce(row, True)

    def add_unit(self, col):
        """Insert the unit vector e_col; only a pivot at col can reduce it."""
        if col in self._rows:
            return False
        self._rows[col] = {col: 1}
        return True
