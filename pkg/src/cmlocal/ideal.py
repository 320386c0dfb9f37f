"""Ideals of the polynomial ring and their local and global calculus.

An ``IdealHandle`` wraps generators together with lazily computed bases,
one per monomial order.  Ideals of A = R/I are handled through preimages
containing I.
"""

import math
import threading
from fractions import Fraction

from .artinian import ArtinianBasis, standard_monomials
from .groebner import buchberger, reduce_by, standard_monomial_count
from .hilbert import HilbertSeries, monomial_hilbert_numerator, one_minus_z_pow, pmul, psub
from .linalg import make_echelon
from .monomial import DEGREVLEX, LOCAL, MonomialOrder, divides
from .mora import initial_forms, mora_standard_basis, weak_normal_form, _Elem
from .poly import Polynomial


class IdealHandle:
    """Generators in a ``PolyRing`` plus cached bases keyed by order."""

    def __init__(self, ring, gens):
        self.ring = ring
        clean = []
        for g in gens:
            if isinstance(g, Polynomial):
                if g.ring != ring:
                    raise ValueError("generator from a different ring")
                g = g.terms
            g = {tuple(m): c for m, c in g.items() if c}
            if g:
                clean.append(g)
        self._gens = clean
        self._cache = {}
        self._lock = threading.Lock()

    @classmethod
    def of(cls, pres, extra=()):
        """The preimage in R of an ideal of A: I plus ``extra``."""
        return cls(pres.ring, list(pres.gens) + list(extra))

    @property
    def p(self):
        return self.ring.char

    @property
    def nvars(self):
        return self.ring.nvars

    @property
    def raw_gens(self):
        return [dict(g) for g in self._gens]

    @property
    def gens(self):
        return [Polynomial(self.ring, dict(g)) for g in self._gens]

    def basis(self, order=DEGREVLEX):
        """Reduced Groebner basis (global order) or minimal standard basis (local)."""
        if isinstance(order, str):
            order = MonomialOrder(order)
        hit = self._cache.get(order.kind)
        if hit is not None:
            return hit
        with self._lock:
            hit = self._cache.get(order.kind)
            if hit is None:
                if order.is_global:
                    hit = buchberger(self._gens, order, self.p, nvars=self.nvars)
                else:
                    hit = mora_standard_basis(self._gens, self.p)
                self._cache[order.kind] = hit
        return hit

    def contains(self, f, local=False):
        """Membership in the polynomial ideal, or in its localization at the origin."""
        if isinstance(f, Polynomial):
            f = f.terms
        if not f:
            return True
        if local:
            S = [_Elem(g, self.p) for g in self.basis(LOCAL)]
            return not weak_normal_form(dict(f), S, self.p)
        return not reduce_by(dict(f), self.basis(DEGREVLEX), DEGREVLEX, self.p)

    def is_unit_locally(self):
        return any(not any(m) for g in self._gens for m in g)

    def __repr__(self):
        return f"IdealHandle({len(self._gens)} gens in {self.ring!r})"


# ------------------------------------------------------------------ calculus

def _lift(f, k=1):
    return {(0,) * k + m: c for m, c in f.items()}


def _drop(f, k=1):
    return {m[k:]: c for m, c in f.items()}


def exact_divide(f, g, p):
    """f / g for polynomials with g | f; raises ValueError otherwise."""
    lm = DEGREVLEX.leading(g)
    lc = g[lm]
    inv = pow(lc, -1, p) if p else Fraction(1) / lc
    q = {}
    h = dict(f)
    while h:
        m = DEGREVLEX.leading(h)
        if not divides(lm, m):
            raise ValueError("division is not exact")
        u = tuple([a - b for a, b in zip(m, lm)])
        c = h[m] * inv
        if p:
            c %= p
        q[u] = c
        for t, a in g.items():
            mt = tuple([x + y for x, y in zip(t, u)])
            v = h.get(mt, 0) - c * a
            if p:
                v %= p
            if v:
                h[mt] = v
            else:
                h.pop(mt, None)
    return q


def _intersect_raw(A, B, nvars, p):
    if not A or not B:
        return []
    t = (1,) + (0,) * nvars
    gens = []
    for f in A:
        gens.append({tuple([a + b for a, b in zip(m, t)]): c for m, c in _lift(f).items()})
    for g in B:
        lifted = _lift(g)
        shifted = {tuple([a + b for a, b in zip(m, t)]): (-c % p if p else -c) for m, c in lifted.items()}
        h = dict(lifted)
        for m, c in shifted.items():
            v = h.get(m, 0) + c
            if p:
                v %= p
            if v:
                h[m] = v
            else:
                h.pop(m, None)
        gens.append(h)
    G = buchberger(gens, MonomialOrder("elim:1"), p, nvars=nvars + 1)
    return [_drop(g) for g in G if all(m[0] == 0 for m in g)]


def ideal_ops(a, b=None, op="sum", k=None):
    """Sum, product, power, colon and intersection of ideals of R.

    ``op`` is one of "sum", "product", "power", "colon", "intersect".  For
    "power" pass the exponent as ``k`` (``b`` is ignored).
    """
    ring, p, n = a.ring, a.p, a.nvars
    if b is not None and b.ring != ring:
        raise ValueError("ideals live in different rings")
    if op == "sum":
        return IdealHandle(ring, a.raw_gens + b.raw_gens)
    if op == "product":
        return IdealHandle(ring, [_mul(f, g, p) for f in a.raw_gens for g in b.raw_gens])
    if op == "power":
        if k is None or k < 1:
            raise ValueError("power exponent must be >= 1")
        out = a
        for _ in range(k - 1):
            out = IdealHandle(ring, _minimal(ideal_ops(out, a, "product").basis(DEGREVLEX)))
        return out
    if op == "intersect":
        return IdealHandle(ring, _intersect_raw(a.basis(DEGREVLEX), b.basis(DEGREVLEX), n, p))
    if op == "colon":
        result = None
        for g in b.raw_gens:
            inter = _intersect_raw(a.basis(DEGREVLEX), [g], n, p)
            quot = IdealHandle(ring, [exact_divide(h, g, p) for h in inter])
            result = quot if result is None else ideal_ops(result, quot, "intersect")
        if result is None:
            return IdealHandle(ring, [{(0,) * n: 1 if p else Fraction(1)}])
        return IdealHandle(ring, result.basis(DEGREVLEX))
    raise ValueError(f"unknown ideal operation {op!r}")


def _mul(f, g, p):
    h = {}
    for m1, c1 in f.items():
        for m2, c2 in g.items():
            m = tuple([x + y for x, y in zip(m1, m2)])
            v = h.get(m, 0) + c1 * c2
            if p:
                v %= p
            if v:
                h[m] = v
            else:
                h.pop(m, None)
    return h


def _minimal(G):
    return [g for g in G if g]


# ------------------------------------------------------------ tangent cone

def tangent_cone(ideal):
    """The homogeneous ideal in_*(I) generated by initial forms of a standard basis."""
    if ideal.is_unit_locally():
        raise ValueError("generator with a nonzero constant term (unit ideal locally)")
    return IdealHandle(ideal.ring, initial_forms(ideal.basis(LOCAL)))


def local_hilbert_series(ideal):
    """Hilbert series of G(R_M / ideal) from the leading monomials of a standard basis."""
    lms = [LOCAL.leading(g) for g in ideal.basis(LOCAL)]
    return monomial_hilbert_numerator(lms, ideal.nvars)


# --------------------------------------------------------------- lengths

class LengthError(ValueError):
    pass


def quotient_length(numerator, denominator):
    """l(W/K) for ideals K subset W of the local ring at the origin.

    The Hilbert-Samuel functions of R/K and R/W are exact (standard bases),
    so the difference of their generating series is a polynomial exactly
    when W/K has finite length; its value at 1 is the length.  Returns
    ``math.inf`` otherwise.
    """
    W, K = numerator, denominator
    for g in K.raw_gens:
        if not W.contains(g, local=True):
            raise LengthError("denominator is not contained in numerator")
    if W.is_unit_locally():
        if K.is_unit_locally():
            return 0
        sK = local_hilbert_series(K)
        return sK.multiplicity if sK.dim == 0 else math.inf
    sK, sW = local_hilbert_series(K), local_hilbert_series(W)
    diff = _series_difference(sK, sW)
    return math.inf if diff is None else sum(diff)


def _series_difference(a, b):
    """Polynomial a - b when the difference of the two series is one, else None."""
    d = max(a.dim, b.dim)
    num = psub(pmul(list(a.numerator), one_minus_z_pow(d - a.dim)),
               pmul(list(b.numerator), one_minus_z_pow(d - b.dim)))
    if not num:
        return []
    hs = HilbertSeries.from_unreduced(num, d)
    return list(hs.numerator) if hs.dim == 0 else None


def local_length(ideal):
    """l(R_M / ideal); ``math.inf`` when it is not M-primary."""
    if ideal.is_unit_locally():
        return 0
    hs = local_hilbert_series(ideal)
    return hs.multiplicity if hs.dim == 0 else math.inf


def hilbert_samuel(pres, n):
    """l(A / m^(n+1)) = dim_k R/(I + M^(n+1)) from a truncated degrevlex basis."""
    if n < 0:
        raise ValueError("n must be non-negative")
    G = buchberger(pres.gens, DEGREVLEX, pres.char, trunc=n + 1, nvars=pres.nvars)
    return standard_monomial_count(G, DEGREVLEX, pres.nvars, trunc=n + 1)


def brute_force_length(gens, nvars, p, N):
    """dim_k R/(gens + M^(N+1)) by plain linear algebra on monomial multiples.

    Monomial generators kill the columns they divide; every other generator
    contributes all its monomial multiples truncated above degree N.  No
    Groebner machinery is involved.
    """
    gens = [dict(g.terms if isinstance(g, Polynomial) else g) for g in gens]
    gens = [{m: c for m, c in g.items() if c and sum(m) <= N} for g in gens]
    monos = [next(iter(g)) for g in gens if len(g) == 1]
    if any(not any(m) for m in monos):
        return 0
    alive = standard_monomials(monos, nvars, N + 1)
    index = {m: i for i, m in enumerate(alive)}
    ech = make_echelon(p, max(len(alive), 1))
    rank = 0
    for g in gens:
        if len(g) <= 1:
            continue
        cofactors = set()
        for s in alive:
            for t in g:
                if divides(t, s):
                    cofactors.add(tuple([a - b for a, b in zip(s, t)]))
        for u in sorted(cofactors):
            row = {}
            for t, c in g.items():
                i = index.get(tuple([a + b for a, b in zip(t, u)]))
                if i is not None:
                    row[i] = c
            if row and ech.add(row):
                rank += 1
    return len(alive) - rank


def artinian_basis(ideal):
    """Standard monomials and multiplication tables of a zero-dimensional ideal."""
    return ArtinianBasis(ideal.basis(DEGREVLEX), DEGREVLEX, ideal.nvars, ideal.p)


def verify_groebner(basis, order, p, trunc=None):
    """True when every S-polynomial reduces to zero (Buchberger's criterion)."""
    from .groebner import spoly

    lms = [order.leading(g) for g in basis]
    for i in range(len(basis)):
        for j in range(i):
            s = spoly(_monic(basis[i], lms[i], p), _monic(basis[j], lms[j], p), lms[i], lms[j], p)
            if reduce_by(s, basis, order, p, trunc=trunc):
                return False
    return True


def _monic(f, lm, p):
    c = f[lm]
    inv = pow(c, -1, p) if p else Fraction(1) / c
    return {m: (v * inv % p if p else v * inv) for m, v in f.items()}


__all__ = ["IdealHandle", "ideal_ops", "tangent_cone", "quotient_length", "local_length",
           "hilbert_samuel", "brute_force_length", "artinian_basis", "exact_divide",
           "verify_groebner", "local_hilbert_series", "LengthError", "standard_monomial_count"]
