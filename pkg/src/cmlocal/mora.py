"""Mora's tangent cone algorithm.

Standard bases for the local degree order ``local-degrevlex`` using the
ecart-driven weak normal form.  The initial forms of a standard basis
generate the ideal of initial forms, which presents the associated graded
ring.
"""

import heapq
from fractions import Fraction

from .monomial import LOCAL, coprime, divides, mask, mdeg, mlcm


class _Elem:
    __slots__ = ("poly", "lm", "bits", "ecart", "sugar")

    def __init__(self, poly, p):
        lm = min(poly, key=_rank)
        lc = poly[lm]
        if lc != 1:
            inv = pow(lc, -1, p) if p else Fraction(1) / lc
            if p:
                poly = {m: c * inv % p for m, c in poly.items()}
            else:
                poly = {m: c * inv for m, c in poly.items()}
        self.poly = poly
        self.lm = lm
        self.bits = mask(lm)
        top = max(map(sum, poly))
        self.ecart = top - sum(lm)
        self.sugar = top

    def truncate(self, below):
        """Drop tail terms of degree >= below (the leading term stays)."""
        self.poly = {m: c for m, c in self.poly.items() if sum(m) < below or m == self.lm}
        top = max(map(sum, self.poly))
        self.ecart = top - sum(self.lm)


def _rank(m):
    return (sum(m),) + m[::-1]


def weak_normal_form(f, basis, p, trunc=None):
    """Mora's normal form: returns h with u*f - h in the ideal for a unit u.

    ``basis`` is a list of ``_Elem``.  Either h == 0 or its leading monomial
    is not divisible by any leading monomial of the basis.  With ``trunc``
    terms of degree >= trunc are dropped (valid once m^trunc lies in the
    ideal).
    """
    h = dict(f) if trunc is None else {m: c for m, c in f.items() if sum(m) < trunc}
    T = list(basis)
    low = [(_rank(m), m) for m in h]
    heapq.heapify(low)
    high = [(-sum(m), m) for m in h]
    heapq.heapify(high)
    while h:
        while low[0][1] not in h:
            heapq.heappop(low)
        lm = low[0][1]
        bits = mask(lm)
        best = None
        for g in T:
            if g.bits & ~bits:
                continue
            if divides(g.lm, lm) and (best is None or g.ecart < best.ecart):
                best = g
                if best.ecart == 0:
                    break
        if best is None:
            return h
        while high[0][1] not in h:
            heapq.heappop(high)
        eh = -high[0][0] - sum(lm)
        if best.ecart > eh:
            T.append(_Elem(dict(h), p))
        c = h[lm]
        q = tuple([a - b for a, b in zip(lm, best.lm)])
        for t, a in best.poly.items():
            mt = tuple([x + y for x, y in zip(t, q)])
            if trunc is not None and sum(mt) >= trunc:
                continue
            old = h.get(mt)
            v = (0 if old is None else old) - c * a
            if p:
                v %= p
            if v:
                h[mt] = v
                if old is None:
                    heapq.heappush(low, (_rank(mt), mt))
                    heapq.heappush(high, (-sum(mt), mt))
            elif old is not None:
                del h[mt]
    return h


def _spoly(f, g, p):
    L = mlcm(f.lm, g.lm)
    uf = tuple([a - b for a, b in zip(L, f.lm)])
    ug = tuple([a - b for a, b in zip(L, g.lm)])
    h = {tuple([a + b for a, b in zip(m, uf)]): c for m, c in f.poly.items()}
    for m, c in g.poly.items():
        mm = tuple([a + b for a, b in zip(m, ug)])
        v = h.get(mm, 0) - c
        if p:
            v %= p
        if v:
            h[mm] = v
        else:
            h.pop(mm, None)
    return h


def mora_standard_basis(gens, p):
    """Standard basis (raw dicts, monic) of ``gens`` for local-degrevlex.

    Leading monomials are minimal: no basis element's leading monomial is
    divisible by another's.  As soon as the leading monomials contain every
    monomial of some degree D, m^D lies in the local ideal (Nakayama), and
    from then on terms of degree >= D are discarded.
    """
    S = []
    pairs = {}
    trunc = None

    def admit(r):
        nonlocal trunc
        _insert(S, pairs, _Elem(r, p))
        if trunc is None and len(S[-1].lm) and sum(1 for e in S[-1].lm if e) == 1:
            trunc = _corner([e.lm for e in S])
            if trunc is not None:
                for e in S:
                    e.truncate(trunc)

    for f in gens:
        if not f:
            continue
        r = weak_normal_form(f, S, p, trunc)
        if r:
            admit(r)
    while pairs:
        key = min(pairs, key=lambda k: pairs[k][0])
        _, i, j = pairs.pop(key)
        s = _spoly(S[i], S[j], p)
        if not s:
            continue
        r = weak_normal_form(s, S, p, trunc)
        if r:
            admit(r)
    keep = []
    for e in sorted(S, key=lambda e: _rank(e.lm)):
        if any(divides(k.lm, e.lm) for k in keep):
            continue
        keep.append(e)
    return [e.poly for e in keep]


def _corner(lms):
    """Least D with every monomial of degree D in (lms), or None."""
    from .hilbert import monomial_hilbert_numerator

    n = len(lms[0])
    for j in range(n):
        if not any(m[j] and sum(m) == m[j] for m in lms):
            return None
    hs = monomial_hilbert_numerator(lms, n)
    if hs.dim != 0:
        return None
    return len(hs.numerator)


def _insert(S, pairs, h):
    """Append h and update the pair set with the Gebauer-Moeller criteria."""
    k = len(S)
    lmh = h.lm
    for key in list(pairs):
        _, i, j = pairs[key]
        L = mlcm(S[i].lm, S[j].lm)
        if divides(lmh, L) and mlcm(S[i].lm, lmh) != L and mlcm(S[j].lm, lmh) != L:
            del pairs[key]
    groups = {}
    for i, g in enumerate(S):
        L = mlcm(g.lm, lmh)
        useless = coprime(g.lm, lmh)
        if L in groups:
            groups[L][1] = groups[L][1] or useless
        else:
            groups[L] = [i, useless]
    minimal = []
    for L in sorted(groups, key=lambda t: (mdeg(t), t)):
        if any(divides(M, L) for M in minimal):
            continue
        minimal.append(L)
        i, useless = groups[L]
        if not useless:
            sugar = max(S[i].sugar + mdeg(L) - mdeg(S[i].lm), h.sugar + mdeg(L) - mdeg(lmh))
            pairs[(i, k)] = ((mdeg(L), sugar, _rank(L), k, i), i, k)
    S.append(h)


def initial_forms(basis):
    out = []
    for f in basis:
        low = min(map(sum, f))
        out.append({m: c for m, c in f.items() if sum(m) == low})
    return out


def leading_monomials(basis):
    return [min(f, key=_rank) for f in basis]


def check_constant_free(gens):
    for f in gens:
        for m in f:
            if not any(m):
                raise ValueError("generator has a nonzero constant term (unit ideal locally)")


__all__ = ["LOCAL", "mora_standard_basis", "weak_normal_form", "initial_forms",
           "leading_monomials", "check_constant_free"]
