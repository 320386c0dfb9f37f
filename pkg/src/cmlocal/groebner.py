"""Buchberger's algorithm for global monomial orders.

Works on raw ``{monomial: coeff}`` dicts.  Pair selection is the normal
strategy refined by sugar degree, with input position as the final
tie-break, so the output is reproducible for a fixed generator list.
"""

from fractions import Fraction
from heapq import heapify, heappop, heappush

from .monomial import coprime, divides, mask, mdeg, mlcm


class _Basis:
    """Polynomials with cached leading data and a divisor lookup."""

    def __init__(self, order, p):
        self.order = order
        self.p = p
        self.polys = []
        self.lms = []
        self.masks = []
        self.tails = []
        self.sugar = []
        self.active = []
        self._hits = {}

    def add(self, f, sugar):
        lm = self.order.leading(f)
        idx = len(self.polys)
        self.polys.append(f)
        self.lms.append(lm)
        self.masks.append(mask(lm))
        self.tails.append([(m, c) for m, c in f.items() if m != lm])
        self.sugar.append(sugar)
        self.active.append(True)
        return idx

    def reducer(self, m):
        hit = self._hits.get(m)
        if hit is not None:
            return hit
        mm = mask(m)
        lms = self.lms
        for i, bits in enumerate(self.masks):
            if bits & ~mm:
                continue
            if divides(lms[i], m):
                self._hits[m] = i
                return i
        return None

    def reduce(self, f, full=True, trunc=None):
        """Normal form of f; ``trunc`` drops all terms of degree >= trunc."""
        p = self.p
        rank = self.order.rank
        if trunc is not None:
            f = {m: c for m, c in f.items() if sum(m) < trunc}
        h = dict(f)
        heap = [(rank(m), m) for m in h]
        heapify(heap)
        out = {}
        lms = self.lms
        while heap:
            _, m = heappop(heap)
            c = h.pop(m, None)
            if c is None:
                continue
            i = self.reducer(m)
            if i is None:
                out[m] = c
                if not full:
                    out.update(h)
                    return out
                continue
            lm = lms[i]
            q = tuple([a - b for a, b in zip(m, lm)])
            for t, a in self.tails[i]:
                mt = tuple([x + y for x, y in zip(t, q)])
                if trunc is not None and sum(mt) >= trunc:
                    continue
                v = h.get(mt)
                if v is None:
                    v = -c * a
                    if p:
                        v %= p
                    h[mt] = v
                    heappush(heap, (rank(mt), mt))
                else:
                    v = v - c * a
                    if p:
                        v %= p
                    if v:
                        h[mt] = v
                    else:
                        del h[mt]
        return out


def _monic(f, lm, p):
    lc = f[lm]
    if lc == 1:
        return f
    inv = pow(lc, -1, p) if p else Fraction(1) / lc
    if p:
        return {m: c * inv % p for m, c in f.items()}
    return {m: c * inv for m, c in f.items()}


def spoly(f, g, lmf, lmg, p):
    """S-polynomial of two monic polynomials."""
    L = mlcm(lmf, lmg)
    uf = tuple([a - b for a, b in zip(L, lmf)])
    ug = tuple([a - b for a, b in zip(L, lmg)])
    h = {}
    for m, c in f.items():
        h[tuple([a + b for a, b in zip(m, uf)])] = c
    for m, c in g.items():
        mm = tuple([a + b for a, b in zip(m, ug)])
        v = h.get(mm, 0) - c
        if p:
            v %= p
        if v:
            h[mm] = v
        else:
            h.pop(mm, None)
    return h


def _update(B, pairs, h):
    """Gebauer-Moeller update after appending basis element ``h``."""
    lms = B.lms
    lmh = lms[h]
    is_mono_h = not B.tails[h]
    # prune old pairs
    keep = {}
    for key, (i, j, L) in pairs.items():
        if divides(lmh, L) and mlcm(lms[i], lmh) != L and mlcm(lms[j], lmh) != L:
            continue
        keep[key] = (i, j, L)
    # new pairs grouped by lcm
    groups = {}
    for g in range(h):
        if not B.active[g]:
            continue
        L = mlcm(lms[g], lmh)
        useless = coprime(lms[g], lmh) or (is_mono_h and not B.tails[g])
        entry = groups.get(L)
        if entry is None:
            groups[L] = [g, useless]
        else:
            entry[1] = entry[1] or useless
    minimal = []
    fresh = []
    for L in sorted(groups, key=lambda t: (mdeg(t), t)):
        if any(divides(M, L) for M in minimal):
            continue
        minimal.append(L)
        g, useless = groups[L]
        if not useless:
            keep[(g, h)] = (g, h, L)
            fresh.append((g, h))
    for g in range(h):
        if B.active[g] and divides(lmh, lms[g]):
            B.active[g] = False
    return keep, fresh


def buchberger(gens, order, p, trunc=None, nvars=None):
    """Reduced Groebner basis of ``gens`` (raw dicts) under a global order.

    With ``trunc`` the ideal is ``gens + M^trunc``.  The monomials of degree
    ``trunc`` stay implicit: every polynomial is kept reduced modulo
    ``M^trunc`` and the returned basis together with all monomials of degree
    ``trunc`` is a Groebner basis of the truncated ideal.
    """
    if not order.is_global:
        raise ValueError("buchberger needs a global order")
    if trunc is not None:
        gens = [{m: c for m, c in f.items() if sum(m) < trunc} for f in gens]
    B = _Basis(order, p)
    pairs = {}
    rank = order.rank
    queue = []
    implicit = {}

    def admit(r, sugar):
        nonlocal pairs
        lm = order.leading(r)
        r = _monic(r, lm, p)
        h = B.add(r, sugar)
        pairs, fresh = _update(B, pairs, h)
        for k in fresh:
            heappush(queue, (_pair_key(B, pairs[k], rank), k))
        if trunc is not None:
            for u in _truncation_pairs(B, h, trunc):
                m = tuple([a + b for a, b in zip(u, lm)])
                key = ("t", h, u)
                implicit[key] = (h, u)
                heappush(queue, ((trunc, rank(m), h, -1), key))

    for f in gens:
        if not f:
            continue
        r = B.reduce(f, full=True, trunc=trunc)
        if r:
            admit(r, max(map(mdeg, f)))
    while queue:
        _, key = heappop(queue)
        entry = pairs.pop(key, None)
        if entry is not None:
            i, j, L = entry
            s = spoly(B.polys[i], B.polys[j], B.lms[i], B.lms[j], p)
            sugar = max(B.sugar[i] + mdeg(L) - mdeg(B.lms[i]), B.sugar[j] + mdeg(L) - mdeg(B.lms[j]))
        else:
            imp = implicit.pop(key, None)
            if imp is None:
                continue
            h, u = imp
            s = {tuple([a + b for a, b in zip(t, u)]): c for t, c in B.tails[h]}
            sugar = trunc
        r = B.reduce(s, full=True, trunc=trunc)
        if r:
            admit(r, sugar)
    return _interreduce(B, trunc)


def _truncation_pairs(B, h, trunc):
    """Cofactors u of the useful pairs between B[h] and the monomials of degree trunc.

    The pair with m = u * LM(h) matters only when some tail term of h has
    lower degree than LM(h) (otherwise u * tail lies in M^trunc), and it is
    skipped when an earlier pair (h, g) has an lcm dividing m.
    """
    lm = B.lms[h]
    D = mdeg(lm)
    if not B.tails[h] or all(mdeg(t) >= D for t, _ in B.tails[h]):
        return []
    from .hilbert import minimalize

    blockers = []
    for g in range(h):
        if not B.active[g]:
            continue
        q = tuple([max(a - b, 0) for a, b in zip(B.lms[g], lm)])
        blockers.append(q)
    blockers = minimalize(blockers)
    if any(mdeg(q) == 0 for q in blockers):
        return []
    return _monomials_avoiding(len(lm), trunc - D, blockers)


def _monomials_avoiding(n, degree, blockers):
    """Monomials of the given degree divisible by none of ``blockers``."""
    level = [(0,) * n]
    for _ in range(degree):
        nxt = set()
        for m in level:
            for j in range(n):
                e = list(m)
                e[j] += 1
                e = tuple(e)
                if e in nxt or any(divides(q, e) for q in blockers):
                    continue
                nxt.add(e)
        level = nxt
        if not level:
            return []
    return sorted(level)


def _pair_key(B, pair, rank):
    i, j, L = pair
    sugar = max(B.sugar[i] + mdeg(L) - mdeg(B.lms[i]), B.sugar[j] + mdeg(L) - mdeg(B.lms[j]))
    return (sugar, rank(L), j, i)


def _one():
    from fractions import Fraction

    return Fraction(1)


def _interreduce(B, trunc):
    order, p = B.order, B.p
    keep = [i for i in range(len(B.polys)) if B.active[i]]
    minimal = []
    for i in sorted(keep, key=lambda i: order.rank(B.lms[i]), reverse=True):
        if any(divides(B.lms[j], B.lms[i]) for j in minimal):
            continue
        minimal.append(i)
    red = _Basis(order, p)
    for i in minimal:
        red.add(B.polys[i], B.sugar[i])
    out = []
    for i in minimal:
        # no leading monomial divides a smaller monomial, so the tail can be
        # reduced against the whole minimal basis
        f, lm = B.polys[i], B.lms[i]
        g = red.reduce({m: c for m, c in f.items() if m != lm}, full=True, trunc=trunc)
        g[lm] = f[lm]
        out.append(g)
    out.sort(key=lambda g: order.rank(order.leading(g)))
    return out


def reduce_by(f, basis, order, p, trunc=None):
    """Full normal form of f modulo a Groebner basis (raw dicts)."""
    B = _Basis(order, p)
    for g in basis:
        B.add(g, 0)
    return B.reduce(f, full=True, trunc=trunc)


def standard_monomial_count(basis, order, n, trunc=None):
    """Number of monomials outside the leading ideal (``None`` if infinite).

    With ``trunc`` only monomials of degree < trunc are counted.
    """
    lms = [order.leading(g) for g in basis]
    if trunc is None:
        from .hilbert import monomial_hilbert_numerator

        hs = monomial_hilbert_numerator(lms, n)
        if hs.dim != 0:
            return None
        return hs.numerator_at_one()
    from .hilbert import hilbert_function_values

    return sum(hilbert_function_values(lms, n, trunc - 1))
