"""Numerical semigroup rings k[[t^a_1, ..., t^a_k]].

The ring is presented as k[x_1..x_k]_(x) modulo its toric ideal, obtained
by eliminating t from (x_i - t^a_i).  Independently of any Groebner basis,
the m-adic data of such a ring is visible in the semigroup itself: m^n is
spanned by the t^s with s in nM (M = S minus 0), so every length used here
is a count of integers.
"""

import random
from math import gcd
from functools import reduce

from .field import DEFAULT_CHAR
from .groebner import buchberger
from .monomial import MonomialOrder
from .presentation import RingPresentation


def minimal_generators(gens):
    """Minimal generating set of the semigroup generated by ``gens``."""
    gens = sorted(set(g for g in gens if g > 0))
    out = []
    for g in gens:
        if not _representable(g, out):
            out.append(g)
    return out


def _representable(n, gens):
    if not gens:
        return n == 0
    reach = [False] * (n + 1)
    reach[0] = True
    for s in range(1, n + 1):
        reach[s] = any(s >= g and reach[s - g] for g in gens)
    return reach[n]


def frobenius_number(gens):
    """Largest integer outside the semigroup (-1 when it is all of N)."""
    gens = minimal_generators(gens)
    if reduce(gcd, gens) != 1:
        raise ValueError("generators must be coprime")
    a = gens[0]
    return max(apery_set(gens)) - a


def apery_set(gens):
    """Ap(S, a) for the smallest generator a: least element of S in each class mod a."""
    gens = minimal_generators(gens)
    a = gens[0]
    best = [None] * a
    best[0] = 0
    # Dijkstra-style relaxation over residues
    done = [False] * a
    for _ in range(a):
        r = min((i for i in range(a) if not done[i] and best[i] is not None), key=lambda i: best[i])
        done[r] = True
        for g in gens[1:]:
            s = best[r] + g
            j = s % a
            if best[j] is None or s < best[j]:
                best[j] = s
    return best


def elements_below(gens, bound):
    """Membership table of S on [0, bound)."""
    ap = apery_set(gens)
    a = len(ap)
    return [n >= ap[n % a] for n in range(bound)]


def pseudo_frobenius(gens):
    """Integers f outside S with f + s in S for every nonzero s in S."""
    gens = minimal_generators(gens)
    a = gens[0]
    ap = set(apery_set(gens))
    maximal = [w for w in ap if not any((w + g) in ap for g in gens)]
    return sorted(w - a for w in maximal)


def semigroup_type(gens):
    """Cohen-Macaulay type of k[[S]]: the number of pseudo-Frobenius numbers."""
    return len(pseudo_frobenius(gens))


class SemigroupData:
    """The m-adic filtration of k[[S]] read off the semigroup.

    For s in S let ord(s) be the largest number of generators summing to s.
    Then nM = {s in S : ord(s) >= n}: a sum of k >= n generators drops to a
    sum of n generators plus an element of S, and conversely.
    """

    def __init__(self, gens):
        self.gens = minimal_generators(gens)
        if reduce(gcd, self.gens) != 1:
            raise ValueError("generators must be coprime")
        self.frobenius = frobenius_number(self.gens)
        self._ord = [0]

    def _bound(self, n):
        return n * max(self.gens) + self.frobenius + 2

    def order(self, bound):
        """ord(s) for s in [0, bound), -1 outside S."""
        ords = self._ord
        for s in range(len(ords), bound):
            best = -1
            for g in self.gens:
                if s >= g and ords[s - g] >= 0:
                    best = max(best, ords[s - g] + 1)
            ords.append(best)
        return ords[:bound]

    def ideal_power(self, n, bound):
        """Membership table of nM on [0, bound)."""
        return [o >= n for o in self.order(bound)]

    def samuel(self, n):
        """l(A/m^(n+1)) = #(S minus (n+1)M)."""
        return sum(1 for o in self.order(self._bound(n + 1)) if 0 <= o <= n)

    def hilbert(self, n):
        return self.samuel(n) - (self.samuel(n - 1) if n else 0)

    def rho(self, i):
        """l(m^(i+1) / x m^i) with x = t^a, a the multiplicity."""
        a = self.gens[0]
        ords = self.order(self._bound(i + 1) + a)
        return sum(1 for s, o in enumerate(ords)
                   if o >= i + 1 and not (s >= a and ords[s - a] >= i))


def toric_ideal(gens, p=DEFAULT_CHAR):
    """Generators of the kernel of k[x_1..x_k] -> k[t], x_i -> t^a_i (raw dicts)."""
    k = len(gens)
    n = k + 1
    polys = []
    for i, a in enumerate(gens):
        xi = [0] * n
        xi[i + 1] = 1
        t = [0] * n
        t[0] = a
        polys.append({tuple(xi): 1, tuple(t): (p - 1) if p else -1})
    G = buchberger(polys, MonomialOrder("elim:1"), p, nvars=n)
    return [{m[1:]: c for m, c in g.items()} for g in G if all(m[0] == 0 for m in g)]


def semigroup_ring(gens, char=DEFAULT_CHAR, seed=0):
    """Presentation of k[[t^a : a in gens]] on its minimal generators."""
    gens = minimal_generators(gens)
    if not gens or reduce(gcd, gens) != 1:
        raise ValueError("generators must be coprime")
    names = [f"x{i + 1}" for i in range(len(gens))]
    if gens == [1]:
        return RingPresentation(["t"], [], char, seed, name="k[[t]]")
    ideal = toric_ideal(gens, char)
    label = "k[[" + ",".join(f"t^{a}" for a in gens) + "]]"
    return RingPresentation(names, ideal, char, seed, name=label,
                            meta={"semigroup": list(gens)})


def random_semigroup(rng, min_gens=3, max_gens=5, max_value=30):
    """Random minimal generating set of a numerical semigroup with the given sizes."""
    if isinstance(rng, int):
        rng = random.Random(rng)
    while True:
        k = rng.randint(min_gens, max_gens)
        cand = sorted(rng.sample(range(2, max_value + 1), k))
        if reduce(gcd, cand) == 1 and minimal_generators(cand) == cand:
            return cand
