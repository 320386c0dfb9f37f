"""Exponent-vector monomials and the monomial orders used by the engines.

A monomial is a tuple of non-negative ints, one per variable.  Orders are
exposed through ``rank``: a tuple key that sorts *descending* in the order,
so ``min(terms, key=order.rank)`` is the leading monomial.
"""

from itertools import combinations_with_replacement

MAX_VARS = 16


def mdeg(m):
    return sum(m)


def mmul(a, b):
    return tuple([x + y for x, y in zip(a, b)])


def mdiv(a, b):
    """a / b, assuming b divides a."""
    return tuple([x - y for x, y in zip(a, b)])


def divides(a, b):
    """True when monomial a divides monomial b."""
    for x, y in zip(a, b):
        if x > y:
            return False
    return True


def mlcm(a, b):
    return tuple([x if x > y else y for x, y in zip(a, b)])


def coprime(a, b):
    for x, y in zip(a, b):
        if x and y:
            return False
    return True


def mask(m):
    bits = 0
    for i, x in enumerate(m):
        if x:
            bits |= 1 << i
    return bits


def unit(n, i, power=1):
    e = [0] * n
    e[i] = power
    return tuple(e)


def monomials_of_degree(n, d):
    """All exponent vectors of total degree d in n variables (lex descending)."""
    out = []
    for combo in combinations_with_replacement(range(n), d):
        e = [0] * n
        for i in combo:
            e[i] += 1
        out.append(tuple(e))
    return out


def monomials_up_to(n, d):
    out = []
    for k in range(d + 1):
        out.extend(monomials_of_degree(n, k))
    return out


class MonomialOrder:
    """A monomial order identified by ``kind``.

    ``degrevlex`` and ``local-degrevlex`` are the public orders.  The
    ``elim:k`` kind (block order, first k variables eliminated, degrevlex
    inside each block) is used internally for intersections and colons.
    """

    __slots__ = ("kind", "rank", "is_global", "_elim")

    def __init__(self, kind):
        self.kind = kind
        self._elim = 0
        if kind == "degrevlex":
            self.rank = _rank_degrevlex
            self.is_global = True
        elif kind == "local-degrevlex":
            self.rank = _rank_local
            self.is_global = False
        elif kind.startswith("elim:"):
            k = int(kind[5:])
            if k < 1:
                raise ValueError("elimination block must be non-empty")
            self._elim = k

            def rank(m, k=k):
                head = m[:k]
                tail = m[k:]
                return (-sum(head),) + head[::-1] + (-sum(tail),) + tail[::-1]

            self.rank = rank
            self.is_global = True
        else:
            raise ValueError(f"unknown monomial order {kind!r}")

    def __eq__(self, other):
        return isinstance(other, MonomialOrder) and other.kind == self.kind

    def __hash__(self):
        return hash(self.kind)

    def __repr__(self):
        return f"MonomialOrder({self.kind!r})"

    def leading(self, monos):
        return min(monos, key=self.rank)

    def sort_desc(self, monos):
        return sorted(monos, key=self.rank)


def _rank_degrevlex(m):
    return (-sum(m),) + m[::-1]


def _rank_local(m):
    return (sum(m),) + m[::-1]


DEGREVLEX = MonomialOrder("degrevlex")
LOCAL = MonomialOrder("local-degrevlex")
