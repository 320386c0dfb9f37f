"""Exact multivariate polynomials over QQ or GF(p).

``Polynomial`` is the immutable public carrier.  The algebra engines work on
raw ``{monomial: coeff}`` dicts through the ``d*`` helpers below and wrap
results at their boundaries.
"""

from fractions import Fraction

from .field import Field
from .monomial import MAX_VARS, LOCAL, mdeg, unit


# ---------------------------------------------------------------- raw dicts

def dadd(f, g, p, sign=1):
    """f + sign*g on raw dicts; p is the field characteristic."""
    h = dict(f)
    for m, c in g.items():
        v = h.get(m)
        v = sign * c if v is None else v + sign * c
        if p:
            v %= p
        if v:
            h[m] = v
        else:
            h.pop(m, None)
    return h


def dmul(f, g, p):
    h = {}
    for m1, c1 in f.items():
        for m2, c2 in g.items():
            m = tuple([a + b for a, b in zip(m1, m2)])
            v = h.get(m, 0) + c1 * c2
            if p:
                v %= p
            if v:
                h[m] = v
            else:
                h.pop(m, None)
    return h


def dscale(f, c, mono, p):
    """c * mono * f."""
    if p:
        return {tuple([a + b for a, b in zip(m, mono)]): v * c % p for m, v in f.items()}
    return {tuple([a + b for a, b in zip(m, mono)]): v * c for m, v in f.items()}


def dmonic(f, order, p):
    lm = order.leading(f)
    lc = f[lm]
    inv = pow(lc, -1, p) if p else Fraction(1) / lc
    return dscale(f, inv, (0,) * len(lm), p)


def dtruncate(f, below):
    """Drop terms of total degree >= below."""
    return {m: c for m, c in f.items() if sum(m) < below}


def dinitial(f):
    low = min(map(sum, f))
    return {m: c for m, c in f.items() if sum(m) == low}


# ---------------------------------------------------------------- public API

class PolyRing:
    """The ambient ring k[x_1..x_n] (localised at the origin where relevant)."""

    __slots__ = ("field", "names", "nvars")

    def __init__(self, names, field=None):
        names = tuple(names)
        if len(names) > MAX_VARS:
            raise ValueError(f"at most {MAX_VARS} variables are supported")
        if len(set(names)) != len(names):
            raise ValueError("duplicate variable names")
        self.names = names
        self.nvars = len(names)
        self.field = field if field is not None else Field()

    def __eq__(self, other):
        return (isinstance(other, PolyRing) and other.names == self.names
                and other.field == self.field)

    def __hash__(self):
        return hash((self.names, self.field))

    def __repr__(self):
        return f"PolyRing({list(self.names)}, {self.field!r})"

    @property
    def char(self):
        return self.field.char

    def zero(self):
        return Polynomial(self, {})

    def one(self):
        return self.const(1)

    def const(self, c):
        c = self.field(c)
        return Polynomial(self, {(0,) * self.nvars: c} if c else {})

    def gen(self, i):
        if isinstance(i, str):
            i = self.names.index(i)
        return Polynomial(self, {unit(self.nvars, i): self.field.one})

    def gens(self):
        return [self.gen(i) for i in range(self.nvars)]

    def from_dict(self, terms):
        F = self.field
        clean = {}
        for m, c in terms.items():
            m = tuple(m)
            if len(m) != self.nvars:
                raise ValueError("exponent vector has the wrong length")
            c = F(c)
            if c:
                clean[m] = c
        return Polynomial(self, clean)


class Polynomial:
    """Immutable polynomial; ``terms`` maps exponent tuples to nonzero coefficients."""

    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, ring, terms):
        self.ring = ring
        self.terms = terms
        self._hash = None

    # -- comparisons
    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.ring == other.ring and self.terms == other.terms
        if isinstance(other, int):
            return self.terms == self.ring.const(other).terms
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, frozenset(self.terms.items())))
        return self._hash

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self):
        return not self.terms

    # -- arithmetic
    def _coerce(self, other):
        if isinstance(other, Polynomial):
            if other.ring != self.ring:
                raise ValueError(f"mixed rings: {self.ring!r} vs {other.ring!r}")
            return other
        if isinstance(other, int):
            return self.ring.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return Polynomial(self.ring, dadd(self.terms, other.terms, self.ring.char))

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return Polynomial(self.ring, dadd(self.terms, other.terms, self.ring.char, -1))

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __neg__(self):
        F = self.ring.field
        return Polynomial(self.ring, {m: F.neg(c) for m, c in self.terms.items()})

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return Polynomial(self.ring, dmul(self.terms, other.terms, self.ring.char))

    __rmul__ = __mul__

    def __pow__(self, k):
        if k < 0:
            raise ValueError("negative power")
        out = self.ring.one()
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    # -- structure
    def degree(self):
        """Largest total degree (-1 for zero)."""
        return max(map(mdeg, self.terms), default=-1)

    def order(self):
        """Smallest total degree, i.e. the m-adic order (-1 for zero)."""
        return min(map(mdeg, self.terms), default=-1)

    def is_homogeneous(self):
        return len({mdeg(m) for m in self.terms}) <= 1

    def constant_term(self):
        return self.terms.get((0,) * self.ring.nvars, self.ring.field.zero)

    def initial_form(self):
        """Sum of the terms of minimal total degree."""
        if not self.terms:
            raise ValueError("initial form of zero is undefined")
        return Polynomial(self.ring, dinitial(self.terms))

    def leading_term(self, order=LOCAL):
        """(monomial, coefficient) maximal under ``order``."""
        if not self.terms:
            raise ValueError("leading term of zero is undefined")
        m = order.leading(self.terms)
        return m, self.terms[m]

    def monic(self, order=LOCAL):
        return Polynomial(self.ring, dmonic(self.terms, order, self.ring.char))

    def mul_monomial(self, mono, c=1):
        c = self.ring.field(c)
        return Polynomial(self.ring, dscale(self.terms, c, mono, self.ring.char))

    def substitute_linear(self, index, replacement):
        """Replace variable ``index`` by the polynomial ``replacement``."""
        out = self.ring.zero()
        cache = {0: self.ring.one()}
        for m, c in self.terms.items():
            k = m[index]
            if k not in cache:
                cache[k] = replacement ** k
            rest = list(m)
            rest[index] = 0
            out = out + cache[k].mul_monomial(tuple(rest), c)
        return out

    def __repr__(self):
        return f"Polynomial({self})"

    def __str__(self):
        return format_poly(self.terms, self.ring.names, self.ring.field)


def format_poly(terms, names, field, order=None):
    """Human-readable rendering; terms sorted by descending degree then lex."""
    if not terms:
        return "0"
    keys = sorted(terms, key=lambda m: (-mdeg(m), tuple(-e for e in m)))
    parts = []
    for m in keys:
        c = field.to_str(terms[m])
        neg = c.startswith("-")
        if neg:
            c = c[1:]
        factors = []
        for name, e in zip(names, m):
            if e == 1:
                factors.append(name)
            elif e > 1:
                factors.append(f"{name}^{e}")
        mono = "*".join(factors)
        if not mono:
            body = c
        elif c == "1":
            body = mono
        else:
            body = f"{c}*{mono}"
        if "/" in body and mono:
            body = f"({c})*{mono}"
        parts.append(("-" if neg else "+", body))
    out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


def poly_arith(f, g, op):
    """Apply ``op`` in {"add", "sub", "mul"} to two polynomials of one ring."""
    if f.ring != g.ring:
        raise ValueError("operands live in different rings")
    if op == "add":
        return f + g
    if op == "sub":
        return f - g
    if op == "mul":
        return f * g
    raise ValueError(f"unknown operation {op!r}")


def initial_form(f):
    return f.initial_form()


def leading_term(f, order):
    return f.leading_term(order)

