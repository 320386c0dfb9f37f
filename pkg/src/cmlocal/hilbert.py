"""Hilbert series, Hilbert coefficients and Macaulay's bound.

Integer polynomials are plain coefficient lists, constant term first.
"""

from dataclasses import dataclass
from math import comb

from .monomial import divides, mdeg


# ------------------------------------------------------------ int polynomials

def padd(a, b):
    out = [0] * max(len(a), len(b))
    for i, c in enumerate(a):
        out[i] += c
    for i, c in enumerate(b):
        out[i] += c
    return ptrim(out)


def psub(a, b):
    return padd(a, [-c for c in b])


def pmul(a, b):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return ptrim(out)


def ptrim(a):
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return a


def one_minus_z_pow(k):
    """Coefficients of (1 - z)^k."""
    return [(-1) ** i * comb(k, i) for i in range(k + 1)]


def peval(a, z):
    return sum(c * z ** i for i, c in enumerate(a))


def pformat(a, var="z"):
    if not a:
        return "0"
    parts = []
    for i, c in enumerate(a):
        if not c:
            continue
        mag = abs(c)
        if i == 0:
            body = str(mag)
        else:
            mono = var if i == 1 else f"{var}^{i}"
            body = mono if mag == 1 else f"{mag}*{mono}"
        parts.append(("-" if c < 0 else "+", body))
    out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


def _divide_one_minus_z(a):
    """a / (1 - z), assuming a(1) == 0."""
    q = []
    acc = 0
    for c in a[:-1]:
        acc += c
        q.append(acc)
    return ptrim(q)


# ------------------------------------------------------------- Hilbert series

@dataclass(frozen=True)
class HilbertSeries:
    """``numerator(z) / (1 - z)^dim`` in lowest terms."""

    numerator: tuple
    dim: int

    @classmethod
    def from_unreduced(cls, numerator, nvars):
        num = ptrim(numerator)
        d = nvars
        if not num:
            raise ValueError("zero Hilbert numerator")
        while d > 0 and sum(num) == 0:
            num = _divide_one_minus_z(num)
            d -= 1
        return cls(tuple(num), d)

    def numerator_at_one(self):
        return sum(self.numerator)

    @property
    def multiplicity(self):
        return sum(self.numerator)

    def coefficients(self, upto=None):
        """Hilbert coefficients e_0..e_upto, default upto = max(dim, 3)."""
        return hilbert_coefficients(self, upto).e

    def values(self, upto):
        """Hilbert function H(0..upto)."""
        return series_values(self.numerator, self.dim, upto)

    def samuel_values(self, upto):
        """Partial sums H(0) + ... + H(n), n = 0..upto."""
        return series_values(self.numerator, self.dim + 1, upto)

    def __str__(self):
        return f"({pformat(list(self.numerator))}) / (1 - z)^{self.dim}"


def series_values(numerator, d, upto):
    """Coefficients 0..upto of numerator / (1 - z)^d."""
    out = []
    for n in range(upto + 1):
        s = 0
        for i, c in enumerate(numerator):
            if i > n:
                break
            k = n - i
            s += c * (comb(k + d - 1, d - 1) if d > 0 else (1 if k == 0 else 0))
        out.append(s)
    return out


@dataclass(frozen=True)
class HilbertCoefficients:
    e: tuple


def hilbert_coefficients(hs, upto=None):
    """e_i = h^(i)(1) / i!, computed exactly as sum_k C(k, i) h_k."""
    if upto is None:
        upto = max(hs.dim, 3)
    h = hs.numerator
    return HilbertCoefficients(tuple(sum(comb(k, i) * c for k, c in enumerate(h))
                                     for i in range(upto + 1)))


# -------------------------------------------------- monomial ideal numerators

def minimalize(monos):
    out = []
    for m in sorted(set(monos), key=lambda t: (mdeg(t), t)):
        if not any(divides(g, m) for g in out):
            out.append(m)
    return out


def _numerator(gens, memo):
    """Numerator N with H(R/L) = N / (1-z)^n for minimal generators ``gens``."""
    if not gens:
        return [1]
    key = tuple(sorted(gens))
    hit = memo.get(key)
    if hit is not None:
        return hit
    mixed = [g for g in gens if sum(1 for e in g if e) > 1]
    if _pairwise_coprime(gens):
        out = [1]
        for g in gens:
            out = pmul(out, [1] + [0] * (mdeg(g) - 1) + [-1])
        memo[key] = out
        return out
    n = len(gens[0])
    counts = [0] * n
    for g in mixed:
        for i, e in enumerate(g):
            if e:
                counts[i] += 1
    j = max(range(n), key=lambda i: (counts[i], -i))
    exps = sorted(g[j] for g in mixed if g[j])
    a = exps[len(exps) // 2]
    pivot = tuple(a if i == j else 0 for i in range(n))
    plus = minimalize([g for g in gens if not divides(pivot, g)] + [pivot])
    colon = minimalize([tuple(max(x - y, 0) for x, y in zip(g, pivot)) for g in gens])
    left = _numerator(plus, memo)
    right = _numerator(colon, memo)
    out = padd(left, [0] * a + right)
    memo[key] = out
    return out


def _pairwise_coprime(gens):
    seen = 0
    for g in gens:
        bits = 0
        for i, e in enumerate(g):
            if e:
                bits |= 1 << i
        if bits & seen:
            return False
        seen |= bits
    return True


def monomial_hilbert_numerator(gens, nvars):
    """Hilbert series of k[x_1..x_nvars]/(gens) for monomial ``gens``, reduced."""
    gens = [tuple(g) for g in gens]
    for g in gens:
        if len(g) != nvars:
            raise ValueError("monomial arity mismatch")
    if any(mdeg(g) == 0 for g in gens):
        raise ValueError("unit ideal has no Hilbert series")
    num = _numerator(minimalize(gens), {})
    return HilbertSeries.from_unreduced(num, nvars)


def hilbert_function_values(gens, nvars, upto):
    hs = monomial_hilbert_numerator(gens, nvars)
    return hs.values(upto)


# ---------------------------------------------------------- Macaulay bound

def macaulay_representation(a, i):
    """[(a_i, i), (a_{i-1}, i-1), ...] with a = sum C(a_k, k)."""
    if i < 1:
        raise ValueError("Macaulay representation needs i >= 1")
    rep = []
    k = i
    while a > 0 and k >= 1:
        top = k
        while comb(top + 1, k) <= a:
            top += 1
        rep.append((top, k))
        a -= comb(top, k)
        k -= 1
    return rep


def macaulay_upper(a, i):
    """The operator a^<i> from Macaulay's theorem on Hilbert functions."""
    if i < 1:
        raise ValueError("i must be >= 1")
    if a < 0:
        raise ValueError("a must be non-negative")
    return sum(comb(top + 1, k + 1) for top, k in macaulay_representation(a, i))
