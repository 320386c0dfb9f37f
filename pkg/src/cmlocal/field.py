"""Coefficient fields: the rationals and prime fields."""

from fractions import Fraction

DEFAULT_CHAR = 32003


def _is_prime(n):
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


class Field:
    """Exact field of characteristic ``char`` (0 for QQ, else a prime).

    Elements are plain Python values: ``Fraction`` over QQ and ints in
    ``[0, p)`` over GF(p).
    """

    __slots__ = ("char",)

    def __init__(self, char=DEFAULT_CHAR):
        char = int(char)
        if char != 0 and not _is_prime(char):
            raise ValueError(f"characteristic must be 0 or a prime, got {char}")
        self.char = char

    def __eq__(self, other):
        return isinstance(other, Field) and other.char == self.char

    def __hash__(self):
        return hash(("Field", self.char))

    def __repr__(self):
        return "QQ" if self.char == 0 else f"GF({self.char})"

    @property
    def zero(self):
        return Fraction(0) if self.char == 0 else 0

    @property
    def one(self):
        return Fraction(1) if self.char == 0 else 1

    def __call__(self, value):
        p = self.char
        if p == 0:
            return Fraction(value)
        if isinstance(value, Fraction):
            num = value.numerator % p
            den = value.denominator % p
            if den == 0:
                raise ZeroDivisionError(f"denominator vanishes mod {p}")
            return num * pow(den, -1, p) % p
        return int(value) % p

    def add(self, a, b):
        return a + b if self.char == 0 else (a + b) % self.char

    def sub(self, a, b):
        return a - b if self.char == 0 else (a - b) % self.char

    def mul(self, a, b):
        return a * b if self.char == 0 else a * b % self.char

    def neg(self, a):
        return -a if self.char == 0 else -a % self.char

    def inv(self, a):
        if not a:
            raise ZeroDivisionError("inverse of zero")
        return Fraction(1) / a if self.char == 0 else pow(a, -1, self.char)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def to_str(self, a):
        """Signed printable form; residues print in the symmetric range."""
        if self.char == 0:
            return str(a)
        return str(a - self.char if a > self.char // 2 else a)
