"""Presentations A = k[x_1..x_n]_(x) / I of local rings."""

from .field import DEFAULT_CHAR, Field
from .poly import Polynomial, PolyRing


class PresentationError(ValueError):
    """An input presentation that cannot describe a local ring."""


class RingPresentation:
    """Field, variable names and generators of I (raw dicts or Polynomials).

    Every generator must vanish at the origin; a generator with a nonzero
    constant term is a unit of the local ring and is rejected.
    """

    def __init__(self, names, gens, char=DEFAULT_CHAR, seed=0, name=None, meta=None):
        names = tuple(names)
        if len(set(names)) != len(names):
            raise PresentationError("duplicate variable names")
        if not names:
            raise PresentationError("at least one variable is required")
        self.ring = PolyRing(names, Field(char))
        raw = []
        for g in gens:
            if isinstance(g, Polynomial):
                if g.ring.names != names:
                    raise PresentationError("generator from a different ring")
                g = self.ring.from_dict(g.terms)
            elif isinstance(g, dict):
                g = self.ring.from_dict(g)
            else:
                raise PresentationError(f"cannot use {g!r} as a generator")
            if not g.terms:
                continue
            if (0,) * len(names) in g.terms:
                raise PresentationError(f"generator {g} has a nonzero constant term (unit ideal locally)")
            raw.append(g)
        self.polys = tuple(raw)
        self.seed = int(seed)
        self.name = name
        self.meta = dict(meta or {})

    @property
    def names(self):
        return self.ring.names

    @property
    def nvars(self):
        return self.ring.nvars

    @property
    def char(self):
        return self.ring.char

    @property
    def gens(self):
        """Generators as raw ``{monomial: coeff}`` dicts."""
        return [dict(g.terms) for g in self.polys]

    def with_char(self, char):
        gens = [{m: c for m, c in g.terms.items()} for g in self.polys]
        if char != self.char and self.char:
            gens = [{m: _signed(c, self.char) for m, c in g.items()} for g in gens]
        return RingPresentation(self.names, gens, char, self.seed, self.name, self.meta)

    def __eq__(self, other):
        return (isinstance(other, RingPresentation) and self.names == other.names
                and self.char == other.char and self.polys == other.polys)

    def __hash__(self):
        return hash((self.names, self.char, self.polys))

    def __repr__(self):
        label = f" {self.name}" if self.name else ""
        return f"<RingPresentation{label}: {self.nvars} vars, {len(self.polys)} gens, char {self.char}>"


def _signed(c, p):
    return c - p if c > p // 2 else c
