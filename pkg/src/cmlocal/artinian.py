"""Finite-dimensional algebras: truncations A/m^M and zero-dimensional quotients.

``TruncatedAlgebra`` realises A/m^M for A = k[x]_(x)/I from a local
standard basis of I.  Its k-basis is the set of standard monomials of degree
< M, ordered by increasing degree, so echelon pivots of an ideal are its
lowest-degree monomials and m^j is the span of a column suffix.  Ideals of A
containing m^M are subspaces closed under multiplication by the variables.
"""

import threading

from .groebner import _Basis, buchberger
from .linalg import make_echelon
from .monomial import DEGREVLEX, LOCAL, divides, mdeg


def standard_monomials(lms, nvars, below):
    """Monomials of degree < below outside the monomial ideal (lms)."""
    level = [(0,) * nvars] if not any(divides(m, (0,) * nvars) for m in lms) else []
    out = list(level)
    for _ in range(1, below):
        nxt = set()
        for m in level:
            for j in range(nvars):
                e = list(m)
                e[j] += 1
                e = tuple(e)
                if e in nxt:
                    continue
                if any(divides(g, e) for g in lms):
                    continue
                nxt.add(e)
        level = sorted(nxt, key=LOCAL.rank)
        if not level:
            break
        out.extend(level)
    return out


class TruncatedAlgebra:
    """A/m^M with normal forms taken modulo a local standard basis."""

    def __init__(self, nvars, p, std_basis, M):
        self.nvars = nvars
        self.p = p
        self.M = M
        self.lms = [LOCAL.leading(f) for f in std_basis]
        self.basis = standard_monomials(self.lms, nvars, M)
        self.index = {m: i for i, m in enumerate(self.basis)}
        self.degrees = [mdeg(m) for m in self.basis]
        self.dim = len(self.basis)
        self._deg_start = []
        for k in range(M + 1):
            self._deg_start.append(next((i for i, d in enumerate(self.degrees) if d >= k), self.dim))
        self._rules = []
        for f in std_basis:
            lm = LOCAL.leading(f)
            inv = pow(f[lm], -1, p) if p else _one() / f[lm]
            tail = {m: (-c * inv % p if p else -c * inv) for m, c in f.items() if m != lm}
            self._rules.append((lm, tail))
        self._cache = {}
        self._lock = threading.Lock()

    def level(self, below):
        """The truncation A/m^below (below <= M) sharing this table's normal forms.

        Columns of the smaller truncation are a prefix of these columns.
        """
        if below > self.M:
            raise ValueError("cannot raise the truncation level")
        if below == self.M:
            return self
        return _Level(self, below)

    def start(self, k):
        """First column of degree >= k (the span from here on is m^k)."""
        if k <= 0:
            return 0
        if k > self.M:
            return self.dim
        return self._deg_start[k]

    def _rewrite(self, m):
        """m = t * LM(g) rewritten as t * (LM(g) - g), terms of degree >= M dropped."""
        for lm, tail in self._rules:
            if divides(lm, m):
                t = tuple([a - b for a, b in zip(m, lm)])
                out = {}
                for u, c in tail.items():
                    w = tuple([a + b for a, b in zip(u, t)])
                    if sum(w) < self.M:
                        out[w] = c
                return out
        raise AssertionError("monomial is neither standard nor reducible")

    def nf_mono(self, m):
        """Normal form of a monomial, memoised.

        Every rewrite replaces a monomial by terms that come later in the
        local order, and there are finitely many monomials of degree < M,
        so the recursion (run on an explicit stack) terminates.
        """
        if sum(m) >= self.M:
            return {}
        i = self.index.get(m)
        if i is not None:
            return {i: 1}
        cache = self._cache
        hit = cache.get(m)
        if hit is not None:
            return hit
        p = self.p
        index = self.index
        stack = [(m, None)]
        while stack:
            mono, expansion = stack[-1]
            if mono in cache:
                stack.pop()
                continue
            if expansion is None:
                expansion = self._rewrite(mono)
                stack[-1] = (mono, expansion)
                missing = [u for u in expansion if u not in index and u not in cache]
                if missing:
                    stack.extend((u, None) for u in missing)
                    continue
            out = {}
            for u, c in expansion.items():
                j = index.get(u)
                part = {j: 1} if j is not None else cache[u]
                for k, a in part.items():
                    v = out.get(k, 0) + c * a
                    if p:
                        v %= p
                    if v:
                        out[k] = v
                    else:
                        out.pop(k, None)
            with self._lock:
                cache[mono] = out
            stack.pop()
        return cache[m]

    def vector(self, poly):
        """Normal form of a raw polynomial as a column vector."""
        out = {}
        p = self.p
        for m, c in poly.items():
            for i, a in self.nf_mono(m).items():
                v = out.get(i, 0) + c * a
                if p:
                    v %= p
                if v:
                    out[i] = v
                else:
                    out.pop(i, None)
        return out

    def poly(self, vec):
        return {self.basis[i]: c for i, c in vec.items()}

    def mul_mono(self, mono, vec):
        out = {}
        p = self.p
        basis = self.basis
        for i, c in vec.items():
            m = tuple([a + b for a, b in zip(basis[i], mono)])
            for j, a in self.nf_mono(m).items():
                v = out.get(j, 0) + c * a
                if p:
                    v %= p
                if v:
                    out[j] = v
                else:
                    out.pop(j, None)
        return out

    def mul(self, poly, vec):
        out = {}
        p = self.p
        for mono, c in poly.items():
            for j, a in self.mul_mono(mono, vec).items():
                v = out.get(j, 0) + c * a
                if p:
                    v %= p
                if v:
                    out[j] = v
                else:
                    out.pop(j, None)
        return out

    def truncate(self, vec, below):
        """Image of vec in A/m^below (columns of degree < below)."""
        cut = self.start(below)
        return {i: c for i, c in vec.items() if i < cut}

    def lift(self, vec, other):
        """Re-index a vector of another truncation ``other`` into this one."""
        return {self.index[other.basis[i]]: c for i, c in vec.items()}

    # -- subspaces
    def space(self):
        return Subspace(self)

    def power(self, k):
        """m^k as a subspace."""
        S = Subspace(self)
        for i in range(self.start(k), self.dim):
            S.echelon.add_unit(i)
        return S

    def ideal(self, vectors, base=None):
        """Smallest ideal containing ``vectors`` (and the subspace ``base``)."""
        S = base.copy() if base is not None else Subspace(self)
        units = [tuple(1 if k == j else 0 for k in range(self.nvars)) for j in range(self.nvars)]
        queue = list(vectors)
        while queue:
            v = queue.pop()
            if not v:
                continue
            if S.add(v):
                for u in units:
                    w = self.mul_mono(u, v)
                    if w:
                        queue.append(w)
        return S


class _Level(TruncatedAlgebra):
    def __init__(self, parent, M):
        self.parent = parent
        self.nvars = parent.nvars
        self.p = parent.p
        self.M = M
        self.lms = parent.lms
        self.dim = parent.start(M)
        self.basis = parent.basis[:self.dim]
        self.index = {m: i for i, m in enumerate(self.basis)}
        self.degrees = parent.degrees[:self.dim]
        self._deg_start = [min(s, self.dim) for s in parent._deg_start[:M + 1]]
        self._cache = {}
        self._lock = threading.Lock()

    def level(self, below):
        return self.parent.level(below)

    def nf_mono(self, m):
        if sum(m) >= self.M:
            return {}
        i = self.index.get(m)
        if i is not None:
            return {i: 1}
        hit = self._cache.get(m)
        if hit is not None:
            return hit
        cut = self.dim
        vec = {i: c for i, c in self.parent.nf_mono(m).items() if i < cut}
        with self._lock:
            self._cache[m] = vec
        return vec


class Subspace:
    """A subspace of a TruncatedAlgebra, kept in echelon form."""

    def __init__(self, alg, echelon=None):
        self.alg = alg
        self.echelon = echelon if echelon is not None else make_echelon(alg.p, max(alg.dim, 1))
        self._gens = []

    @property
    def dim(self):
        return self.echelon.rank

    @property
    def codim(self):
        return self.alg.dim - self.echelon.rank

    def add(self, vec):
        if self.echelon.add(dict(vec)):
            self._gens.append(dict(vec))
            return True
        return False

    def add_all(self, vecs):
        for v in vecs:
            self.add(v)
        return self

    def contains(self, vec):
        return self.echelon.contains(dict(vec))

    def contains_space(self, other):
        return all(self.contains(v) for v in other.vectors())

    def vectors(self):
        """A basis (the stored echelon rows)."""
        return self.echelon.rows()

    def copy(self):
        S = Subspace(self.alg)
        for v in self.vectors():
            S.echelon.add(v)
        S._gens = list(self._gens)
        return S

    def __add__(self, other):
        S = self.copy()
        for v in other.vectors():
            S.add(v)
        return S

    def intersection_dim(self, other):
        return self.dim + other.dim - (self + other).dim

    def equals(self, other):
        return self.dim == other.dim and self.contains_space(other)


def kernel(vectors, image_dim, p):
    """Kernel of the linear map sending e_i to vectors[i] (sparse dicts).

    Returns a list of kernel vectors expressed in the domain basis.
    """
    n = len(vectors)
    ech = make_echelon(p, image_dim + n)
    for i, v in enumerate(vectors):
        row = dict(v)
        row[image_dim + i] = 1
        ech.add(row)
    out = []
    for row in ech.rows():
        lead = min(row)
        if lead >= image_dim:
            out.append({c - image_dim: a for c, a in row.items()})
    return out


def kernel_dim(vectors, image_dim, p):
    ech = make_echelon(p, max(image_dim, 1))
    rank = 0
    for v in vectors:
        if v and ech.add(dict(v)):
            rank += 1
    return len(vectors) - rank


def socle_dimension(alg):
    """dim_k (0 : m) in an Artinian algebra given as an exact TruncatedAlgebra."""
    units = [tuple(1 if k == j else 0 for k in range(alg.nvars)) for j in range(alg.nvars)]
    vectors = []
    for i in range(alg.dim):
        img = {}
        for j, u in enumerate(units):
            for c, a in alg.mul_mono(u, {i: 1}).items():
                img[j * alg.dim + c] = a
        vectors.append(img)
    return kernel_dim(vectors, alg.dim * alg.nvars, alg.p)


def _one():
    from fractions import Fraction

    return Fraction(1)


# ------------------------------------------------ global zero-dimensional basis

class ArtinianBasis:
    """Standard monomials of a zero-dimensional ideal and multiplication maps."""

    def __init__(self, gb, order, nvars, p):
        self.gb = gb
        self.order = order
        self.nvars = nvars
        self.p = p
        lms = [order.leading(g) for g in gb]
        for j in range(nvars):
            if not any(sum(1 for e in m if e) == 1 and m[j] > 0 for m in lms):
                raise ValueError("ideal is not zero-dimensional")
        bound = max(mdeg(m) for m in lms) * nvars + 1
        self.monomials = sorted(standard_monomials(lms, nvars, bound), key=order.rank, reverse=True)
        self.index = {m: i for i, m in enumerate(self.monomials)}
        self._red = _Basis(order, p)
        for g in gb:
            self._red.add(g, 0)
        self.tables = [self._table(j) for j in range(nvars)]

    @property
    def dim(self):
        return len(self.monomials)

    def normal_form(self, poly):
        return self._red.reduce(poly, full=True)

    def _table(self, j):
        table = []
        for m in self.monomials:
            e = list(m)
            e[j] += 1
            nf = self.normal_form({tuple(e): 1 if self.p else _one()})
            table.append({self.index[t]: c for t, c in nf.items()})
        return table

    def socle_dimension(self):
        vectors = []
        for i in range(self.dim):
            img = {}
            for j in range(self.nvars):
                for c, a in self.tables[j][i].items():
                    img[j * self.dim + c] = a
            vectors.append(img)
        return kernel_dim(vectors, self.dim * self.nvars, self.p)


def artinian_basis(gens, nvars, p, order=DEGREVLEX):
    gb = buchberger(gens, order, p, nvars=nvars)
    return ArtinianBasis(gb, order, nvars, p)
