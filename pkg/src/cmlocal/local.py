"""Invariants of a local ring A = k[x]_(x)/I.

Everything is computed from a local standard basis of I: the Hilbert series
of G(A), quotients by linear forms (by eliminating a variable), lengths of
ideals containing a power of m (as subspaces of A/m^M), the Ratliff-Rush
filtration, and the rho/sigma invariants of a minimal reduction.

Quantities that would need A/m^M beyond ``budget`` dimensions are taken
from certificates instead: if x is superficial and regular with
b_x(z) of degree < t then the Ratliff-Rush closure of m^n is m^n for
n >= t, and m^(n+1) = J m^n for n >= r, the top degree of G/J*G.
"""

import random
from fractions import Fraction
from dataclasses import dataclass, field
from math import comb

from .artinian import Subspace, TruncatedAlgebra, kernel, kernel_dim, socle_dimension
from .field import Field
from .hilbert import hilbert_coefficients, monomial_hilbert_numerator, one_minus_z_pow, pmul, psub, ptrim
from .linalg import make_echelon
from .monomial import LOCAL, unit
from .mora import initial_forms, mora_standard_basis
from .poly import dadd, dmul, dscale, format_poly

DEFAULT_BUDGET = 4000
MAX_COLON_STEPS = 25
COLON_WORK = 150000
SUPERFICIAL_TRIES = 5


class StabilizationError(RuntimeError):
    """A filtration or colon chain could not be resolved within the limits."""


class SuperficialError(RuntimeError):
    """No verified superficial sequence was found."""


class NotCohenMacaulay(ValueError):
    """An invariant that presupposes a Cohen-Macaulay ring was requested."""


# ---------------------------------------------------------------- helpers

def divide_one_minus_z(num, k):
    """num / (1 - z)^k as an integer polynomial, or None when it does not divide."""
    q = ptrim(num)
    for _ in range(k):
        if not q:
            return []
        if sum(q) != 0:
            return None
        out, acc = [], 0
        for c in q[:-1]:
            acc += c
            out.append(acc)
        q = ptrim(out)
    return q


def eliminate(gens, nvars, coeffs, p):
    """Substitute away one variable using the linear form sum coeffs[j] x_j.

    The pivot is the last variable with a nonzero coefficient.  Returns the
    new generators (nvars - 1 variables), the pivot and a function mapping
    other linear forms (coefficient lists) to the new variables.
    """
    k = max(j for j, c in enumerate(coeffs) if c)
    inv = pow(coeffs[k], -1, p) if p else Fraction(1, coeffs[k])
    repl = {}
    for j, c in enumerate(coeffs):
        if j != k and c:
            v = -c * inv
            repl[unit(nvars, j)] = v % p if p else v
    powers = {0: {(0,) * nvars: 1}}

    def power(e):
        if e not in powers:
            powers[e] = dmul(power(e - 1), repl, p)
        return powers[e]

    out = []
    for g in gens:
        acc = {}
        for m, c in g.items():
            e = m[k]
            rest = m[:k] + (0,) + m[k + 1:]
            acc = dadd(acc, dscale(power(e), c, rest, p), p)
        acc = {m[:k] + m[k + 1:]: c for m, c in acc.items()}
        if acc:
            out.append(acc)

    def mapper(form):
        form = list(form)
        ck = form[k]
        new = []
        for j in range(nvars):
            if j == k:
                continue
            v = form[j] + ck * repl.get(unit(nvars, j), 0)
            new.append(v % p if p else v)
        return new

    return out, k, mapper


def default_horizon(ring):
    """deg h(z) + d + 3."""
    return len(ring.h) - 1 + ring.d + 3


def as_local_ring(obj):
    return obj if isinstance(obj, LocalRing) else LocalRing.from_presentation(obj)


def linear_poly(coeffs):
    n = len(coeffs)
    return {unit(n, j): c for j, c in enumerate(coeffs) if c}


# ------------------------------------------------------------- local rings

class LocalRing:
    """A = k[x_1..x_n]_(x) / (gens) with its tangent-cone data."""

    def __init__(self, gens, nvars, p):
        self.nvars = nvars
        self.p = p
        self.gens = [dict(g) for g in gens if g]
        for g in self.gens:
            if (0,) * nvars in g:
                raise ValueError("generator with a nonzero constant term (unit ideal locally)")
        self.std = mora_standard_basis(self.gens, p) if self.gens else []
        self.lms = [LOCAL.leading(g) for g in self.std]
        self.hs = monomial_hilbert_numerator(self.lms, nvars)
        self.d = self.hs.dim
        self.h = list(self.hs.numerator)
        self.e = list(hilbert_coefficients(self.hs, max(self.d, 3)).e)
        self.embdim = self.hs.values(1)[1]
        self.codim = self.embdim - self.d
        self._samuel = []
        self._top = None

    @classmethod
    def from_presentation(cls, pres):
        return cls(pres.gens, pres.nvars, pres.char)

    # Hilbert-Samuel data
    def samuel(self, n):
        """l(A/m^(n+1))."""
        if n < 0:
            return 0
        if n >= len(self._samuel):
            self._samuel = self.hs.samuel_values(max(n, 2 * len(self._samuel) + 8))
        return self._samuel[n]

    def hilbert(self, n):
        return self.samuel(n) - self.samuel(n - 1)

    def max_level(self, budget):
        """Largest M with dim A/m^M <= budget (at least 1)."""
        M = 1
        while self.samuel(M) <= budget and M < 200:
            if self.d == 0 and self.samuel(M) == self.samuel(M - 1):
                return M + 1
            M += 1
        return M

    def algebra(self, M):
        """A/m^M; smaller truncations share one normal-form table."""
        if self._top is None or self._top.M < M:
            self._top = TruncatedAlgebra(self.nvars, self.p, self.std, M)
        return self._top.level(M)

    def reserve(self, M):
        """Build the normal-form table for A/m^M up front."""
        self.algebra(M)

    def quotient(self, coeffs):
        gens, _, mapper = eliminate(self.gens, self.nvars, coeffs, self.p)
        return LocalRing(gens, self.nvars - 1, self.p), mapper

    def tangent_cone_gens(self):
        return initial_forms(self.std)

    @property
    def length(self):
        """l(A) for Artinian A."""
        if self.d != 0:
            raise ValueError("ring is not Artinian")
        return self.hs.multiplicity

    def top_degree(self):
        """Largest n with m^n != 0 (Artinian A)."""
        return len(self.h) - 1


def reduction_number(ring, forms):
    """Top degree of G/(x*)G, i.e. the least r with m^(r+1) = J m^r."""
    gens = ring.tangent_cone_gens()
    n = ring.nvars
    pending = [list(f) for f in forms]
    while pending:
        f = pending.pop(0)
        gens, _, mapper = eliminate(gens, n, f, ring.p)
        n -= 1
        pending = [mapper(g) for g in pending]
    G = LocalRing(gens, n, ring.p)
    if G.d != 0:
        return None
    return G.top_degree()


# ------------------------------------------------------- superficial forms

@dataclass
class StepRecord:
    index: int
    form: list
    dim_drop: bool
    bx: list
    bx_nonnegative: bool
    e_agree: bool
    window: int
    direct_b: list
    window_ok: bool

    @property
    def ok(self):
        return (self.dim_drop and self.bx is not None and self.bx_nonnegative
                and self.e_agree and self.window_ok)

    def to_dict(self):
        return {"index": self.index, "dim_drop": self.dim_drop, "bx": self.bx,
                "bx_nonnegative": self.bx_nonnegative, "e_agree": self.e_agree,
                "window": self.window, "direct_b": self.direct_b, "window_ok": self.window_ok,
                "ok": self.ok}


@dataclass
class SuperficialSequence:
    forms: list
    chain: list
    local_forms: list
    records: list
    verified: bool
    attempts: int
    seed: int

    @property
    def colength(self):
        """l(A/J)."""
        return self.chain[-1].length

    @property
    def certificate_start(self):
        """t with b_n(x_1) = 0 for all n >= t (None when unverified)."""
        if not self.records or not self.verified:
            return None
        return len(self.records[0].bx)

    @property
    def bx(self):
        return self.records[0].bx if self.records else []

    def to_dict(self):
        return {"forms": [list(f) for f in self.forms], "colength": self.colength,
                "verified": self.verified, "attempts": self.attempts,
                "steps": [r.to_dict() for r in self.records]}


def direct_b_values(ring, coeffs, upto):
    """b_n = l((m^(n+1) : x) / m^n) for n = 0..upto by kernels of x on A/m^n."""
    alg = ring.algebra(upto + 1)
    x = linear_poly(coeffs)
    images = [alg.mul(x, {c: 1}) for c in range(alg.dim)]
    out = []
    for n in range(upto + 1):
        cut = alg.start(n + 1)
        vecs = [{i: v for i, v in images[c].items() if i < cut} for c in range(alg.start(n))]
        out.append(kernel_dim(vecs, cut, ring.p))
    return out


def verify_step(ring, coeffs, horizon, budget, index=0):
    """Check one candidate superficial element x of ``ring``; returns (record, A/x, mapper)."""
    B, mapper = ring.quotient(coeffs)
    dim_drop = B.d == ring.d - 1
    bx = divide_one_minus_z(psub(B.h, ring.h), ring.d)
    nonneg = bx is not None and all(c >= 0 for c in bx)
    e_agree = ring.e[:ring.d] == B.e[:ring.d]
    window = 0
    while window < horizon and ring.samuel(window + 1) <= budget:
        window += 1
    need = len(bx) if bx is not None else 0
    if bx is not None:
        window = max(window, min(need, horizon))
    direct = direct_b_values(ring, coeffs, window)
    expected = [(bx[n] if bx is not None and n < len(bx) else 0) for n in range(window + 1)]
    window_ok = bx is not None and direct == expected
    rec = StepRecord(index, list(coeffs), dim_drop, bx, nonneg, e_agree, window, direct, window_ok)
    return rec, B, mapper


def _random_form(rng, n, p):
    hi = p if p else 2 ** 15
    return [rng.randrange(1, hi) for _ in range(n)]


def random_superficial_sequence(ring, seed=0, horizon=None, budget=DEFAULT_BUDGET,
                                tries=SUPERFICIAL_TRIES, strict=True):
    """d random linear forms, each verified superficial and regular on its quotient.

    Verification per element x of the current quotient A': dim A'/x = dim A' - 1,
    b_x(z) = (h_{A'/x} - h_{A'}) / (1 - z)^dim A' is a polynomial with
    non-negative coefficients, e_i agree for i < dim A', and the lengths
    l((m^(n+1) : x) / m^n) computed directly agree with b_x on a window.
    Fresh forms are drawn up to ``tries`` times.  With ``strict`` a failure
    raises ``SuperficialError``; otherwise the last attempt is returned
    unverified.
    """
    ring = as_local_ring(ring)
    if horizon is None:
        horizon = default_horizon(ring)
    rng = random.Random(seed)
    last = None
    for attempt in range(1, tries + 1):
        forms = [_random_form(rng, ring.nvars, ring.p) for _ in range(ring.d)]
        chain = [ring]
        local_forms = [[list(f) for f in forms]]
        records = []
        pending = [list(f) for f in forms]
        cur = ring
        ok = True
        for i in range(ring.d):
            rec, B, mapper = verify_step(cur, pending[0], horizon, budget, index=i)
            records.append(rec)
            ok = ok and rec.ok
            pending = [mapper(f) for f in pending[1:]]
            chain.append(B)
            local_forms.append([list(f) for f in pending])
            cur = B
        ok = ok and chain[-1].d == 0
        last = SuperficialSequence(forms, chain, local_forms, records, ok, attempt, seed)
        if ok:
            return last
    if strict:
        bad = next((r for r in last.records if not r.ok), None)
        witness = bad.to_dict() if bad else {"final_dim": last.chain[-1].d}
        raise SuperficialError(f"superficial verification failed after {tries} attempts: {witness}")
    return last


def cm_test(ring, seq):
    """A is Cohen-Macaulay iff l(A/J) = e_0.

    J must be a reduction of m generated by d elements (checked through the
    reduction number): then l(A/J) >= e(J) = e_0 with equality exactly in
    the Cohen-Macaulay case.
    """
    if ring.d == 0:
        return True
    if seq.chain[-1].d != 0 or reduction_number(ring, seq.forms) is None:
        raise SuperficialError("the chosen linear forms do not generate a reduction of m")
    return seq.colength == ring.e[0]


def type_of(ring, seq=None, cm=True):
    """dim_k Soc(A/J); for Artinian A this is dim_k Soc(A)."""
    if not cm:
        raise NotCohenMacaulay("type via the socle of A/J needs a Cohen-Macaulay ring")
    C = ring if ring.d == 0 else seq.chain[-1]
    alg = C.algebra(C.top_degree() + 1)
    return socle_dimension(alg)


# ------------------------------------------------------------------ depth G

@dataclass
class DepthResult:
    depth: int
    per_seed: list
    agree: bool
    superficial_regular: bool
    bx_zero: bool
    consistent: bool

    def to_dict(self):
        return {"depth": self.depth, "per_seed": self.per_seed, "seeds_agree": self.agree,
                "x1_star_regular": self.superficial_regular, "bx_zero": self.bx_zero,
                "consistent": self.consistent}


def _graded_regular_run(gens, nvars, p, d, forms):
    """Number of leading forms in ``forms`` that are successively regular on R/(gens)."""
    cur = LocalRing(gens, nvars, p)
    depth = 0
    pending = [list(f) for f in forms]
    while pending and depth < d:
        f = pending.pop(0)
        B, mapper = cur.quotient(f)
        if B.d == cur.d - 1 and B.h == cur.h:
            depth += 1
            cur = B
            pending = [mapper(g) for g in pending]
        else:
            break
    return depth


def depth_assoc_graded(ring, seed=0, seq=None):
    """depth G(A) counted by generic linear forms regular on R/in_*(I).

    Two seeds are used and must agree.  With a verified superficial
    sequence the result is cross-checked against b_x(z) = 0 iff x* is
    G-regular.
    """
    ring = as_local_ring(ring)
    gens = ring.tangent_cone_gens()
    per_seed = []
    for s in (seed, seed + 1):
        rng = random.Random(("depth", s).__repr__())
        forms = [_random_form(rng, ring.nvars, ring.p) for _ in range(ring.d)]
        per_seed.append(_graded_regular_run(gens, ring.nvars, ring.p, ring.d, forms))
    depth = max(per_seed)
    xreg = bzero = None
    consistent = True
    if seq is not None and ring.d > 0 and seq.records:
        xreg = _graded_regular_run(gens, ring.nvars, ring.p, 1, [seq.forms[0]]) == 1
        bzero = seq.records[0].bx == []
        consistent = xreg == bzero and ((depth > 0) == xreg)
    return DepthResult(depth, per_seed, per_seed[0] == per_seed[1], xreg, bzero, consistent)


# ------------------------------------------------------------ Ratliff-Rush

@dataclass
class RRLevel:
    i: int
    length: int
    method: str
    k: object
    vectors: list

    def to_dict(self, ring=None, names=None):
        out = {"i": self.i, "length": self.length, "method": self.method, "k": self.k}
        if ring is not None and names is not None:
            out["extra_generators"] = [_vec_str(ring, v, names) for v in self.vectors]
        return out


@dataclass
class RatliffRushData:
    levels: dict
    horizon: int
    r: list
    certificate_start: object
    checks: dict = field(default_factory=dict)

    def length(self, i):
        """l(RR(m^i)/m^i)."""
        if i <= 0:
            return 0
        lv = self.levels.get(i)
        if lv is not None:
            return lv.length
        if self.certificate_start is not None and i >= self.certificate_start:
            return 0
        raise StabilizationError(f"Ratliff-Rush level {i} was not computed")

    def vectors(self, i):
        lv = self.levels.get(i)
        return lv.vectors if lv is not None else []

    def stable_from(self):
        """Least j with RR(m^i) = m^i for all i >= j."""
        last = 0
        for i, lv in self.levels.items():
            if lv.length:
                last = max(last, i)
        return last + 1


def _vec_str(ring, vec, names):
    # columns of every truncation are a prefix of the top table's columns
    return format_poly(ring._top.poly(vec), names, Field(ring.p))


def _products(alg, vec, k, n):
    """{u: u * vec} over monomials u of degree k, built one variable at a time."""
    layer = {(0,) * n: vec}
    for _ in range(k):
        nxt = {}
        for u, v in layer.items():
            last = max((j for j in range(n) if u[j]), default=0)
            for j in range(last, n):
                w = list(u)
                w[j] += 1
                nxt[tuple(w)] = alg.mul_mono(unit(n, j), v)
        layer = nxt
    return layer


def _colon_kernel(images_by_cand, cut, p):
    """Kernel of cand -> (truncated images); images_by_cand[c] is a list of vectors."""
    rows = []
    for imgs in images_by_cand:
        row = {}
        for slot, v in enumerate(imgs):
            base = slot * cut
            for i, a in v.items():
                if i < cut:
                    row[base + i] = a
        rows.append(row)
    width = max(1, cut * max((len(x) for x in images_by_cand), default=1))
    return kernel(rows, width, p)


def _rr_level(ring, i, prev_vectors, x, top, work_limit):
    """Ratliff-Rush closure of m^i modulo m^i, restricted to RR(m^(i-1)).

    Returns (vectors, method, k) or None when no explicit method fits.
    """
    n, p = ring.nvars, ring.p
    alg = ring.algebra(top)
    cands = [dict(v) for v in prev_vectors]
    cands += [{c: 1} for c in range(alg.start(i - 1), alg.start(i))]
    if not cands:
        return [], "explicit", 1
    for method in ("m-colon", "x-colon"):
        dims = []
        kers = []
        work = 0
        layers = [dict(v) for v in cands]  # x^k * cand for the x-colon
        for k in range(1, MAX_COLON_STEPS + 1):
            if i + k > top:
                break
            cut = alg.start(i + k)
            if method == "m-colon":
                work += len(cands) * comb(k + n - 1, n - 1)
                if work > work_limit:
                    break
                imgs = []
                for c in cands:
                    prods = _products(alg, c, k, n)
                    imgs.append([prods[u] for u in sorted(prods)])
            else:
                layers = [alg.mul(x, v) for v in layers]
                imgs = [[v] for v in layers]
            ker = _colon_kernel(imgs, cut, p)
            dims.append(len(ker))
            kers.append(ker)
            if len(dims) >= 3 and dims[-1] == dims[-2] == dims[-3]:
                ker = kers[-3]
                vecs = _combine(cands, ker, alg.start(i), p)
                return vecs, method, len(dims) - 2
    return None


def _combine(cands, ker, cut, p):
    """Echelon basis of the combinations ``ker`` of ``cands``, taken modulo columns >= cut."""
    ech = make_echelon(p, max(cut, 1))
    for coeffs in ker:
        v = {}
        for c, a in coeffs.items():
            for i, b in cands[c].items():
                if i >= cut:
                    continue
                w = v.get(i, 0) + a * b
                if p:
                    w %= p
                if w:
                    v[i] = w
                else:
                    v.pop(i, None)
        if v:
            ech.add(v)
    return ech.rows()


def ratliff_rush(ring, seq, horizon=None, budget=DEFAULT_BUDGET, work_limit=COLON_WORK,
                 validate=True):
    """The Ratliff-Rush filtration RR(m^i) for i = 1..horizon.

    Each level is computed as the union of the colons (m^(i+k) : m^k) taken
    inside RR(m^(i-1)); the chain is declared stable after two consecutive
    equalities.  When the colon by m^k is too large the colon by x^k (x the
    first superficial element) is used, and beyond the explicit size budget
    the b_x certificate applies.  ``r`` is the polynomial
    sum l(RR(m^(n+1))/m^(n+1)) z^n.
    """
    if ring.d == 0:
        raise ValueError("Ratliff-Rush filtration needs depth A > 0")
    if not seq.verified:
        raise SuperficialError("Ratliff-Rush computation needs a verified superficial element")
    if horizon is None:
        horizon = default_horizon(ring)
    t = seq.certificate_start
    last = max(horizon, t)
    top = ring.max_level(budget)
    ring.reserve(top)
    x = linear_poly(seq.forms[0])
    levels = {}
    prev = []
    for i in range(1, last + 1):
        res = None
        if i + 1 <= top:
            res = _rr_level(ring, i, prev, x, top, work_limit)
        if res is None:
            if i >= t:
                levels[i] = RRLevel(i, 0, "certificate", None, [])
                prev = []
                continue
            raise StabilizationError(f"Ratliff-Rush level {i} could not be resolved within the budget")
        vecs, method, k = res
        if i >= t and vecs:
            raise StabilizationError(f"level {i} contradicts the b_x certificate (length {len(vecs)})")
        levels[i] = RRLevel(i, len(vecs), method, k, vecs)
        prev = vecs
    r = ptrim([levels[n + 1].length for n in range(last)])
    data = RatliffRushData(levels, horizon, r, t)
    if validate:
        data.checks = _rr_checks(ring, data, x, top)
    return data


def _rr_space(alg, data, i):
    """RR(m^i) modulo m^M inside the truncation ``alg`` (needs M >= i)."""
    S = Subspace(alg)
    for v in data.vectors(i):
        S.add(v)
    for c in range(alg.start(i), alg.dim):
        S.echelon.add_unit(c)
    return S


def _rr_checks(ring, data, x, top):
    """Properties (1)-(3) of the filtration on the explicit range."""
    checks = {"colon_by_x": [], "products": [], "tail_equal": None}
    p = ring.p
    H = data.horizon
    for i in range(0, H):
        if i + 1 > top or (i + 1 not in data.levels):
            break
        alg = ring.algebra(i + 1)
        U = _rr_space(alg, data, i + 1)
        imgs = [U.echelon.reduce(alg.mul(x, {c: 1})) for c in range(alg.dim)]
        ker = kernel(imgs, alg.dim, p)
        small = alg.start(i)
        got = Subspace(alg)
        for v in ker:
            got.add({c: a for c, a in v.items() if c < small})
        want = len(data.vectors(i)) if i >= 1 else 0
        ok = got.dim == (want if i >= 1 else 0)
        if i >= 1 and ok:
            ref = Subspace(alg).add_all(data.vectors(i))
            ok = ref.contains_space(got)
        checks["colon_by_x"].append({"i": i, "ok": ok})
    for i in range(1, H):
        for j in range(i, H - i + 1):
            if i + j > top or (i + j) not in data.levels:
                continue
            Vi, Vj = data.vectors(i), data.vectors(j)
            if not Vi and not Vj:
                continue
            alg = ring.algebra(i + j)
            U = _rr_space(alg, data, i + j)
            ok = True
            gens_i = Vi + [{c: 1} for c in range(alg.start(i), alg.start(i + 1))]
            gens_j = Vj + [{c: 1} for c in range(alg.start(j), alg.start(j + 1))]
            for a in gens_i:
                for b in gens_j:
                    prod = alg.mul(alg.poly(a), b)
                    if prod and not U.contains(prod):
                        ok = False
                        break
                if not ok:
                    break
            checks["products"].append({"i": i, "j": j, "ok": ok})
    checks["tail_equal"] = data.length(H) == 0
    return checks


def tilde_hilbert(ring, data):
    """h~(z) by the identity h - (1-z)^(d+1) r(z) and directly from colengths.

    The direct route expands sum_n l(A / RR(m^(n+1))) z^n against
    (1 - z)^(d+1) and truncates at degree horizon - 1.
    """
    d = ring.d
    ident = psub(ring.h, pmul(one_minus_z_pow(d + 1), data.r))
    H = max(data.horizon, len(data.r) + 1)
    colengths = [ring.samuel(n) - data.length(n + 1) for n in range(H)]
    direct = pmul(one_minus_z_pow(d + 1), colengths)[:H]
    direct = ptrim(direct)
    agree = direct == ident and len(ident) <= H
    return ident, direct, agree


# ---------------------------------------------------------------- rho/sigma

def _span_products(alg, forms_polys, vectors):
    S = Subspace(alg)
    for f in forms_polys:
        for v in vectors:
            w = alg.mul(f, v)
            if w:
                S.add(w)
    return S


@dataclass
class ReductionTable:
    """Lengths attached to J and the filtrations, n = 0..horizon-1."""
    r: int
    rows: list

    def to_dict(self):
        return {"reduction_number": self.r, "rows": self.rows}


def reduction_table(ring, seq, data, horizon=None, budget=DEFAULT_BUDGET):
    """For each n: l(A/J m^n), l(A/J RR(m^n)), and whether RR(m^(n+1)) meets J in J RR(m^n).

    Rows beyond the explicit budget are filled from the certificates
    (n >= max(r, t)) and marked as such.
    """
    if horizon is None:
        horizon = default_horizon(ring)
    forms = [linear_poly(f) for f in seq.forms]
    r = reduction_number(ring, seq.forms)
    top = ring.max_level(budget)
    t = data.certificate_start if data is not None else None
    rows = []
    for n in range(horizon):
        M = max(n, r) + 1
        if M <= top:
            alg = ring.algebra(M)
            m_n = [{c: 1} for c in range(alg.start(n), alg.dim)]
            Jm = _span_products(alg, forms, m_n)
            row = {"n": n, "method": "explicit", "colength_Jm": alg.dim - Jm.dim}
            if data is not None:
                rr_n = data.vectors(n) + m_n if n >= 1 else [{c: 1} for c in range(alg.dim)]
                Jrr = _span_products(alg, forms, rr_n)
                RR1 = _rr_space(alg, data, n + 1)
                Jall = _span_products(alg, forms, [{c: 1} for c in range(alg.dim)])
                row["colength_Jrr"] = alg.dim - Jrr.dim
                row["colength_rr_next"] = alg.dim - RR1.dim
                row["intersection_ok"] = RR1.intersection_dim(Jall) == Jrr.dim
            rows.append(row)
        else:
            if n < r or (data is not None and (t is None or n < t)):
                raise StabilizationError(f"reduction data at n={n} is beyond the explicit budget")
            row = {"n": n, "method": "certificate", "colength_Jm": ring.samuel(n)}
            if data is not None:
                row["colength_Jrr"] = ring.samuel(n)
                row["colength_rr_next"] = ring.samuel(n)
                row["intersection_ok"] = True
            rows.append(row)
    return ReductionTable(r, rows)


def rho_sigma(ring, seq, data=None, table=None, horizon=None, budget=DEFAULT_BUDGET):
    """rho_i (d = 1) or both sigma variants (d = 2), each with its e_1/e_2 sums.

    rho_i = l(m^(i+1)/x m^i); sigma_n = l(RR(m^(n+1))/J m^n) and
    sigma~_n = l(RR(m^(n+1))/J RR(m^n)).
    """
    d = ring.d
    if d not in (1, 2):
        raise ValueError("rho/sigma invariants are defined for d = 1 or 2")
    if table is None:
        table = reduction_table(ring, seq, data, horizon, budget)
    e1, e2 = ring.e[1], ring.e[2]
    out = {"reduction_number": table.r}
    if d == 1:
        rho = [row["colength_Jm"] - ring.samuel(row["n"]) for row in table.rows]
        rho = ptrim(rho)
        out["rho"] = rho
        out["rho_tail_zero"] = all(v == 0 for v in rho[table.r:])
        out["e0_is_rho0_plus_1"] = (rho[0] if rho else 0) + 1 == ring.e[0]
        out["e1_sum"] = sum(rho) == e1
        out["e2_sum"] = sum(i * v for i, v in enumerate(rho)) == e2
    if data is not None and d >= 1:
        sig = ptrim([row["colength_Jm"] - row["colength_rr_next"] for row in table.rows])
        sigt = ptrim([row["colength_Jrr"] - row["colength_rr_next"] for row in table.rows])
        out["sigma"] = sig
        out["sigma_tilde"] = sigt
        variants = {}
        for name, s in (("sigma", sig), ("sigma_tilde", sigt)):
            variants[name] = {"e1_sum": sum(s) == e1,
                              "e2_sum": sum(n * v for n, v in enumerate(s)) == e2}
        out["variants"] = variants
        out["matching_variants"] = [k for k, v in variants.items() if v["e1_sum"] and v["e2_sum"]]
    return out


def m3_over_Jm2(ring, forms, budget=DEFAULT_BUDGET):
    """l(m^3 / J m^2) for the ideal J generated by linear ``forms``."""
    r = reduction_number(ring, forms)
    if r is None:
        raise ValueError("forms do not generate a reduction")
    M = max(2, r) + 1
    if M > ring.max_level(budget):
        if r <= 2:
            return 0
        raise StabilizationError("l(m^3/Jm^2) is beyond the explicit budget")
    alg = ring.algebra(M)
    Jm2 = _span_products(alg, [linear_poly(f) for f in forms],
                         [{c: 1} for c in range(alg.start(2), alg.dim)])
    return alg.dim - Jm2.dim - ring.samuel(2)


def exact_sequence_check(ring, seq, budget=DEFAULT_BUDGET):
    """Length additivity l(m^3/Jm^2) = l((m^3:x_1)/m^2) + l(n^3/J'n^2) in B = A/x_1."""
    lhs = m3_over_Jm2(ring, seq.forms, budget)
    bx = seq.records[0].bx
    b2 = bx[2] if len(bx) > 2 else 0
    B = seq.chain[1]
    rhs_B = m3_over_Jm2(B, seq.local_forms[1], budget)
    return {"lhs": lhs, "colon": b2, "quotient": rhs_B, "ok": lhs == b2 + rhs_B}
