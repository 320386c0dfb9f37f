"""The full invariant pipeline and its report.

``analyze`` runs tangent cone, Hilbert data, superficial sequence, CM test,
type, depth of G(A), Ratliff-Rush filtration and the reduction lengths, and
collects everything in an ``InvariantReport``.  ``report.to_dict()`` is the
JSON document written by the command line tool; its key schema is listed in
the README.
"""

import random
import time
from dataclasses import dataclass, field

from .field import Field
from .hilbert import pformat
from .local import (DEFAULT_BUDGET, LocalRing, NotCohenMacaulay, StabilizationError,
                    SuperficialError, cm_test, default_horizon, depth_assoc_graded,
                    exact_sequence_check, m3_over_Jm2, random_superficial_sequence,
                    ratliff_rush, reduction_number, reduction_table, rho_sigma, tilde_hilbert,
                    type_of)
from .poly import format_poly


class StageError(RuntimeError):
    """A pipeline failure, tagged with the stage that raised it."""

    def __init__(self, stage, error):
        super().__init__(f"{stage}: {error}")
        self.stage = stage
        self.error = error

    @property
    def is_stabilization(self):
        return isinstance(self.error, (StabilizationError, SuperficialError))


@dataclass
class InvariantReport:
    name: object
    char: int
    names: list
    ideal: list
    seed: int
    horizon: int
    d: int
    embdim: int
    codim: int
    e: list
    h: list
    cm: bool
    colength: object = None
    type: object = None
    depth_G: object = None
    reduction_number: object = None
    r: object = None
    h_tilde: object = None
    rho: object = None
    sigma: object = None
    sigma_tilde: object = None
    sigma_variants: object = None
    rr_lengths: object = None
    rr_methods: object = None
    rr_generators: object = None
    m3_over_Jm2: object = None
    step_equal: object = None
    intersections: object = None
    diagnostics: dict = field(default_factory=dict)
    oracle: object = None
    skipped: list = field(default_factory=list)
    timings: dict = field(default_factory=dict)

    @property
    def e0(self):
        return self.e[0]

    @property
    def e1(self):
        return self.e[1]

    @property
    def e2(self):
        return self.e[2]

    def rr_equals_power(self, j):
        """True when RR(m^j) = m^j (None when level j was not computed)."""
        if self.rr_lengths is None:
            return None
        v = self.rr_lengths.get(j)
        return None if v is None else v == 0

    def to_dict(self, timings=True):
        inv = {
            "d": self.d,
            "embdim": self.embdim,
            "codim": self.codim,
            "e": list(self.e),
            "h": list(self.h),
            "h_str": pformat(self.h),
            "cohen_macaulay": self.cm,
            "colength_J": self.colength,
            "type": self.type,
            "depth_G": self.depth_G,
            "reduction_number": self.reduction_number,
            "r": self.r,
            "h_tilde": self.h_tilde,
            "h_tilde_str": None if self.h_tilde is None else pformat(self.h_tilde),
            "rho": self.rho,
            "sigma": self.sigma,
            "sigma_tilde": self.sigma_tilde,
            "sigma_variants": self.sigma_variants,
            "rr_lengths": _keys(self.rr_lengths),
            "rr_methods": _keys(self.rr_methods),
            "rr_generators": _keys(self.rr_generators),
            "m3_over_Jm2": self.m3_over_Jm2,
            "rr_step_equal": _keys(self.step_equal),
            "rr_intersection": _keys(self.intersections),
        }
        out = {
            "ring": {"name": self.name, "char": self.char, "vars": list(self.names),
                     "ideal": list(self.ideal)},
            "seed": self.seed,
            "horizon": self.horizon,
            "invariants": inv,
            "diagnostics": self.diagnostics,
            "skipped": list(self.skipped),
        }
        if self.oracle is not None:
            out["oracle"] = self.oracle
        if timings:
            out["timings"] = {k: round(v, 4) for k, v in self.timings.items()}
        return out


def _keys(d):
    if d is None:
        return None
    return {str(k): v for k, v in sorted(d.items())}


class _Clock:
    def __init__(self, report):
        self.report = report

    def __call__(self, stage, fn, *args, **kwargs):
        t0 = time.perf_counter()
        try:
            return fn(*args, **kwargs)
        except (StabilizationError, SuperficialError, NotCohenMacaulay, ValueError) as exc:
            raise StageError(stage, exc) from exc
        finally:
            self.report.timings[stage] = self.report.timings.get(stage, 0.0) + time.perf_counter() - t0


def _sop_type(ring, seed):
    """Socle dimension of A/J for an independent random system of parameters."""
    rng = random.Random(("type", seed).__repr__())
    cur = ring
    forms = [[rng.randrange(1, ring.p or 2 ** 15) for _ in range(ring.nvars)] for _ in range(ring.d)]
    while forms:
        f = forms.pop(0)
        cur, mapper = cur.quotient(f)
        forms = [mapper(g) for g in forms]
    if cur.d != 0:
        return None
    return type_of(cur)


def analyze(pres, seed=None, horizon=None, skip_rr=False, oracle=False, budget=DEFAULT_BUDGET):
    """Run the whole pipeline on a ``RingPresentation``."""
    seed = pres.seed if seed is None else seed
    field_ = Field(pres.char)
    t0 = time.perf_counter()
    ring = LocalRing.from_presentation(pres)
    build = time.perf_counter() - t0
    N = default_horizon(ring) if horizon is None else horizon
    report = InvariantReport(
        name=pres.name, char=pres.char, names=list(pres.names),
        ideal=[format_poly(g.terms, pres.names, field_) for g in pres.polys],
        seed=seed, horizon=N, d=ring.d, embdim=ring.embdim, codim=ring.codim,
        e=list(ring.e[:max(3, ring.d + 1)]), h=list(ring.h), cm=None)
    report.timings["standard_basis"] = build
    clock = _Clock(report)
    diag = report.diagnostics

    if ring.d == 0:
        report.cm = True
        report.colength = ring.length
        report.type = clock("type", type_of, ring)
        report.depth_G = 0
        report.h_tilde = list(ring.h)
        report.r = []
        report.skipped.append("superficial sequence and Ratliff-Rush (dimension 0)")
        if oracle:
            report.oracle = clock("oracle", oracle_checks, pres, ring, N)
        return report

    seq = clock("superficial", random_superficial_sequence, ring, seed=seed, horizon=N,
                budget=budget, strict=False)
    diag["superficial"] = seq.to_dict()
    report.colength = seq.colength
    report.cm = clock("cm_test", cm_test, ring, seq)
    diag["e_prefix_agreement"] = [
        {"r": k, "ok": list(ring.e[:ring.d - k + 1]) == list(seq.chain[k].e[:ring.d - k + 1])}
        for k in range(1, ring.d + 1)]
    depth = clock("depth_G", depth_assoc_graded, ring, seed=seed, seq=seq if seq.verified else None)
    report.depth_G = depth.depth
    diag["depth_G"] = depth.to_dict()
    report.reduction_number = reduction_number(ring, seq.forms)

    if not report.cm:
        report.skipped.append("type, Ratliff-Rush and reduction lengths (not Cohen-Macaulay)")
        if oracle:
            report.oracle = clock("oracle", oracle_checks, pres, ring, N)
        return report
    if not seq.verified:
        bad = next((r.to_dict() for r in seq.records if not r.ok), None)
        raise StageError("superficial", SuperficialError(
            f"verification failed after {seq.attempts} attempts: {bad}"))

    report.type = clock("type", type_of, ring, seq)
    other = clock("type", _sop_type, ring, seed + 1)
    diag["type_second_seed"] = {"type": other, "agree": other == report.type}
    report.m3_over_Jm2 = clock("reduction", m3_over_Jm2, ring, seq.forms, budget)
    diag["length_additivity"] = clock("reduction", exact_sequence_check, ring, seq, budget)

    data = None
    if skip_rr:
        report.skipped.append("Ratliff-Rush filtration (--skip-rr)")
    else:
        data = clock("ratliff_rush", ratliff_rush, ring, seq, horizon=N, budget=budget)
        report.rr_lengths = {i: lv.length for i, lv in data.levels.items()}
        report.rr_methods = {i: {"method": lv.method, "k": lv.k} for i, lv in data.levels.items()}
        report.rr_generators = {i: lv.to_dict(ring, pres.names)["extra_generators"]
                                for i, lv in data.levels.items() if lv.length}
        report.r = list(data.r)
        ident, direct, agree = tilde_hilbert(ring, data)
        report.h_tilde = ident
        diag["h_tilde"] = {"identity": ident, "direct": direct, "agree": agree}
        diag["ratliff_rush_checks"] = data.checks
        rr_zero = all(v == 0 for v in report.rr_lengths.values())
        diag["depth_vs_ratliff_rush"] = {"depth_positive": report.depth_G > 0,
                                         "rr_trivial": rr_zero,
                                         "agree": (report.depth_G > 0) == rr_zero}

    table = clock("reduction", reduction_table, ring, seq, data, horizon=N, budget=budget)
    diag["reduction_rows"] = {"explicit": sum(1 for r in table.rows if r["method"] == "explicit"),
                              "certificate": sum(1 for r in table.rows if r["method"] != "explicit")}
    if data is not None:
        report.step_equal = {row["n"]: row["colength_Jrr"] == row["colength_rr_next"]
                             for row in table.rows}
        report.intersections = {row["n"]: row["intersection_ok"] for row in table.rows}
    if ring.d in (1, 2):
        rs = rho_sigma(ring, seq, data, table)
        report.rho = rs.get("rho")
        report.sigma = rs.get("sigma")
        report.sigma_tilde = rs.get("sigma_tilde")
        if "variants" in rs:
            report.sigma_variants = {"matching": rs["matching_variants"], **rs["variants"]}
        if "rho" in rs:
            diag["rho_identities"] = {k: rs[k] for k in
                                      ("rho_tail_zero", "e0_is_rho0_plus_1", "e1_sum", "e2_sum")}
    if oracle:
        report.oracle = clock("oracle", oracle_checks, pres, ring, N)
    return report


def oracle_checks(pres, ring, N):
    """Hilbert-Samuel values three ways: truncated Groebner basis, brute force, series."""
    from .ideal import brute_force_length, hilbert_samuel

    rows = []
    for n in range(N + 1):
        gb = hilbert_samuel(pres, n)
        bf = brute_force_length(pres.gens, pres.nvars, pres.char, n)
        series = ring.samuel(n)
        rows.append({"n": n, "groebner": gb, "brute_force": bf, "series": series,
                     "ok": gb == bf == series})
    return {"hilbert_samuel": rows, "all_ok": all(r["ok"] for r in rows)}


__all__ = ["InvariantReport", "StageError", "analyze", "oracle_checks"]
