"""Acceptance suite: one test per criterion, each printing a single pass/fail line.

All comparisons are exact (integer or rational arithmetic); there are no
tolerances to tune.
"""

import io
import json
import random
import time

from cmlocal.cli import EXIT_INPUT, EXIT_MISMATCH, EXIT_OK, EXIT_STABILIZATION, main
from cmlocal.corpus import run_corpus
from cmlocal.hilbert import macaulay_upper, one_minus_z_pow, pmul, psub, ptrim
from cmlocal.ideal import brute_force_length, hilbert_samuel
from cmlocal.local import LocalRing, default_horizon, direct_b_values, ratliff_rush
from cmlocal.report import analyze
from cmlocal.semigroup import SemigroupData, random_semigroup, semigroup_ring
from cmlocal.verify import NA, PASS, check_itoh, check_northcott, classify

from conftest import CORPUS, CORPUS_NAMES, load


def verdict(cls, check):
    return next(v for v in cls["verdicts"] if v["check"] == check)


def settle(announce, number, title, checks, elapsed=None, limit=None):
    """Print one line for the criterion, then fail the test if any check failed."""
    if limit is not None:
        checks.append((f"runtime {elapsed:.1f}s < {limit}s", elapsed < limit))
    bad = [name for name, ok in checks if not ok]
    status = "PASS" if not bad else "FAIL"
    detail = f"{len(checks)} checks" if not bad else "failed: " + "; ".join(bad)
    announce(f"criterion {number} ({title}): {status}  [{detail}]")
    assert not bad, bad


def timed(fn, *args, **kwargs):
    t0 = time.perf_counter()
    out = fn(*args, **kwargs)
    return out, time.perf_counter() - t0


def test_criterion_1_wang(announce):
    rep, dt = timed(analyze, load("wang"))
    N = rep.horizon
    checks = [
        ("h = 1+3z+3z^3-z^4", rep.h == [1, 3, 0, 3, -1]),
        ("e = (6, 8, 3)", rep.e[:3] == [6, 8, 3]),
        ("type = 3", rep.type == 3),
        ("depth G = 0", rep.depth_G == 0),
        ("l(RR(m^2)/m^2) = 1", rep.rr_lengths.get(2) == 1),
        (f"RR(m^j) = m^j for 3 <= j <= {N}", all(rep.rr_lengths.get(j) == 0 for j in range(3, N + 1))),
        ("l(m^3/Jm^2) = 2", rep.m3_over_Jm2 == 2),
        ("r(z) = z", rep.r == [0, 1]),
        ("h~(z) = 1+2z+3z^2", rep.h_tilde == [1, 2, 3]),
    ]
    settle(announce, 1, "Wang example", checks, dt, 30)


def test_criterion_2_three_dimensional(announce):
    rep, dt = timed(analyze, load("ext1"))
    cls = classify(rep)
    checks = [
        ("h = 1+4z+6z^3-4z^4+z^5", rep.h == [1, 4, 0, 6, -4, 1]),
        ("e = (8, 11, 4)", rep.e[:3] == [8, 11, 4]),
        ("type = 4", rep.type == 4),
        ("depth G = 0", rep.depth_G == 0),
        ("l(m^3/Jm^2) = 3", rep.m3_over_Jm2 == 3),
        ("Hilbert formula verdict pass", verdict(cls, "hilbert_formula")["status"] == PASS),
    ]
    settle(announce, 2, "d = 3 extension", checks, dt, 120)


def test_criterion_3_four_dimensional(announce):
    rep, dt = timed(analyze, load("ext2"))
    cls = classify(rep)
    v = verdict(cls, "dimension_bound")
    checks = [
        ("h = 1+5z+10z^3-10z^4+5z^5-z^6", rep.h == [1, 5, 0, 10, -10, 5, -1]),
        ("e = (10, 14, 5)", rep.e[:3] == [10, 14, 5]),
        ("type = 5", rep.type == 5),
        ("depth G = 0", rep.depth_G == 0),
        ("l(m^3/Jm^2) = 4", rep.m3_over_Jm2 == 4),
        ("macaulay_upper(4, 2) = 5", macaulay_upper(4, 2) == 5),
        ("dimension bound pass with d = 4 <= 5",
         v["status"] == PASS and v["witness"]["bound"] == 5 and rep.d == 4 <= 5),
    ]
    settle(announce, 3, "d = 4 extension", checks, dt, 600)


def test_criterion_4_gorenstein_boundary(announce):
    rep, dt = timed(analyze, load("gor456"))
    cls = classify(rep)
    checks = [
        ("type = 1 = e - h - 1", rep.type == 1 == rep.e0 - rep.codim - 1),
        ("boundary-type verdict pass", verdict(cls, "boundary_type_structure")["status"] == PASS),
        ("h = 1+2z+z^2", rep.h == [1, 2, 1]),
        ("depth G = d = 1", rep.depth_G == rep.d == 1),
    ]
    settle(announce, 4, "k[[t^4,t^5,t^6]]", checks, dt, 10)


def test_criterion_5_oracle_equivalence(announce):
    t0 = time.perf_counter()
    checks = []
    for name in CORPUS_NAMES:
        pres = load(name)
        ring = LocalRing.from_presentation(pres)
        N = len(ring.h) - 1 + ring.d + 3
        assert N == default_horizon(ring)
        rows = [(hilbert_samuel(pres, n), brute_force_length(pres.gens, pres.nvars, pres.char, n),
                 ring.samuel(n)) for n in range(N + 1)]
        bad = [n for n, (a, b, c) in enumerate(rows) if not a == b == c]
        checks.append((f"{name} n <= {N} (mismatch at {bad})", not bad))
    settle(announce, 5, "Hilbert-Samuel oracle equivalence", checks, time.perf_counter() - t0, 300)


def test_criterion_6_sigma_sums(announce):
    rep = analyze(load("wang"))
    s = rep.sigma_tilde
    checks = [
        ("sum sigma~ = e1 = 8", sum(s) == 8 == rep.e1),
        ("sum n sigma~ = e2 = 3", sum(n * v for n, v in enumerate(s)) == 3 == rep.e2),
        ("variant recorded", rep.sigma_variants is not None
         and "sigma_tilde" in rep.sigma_variants["matching"]),
    ]
    settle(announce, 6, "sigma identities on Wang, variant sigma_tilde", checks)


def test_criterion_7_semigroup_properties(announce):
    t0 = time.perf_counter()
    rng = random.Random(20240601)
    seen = set()
    failures = {}
    while len(seen) < 100:
        gens = random_semigroup(rng, 3, 5, 30)
        if tuple(gens) in seen:
            continue
        seen.add(tuple(gens))
        pres = semigroup_ring(gens)
        rep = analyze(pres, skip_rr=True)
        sd = SemigroupData(gens)
        rho = ptrim([sd.rho(i) for i in range(sd.frobenius + 2 * max(gens) + 2)])
        ring = LocalRing.from_presentation(pres)
        form = rep.diagnostics["superficial"]["forms"][0]
        B, _ = ring.quotient(form)
        b = ptrim(direct_b_values(ring, form, len(B.h) + 3))
        ok = {
            "itoh": check_itoh(rep).status == PASS,
            "northcott": check_northcott(rep).status == PASS,
            "e1 = sum rho": sum(rho) == rep.e1 and rep.rho == rho,
            "e2 = sum i rho": sum(i * v for i, v in enumerate(rho)) == rep.e2,
            "h_A = h_B - (1-z) b_x": ptrim(psub(B.h, pmul(one_minus_z_pow(1), b))) == ring.h,
        }
        for prop, good in ok.items():
            failures.setdefault(prop, [])
            if not good:
                failures[prop].append(gens)
    checks = [(f"{prop} on {len(seen)} rings (failing: {bad})", not bad)
              for prop, bad in failures.items()]
    settle(announce, 7, "random numerical semigroup rings", checks, time.perf_counter() - t0, 600)


def _exit(*argv):
    return main(list(argv), io.StringIO())


def test_criterion_8_refusal(announce, monkeypatch, tmp_path):
    import cmlocal.report as report

    rep = analyze(load("noncm"))
    cls = classify(rep)
    statuses = {v["check"]: v["status"] for v in cls["verdicts"]}
    ring = f"{CORPUS}/noncm.ring"
    unit = tmp_path / "unit.ring"
    unit.write_text("vars x\nideal x - 1\n")
    corrupt = tmp_path / "c"
    corrupt.mkdir()
    (corrupt / "noncm.ring").write_text(open(ring).read().replace("expect cm false", "expect cm true"))
    checks = [
        ("cm_test false", rep.cm is False),
        ("l(A/J) > e0", rep.colength > rep.e0),
        ("type refused", rep.type is None),
        ("every check not-applicable", set(statuses.values()) == {NA}),
        ("exit 0 on refusal", _exit("invariants", ring) == EXIT_OK),
        ("exit 2 on unit ideal", _exit("invariants", str(unit)) == EXIT_INPUT),
        ("exit 1 on expectation mismatch", _exit("corpus", str(corrupt)) == EXIT_MISMATCH),
    ]
    monkeypatch.setattr(report, "ratliff_rush",
                        lambda r, s, horizon, budget: ratliff_rush(r, s, horizon=horizon, budget=10))
    checks.append(("exit 3 when the filtration cannot stabilize",
                   _exit("invariants", f"{CORPUS}/wang.ring") == EXIT_STABILIZATION))
    settle(announce, 8, "non-CM refusal and exit codes", checks)


def _payload(summary):
    for r in summary["results"]:
        r.get("report", {}).pop("timings", None)
    return json.dumps(summary, sort_keys=True, indent=2)


def test_criterion_9_determinism(announce):
    a = _payload(run_corpus(seed=7))
    b = _payload(run_corpus(seed=7))
    checks = [("bundled corpus all pass", json.loads(a)["all_pass"]),
              ("byte-identical JSON across two runs", a == b)]
    settle(announce, 9, "determinism", checks)
