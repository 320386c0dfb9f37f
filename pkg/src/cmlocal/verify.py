"""Pass/fail verdicts for the known inequalities and structure results.

Every check is a pure function of an ``InvariantReport``.  A check whose
hypotheses do not hold returns ``not-applicable``; a failing check always
carries the compared values as its witness.  Claims quantified over all n
are checked up to the report's horizon, which is recorded in the witness.
"""

from dataclasses import dataclass, field

from .hilbert import macaulay_upper, one_minus_z_pow, padd, ptrim

PASS, FAIL, NA, NOT_CHECKED = "pass", "fail", "not-applicable", "not-checked"


@dataclass
class Verdict:
    check: str
    status: str
    witness: dict = field(default_factory=dict)
    anchor: str = ""

    @property
    def ok(self):
        return self.status != FAIL

    def to_dict(self):
        return {"check": self.check, "status": self.status, "witness": self.witness,
                "anchor": self.anchor}


def _verdict(check, cond, witness, anchor):
    return Verdict(check, PASS if cond else FAIL, witness, anchor)


def _hypotheses(rep):
    """CM, e2 = e1 - e0 + 1 and e2 != 0."""
    return bool(rep.cm) and rep.e2 == rep.e1 - rep.e0 + 1 and rep.e2 != 0


def _hyp_witness(rep):
    return {"cohen_macaulay": rep.cm, "e": list(rep.e[:3]), "e1-e0+1": rep.e1 - rep.e0 + 1}


def check_itoh(rep):
    anchor = "e2 >= e1 - e0 + 1 for Cohen-Macaulay A"
    if not rep.cm:
        return Verdict("itoh", NA, {"cohen_macaulay": rep.cm}, anchor)
    w = {"e2": rep.e2, "e1-e0+1": rep.e1 - rep.e0 + 1}
    return _verdict("itoh", rep.e2 >= rep.e1 - rep.e0 + 1, w, anchor)


def check_northcott(rep):
    anchor = "e1 >= e0 - 1 for Cohen-Macaulay A"
    if not rep.cm:
        return Verdict("northcott", NA, {"cohen_macaulay": rep.cm}, anchor)
    return _verdict("northcott", rep.e1 >= rep.e0 - 1, {"e1": rep.e1, "e0-1": rep.e0 - 1}, anchor)


def check_type_lower_bound(rep):
    anchor = "type(A) >= e - h - 1 when e2 = e1 - e0 + 1 != 0"
    if not _hypotheses(rep) or rep.type is None:
        return Verdict("type_lower_bound", NA, _hyp_witness(rep), anchor)
    bound = rep.e0 - rep.codim - 1
    return _verdict("type_lower_bound", rep.type >= bound, {"type": rep.type, "e-h-1": bound}, anchor)


def _cm_h(rep):
    return ptrim([1, rep.codim, rep.e0 - rep.codim - 1])


def check_boundary_type(rep):
    anchor = "type(A) = e - h - 1 and e2 = e1 - e0 + 1 != 0 imply G(A) Cohen-Macaulay with h(z) = 1 + hz + (e-h-1)z^2"
    if not _hypotheses(rep) or rep.type is None or rep.type != rep.e0 - rep.codim - 1:
        w = _hyp_witness(rep)
        w["type"] = rep.type
        return Verdict("boundary_type_structure", NA, w, anchor)
    want = _cm_h(rep)
    w = {"depth_G": rep.depth_G, "d": rep.d, "h": list(rep.h), "expected_h": want}
    return _verdict("boundary_type_structure", rep.depth_G == rep.d and list(rep.h) == want, w, anchor)


def _next_type_applicable(rep):
    return (rep.d >= 2 and _hypotheses(rep) and rep.type is not None
            and rep.type == rep.e0 - rep.codim and rep.depth_G == 0)


def check_next_type(rep):
    anchor = ("type(A) = e - h, e2 = e1 - e0 + 1 != 0, d >= 2, depth G = 0 imply "
              "l(RR(m^2)/m^2) = 1, RR(m^(n+1)) = J RR(m^n) for n >= 2, RR(m^j) = m^j for j >= 3, "
              "l(m^3/Jm^2) = d; G~ Cohen-Macaulay checked as RR(m^(n+1)) meet J = J RR(m^n)")
    if not _next_type_applicable(rep):
        w = _hyp_witness(rep)
        w.update({"d": rep.d, "type": rep.type, "depth_G": rep.depth_G})
        return Verdict("next_type_structure", NA, w, anchor)
    N = rep.horizon
    if rep.rr_lengths is None:
        return Verdict("next_type_structure", NOT_CHECKED,
                       {"reason": "Ratliff-Rush filtration skipped", "horizon": N}, anchor)
    conclusions = {}
    conclusions["rr2_over_m2_is_1"] = {"value": rep.rr_lengths.get(2), "ok": rep.rr_lengths.get(2) == 1}
    steps = {n: rep.step_equal.get(n) for n in range(2, N)}
    conclusions["rr_step_equal_n_ge_2"] = {"failing": [n for n, v in steps.items() if not v],
                                           "checked": len(steps), "ok": all(steps.values())}
    powers = {j: rep.rr_equals_power(j) for j in range(3, N + 1)}
    conclusions["rr_equals_power_j_ge_3"] = {"failing": [j for j, v in powers.items() if not v],
                                             "checked": len(powers), "ok": all(powers.values())}
    conclusions["m3_over_Jm2_is_d"] = {"value": rep.m3_over_Jm2, "d": rep.d,
                                       "ok": rep.m3_over_Jm2 == rep.d}
    inter = {n: rep.intersections.get(n) for n in range(1, N)}
    conclusions["intersection_surrogate_for_G_tilde_cm"] = {
        "failing": [n for n, v in inter.items() if not v], "checked": len(inter),
        "ok": all(inter.values())}
    w = {"horizon": N, "conclusions": conclusions,
         "generalized_cm_of_G": NOT_CHECKED}
    return _verdict("next_type_structure", all(c["ok"] for c in conclusions.values()), w, anchor)


def check_generalized_cm(rep):
    anchor = "G(A) generalized Cohen-Macaulay under the next-type hypotheses (out of scope)"
    if not _next_type_applicable(rep):
        return Verdict("generalized_cm", NA, {"applicable": False}, anchor)
    return Verdict("generalized_cm", NOT_CHECKED, {"reason": "needs local cohomology of G(A)"}, anchor)


def hilbert_branch(rep):
    """The h-polynomial predicted for type = e - h from the depth of G(A), or None."""
    n, d, h, e = rep.depth_G, rep.d, rep.codim, rep.e0
    if n == d:
        return _cm_h(rep)
    if n <= d - 2:
        return ptrim(padd([1, h - 1, e - h], [0] + one_minus_z_pow(d - n + 1)))
    return None


def check_hilbert_formulas(rep):
    anchor = ("type = e - h, e2 = e1 - e0 + 1 != 0: h(z) = 1 + (h-1)z + (e-h)z^2 + z(1-z)^(d-n+1) "
              "with n = depth G <= d - 2, or 1 + hz + (e-h-1)z^2 when G is Cohen-Macaulay")
    if not _hypotheses(rep) or rep.type is None or rep.type != rep.e0 - rep.codim:
        w = _hyp_witness(rep)
        w["type"] = rep.type
        return Verdict("hilbert_formula", NA, w, anchor)
    want = hilbert_branch(rep)
    w = {"depth_G": rep.depth_G, "d": rep.d, "h": list(rep.h), "expected_h": want}
    if want is None:
        w["reason"] = "depth G = d - 1 cannot occur"
        return Verdict("hilbert_formula", FAIL, w, anchor)
    return _verdict("hilbert_formula", list(rep.h) == want, w, anchor)


def check_dimension_bound(rep):
    anchor = "type = e - h = k, e2 = e1 - e0 + 1 != 0, d > (k-1)^<2> imply depth G > 0"
    if not _hypotheses(rep) or rep.type is None or rep.type != rep.e0 - rep.codim:
        w = _hyp_witness(rep)
        w["type"] = rep.type
        return Verdict("dimension_bound", NA, w, anchor)
    k = rep.type
    bound = macaulay_upper(k - 1, 2) if k >= 1 else 0
    w = {"k": k, "bound": bound, "d": rep.d, "depth_G": rep.depth_G}
    return _verdict("dimension_bound", not (rep.d > bound and rep.depth_G == 0), w, anchor)


def check_d2_depth_dichotomy(rep):
    anchor = "d = 2 and e2 = e1 - e0 + 1 imply depth G(A) in {0, 2}"
    if not (rep.cm and rep.d == 2 and rep.e2 == rep.e1 - rep.e0 + 1):
        return Verdict("depth_dichotomy_d2", NA, {"d": rep.d, **_hyp_witness(rep)}, anchor)
    return _verdict("depth_dichotomy_d2", rep.depth_G in (0, 2), {"depth_G": rep.depth_G}, anchor)


CHECKS = (check_itoh, check_northcott, check_type_lower_bound, check_boundary_type, check_next_type,
          check_generalized_cm, check_hilbert_formulas, check_dimension_bound,
          check_d2_depth_dichotomy)


def run_checks(rep):
    return [c(rep) for c in CHECKS]


def classify(rep, verdicts=None):
    """Place the ring in the type trichotomy and aggregate the verdicts."""
    if verdicts is None:
        verdicts = run_checks(rep)
    if not _hypotheses(rep) or rep.type is None:
        label = "outside-hypotheses"
    elif rep.type == rep.e0 - rep.codim - 1:
        label = "boundary-type"
    elif rep.type == rep.e0 - rep.codim:
        label = "next-type"
    else:
        label = "other-type"
    counts = {s: sum(1 for v in verdicts if v.status == s) for s in (PASS, FAIL, NA, NOT_CHECKED)}
    return {
        "label": label,
        "applicable": [v.check for v in verdicts if v.status in (PASS, FAIL)],
        "counts": counts,
        "all_pass": counts[FAIL] == 0,
        "verdicts": [v.to_dict() for v in verdicts],
    }


__all__ = ["Verdict", "PASS", "FAIL", "NA", "NOT_CHECKED", "check_itoh", "check_northcott",
           "check_type_lower_bound", "check_boundary_type", "check_next_type", "check_generalized_cm",
           "check_hilbert_formulas", "check_dimension_bound", "check_d2_depth_dichotomy",
           "hilbert_branch", "run_checks", "classify", "CHECKS"]
