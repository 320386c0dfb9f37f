import pytest

import cmlocal.local as local
from cmlocal.hilbert import one_minus_z_pow, pmul, psub, ptrim
from cmlocal.local import (LocalRing, NotCohenMacaulay, StabilizationError, SuperficialError,
                           cm_test, depth_assoc_graded, direct_b_values, random_superficial_sequence,
                           ratliff_rush, reduction_number, tilde_hilbert, type_of, verify_step)
from cmlocal.presentation import RingPresentation
from cmlocal.semigroup import semigroup_ring

from conftest import CORPUS_NAMES, load


def ring_of(name):
    return LocalRing.from_presentation(load(name))


@pytest.fixture(scope="module")
def wang():
    ring = ring_of("wang")
    return ring, random_superficial_sequence(ring, seed=42)


CM_POSITIVE_DIM = [n for n in CORPUS_NAMES if n not in ("noncm", "artinian")]


# -- superficial sequences

def test_wang_sequence(wang):
    ring, seq = wang
    assert seq.verified and len(seq.forms) == 2
    assert seq.colength == 6 == ring.e[0]


def test_polynomial_ring_in_one_variable():
    ring = LocalRing.from_presentation(RingPresentation(["x"], []))
    seq = random_superficial_sequence(ring)
    assert seq.verified and seq.colength == 1


def test_semigroup_345_sequence():
    ring = LocalRing.from_presentation(semigroup_ring([3, 4, 5]))
    seq = random_superficial_sequence(ring, seed=3)
    assert seq.verified and seq.colength == 3


def test_bad_candidate_is_rejected():
    rec, _, _ = verify_step(ring_of("noncm"), [1, 0], 5, 4000)
    assert not rec.dim_drop and not rec.ok


def test_strict_mode_raises(monkeypatch):
    monkeypatch.setattr(local, "_random_form", lambda rng, n, p: [1] + [0] * (n - 1))
    with pytest.raises(SuperficialError):
        random_superficial_sequence(ring_of("noncm"), tries=2)


# -- Cohen-Macaulay test, type, depth

def test_cm_examples(wang):
    ring, seq = wang
    assert cm_test(ring, seq)
    noncm = ring_of("noncm")
    s = random_superficial_sequence(noncm, strict=False)
    assert not cm_test(noncm, s)
    assert s.colength == 2 > noncm.e[0] == 1
    reg = ring_of("regular")
    assert cm_test(reg, random_superficial_sequence(reg))


def test_type_examples(wang, corpus_report):
    ring, seq = wang
    assert type_of(ring, seq) == 3
    assert corpus_report("gor456")[0].type == 1
    assert corpus_report("ext1")[0].type == 4


def test_type_refused_without_cm():
    with pytest.raises(NotCohenMacaulay):
        type_of(ring_of("noncm"), cm=False)


def test_artinian_type():
    assert type_of(ring_of("artinian")) == 1


def test_depth_examples(wang, corpus_report):
    ring, seq = wang
    res = depth_assoc_graded(ring, seed=5, seq=seq)
    assert res.depth == 0 and res.agree and res.consistent
    assert depth_assoc_graded(ring_of("regular")).depth == 2
    assert corpus_report("ext2")[0].depth_G == 0


def test_reduction_number_wang(wang):
    # m^3 != J m^2 (length 2) but m^4 = J m^3
    from cmlocal.local import m3_over_Jm2

    ring, seq = wang
    assert m3_over_Jm2(ring, seq.forms) == 2
    assert reduction_number(ring, seq.forms) == 3


# -- Ratliff-Rush filtration

def test_wang_ratliff_rush(wang):
    ring, seq = wang
    data = ratliff_rush(ring, seq)
    assert data.length(1) == 0 and data.length(2) == 1
    assert all(data.length(j) == 0 for j in range(3, data.horizon + 1))
    assert data.r == [0, 1]
    ident, direct, agree = tilde_hilbert(ring, data)
    assert ident == [1, 2, 3] and agree


def test_semigroup_ratliff_rush_trivial(corpus_report):
    rep, _ = corpus_report("semigroup_345")
    assert rep.depth_G == 1 and rep.r == []
    assert set(rep.rr_lengths.values()) == {0}


def test_budget_exhaustion_raises(wang):
    ring, seq = wang
    with pytest.raises(StabilizationError):
        ratliff_rush(ring, seq, budget=10)


@pytest.mark.parametrize("name", CM_POSITIVE_DIM)
def test_rr_of_m_is_m(name, corpus_report):
    assert corpus_report(name)[0].rr_lengths[1] == 0


@pytest.mark.parametrize("name", CM_POSITIVE_DIM)
def test_rr_internal_checks(name, corpus_report):
    rep, _ = corpus_report(name)
    checks = rep.diagnostics["ratliff_rush_checks"]
    assert all(row["ok"] for row in checks["colon_by_x"] + checks["products"]), checks
    assert checks["tail_equal"]


# -- rho, sigma, h~

def test_wang_sigma(corpus_report):
    rep, _ = corpus_report("wang")
    assert rep.sigma_tilde[:2] == [rep.e0 - 1, rep.e0 - rep.codim] == [5, 3]
    assert rep.sigma_variants["matching"] == ["sigma_tilde"]


def test_semigroup_345_rho(corpus_report):
    rep, _ = corpus_report("semigroup_345")
    assert rep.rho[0] == 2 and sum(rep.rho) == rep.e1


def test_h_tilde_examples(corpus_report):
    assert corpus_report("wang")[0].h_tilde == [1, 2, 3]
    assert corpus_report("ext1")[0].h_tilde == [1, 3, 4]
    gor = corpus_report("gor456")[0]
    assert gor.h_tilde == gor.h


@pytest.mark.parametrize("name", CM_POSITIVE_DIM)
def test_h_tilde_two_ways(name, corpus_report):
    assert corpus_report(name)[0].diagnostics["h_tilde"]["agree"]


# -- properties over the corpus

@pytest.mark.parametrize("name", CM_POSITIVE_DIM)
def test_superficial_quotient_identity(name):
    """h_A = h_B - (1-z)^d b_x with b_x read off kernels of x, not from the series."""
    ring = ring_of(name)
    seq = random_superficial_sequence(ring, seed=11)
    B = seq.chain[1]
    window = len(B.h) + ring.d + 2
    b = ptrim(direct_b_values(ring, seq.forms[0], window))
    assert ptrim(psub(B.h, pmul(one_minus_z_pow(ring.d), b))) == ring.h


@pytest.mark.parametrize("name", CM_POSITIVE_DIM)
def test_e_prefix_agreement(name, corpus_report):
    rep, _ = corpus_report(name)
    assert all(row["ok"] for row in rep.diagnostics["e_prefix_agreement"])


@pytest.mark.parametrize("name", CM_POSITIVE_DIM)
def test_depth_positive_iff_rr_trivial(name, corpus_report):
    assert corpus_report(name)[0].diagnostics["depth_vs_ratliff_rush"]["agree"]


@pytest.mark.parametrize("name", CM_POSITIVE_DIM)
def test_colength_equals_multiplicity(name, corpus_report):
    rep, _ = corpus_report(name)
    assert rep.cm and rep.colength == rep.e0


@pytest.mark.parametrize("name", CM_POSITIVE_DIM)
def test_type_independent_of_seed(name, corpus_report):
    assert corpus_report(name)[0].diagnostics["type_second_seed"]["agree"]


@pytest.mark.parametrize("name", CM_POSITIVE_DIM)
def test_rr_square_meets_J_in_Jm(name, corpus_report):
    assert corpus_report(name)[0].intersections[1]


@pytest.mark.parametrize("name", CM_POSITIVE_DIM)
def test_length_additivity(name, corpus_report):
    rep, _ = corpus_report(name)
    if rep.d < 2:
        pytest.skip("needs d >= 2")
    assert rep.diagnostics["length_additivity"]["ok"]


def test_d2_depth_dichotomy_on_corpus(corpus_report):
    for name in CM_POSITIVE_DIM:
        rep, _ = corpus_report(name)
        if rep.d == 2 and rep.e2 == rep.e1 - rep.e0 + 1:
            assert rep.depth_G in (0, 2)
