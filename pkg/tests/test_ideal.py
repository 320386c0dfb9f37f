import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cmlocal.field import Field
from cmlocal.groebner import buchberger
from cmlocal.ideal import (IdealHandle, LengthError, artinian_basis, brute_force_length,
                           hilbert_samuel, ideal_ops, local_hilbert_series, quotient_length,
                           tangent_cone, verify_groebner)
from cmlocal.local import LocalRing
from cmlocal.monomial import DEGREVLEX, LOCAL, monomials_of_degree
from cmlocal.poly import PolyRing
from cmlocal.presentation import RingPresentation
from cmlocal.ringfile import parse_polynomials

from conftest import CORPUS_NAMES, load


def ideal(names, text, char=32003):
    ring = PolyRing(names, Field(char))
    return IdealHandle(ring, [ring.from_dict(g) for g in parse_polynomials(text, names)])


def as_set(basis):
    return {frozenset(g.items()) for g in basis}


def same_ideal(a, b):
    return as_set(a.basis(DEGREVLEX)) == as_set(b.basis(DEGREVLEX))


def test_buchberger_example():
    I = ideal("xy", "x^2, x*y + y^2")
    assert as_set(I.basis(DEGREVLEX)) == as_set(ideal("xy", "x^2, x*y + y^2, y^3").raw_gens)
    assert verify_groebner(I.basis(DEGREVLEX), DEGREVLEX, 32003)


def test_buchberger_monomial_input():
    I = ideal("xy", "x^3, y^2")
    assert as_set(I.basis(DEGREVLEX)) == as_set(I.raw_gens)


def test_buchberger_reduces():
    assert as_set(ideal("xy", "x - y, y").basis(DEGREVLEX)) == as_set(ideal("xy", "x, y").raw_gens)


def test_buchberger_deterministic():
    gens = ideal("xyz", "x^2 - y*z, y^2 - x*z, z^3 - x*y").raw_gens
    a = buchberger(gens, DEGREVLEX, 32003, nvars=3)
    b = buchberger(gens, DEGREVLEX, 32003, nvars=3)
    assert a == b


def test_mora_cusp():
    I = ideal("xy", "y^2 - x^3")
    tc = tangent_cone(I)
    assert as_set(tc.raw_gens) == as_set(ideal("xy", "y^2").raw_gens)


def test_mora_unit_factor():
    I = ideal("x", "x - x^2")
    lms = [LOCAL.leading(g) for g in I.basis(LOCAL)]
    assert lms == [(1,)]
    assert I.contains(ideal("x", "x").raw_gens[0], local=True)
    assert not I.contains(ideal("x", "x").raw_gens[0])


def test_mora_wang():
    pres = load("wang")
    I = IdealHandle.of(pres)
    hs = local_hilbert_series(I)
    assert hs.numerator == (1, 3, 0, 3, -1) and hs.dim == 2


def test_tangent_cone_homogeneous_input():
    I = ideal("xyz", "x*y, y^2 - x*z")
    assert same_ideal(tangent_cone(I), I)


def test_tangent_cone_rejects_unit():
    with pytest.raises(ValueError):
        tangent_cone(ideal("xy", "x + 1"))


def test_colon_examples():
    assert same_ideal(ideal_ops(ideal("xy", "x^2, x*y"), ideal("xy", "x"), "colon"), ideal("xy", "x, y"))
    assert same_ideal(ideal_ops(ideal("xy", "x*y"), ideal("xy", "x"), "colon"), ideal("xy", "y"))


def test_intersection_example():
    assert same_ideal(ideal_ops(ideal("xy", "x"), ideal("xy", "y"), "intersect"), ideal("xy", "x*y"))


def test_sum_product_power():
    a, b = ideal("xy", "x"), ideal("xy", "y")
    assert same_ideal(ideal_ops(a, b, "sum"), ideal("xy", "x, y"))
    assert same_ideal(ideal_ops(a, b, "product"), ideal("xy", "x*y"))
    m = ideal("xy", "x, y")
    assert same_ideal(ideal_ops(m, op="power", k=3), ideal("xy", "x^3, x^2*y, x*y^2, y^3"))
    with pytest.raises(ValueError):
        ideal_ops(m, op="power", k=0)


def test_ops_reject_mixed_rings():
    with pytest.raises(ValueError):
        ideal_ops(ideal("xy", "x"), ideal("xz", "x"), "sum")


def test_quotient_length_examples():
    unit = ideal("xy", "x + 1")
    assert quotient_length(ideal("xy", "1"), ideal("xy", "x^2, x*y, y^2")) == 3
    assert quotient_length(unit, ideal("xy", "x^2, x*y, y^2")) == 3
    assert quotient_length(ideal("xy", "x, y"), ideal("xy", "x^2, y")) == 1
    assert quotient_length(ideal("xy", "x"), ideal("xy", "x^2")) == math.inf


def test_quotient_length_requires_containment():
    with pytest.raises(LengthError):
        quotient_length(ideal("xy", "x"), ideal("xy", "y"))


def _wang_pieces():
    from cmlocal.local import random_superficial_sequence, ratliff_rush

    pres = load("wang")
    ring = LocalRing.from_presentation(pres)
    seq = random_superficial_sequence(ring, seed=7)
    return pres, ring, seq, ratliff_rush(ring, seq)


def _monos(n, deg):
    return [{m: 1} for m in monomials_of_degree(n, deg)]


def test_wang_lengths_through_ideal_calculus():
    pres, ring, seq, data = _wang_pieces()
    n = pres.nvars
    m2, m3 = _monos(n, 2), _monos(n, 3)
    alg = ring.algebra(3)
    extra = [alg.poly(v) for v in data.vectors(2)]
    assert quotient_length(IdealHandle.of(pres, m2 + extra), IdealHandle.of(pres, m2)) == 1
    forms = [{tuple(int(j == i) for j in range(n)): c for i, c in enumerate(f) if c} for f in seq.forms]
    Jm2 = [{tuple(a + b for a, b in zip(t, mm)): c for t, c in f.items()}
           for f in forms for g in m2 for mm in g]
    assert quotient_length(IdealHandle.of(pres, m3), IdealHandle.of(pres, Jm2)) == 2


def test_artinian_basis_examples():
    A = artinian_basis(ideal("xy", "x^2, x*y + y^2, y^3"))
    assert sorted(A.monomials) == sorted([(0, 0), (1, 0), (0, 1), (0, 2)])
    assert artinian_basis(ideal("xy", "x, y")).monomials == [(0, 0)]
    assert sorted(artinian_basis(ideal("xy", "x^2, y^2")).monomials) == [(0, 0), (0, 1), (1, 0), (1, 1)]
    with pytest.raises(ValueError):
        artinian_basis(ideal("xy", "x^2"))


def test_artinian_tables_match_normal_form():
    A = artinian_basis(ideal("xy", "x^2, x*y + y^2, y^3"))
    for j, table in enumerate(A.tables):
        for i, m in enumerate(A.monomials):
            shifted = tuple(e + (k == j) for k, e in enumerate(m))
            nf = A.normal_form({shifted: 1})
            assert {A.monomials[k]: c for k, c in table[i].items()} == nf


def test_brute_force_examples():
    assert brute_force_length(ideal("xy", "x^2, x*y, y^2").raw_gens, 2, 32003, 5) == 3
    assert brute_force_length(load("wang").gens, 5, 32003, 2) == 15
    assert brute_force_length([], 1, 32003, 3) == 4


@pytest.mark.parametrize("name", CORPUS_NAMES)
def test_corpus_bases_pass_buchberger_criterion(name):
    pres = load(name)
    I = IdealHandle.of(pres)
    if I.raw_gens:
        assert verify_groebner(I.basis(DEGREVLEX), DEGREVLEX, pres.char)


@pytest.mark.parametrize("name", CORPUS_NAMES)
def test_truncated_bases_match_brute_force(name):
    pres = load(name)
    for n in range(5):
        assert hilbert_samuel(pres, n) == brute_force_length(pres.gens, pres.nvars, pres.char, n)


term = st.tuples(st.tuples(st.integers(0, 3), st.integers(0, 3), st.integers(0, 2)), st.integers(1, 40))
generator = st.lists(term, min_size=1, max_size=3).map(
    lambda ts: {m: c for m, c in ts if 1 <= sum(m) <= 4})
small_ideals = st.lists(generator, min_size=1, max_size=3).map(lambda gs: [g for g in gs if g])


@settings(max_examples=80, deadline=None)
@given(small_ideals)
def test_oracle_equivalence_random(gens):
    pres = RingPresentation("xyz", gens)
    ring = LocalRing.from_presentation(pres)
    for n in range(5):
        bf = brute_force_length(pres.gens, 3, pres.char, n)
        assert hilbert_samuel(pres, n) == bf
        assert ring.samuel(n) == bf


@settings(max_examples=40, deadline=None)
@given(small_ideals)
def test_random_groebner_bases_verified(gens):
    I = IdealHandle(PolyRing("xyz"), gens)
    assert verify_groebner(I.basis(DEGREVLEX), DEGREVLEX, 32003)
