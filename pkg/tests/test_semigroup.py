import pytest
from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

from cmlocal.local import LocalRing
from cmlocal.semigroup import (SemigroupData, apery_set, elements_below, frobenius_number,
                               minimal_generators, pseudo_frobenius, random_semigroup,
                               semigroup_ring, semigroup_type)


def test_small_invariants():
    assert minimal_generators([3, 4, 5, 6, 8]) == [3, 4, 5]
    assert frobenius_number([3, 4, 5]) == 2
    assert sorted(apery_set([3, 4, 5])) == [0, 4, 5]
    assert pseudo_frobenius([3, 4, 5]) == [1, 2]
    assert frobenius_number([4, 5, 6]) == 7
    assert semigroup_type([4, 5, 6]) == 1
    assert elements_below([3, 4, 5], 7) == [True, False, False, True, True, True, True]


def test_non_coprime_rejected():
    with pytest.raises(ValueError):
        semigroup_ring([4, 6])
    with pytest.raises(ValueError):
        SemigroupData([4, 6])


def test_ring_name_and_meta():
    pres = semigroup_ring([5, 3, 4])
    assert pres.name == "k[[t^3,t^4,t^5]]"
    assert pres.meta["semigroup"] == [3, 4, 5]


def test_random_semigroup_shape():
    for seed in range(30):
        g = random_semigroup(seed)
        assert 3 <= len(g) <= 5 and max(g) <= 30 and minimal_generators(g) == g


@pytest.mark.parametrize("gens", [[3, 4, 5], [4, 5, 6], [5, 6, 7, 8, 9], [3, 5, 7], [4, 6, 9]])
def test_oracle_matches_algebra(gens):
    ring = LocalRing.from_presentation(semigroup_ring(gens))
    sd = SemigroupData(gens)
    assert ring.d == 1
    assert [ring.samuel(n) for n in range(8)] == [sd.samuel(n) for n in range(8)]
    assert ring.e[0] == min(gens)


@settings(max_examples=15, deadline=None, suppress_health_check=[HealthCheck.too_slow])
@given(st.integers(0, 10 ** 6))
def test_oracle_matches_algebra_random(seed):
    gens = random_semigroup(seed, 3, 4, 16)
    ring = LocalRing.from_presentation(semigroup_ring(gens))
    sd = SemigroupData(gens)
    assert [ring.samuel(n) for n in range(6)] == [sd.samuel(n) for n in range(6)]
    rho = [sd.rho(i) for i in range(30)]
    assert sum(rho) == ring.e[1]
    assert sum(i * v for i, v in enumerate(rho)) == ring.e[2]
