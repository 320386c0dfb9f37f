import os
import subprocess
import sys
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import cmlocal.linalg as linalg
from cmlocal._echelon_py import Echelon as PyEchelon

P = 32003
rows = st.lists(st.dictionaries(st.integers(0, 11), st.integers(1, P - 1), max_size=6), max_size=15)


@pytest.mark.skipif(linalg.CEchelon is None, reason="compiled extension not built")
@settings(max_examples=300, deadline=None)
@given(rows)
def test_backends_agree(rs):
    a = linalg.make_echelon(P, 12, backend="compiled")
    b = linalg.make_echelon(P, 12, backend="python")
    for r in rs:
        assert bool(a.add(dict(r))) == bool(b.add(dict(r)))
    assert a.rank == b.rank


def test_compiled_is_selected_when_built():
    if linalg.CEchelon is not None:
        assert linalg.BACKEND == "compiled"
        assert type(linalg.make_echelon(P, 4)) is linalg.CEchelon
    assert type(linalg.make_echelon(0, 4)) is PyEchelon


def test_pure_python_fallback_by_environment():
    env = dict(os.environ, CMLOCAL_PURE_PYTHON="1")
    out = subprocess.run([sys.executable, "-c", "import cmlocal.linalg as l; print(l.BACKEND)"],
                         env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "python"


def test_rational_rank():
    e = PyEchelon(0, 3)
    assert e.add({0: Fraction(1, 2), 1: Fraction(1)})
    assert e.add({0: Fraction(1), 2: Fraction(3)})
    assert not e.add({1: Fraction(-2), 2: Fraction(3)})
    assert e.rank == 2


@settings(max_examples=200, deadline=None)
@given(rows)
def test_rank_bounded_and_idempotent(rs):
    e = PyEchelon(P, 12)
    for r in rs:
        e.add(dict(r))
    before = e.rank
    for r in rs:
        assert not e.add(dict(r))
    assert e.rank == before <= 12
