import os

import pytest

from cmlocal.corpus import bundled_corpus
from cmlocal.report import analyze
from cmlocal.ringfile import read_ring_file
from cmlocal.verify import classify

CORPUS = bundled_corpus()
CORPUS_NAMES = sorted(f[:-5] for f in os.listdir(CORPUS) if f.endswith(".ring"))

_reports = {}


def load(name, char=None):
    return read_ring_file(os.path.join(CORPUS, name + ".ring"), char=char)


def report_for(name):
    """Analyzed report for a bundled ring, shared across the session."""
    if name not in _reports:
        rep = analyze(load(name))
        _reports[name] = (rep, classify(rep))
    return _reports[name]


@pytest.fixture
def corpus_report():
    return report_for


@pytest.fixture
def announce(capsys):
    """Print a line straight to the terminal, bypassing capture."""
    def say(line):
        with capsys.disabled():
            print("\n" + line)
    return say
