import os

import pytest

from edc.program import dsl
from edc.program import executor as X
from edc.propositions.corpus import corpus_files

CORPUS = os.path.join(os.path.dirname(__file__), "..", "corpus")
FILES = sorted(os.listdir(CORPUS))


def load(name):
    with open(os.path.join(CORPUS, name), encoding="utf-8") as fh:
        return fh.read()


def test_corpus_size():
    assert len([f for f in FILES if f.startswith("P")]) >= 78


def test_shipped_corpus_matches_generator():
    assert dict((f, load(f)) for f in FILES) == corpus_files()


@pytest.mark.parametrize("name", FILES)
def test_round_trip_and_execute(name):
    ruler = name.endswith(".edc-rc")
    p = dsl.parse(load(name), ruler=ruler)
    assert dsl.parse(dsl.format(p), ruler=ruler) == p
    t = X.execute(p)
    if not ruler:
        assert t.program.is_compass()
