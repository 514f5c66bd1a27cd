from __future__ import annotations

from dataclasses import replace

import pytest

from fourcrit.config import Config
from fourcrit.corpus import Corpus, make_entry
from fourcrit.graph import construct_named
from fourcrit.suites import SUITES, run_suite


@pytest.mark.parametrize("name", sorted(SUITES))
def test_every_suite_passes_on_the_corpus(corpus, name):
    rep = run_suite(name, corpus, Config())
    assert rep.passed, rep.to_text()
    if name != "discharge-conservation":
        assert rep.checks > 0


def _mutant_t8():
    g = construct_named("T8").graph
    e = make_entry(g.remove_edge(*g.edges()[0]), "ingested")
    return replace(e, meta={**e.meta, "critical": "1"})


@pytest.mark.parametrize("name", ["ky-bound", "theorem-main", "extension-lemma"])
def test_mutated_t8_claimed_critical_is_flagged(name):
    corpus = Corpus([make_entry(construct_named("W5").graph, "constructed"), _mutant_t8()])
    rep = run_suite(name, corpus, Config(samples=10))
    assert not rep.passed
    assert any(f.claim == "metadata:critical" for f in rep.failures)


def test_unknown_suite():
    with pytest.raises(KeyError):
        run_suite("prop-9.9", Corpus([]))


def test_girth5_header_mentions_scope(corpus):
    rep = run_suite("girth5-bound", corpus)
    assert "ingested" in rep.header
    assert rep.checks >= 2  # the 21-vertex graph: audit plus the bound


@pytest.mark.parametrize("name", ["theorem-main", "prop-2.3", "extension-lemma"])
def test_reports_do_not_depend_on_jobs(corpus, name):
    a = run_suite(name, corpus, Config(jobs=1, samples=40)).to_json()
    b = run_suite(name, corpus, Config(jobs=8, samples=40)).to_json()
    assert a == b


def test_seed_changes_extension_samples(corpus):
    a = run_suite("extension-lemma", corpus, Config(seed=1, samples=20))
    b = run_suite("extension-lemma", corpus, Config(seed=1, samples=20))
    assert a.to_json() == b.to_json()
    assert "seed 1" in a.notes[-1]
