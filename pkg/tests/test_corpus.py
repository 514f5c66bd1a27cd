from __future__ import annotations

from dataclasses import replace

import pytest

from fourcrit.corpus import Corpus, CorpusEntry, CorpusError, audit, build_corpus, make_entry
from fourcrit.graph import construct_named
from fourcrit.graph6 import Graph6Error, decode, encode

from conftest import DATA


def test_named_sources():
    c = build_corpus(named=True)
    classes = {e.meta["class"] for e in c}
    assert {"K4", "H7", "W5", "T8", "T11"} <= classes
    gadget = construct_named("H7_GADGET").graph
    assert encode(gadget) in {e.graph6 for e in c}
    assert all(e.provenance == "constructed" for e in c)


def test_ore_source_satisfies_identity():
    c = build_corpus(ore_max_n=13)
    assert len(c) == 54
    for e in c:
        assert e.meta["ore"] == "1"
        assert int(e.meta["p"]) == 2 - int(e.meta["T"])


def test_girth5_graph_metadata():
    c = build_corpus(g6_files=[DATA / "girth5_21.g6"])
    (e,) = c.entries
    assert e.provenance == "ingested"
    assert e.meta["n"] == "21" and e.meta["m"] == "42" and e.meta["girth"] == "5"
    assert e.meta["critical"] == "1"
    assert int(e.meta["p"]) == 105 - 126 - int(e.meta["T"])
    assert e.meta["T"] == "0" and e.meta["p"] == "-21"
    assert set(e.graph.degrees) == {4}


def test_dedupe_by_canonical_form(tmp_path):
    k4 = construct_named("K4").graph
    p = tmp_path / "dupes.g6"
    p.write_text(f"{encode(k4)}\n{encode(k4.relabel([3, 2, 1, 0]))}\n")
    c = build_corpus(named=True, g6_files=[p])
    assert sum(e.meta["class"] == "K4" for e in c) == 1
    assert [e.canon for e in c] == sorted(e.canon for e in c)


def test_save_load_round_trip(tmp_path):
    c = build_corpus(named=True, ore_max_n=10)
    path = tmp_path / "c.txt"
    c.save(path)
    back = Corpus.load(path)
    assert [e.to_line() for e in back] == [e.to_line() for e in c]
    for e in back:
        assert decode(e.graph6) == e.graph
        assert encode(e.graph) == e.graph6
        assert audit(e) == []


def test_audit_flags_tampering():
    e = make_entry(construct_named("T8").graph, "constructed")
    bad = replace(e, meta={**e.meta, "p": "0"})
    assert audit(bad) == [("p", "0", "-1")]
    g = construct_named("T8").graph
    mutant = g.remove_edge(*g.edges()[0])
    claimed = make_entry(mutant, "ingested")
    claimed = replace(claimed, meta={**claimed.meta, "critical": "1"})
    assert ("critical", "1", "0") in audit(claimed)


def test_malformed_inputs_name_the_line(tmp_path):
    p = tmp_path / "bad.g6"
    p.write_text("C~\nC~x\n")
    with pytest.raises(Graph6Error, match="bad.g6:2"):
        build_corpus(g6_files=[p])
    q = tmp_path / "bad_corpus.txt"
    q.write_text("C~\tcanon=437e n=4\n")
    with pytest.raises(CorpusError, match=":1:"):
        Corpus.load(q)
    with pytest.raises(CorpusError, match="cannot read"):
        build_corpus(g6_files=[tmp_path / "missing.g6"])


def test_duplicate_lines_rejected_on_load(tmp_path):
    e = make_entry(construct_named("K4").graph, "constructed")
    p = tmp_path / "dup.txt"
    p.write_text(e.to_line() + "\n" + e.to_line() + "\n")
    with pytest.raises(CorpusError, match="duplicate"):
        Corpus.load(p)


def test_line_format():
    e = make_entry(construct_named("K4").graph, "constructed")
    assert e.to_line() == "C~\tcanon=437e n=4 m=6 girth=3 T=1 p=1 critical=1 ore=1 class=K4 provenance=constructed"
    assert CorpusEntry.from_line(e.to_line()) == e
