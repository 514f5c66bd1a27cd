"""Acceptance criteria, one test each. Every test prints a single PASS/FAIL line."""
from __future__ import annotations

import time
from dataclasses import replace
from fractions import Fraction

import pytest

from fourcrit.canon import is_isomorphic
from fourcrit.coloring import is_4_critical
from fourcrit.config import Config
from fourcrit.corpus import Corpus, make_entry
from fourcrit.discharging import discharge
from fourcrit.enumeration import GraphFilter, enumerate_graphs
from fourcrit.extension import check_extension_bounds, critical_extension
from fourcrit.graph import complete, complete_bipartite, construct_named, cycle, girth, has_triangle, mycielskian, wheel
from fourcrit.graph6 import decode, encode
from fourcrit.ore import enumerate_4_ore
from fourcrit.potential import potential
from fourcrit.suites import SUITES, run_suite


@pytest.fixture
def report(capsys):
    def emit(criterion: int, ok: bool, detail: str) -> None:
        with capsys.disabled():
            print(f"\n[criterion {criterion:2d}] {'PASS' if ok else 'FAIL'} {detail}")
        assert ok, detail

    return emit


def test_criterion_01_named_graphs(report):
    want = {"K4": 1, "H7": 0, "W5": -1, "T8": -1, "T11": -1}
    got = {name: potential(construct_named(name).graph).p for name in want}
    crit = all(is_4_critical(construct_named(name).graph) for name in want)
    report(1, got == want and crit, f"potentials {got}, all 4-critical={crit} (exact)")


def test_criterion_02_ore_catalog(report):
    start = time.perf_counter()
    cat = enumerate_4_ore(13)
    secs = time.perf_counter() - start
    members = cat.members()
    identity = all(5 * e.graph.n - 3 * e.graph.m == 2 for e in members)
    t1 = [e for e in members if e.t == 1]
    t2 = [e for e in members if e.t == 2]
    low = len(t1) == 1 and is_isomorphic(t1[0].graph, complete(4)) and len(t2) == 1 and is_isomorphic(t2[0].graph, construct_named("H7").graph)
    t3 = all(e.p == -1 for e in members if e.t == 3)
    ok = identity and low and t3 and secs < 120
    report(2, ok, f"{len(members)} members, 5n-3m=2 {identity}, T=1/T=2 only K4/H7 {low}, T=3 => p=-1 {t3}, {secs:.1f}s (< 120s)")


def test_criterion_03_catalogue_suites(report, corpus):
    start = time.perf_counter()
    reps = [run_suite(name, corpus) for name in ("prop-2.1", "prop-2.2", "prop-2.3", "prop-2.5", "prop-2.6")]
    secs = time.perf_counter() - start
    ok = all(r.passed and r.checks > 0 for r in reps) and secs < 600
    detail = ", ".join(f"{r.suite}: {r.checks} checks/{len(r.failures)} failures" for r in reps)
    report(3, ok, f"{detail}; {secs:.1f}s (< 600s)")


def test_criterion_04_exhaustive_bound_and_classification(report):
    start = time.perf_counter()
    crit = list(enumerate_graphs(9, GraphFilter(critical=True)))
    entries = Corpus([make_entry(g, "enumerated") for g in crit])
    ky = run_suite("ky-bound", entries)
    main = run_suite("theorem-main", entries)
    secs = time.perf_counter() - start
    at4 = [g for g in crit if g.n == 4]
    at5 = [g for g in crit if g.n == 5]
    single = len(at4) == 1 and at4[0] == complete(4) and not at5
    ok = ky.passed and main.passed and single and secs < 600
    report(4, ok, f"{len(crit)} 4-critical graphs n<=9, ky-bound {ky.passed}, classification {main.passed}, n=4 only K4 and none at n=5 {single}, {secs:.1f}s")


def test_criterion_05_extension_suite(report, corpus):
    rep = run_suite("extension-lemma", corpus, Config(samples=200, seed=0))
    rec = critical_extension(wheel(5), [0, 1, 2, 3], {0: 1, 1: 2, 2: 1, 3: 2})
    b = check_extension_bounds(rec)
    w5 = rec.core_size == 2 and b.fine_slack == 7
    ok = rep.passed and "200 samples" in rep.notes[-1] and w5
    report(5, ok, f"200 seeded samples, {len(rep.failures)} failures; W5 core size {rec.core_size}, slack {b.fine_slack} (exact)")


def test_criterion_06_discharging(report, corpus):
    ident = run_suite("charge-identity", corpus)
    cons = run_suite("discharge-conservation", corpus)
    led = discharge(complete_bipartite(3, 4))
    k34 = [led.final[v] for v in range(3)] == [Fraction(-1, 3)] * 3
    ok = ident.passed and cons.passed and k34
    report(6, ok, f"charge identity on {len(corpus)} entries {ident.passed}, conservation {cons.passed} ({cons.notes[-1]}), K3,4 degree-4 charge -1/3 {k34}")


def test_criterion_07_girth_five(report, corpus):
    rep = run_suite("girth5-bound", corpus)
    g21 = [e.graph for e in corpus if e.graph.n == 21]
    big = len(g21) == 1 and 3 * g21[0].m == 126 and 126 >= 5 * 21 + 2
    m5 = mycielskian(cycle(5))
    myc = m5.m == 20 == (5 * 11 + 5) // 3 and not has_triangle(m5) and girth(m5) == 4 and is_4_critical(m5)
    ok = rep.passed and rep.checks >= 2 and big and myc
    report(7, ok, f"girth5-bound {rep.checks} checks {rep.passed}, 21-vertex graph 126 >= 107 {big}, Mycielski C5 20 edges/triangle-free/4-critical {myc}")


def test_criterion_08_codec(report, corpus):
    round_trip = all(encode(decode(e.graph6)) == e.graph6 and decode(encode(e.graph)) == e.graph for e in corpus)
    fixed = encode(complete(4)) == "C~" and decode("C~") == complete(4) and encode(cycle(5)) == "Dhc" and decode("Dhc") == cycle(5)
    report(8, round_trip and fixed, f"round trip on {len(corpus)}/{len(corpus)} entries {round_trip}, K4<->C~ and C5<->Dhc {fixed}")


def test_criterion_09_determinism(report, corpus, tmp_path):
    same = []
    for name in sorted(SUITES):
        a = run_suite(name, corpus, Config(jobs=1, samples=60)).to_json()
        b = run_suite(name, corpus, Config(jobs=8, samples=60)).to_json()
        (tmp_path / f"{name}.1.json").write_text(a)
        (tmp_path / f"{name}.8.json").write_text(b)
        same.append((tmp_path / f"{name}.1.json").read_bytes() == (tmp_path / f"{name}.8.json").read_bytes())
    report(9, all(same), f"{sum(same)}/{len(same)} suites byte-identical with --jobs 1 and --jobs 8")


def test_criterion_10_negative_controls(report):
    t8 = construct_named("T8").graph
    mutant = t8.remove_edge(*t8.edges()[0])
    entry = make_entry(mutant, "ingested")
    entry = replace(entry, meta={**entry.meta, "critical": "1"})
    rep = run_suite("ky-bound", Corpus([entry]))
    flagged = not is_4_critical(mutant) and not rep.passed
    rec = critical_extension(wheel(5), [0, 1, 2, 3], {0: 1, 1: 2, 2: 1, 3: 2})
    tampered = check_extension_bounds(replace(rec, r_prime=frozenset(rec.r)))
    ok = flagged and not tampered.passed
    report(10, ok, f"mutated T8 flagged {flagged}, tampered record rejected {not tampered.passed}")
