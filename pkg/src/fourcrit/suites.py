"""Verification suites over a corpus.

Every suite first audits the stored metadata of the entries it selects (an
entry whose claims do not recompute is a failure and takes no further part),
then runs its own checks. Work items are processed in canonical-form order and
results are merged in that order, so reports do not depend on `jobs`.
"""
from __future__ import annotations

import json
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterable, NamedTuple

from .canon import is_isomorphic
from .coloring import is_3_colorable
from .config import Config
from .corpus import Corpus, CorpusEntry, audit
from .discharging import AMOUNTS, RulesInapplicable, charge_identity_check, discharge
from .extension import accounting, check_extension_bounds, critical_extension, random_instance
from .graph import (
    GraphError,
    bipartitions,
    construct_named,
    contains_k4_minus_e,
    has_triangle,
    iter_diamond_embeddings,
    split_vertex,
    triangles,
)
from .graph6 import decode, encode
from .ore import iter_compositions
from .potential import ORE_T3, OTHER, classify_exceptional, t_value


class Failure(NamedTuple):
    graph6: str
    claim: str
    expected: str
    got: str


@dataclass
class SuiteReport:
    suite: str
    header: str
    checks: int
    failures: list[Failure]
    notes: list[str] = field(default_factory=list)
    wall_time: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_json(self) -> str:
        # wall time is left out so report files are reproducible
        doc = {
            "suite": self.suite,
            "header": self.header,
            "checks": self.checks,
            "passed": self.passed,
            "notes": self.notes,
            "failures": [f._asdict() for f in self.failures],
        }
        return json.dumps(doc, indent=1, sort_keys=True) + "\n"

    def to_text(self) -> str:
        lines = [f"suite {self.suite}: {self.header}"]
        lines += [f"  note: {n}" for n in self.notes]
        for f in self.failures:
            lines.append(f"  FAIL {f.graph6} {f.claim}: expected {f.expected}, got {f.got}")
        status = "PASS" if self.passed else "FAIL"
        lines.append(f"{status} {self.checks} checks, {len(self.failures)} failures, {self.wall_time:.2f}s")
        return "\n".join(lines)


Outcome = tuple[int, list[Failure]]

_H7 = construct_named("H7").graph
_K4 = construct_named("K4").graph
_EXPECTED_P = {"K4": 1, "H7": 0, "W5": -1, "T8": -1, "T11": -1, ORE_T3: -1}


def _girth_at_least_5(e: CorpusEntry) -> bool:
    return e.meta["girth"] == "inf" or int(e.meta["girth"]) >= 5


# ---- per-entry checks (module level so they pickle) -------------------------


def _ky(e: CorpusEntry, cfg: Config) -> Outcome:
    g = e.graph
    ok = 3 * g.m >= 5 * g.n - 2
    return 1, [] if ok else [Failure(e.graph6, "3m>=5n-2", f">={5 * g.n - 2}", str(3 * g.m))]


def _girth5(e: CorpusEntry, cfg: Config) -> Outcome:
    g = e.graph
    ok = 3 * g.m >= 5 * g.n + 2
    return 1, [] if ok else [Failure(e.graph6, "3m>=5n+2", f">={5 * g.n + 2}", str(3 * g.m))]


def _classification(e: CorpusEntry, cfg: Config) -> Outcome:
    g = e.graph
    t = t_value(g)
    p = 5 * g.n - 3 * g.m - t
    try:
        cls = classify_exceptional(g, cfg.cap)
    except GraphError as exc:
        if p <= -2:
            return 1, []
        return 1, [Failure(e.graph6, "classification", "decidable", str(exc))]
    if cls == OTHER:
        ok = p <= -2
        want = "<=-2"
    else:
        ok = p == _EXPECTED_P[cls]
        want = str(_EXPECTED_P[cls])
    return 1, [] if ok else [Failure(e.graph6, f"p[{cls}]", want, str(p))]


def _ore_identity(e: CorpusEntry, cfg: Config) -> Outcome:
    g = e.graph
    t = t_value(g)
    out = []
    if 5 * g.n - 3 * g.m != 2:
        out.append(Failure(e.graph6, "5n-3m=2", "2", str(5 * g.n - 3 * g.m)))
    if 5 * g.n - 3 * g.m - t != 2 - t:
        out.append(Failure(e.graph6, "p=2-T", str(2 - t), str(5 * g.n - 3 * g.m - t)))
    return 2, out


def _vertex_triangles(e: CorpusEntry, cfg: Config) -> Outcome:
    g = e.graph
    out = [Failure(e.graph6, f"triangle-in-H-{v}", "triangle", "none") for v in range(g.n) if not has_triangle(g.remove_vertices([v]))]
    return g.n, out


def _triangle_triangles(e: CorpusEntry, cfg: Config) -> Outcome:
    g = e.graph
    if is_isomorphic(g, _K4):
        return 0, []
    tris = triangles(g)
    out = [Failure(e.graph6, f"triangle-in-H-{tri}", "triangle", "none") for tri in tris if not has_triangle(g.remove_vertices(tri))]
    return len(tris), out


def _low_t(e: CorpusEntry, cfg: Config) -> Outcome:
    g = e.graph
    t = t_value(g)
    k4, h7 = is_isomorphic(g, _K4), is_isomorphic(g, _H7)
    out = []
    if (t == 1) != k4:
        out.append(Failure(e.graph6, "T=1<=>K4", f"K4={k4}", f"T={t}"))
    if (t == 2) != h7:
        out.append(Failure(e.graph6, "T=2<=>H7", f"H7={h7}", f"T={t}"))
    return 2, out


def _edge_deletions(e: CorpusEntry, cfg: Config) -> Outcome:
    g = e.graph
    t = t_value(g)
    out = []
    for u, v in g.edges():
        h = g.remove_edge(u, v)
        th = t_value(h)
        if th != t and not contains_k4_minus_e(h):
            out.append(Failure(e.graph6, f"delete-{u}-{v}", f"T={t} or K4-e", f"T={th}, no K4-e"))
    return g.m, out


def _splits(e: CorpusEntry, cfg: Config) -> Outcome:
    g = e.graph
    checks = 0
    out = []
    for v in range(g.n):
        for part in bipartitions(g.neighbors(v)):
            checks += 1
            s = split_vertex(g, v, part)
            ends = {s.z1, s.z2}
            if any(not (set(d.hubs) & ends) for d in iter_diamond_embeddings(s.graph)):
                continue
            th = t_value(s.graph)
            if th < 3:
                out.append(Failure(e.graph6, f"split-{v}-{part[0]}|{part[1]}", "diamond or T>=3", f"T={th}, no diamond"))
    return checks, out


def _composition_pair(item: tuple[CorpusEntry, CorpusEntry, Config]) -> Outcome:
    e1, e2, cfg = item
    g1, g2 = e1.graph, e2.graph
    t1, t2 = t_value(g1), t_value(g2)
    special = any(is_isomorphic(h, _K4) or is_isomorphic(h, _H7) for h in (g1, g2))
    need = t1 + t2 - (1 if special else 2)
    checks = 0
    out = []
    for rec in iter_compositions(g1, g2, cfg.cap):
        checks += 1
        t = t_value(rec.result)
        if t < need:
            claim = f"compose[{e1.graph6}-{rec.replaced_edge}, {e2.graph6}/{rec.split_vertex}:{rec.partition}]"
            out.append(Failure(encode(rec.result), claim, f">={need}", str(t)))
    return checks, out


def _extension_sample(item: tuple[int, str, tuple[int, ...], tuple[tuple[int, int], ...]]) -> Outcome:
    idx, g6, r, phi_items = item
    g = decode(g6)
    phi = dict(phi_items)
    tag = f"[sample {idx} R={list(r)}]"
    rec = critical_extension(g, r, phi)
    out = []
    if is_3_colorable(rec.identified.graph):
        out.append(Failure(g6, "identified-not-3-colourable" + tag, "chi>=4", "3-colourable"))
    if not 1 <= rec.core_size <= 3:
        out.append(Failure(g6, "core-nonempty" + tag, "1..3", str(rec.core_size)))
        return 1, out
    b = check_extension_bounds(rec)
    if not b.fine_ok:
        out.append(Failure(g6, "fine-bound" + tag, f"<={b.fine_bound}", str(b.p_r_prime)))
    if not b.coarse_ok:
        out.append(Failure(g6, "coarse-bound" + tag, f"<={b.coarse_bound}", str(b.p_r_prime)))
    acc = accounting(rec)
    if acc["r_prime"] != acc["r_plus_w_minus_x"]:
        out.append(Failure(g6, "vertex-accounting" + tag, str(acc["r_plus_w_minus_x"]), str(acc["r_prime"])))
    if acc["edges_r_prime"] < acc["edges_lower"]:
        out.append(Failure(g6, "edge-accounting" + tag, f">={acc['edges_lower']}", str(acc["edges_r_prime"])))
    if acc["t_drop"] > acc["core"]:
        out.append(Failure(g6, "t-drop<=core" + tag, f"<={acc['core']}", str(acc["t_drop"])))
    return 1, out


def _charge_identity(e: CorpusEntry, cfg: Config) -> Outcome:
    c = charge_identity_check(e.graph)
    if c.ok:
        return 1, []
    return 1, [Failure(e.graph6, "sum ch=5n-3m=p+T", f"{c.five_n_minus_3m}={c.p + c.t}", str(c.total_charge))]


def _conservation(e: CorpusEntry, cfg: Config) -> Outcome:
    g = e.graph
    try:
        led = discharge(g)
    except RulesInapplicable:
        return 0, []
    out = []
    if not led.conserved:
        out.append(Failure(e.graph6, "conservation", str(sum(led.initial)), str(sum(led.final))))
    bad = sorted({a for _, _, a in led.transfers} - AMOUNTS)
    if bad:
        out.append(Failure(e.graph6, "rule-amounts", "table amounts", ",".join(map(str, bad))))
    checks = 2
    if g.min_degree() >= 3:
        checks += 1
        sums = led.component_sums()
        if any(s != 0 for s in sums):
            out.append(Failure(e.graph6, "component-sums", "0", ",".join(map(str, sums))))
    return checks, out


# ---- suite table ---------------------------------------------------------------


@dataclass(frozen=True)
class _Suite:
    header: str
    select: Callable[[CorpusEntry], bool]
    check: Callable[[CorpusEntry, Config], Outcome] | None = None


def _critical(e: CorpusEntry) -> bool:
    return e.meta["critical"] == "1"


def _ore(e: CorpusEntry) -> bool:
    return e.meta["ore"] == "1"


SUITES: dict[str, _Suite] = {
    "ky-bound": _Suite("3m >= 5n-2 on every 4-critical entry", _critical, _ky),
    "girth5-bound": _Suite(
        "3m >= 5n+2 on 4-critical entries of girth >= 5; runs on ingested and constructed graphs only, "
        "since no 4-critical girth-5 graph is small enough for exhaustive enumeration",
        lambda e: _critical(e) and _girth_at_least_5(e),
        _girth5,
    ),
    "theorem-main": _Suite("potential classification of every 4-critical entry", _critical, _classification),
    "ore-identity": _Suite("5n-3m = 2 and p = 2-T on every 4-Ore entry", _ore, _ore_identity),
    "prop-2.1": _Suite("H-v has a triangle for every 4-Ore H and vertex v", _ore, _vertex_triangles),
    "prop-2.2": _Suite("H-V(T) has a triangle for every 4-Ore H other than K4 and triangle T", _ore, _triangle_triangles),
    "prop-2.3": _Suite("T under Ore-composition of 4-Ore entries, over every composition within the corpus orders", _ore),
    "prop-2.4": _Suite("within 4-Ore entries, T=1 exactly for K4 and T=2 exactly for H7", _ore, _low_t),
    "prop-2.5": _Suite(
        "edge deletion keeps T or leaves a K4-e, on T8, T11 and 4-Ore entries with T=3",
        lambda e: e.meta["class"] in ("T8", "T11") or (_ore(e) and e.meta["T"] == "3"),
        _edge_deletions,
    ),
    "prop-2.6": _Suite(
        "every split of a 4-Ore entry with T=3 has an avoiding diamond or T>=3",
        lambda e: _ore(e) and e.meta["T"] == "3",
        _splits,
    ),
    "extension-lemma": _Suite("critical extension bounds on seeded (G, R, phi) samples from 4-critical entries", _critical),
    "charge-identity": _Suite("sum of initial charges = 5n-3m = p+T on every entry", lambda e: True, _charge_identity),
    "discharge-conservation": _Suite("discharging conserves charge on every entry where the rules apply", lambda e: True, _conservation),
}


def _audit_task(item: tuple[CorpusEntry, Config]) -> list[Failure]:
    e, cfg = item
    return [Failure(e.graph6, f"metadata:{k}", claimed, actual) for k, claimed, actual in audit(e, cfg)]


def _check_task(item: tuple[str, CorpusEntry, Config]) -> Outcome:
    name, e, cfg = item
    return SUITES[name].check(e, cfg)


def _extension_items(entries: list[CorpusEntry], cfg: Config) -> list:
    pool = [e for e in entries if e.graph.n > 4]
    if not pool:
        return []
    rng = random.Random(cfg.seed)
    items = []
    for idx in range(cfg.samples):
        e = rng.choice(pool)
        r, phi = random_instance(e.graph, rng)
        items.append((idx, e.graph6, tuple(sorted(r)), tuple(sorted(phi.items()))))
    return items


def run_suite(name: str, corpus: Corpus | Iterable[CorpusEntry], cfg: Config = Config()) -> SuiteReport:
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
    suite = SUITES[name]
    start = time.perf_counter()
    entries = sorted((e for e in corpus if suite.select(e)), key=lambda e: e.canon)
    pool = ProcessPoolExecutor(max_workers=cfg.jobs) if cfg.jobs > 1 else None

    def pmap(fn, items):
        return list(pool.map(fn, items, chunksize=1)) if pool else [fn(x) for x in items]

    try:
        failures: list[Failure] = []
        checks = len(entries)
        audited = pmap(_audit_task, [(e, cfg) for e in entries])
        good = []
        for e, fails in zip(entries, audited):
            failures += fails
            if not fails:
                good.append(e)
        notes = [f"{len(entries)} entries selected, {len(entries) - len(good)} failed the metadata audit"]
        if name == "prop-2.3":
            top = max((e.graph.n for e in good), default=0)
            items = [(a, b, cfg) for a in good for b in good if a.graph.n + b.graph.n - 1 <= top]
            outcomes = pmap(_composition_pair, items)
            notes.append(f"{len(items)} ordered pairs with combined order <= {top}")
        elif name == "extension-lemma":
            items = _extension_items(good, cfg)
            outcomes = pmap(_extension_sample, items)
            notes.append(f"{len(items)} samples, seed {cfg.seed}")
        else:
            outcomes = pmap(_check_task, [(name, e, cfg) for e in good])
            if name == "discharge-conservation":
                skipped = sum(1 for c, _ in outcomes if c == 0)
                notes.append(f"{skipped} entries outside the rules' scope (cyclic or long D3 component)")
        for c, fails in outcomes:
            checks += c
            failures += fails
    finally:
        if pool:
            pool.shutdown()
    return SuiteReport(name, suite.header, checks, failures, notes, time.perf_counter() - start)
