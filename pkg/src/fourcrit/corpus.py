"""Graph corpora with recomputable metadata, stored one graph per line.

Line format::

    <graph6>\t canon=<hex> n=.. m=.. girth=.. T=.. p=.. critical=0|1 ore=0|1|? class=.. provenance=..

The first field is plain graph6, so a corpus file is also a valid graph6 list.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import cached_property
from pathlib import Path
from typing import Iterable

from . import graph6
from .canon import canonical_form
from .coloring import is_4_critical
from .config import Config
from .enumeration import GraphFilter, enumerate_graphs
from .graph import NAMED, Graph, GraphError, construct_named, girth
from .ore import enumerate_4_ore, is_4_ore
from .potential import classify_exceptional, t_value

PROVENANCES = ("constructed", "enumerated", "ingested")
FIELDS = ("n", "m", "girth", "T", "p", "critical", "ore", "class")


class CorpusError(ValueError):
    pass


def _fmt_girth(x: float) -> str:
    return "inf" if x == math.inf else str(int(x))


def compute_meta(g: Graph, cfg: Config = Config()) -> dict[str, str]:
    t = t_value(g)
    if g.n <= cfg.cap:
        ore = "1" if is_4_ore(g, cfg.cap) else "0"
    else:
        ore = "0" if g.n % 3 != 1 or 5 * g.n - 3 * g.m != 2 else "?"
    try:
        cls = classify_exceptional(g, cfg.cap)
    except GraphError:
        cls = "?"
    return {
        "n": str(g.n),
        "m": str(g.m),
        "girth": _fmt_girth(girth(g)),
        "T": str(t),
        "p": str(5 * g.n - 3 * g.m - t),
        "critical": "1" if is_4_critical(g) else "0",
        "ore": ore,
        "class": cls,
    }


@dataclass(frozen=True)
class CorpusEntry:
    graph6: str
    canon: str
    meta: dict[str, str] = field(hash=False, compare=False)
    provenance: str = "constructed"

    @cached_property
    def graph(self) -> Graph:
        return graph6.decode(self.graph6)

    def to_line(self) -> str:
        kv = [f"canon={self.canon}"] + [f"{k}={self.meta[k]}" for k in FIELDS]
        kv.append(f"provenance={self.provenance}")
        return f"{self.graph6}\t{' '.join(kv)}"

    @classmethod
    def from_line(cls, line: str) -> CorpusEntry:
        head, _, rest = line.rstrip("\n").partition("\t")
        kv = dict(tok.split("=", 1) for tok in rest.split())
        missing = [k for k in ("canon", *FIELDS) if k not in kv]
        if missing:
            raise CorpusError(f"missing fields {missing}")
        meta = {k: kv[k] for k in FIELDS}
        return cls(head.strip(), kv["canon"], meta, kv.get("provenance", "ingested"))


def make_entry(g: Graph, provenance: str, cfg: Config = Config()) -> CorpusEntry:
    return CorpusEntry(graph6.encode(g), canonical_form(g, cfg.canon_cap).hex(), compute_meta(g, cfg), provenance)


def audit(entry: CorpusEntry, cfg: Config = Config()) -> list[tuple[str, str, str]]:
    """(field, claimed, recomputed) for every metadata field that disagrees."""
    g = entry.graph
    out = []
    canon = canonical_form(g, cfg.canon_cap).hex()
    if canon != entry.canon:
        out.append(("canon", entry.canon, canon))
    actual = compute_meta(g, cfg)
    for k in FIELDS:
        if entry.meta.get(k) != actual[k]:
            out.append((k, entry.meta.get(k, ""), actual[k]))
    return out


@dataclass
class Corpus:
    entries: list[CorpusEntry]

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def save(self, path: str | Path) -> None:
        with open(path, "w") as fh:
            for e in self.entries:
                fh.write(e.to_line() + "\n")

    @classmethod
    def load(cls, path: str | Path) -> Corpus:
        entries = []
        seen = set()
        with open(path) as fh:
            for lineno, line in enumerate(fh, 1):
                if not line.strip() or line.startswith("#"):
                    continue
                try:
                    e = CorpusEntry.from_line(line)
                    e.graph  # noqa: B018 - validates the graph6 field
                except (CorpusError, graph6.Graph6Error, ValueError) as exc:
                    raise CorpusError(f"{path}:{lineno}: {exc}") from exc
                if e.canon in seen:
                    raise CorpusError(f"{path}:{lineno}: duplicate canonical form")
                seen.add(e.canon)
                entries.append(e)
        return cls(entries)

    def select(self, **claims: str) -> list[CorpusEntry]:
        """Entries whose stored metadata matches all of `claims`."""
        return [e for e in self.entries if all(e.meta.get(k) == v for k, v in claims.items())]


def build_corpus(
    *,
    g6_files: Iterable[str | Path] = (),
    named: bool = False,
    ore_max_n: int | None = None,
    critical_max_n: int | None = None,
    graphs: Iterable[Graph] = (),
    cfg: Config = Config(),
) -> Corpus:
    """Merge the requested sources, dedupe by canonical form, compute metadata.

    Earlier sources win on duplicates: named constructions, the 4-Ore
    catalogue, enumeration, explicit graphs, then files.
    """
    found: dict[str, CorpusEntry] = {}

    def add(g: Graph, provenance: str) -> None:
        key = canonical_form(g, cfg.canon_cap).hex()
        if key not in found:
            found[key] = CorpusEntry(graph6.encode(g), key, compute_meta(g, cfg), provenance)

    if named:
        for name in NAMED:
            add(construct_named(name).graph, "constructed")
    if ore_max_n is not None:
        for e in enumerate_4_ore(ore_max_n, cfg.cap).members():
            add(e.graph, "constructed")
    if critical_max_n is not None:
        for g in enumerate_graphs(critical_max_n, GraphFilter(critical=True), jobs=cfg.jobs):
            add(g, "enumerated")
    for g in graphs:
        add(g, "constructed")
    for path in g6_files:
        try:
            with open(path) as fh:
                gs = graph6.read_graphs(fh, str(path))
        except OSError as exc:
            raise CorpusError(f"cannot read {path}: {exc}") from exc
        for g in gs:
            add(g, "ingested")
    return Corpus([found[k] for k in sorted(found)])
