"""Command-line interface. Exit codes: 0 pass, 1 check or suite failure, 2 usage or parse error."""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import graph6
from .coloring import is_4_critical
from .config import Config
from .corpus import Corpus, CorpusError, build_corpus
from .discharging import RulesInapplicable, discharge
from .enumeration import GraphFilter, enumerate_graphs
from .graph import NAMED, GraphError, construct_named, girth
from .ore import enumerate_4_ore, ore_compose
from .potential import potential, t_number
from .suites import SUITES, run_suite


class UsageError(Exception):
    pass


def _read(path: str) -> list:
    try:
        if path == "-":
            return graph6.read_graphs(sys.stdin, "<stdin>")
        with open(path) as fh:
            return graph6.read_graphs(fh, path)
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from exc


def _read_one(path: str):
    gs = _read(path)
    if len(gs) != 1:
        raise UsageError(f"{path}: expected exactly one graph, found {len(gs)}")
    return gs[0]


def _ints(text: str) -> list[int]:
    try:
        return [int(t) for t in text.split(",") if t.strip()]
    except ValueError as exc:
        raise UsageError(f"bad vertex list {text!r}") from exc


def _cfg(args) -> Config:
    kw = {}
    for name in ("cap", "seed", "jobs", "samples"):
        val = getattr(args, name, None)
        if val is not None:
            kw[name] = val
    return Config(**kw)


def cmd_make(args) -> int:
    print(graph6.encode(construct_named(args.name).graph))
    return 0


def cmd_compose(args) -> int:
    xy = _ints(args.replaced_edge)
    if len(xy) != 2:
        raise UsageError("--replaced-edge takes u,v")
    left, sep, right = args.part.partition("|")
    if not sep:
        raise UsageError("--part takes a,b|c")
    rec = ore_compose(_read_one(args.edge_side), (xy[0], xy[1]), _read_one(args.split_side), args.split_vertex, (_ints(left), _ints(right)))
    g = rec.result
    rep = potential(g, classify=False)
    print(f"{graph6.encode(g)}\tn={g.n} m={g.m} T={rep.t} p={rep.p} x={rec.role_map['x']} y={rec.role_map['y']}")
    return 0


def cmd_tnum(args) -> int:
    for g in _read(args.file):
        pk = t_number(g)
        cyc = " ".join("-".join(map(str, c)) for c in pk.cycles)
        print(f"{graph6.encode(g)}\tT={pk.size}\t{cyc}")
    return 0


def cmd_potential(args) -> int:
    for g in _read(args.file):
        try:
            rep = potential(g, classify=True, cap=args.cap or Config().cap)
            cls = rep.classification
        except GraphError:
            rep = potential(g, classify=False)
            cls = "?"
        print(f"{graph6.encode(g)}\tn={rep.n} m={rep.m} T={rep.t} p={rep.p} class={cls}")
    return 0


def cmd_critical_check(args) -> int:
    status = 0
    for g in _read(args.file):
        ok = is_4_critical(g)
        status |= 0 if ok else 1
        print(f"{graph6.encode(g)}\t{'4-critical' if ok else 'not 4-critical'}")
    return status


def cmd_girth(args) -> int:
    for g in _read(args.file):
        gi = girth(g)
        print(f"{graph6.encode(g)}\t{'inf' if gi == float('inf') else int(gi)}")
    return 0


def cmd_discharge(args) -> int:
    status = 0
    for g in _read(args.file):
        head = graph6.encode(g)
        try:
            led = discharge(g)
        except RulesInapplicable as exc:
            print(f"{head}\t{exc}")
            status = 1
            continue
        print(f"{head}\tinitial={sum(led.initial)} final={sum(led.final)} conserved={led.conserved} rich_edges={led.rich_edges}")
        for c, s in zip(led.d3_components, led.component_sums()):
            print(f"  D3 {list(c.vertices)} diameter={c.diameter} sum={s}")
        for v, ch in enumerate(led.final):
            print(f"  v{v} d={g.degrees[v]} ch={led.initial[v]} ch*={ch}")
        if led.overcharged():
            print(f"  positive degree>=4 vertices: {led.overcharged()}")
    return status


def cmd_enumerate_ore(args) -> int:
    cfg = _cfg(args)
    cat = enumerate_4_ore(args.max_n, cfg.cap)
    corpus = build_corpus(graphs=[e.graph for e in cat.members()], cfg=cfg)
    corpus.save(args.out)
    print(f"{len(corpus)} 4-Ore graphs with n <= {args.max_n} written to {args.out}")
    return 0


def cmd_enumerate_critical(args) -> int:
    n = 0
    with open(args.out, "w") as fh:
        for g in enumerate_graphs(args.max_n, GraphFilter(critical=True), jobs=args.jobs or 1):
            fh.write(graph6.encode(g) + "\n")
            n += 1
    print(f"{n} 4-critical graphs with n <= {args.max_n} written to {args.out}")
    return 0


def cmd_ingest(args) -> int:
    cfg = _cfg(args)
    corpus = build_corpus(
        g6_files=args.g6 or (),
        named=args.named,
        ore_max_n=args.ore_max_n,
        critical_max_n=args.critical_max_n,
        cfg=cfg,
    )
    corpus.save(args.out)
    print(f"{len(corpus)} entries written to {args.out}")
    return 0


def cmd_suite(args) -> int:
    if args.name not in SUITES:
        raise UsageError(f"unknown suite {args.name!r}; choose from {', '.join(SUITES)}")
    corpus = Corpus.load(args.corpus)
    report = run_suite(args.name, corpus, _cfg(args))
    print(report.to_text())
    if args.out:
        Path(args.out).write_text(report.to_json())
    return 0 if report.passed else 1


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="fourcrit", description="4-critical graph potential toolkit")
    sub = p.add_subparsers(dest="cmd", required=True)

    s = sub.add_parser("make", help="graph6 of a named construction")
    s.add_argument("name", help=f"one of {', '.join(NAMED)} or C<k>")
    s.set_defaults(fn=cmd_make)

    s = sub.add_parser("compose", help="Ore-composition of two graphs")
    s.add_argument("--edge-side", required=True)
    s.add_argument("--replaced-edge", required=True, help="u,v")
    s.add_argument("--split-side", required=True)
    s.add_argument("--split-vertex", required=True, type=int)
    s.add_argument("--part", required=True, help="neighbours of z1 | neighbours of z2, e.g. 1,2|3")
    s.set_defaults(fn=cmd_compose)

    for name, fn, text in (
        ("tnum", cmd_tnum, "maximum packing of disjoint short cycles"),
        ("potential", cmd_potential, "potential and classification"),
        ("critical-check", cmd_critical_check, "4-criticality test"),
        ("girth", cmd_girth, "girth"),
        ("discharge", cmd_discharge, "discharging ledger"),
    ):
        s = sub.add_parser(name, help=text)
        s.add_argument("file", help="graph6 file, one graph per line ('-' for stdin)")
        if name == "potential":
            s.add_argument("--cap", type=int)
        s.set_defaults(fn=fn)

    s = sub.add_parser("enumerate-ore", help="write the 4-Ore catalogue as a corpus")
    s.add_argument("--max-n", required=True, type=int)
    s.add_argument("--out", required=True)
    s.add_argument("--cap", type=int)
    s.set_defaults(fn=cmd_enumerate_ore)

    s = sub.add_parser("enumerate-critical", help="write every 4-critical graph up to max-n")
    s.add_argument("--max-n", required=True, type=int)
    s.add_argument("--out", required=True)
    s.add_argument("--jobs", type=int)
    s.set_defaults(fn=cmd_enumerate_critical)

    s = sub.add_parser("ingest", help="build a corpus")
    s.add_argument("--g6", action="append", help="graph6 file (repeatable)")
    s.add_argument("--named", action="store_true", help="include the named constructions")
    s.add_argument("--ore-max-n", type=int, help="include the 4-Ore catalogue up to this order")
    s.add_argument("--critical-max-n", type=int, help="include every 4-critical graph up to this order")
    s.add_argument("--out", required=True)
    s.add_argument("--cap", type=int)
    s.add_argument("--jobs", type=int)
    s.set_defaults(fn=cmd_ingest)

    s = sub.add_parser("suite", help="run a verification suite")
    s.add_argument("--name", required=True, help=", ".join(SUITES))
    s.add_argument("--corpus", required=True)
    s.add_argument("--seed", type=int)
    s.add_argument("--samples", type=int)
    s.add_argument("--cap", type=int)
    s.add_argument("--jobs", type=int)
    s.add_argument("--out", help="write a JSON report here")
    s.set_defaults(fn=cmd_suite)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else 2
    try:
        return args.fn(args)
    except (UsageError, CorpusError, graph6.Graph6Error, GraphError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
