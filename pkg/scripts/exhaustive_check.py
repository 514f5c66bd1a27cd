"""Enumerate every 4-critical graph up to --max-n and run the bound and classification suites.

n = 10 is opt-in; it is slow at one core.
"""
from __future__ import annotations

import argparse
import time
from collections import Counter

from fourcrit.config import Config
from fourcrit.corpus import Corpus, make_entry
from fourcrit.enumeration import GraphFilter, enumerate_graphs
from fourcrit.suites import run_suite


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-n", type=int, default=Config().enum_max_n)
    ap.add_argument("--jobs", type=int, default=1)
    ap.add_argument("--save", help="write the resulting corpus here")
    args = ap.parse_args()
    cfg = Config(jobs=args.jobs)

    start = time.perf_counter()
    graphs = list(enumerate_graphs(args.max_n, GraphFilter(critical=True), jobs=args.jobs))
    print(f"enumerated {len(graphs)} 4-critical graphs in {time.perf_counter() - start:.1f}s")
    for n, k in sorted(Counter(g.n for g in graphs).items()):
        print(f"  n={n:2d}: {k}")
    corpus = Corpus([make_entry(g, "enumerated", cfg) for g in graphs])
    if args.save:
        corpus.save(args.save)
    status = 0
    for name in ("ky-bound", "theorem-main", "extension-lemma", "charge-identity"):
        rep = run_suite(name, corpus, cfg)
        print(rep.to_text())
        status |= 0 if rep.passed else 1
    pot = Counter(int(e.meta["p"]) for e in corpus)
    print("potential histogram:", dict(sorted(pot.items(), reverse=True)))
    return status


if __name__ == "__main__":
    raise SystemExit(main())
