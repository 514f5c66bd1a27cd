"""Build the 4-Ore catalogue, tabulate T by order, and run the catalogue suites on it."""
from __future__ import annotations

import argparse
import time
from collections import Counter

from fourcrit.config import Config
from fourcrit.corpus import build_corpus
from fourcrit.ore import enumerate_4_ore
from fourcrit.suites import run_suite

SUITES = ("ore-identity", "prop-2.1", "prop-2.2", "prop-2.3", "prop-2.4", "prop-2.5", "prop-2.6")


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-n", type=int, default=13)
    ap.add_argument("--cap", type=int, default=16)
    ap.add_argument("--jobs", type=int, default=1)
    args = ap.parse_args()
    cfg = Config(cap=args.cap, jobs=args.jobs)

    start = time.perf_counter()
    cat = enumerate_4_ore(args.max_n, args.cap)
    print(f"{len(cat)} 4-Ore graphs with n <= {args.max_n} in {time.perf_counter() - start:.1f}s")
    table = Counter((e.graph.n, e.t) for e in cat.members())
    for (n, t), k in sorted(table.items()):
        print(f"  n={n:2d} T={t}: {k}")
    corpus = build_corpus(named=True, ore_max_n=args.max_n, cfg=cfg)
    status = 0
    for name in SUITES:
        rep = run_suite(name, corpus, cfg)
        print(rep.to_text())
        status |= 0 if rep.passed else 1
    return status


if __name__ == "__main__":
    raise SystemExit(main())
