from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class Config:
    cap: int = 16  # 4-Ore catalogue / classification cap
    canon_cap: int = 62  # canonical forms of corpus entries (graph6 limit)
    seed: int = 0
    jobs: int = 1
    samples: int = 200  # (G, R, phi) draws in the extension suite
    ore_max_n: int = 13  # catalogue size the composition suite works over
    enum_max_n: int = 9
