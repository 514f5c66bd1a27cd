"""Short-cycle packings T(G), the potential 5n - 3m - T, and exceptional graphs."""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, permutations
from typing import Iterable, NamedTuple

from .canon import DEFAULT_CAP, is_isomorphic
from .graph import Graph, GraphError, bits, construct_named, induced_subgraph

EXCEPTIONAL_NAMES = ("K4", "H7", "W5", "T8", "T11")
ORE_T3 = "ORE_T3"
OTHER = "OTHER"


class Cycle(NamedTuple):
    vertices: tuple[int, ...]  # sorted
    order: tuple[int, ...]  # one witness cyclic order, starting at the least vertex


@dataclass(frozen=True)
class CyclePacking:
    cycles: tuple[tuple[int, ...], ...]
    size: int


@dataclass(frozen=True)
class PotentialReport:
    n: int
    m: int
    t: int
    p: int
    classification: str | None = None


def short_cycles(g: Graph) -> list[Cycle]:
    """All triangles and 4-cycles, each once, sorted by vertex tuple then order."""
    out = []
    adj = g.adj
    for a in range(g.n):
        higher = adj[a] >> (a + 1) << (a + 1)
        for b in bits(higher):
            for c in bits(adj[b] & higher & ~((1 << (b + 1)) - 1)):
                if adj[a] >> c & 1:
                    out.append(Cycle((a, b, c), (a, b, c)))
        # 4-cycle a-b-c-d with a least, b < d the neighbours of a on the cycle
        above = ~((1 << (a + 1)) - 1)
        for b, d in combinations(bits(higher), 2):
            for c in bits(adj[b] & adj[d] & above):
                out.append(Cycle(tuple(sorted((a, b, c, d))), (a, b, c, d)))
    out.sort()
    return out


def _masks(g: Graph) -> list[tuple[tuple[int, ...], int]]:
    seen = {}
    for cyc in short_cycles(g):
        if cyc.vertices not in seen:
            mask = 0
            for v in cyc.vertices:
                mask |= 1 << v
            seen[cyc.vertices] = mask
    return sorted(seen.items())


@lru_cache(maxsize=1 << 15)
def t_number(g: Graph) -> CyclePacking:
    """Maximum packing of vertex-disjoint cycles of length at most four.

    Depth-first search over the sorted cycle list visits packings in
    lexicographic order and only replaces the incumbent on strict
    improvement, so ties resolve to the lexicographically least packing.
    """
    items = _masks(g)
    masks = [mk for _, mk in items]
    count = len(masks)

    greedy = 0
    used = 0
    for mk in masks:
        if not mk & used:
            used |= mk
            greedy += 1

    best: list[int] = []
    chosen: list[int] = []

    def bound(start: int, used: int) -> int:
        cover = 0
        k = 0
        for j in range(start, count):
            if not masks[j] & used:
                cover |= masks[j]
                k += 1
        return min(k, cover.bit_count() // 3)

    def rec(start: int, used: int) -> None:
        nonlocal best
        if len(chosen) > len(best):
            best = list(chosen)
        threshold = max(len(best) + 1, greedy)
        if len(chosen) + bound(start, used) < threshold:
            return
        for j in range(start, count):
            mk = masks[j]
            if not mk & used:
                chosen.append(j)
                rec(j + 1, used | mk)
                chosen.pop()

    rec(0, 0)
    return CyclePacking(tuple(items[j][0] for j in best), len(best))


def t_value(g: Graph) -> int:
    return t_number(g).size


def _carries_short_cycle(g: Graph, vs: tuple[int, ...]) -> bool:
    first, rest = vs[0], vs[1:]
    for perm in permutations(rest):
        ring = (first,) + perm
        if all(g.has_edge(ring[i], ring[(i + 1) % len(ring)]) for i in range(len(ring))):
            return True
    return False


def t_bruteforce(g: Graph) -> int:
    """Exhaustive maximum over disjoint 3- and 4-sets carrying a cycle.

    Cycles are found by trying every vertex subset and cyclic order, so this
    shares nothing with short_cycles(); the search tries, for the least
    undecided vertex, leaving it out or covering it with each such set.
    """
    sets = []
    for size in (3, 4):
        for vs in combinations(range(g.n), size):
            if _carries_short_cycle(g, vs):
                sets.append(sum(1 << v for v in vs))

    def rec(v: int, used: int) -> int:
        while v < g.n and used >> v & 1:
            v += 1
        if v == g.n:
            return 0
        best = rec(v + 1, used | 1 << v)
        for mk in sets:
            if mk >> v & 1 and not mk & used:
                best = max(best, 1 + rec(v + 1, used | mk))
        return best

    return rec(0, 0)


def potential_value(g: Graph) -> int:
    return 5 * g.n - 3 * g.m - t_value(g)


def potential(g: Graph, classify: bool = True, cap: int = DEFAULT_CAP) -> PotentialReport:
    t = t_value(g)
    cls = classify_exceptional(g, cap) if classify else None
    return PotentialReport(g.n, g.m, t, 5 * g.n - 3 * g.m - t, cls)


def set_potential(g: Graph, r: Iterable[int], classify: bool = False, cap: int = DEFAULT_CAP) -> PotentialReport:
    """Potential of the subgraph induced by r."""
    return potential(induced_subgraph(g, r).graph, classify, cap)


@lru_cache(maxsize=None)
def _named(name: str) -> Graph:
    return construct_named(name).graph


def classify_exceptional(g: Graph, cap: int = DEFAULT_CAP) -> str:
    """K4 / H7 / W5 / T8 / T11 by isomorphism, ORE_T3 for 4-Ore graphs with T = 3, else OTHER."""
    for name in EXCEPTIONAL_NAMES:
        h = _named(name)
        if h.n == g.n and h.m == g.m and is_isomorphic(g, h, cap=max(cap, h.n)):
            return name
    # 4-Ore graphs satisfy 5n - 3m = 2, which rules most graphs out without a catalog
    if 5 * g.n - 3 * g.m != 2 or g.n % 3 != 1 or t_value(g) != 3:
        return OTHER
    if g.n > cap:
        raise GraphError(f"cap exceeded: cannot decide 4-Ore membership for n={g.n} > {cap}")
    from .ore import is_4_ore

    return ORE_T3 if is_4_ore(g, cap) else OTHER
