"""Isomorphism-free generation of small graphs by vertex augmentation.

A graph on k vertices is produced from its parent on k-1 vertices by adding a
vertex whose (degree, sorted neighbour degrees) key is minimal in the child.
Every graph has such a vertex, so deleting it gives a parent that is in the
previous level whenever the level is closed under vertex deletion (true for
all graphs, bounded girth and 3-colourable graphs). Children passing this
check are deduplicated by canonical form.
"""
from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import combinations
from typing import Iterator

from .canon import canonical_form
from .coloring import is_3_colorable, is_4_critical
from .graph import Graph, GraphError, bits, girth

MAX_N = 10


@dataclass(frozen=True)
class GraphFilter:
    connected: bool = False
    min_degree: int = 0
    min_girth: int = 3  # values <= 3 impose nothing
    max_girth: float = math.inf
    critical: bool = False  # 4-critical

    @property
    def effective_min_degree(self) -> int:
        # 4-critical graphs have minimum degree at least 3
        return max(self.min_degree, 3) if self.critical else self.min_degree


def _neighbourhoods(parent: Graph, dmin: int) -> Iterator[int]:
    """Masks N such that the new vertex would have minimum degree in the child."""
    deg = parent.degrees
    k = parent.n
    for d in range(dmin, k + 1):
        if any(x < d - 1 for x in deg):
            break
        req = 0
        free = []
        for u in range(k):
            if deg[u] == d - 1:
                req |= 1 << u
            else:
                free.append(u)
        extra = d - req.bit_count()
        if extra < 0:
            continue
        for pick in combinations(free, extra):
            mask = req
            for u in pick:
                mask |= 1 << u
            yield mask


def _attach(parent: Graph, mask: int) -> Graph:
    k = parent.n
    rows = list(parent.adj)
    for u in bits(mask):
        rows[u] |= 1 << k
    rows.append(mask)
    return Graph._trusted(k + 1, tuple(rows))


def _key(g: Graph, v: int) -> tuple[int, tuple[int, ...]]:
    deg = g.degrees
    return deg[v], tuple(sorted(deg[u] for u in bits(g.adj[v])))


def _new_vertex_is_minimal(g: Graph) -> bool:
    v = g.n - 1
    deg = g.degrees
    d = deg[v]
    mine = _key(g, v)
    for u in range(v):
        if deg[u] == d and _key(g, u) < mine:
            return False
    return True


def _girth_ok(parent: Graph, mask: int, min_girth: int) -> bool:
    # parent already satisfies the bound; only cycles through the new vertex matter
    if min_girth <= 3 or mask.bit_count() < 2:
        return True
    limit = min_girth - 2  # two neighbours of the new vertex must be at distance >= this
    for a in bits(mask):
        seen = 1 << a
        frontier = seen
        for _ in range(limit - 1):
            nxt = 0
            for v in bits(frontier):
                nxt |= parent.adj[v]
            nxt &= ~seen
            seen |= nxt
            frontier = nxt
        if (seen & mask) & ~(1 << a):
            return False
    return True


def _expand(parent: Graph, filters: GraphFilter, last: bool) -> tuple[list[tuple[bytes, Graph]], list[tuple[bytes, Graph]]]:
    """Children of one parent: (keepers for the next level, outputs at this order)."""
    keep: dict[bytes, Graph] = {}
    out: dict[bytes, Graph] = {}
    dmin = filters.effective_min_degree if last else 0
    for mask in _neighbourhoods(parent, dmin):
        if not _girth_ok(parent, mask, filters.min_girth):
            continue
        child = _attach(parent, mask)
        if not _new_vertex_is_minimal(child):
            continue
        if filters.critical:
            if is_3_colorable(child):
                if not last:
                    keep.setdefault(canonical_form(child), child)
                continue
            if child.min_degree() < 3:
                continue
            key = canonical_form(child)
            if key not in out and is_4_critical(child):
                out[key] = child
            continue
        key = canonical_form(child)
        if not last:
            keep.setdefault(key, child)
        if key not in out and _final_ok(child, filters):
            out[key] = child
    return list(keep.items()), list(out.items())


def _final_ok(g: Graph, filters: GraphFilter) -> bool:
    if g.min_degree() < filters.min_degree:
        return False
    if filters.connected and not g.is_connected():
        return False
    if filters.max_girth < math.inf and girth(g) > filters.max_girth:
        return False
    return True


def _expand_job(args: tuple[Graph, GraphFilter, bool]):
    return _expand(*args)


def enumerate_graphs(max_n: int, filters: GraphFilter = GraphFilter(), min_n: int = 1, jobs: int = 1) -> Iterator[Graph]:
    """Every graph up to isomorphism with min_n <= n <= max_n passing `filters`.

    Output is ordered by (n, canonical form) and does not depend on `jobs`.
    """
    if max_n > MAX_N:
        raise GraphError(f"enumeration is capped at n <= {MAX_N}")
    if max_n < 1:
        return
    k1 = Graph._trusted(1, (0,))
    level = [k1]
    if min_n <= 1 and _final_ok(k1, filters) and not filters.critical:
        yield k1
    pool = ProcessPoolExecutor(max_workers=jobs) if jobs > 1 else None
    try:
        for k in range(2, max_n + 1):
            last = k == max_n
            tasks = [(p, filters, last) for p in level]
            results = pool.map(_expand_job, tasks, chunksize=16) if pool else map(_expand_job, tasks)
            keep: dict[bytes, Graph] = {}
            out: dict[bytes, Graph] = {}
            for kept, outs in results:
                for key, g in kept:
                    keep.setdefault(key, g)
                for key, g in outs:
                    out.setdefault(key, g)
            if k >= min_n:
                for key in sorted(out):
                    yield out[key]
            level = [keep[key] for key in sorted(keep)]
    finally:
        if pool:
            pool.shutdown()


def count_graphs_bruteforce(n: int) -> int:
    """Isomorphism classes on n vertices from all 2^C(n,2) edge sets (n <= 6)."""
    if n > 6:
        raise GraphError("brute-force counting is limited to n <= 6")
    pairs = list(combinations(range(n), 2))
    seen = set()
    for sel in range(1 << len(pairs)):
        g = Graph.from_edges(n, (pairs[i] for i in bits(sel)))
        seen.add(canonical_form(g))
    return len(seen)
