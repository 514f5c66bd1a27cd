"""Exact k-colourability, 4-criticality and critical-subgraph extraction."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, NamedTuple

from .graph import Graph, GraphError, bits, induced_subgraph


@dataclass(frozen=True)
class Coloring:
    assignment: tuple[int, ...]  # colour of vertex v, in 1..k
    k: int

    def is_proper(self, g: Graph) -> bool:
        if len(self.assignment) != g.n:
            return False
        if any(not 1 <= c <= self.k for c in self.assignment):
            return False
        return all(self.assignment[u] != self.assignment[v] for u, v in g.edges())

    def classes(self) -> list[list[int]]:
        out: list[list[int]] = [[] for _ in range(self.k)]
        for v, c in enumerate(self.assignment):
            out[c - 1].append(v)
        return out


def _order(g: Graph) -> list[int]:
    return sorted(range(g.n), key=lambda v: (-g.degrees[v], v))


def _solve(g: Graph, k: int, order: list[int]) -> list[int] | None:
    n = g.n
    adj = g.adj
    full = (1 << k) - 1
    color = [0] * n
    dom = [full] * n

    def assign(v: int, c: int, trail: list[tuple[int, int]]) -> bool:
        # set colour c on v and propagate forced colours; record domain changes
        queue = [(v, c)]
        while queue:
            v, c = queue.pop()
            if color[v]:
                if color[v] != c:
                    return False
                continue
            color[v] = c
            trail.append((v, -1))
            bit = 1 << (c - 1)
            for u in bits(adj[v]):
                if color[u]:
                    if color[u] == c:
                        return False
                    continue
                d = dom[u]
                if d & bit:
                    trail.append((u, d))
                    d ^= bit
                    dom[u] = d
                    if not d:
                        return False
                    if d & (d - 1) == 0:
                        queue.append((u, d.bit_length()))
        return True

    def undo(trail: list[tuple[int, int]]) -> None:
        for v, d in reversed(trail):
            if d < 0:
                color[v] = 0
            else:
                dom[v] = d

    def rec(i: int, used: int) -> bool:
        while i < n and color[order[i]]:
            i += 1
        if i == n:
            return True
        v = order[i]
        d = dom[v]
        for c in range(1, min(k, used + 1) + 1):
            if not d >> (c - 1) & 1:
                continue
            trail: list[tuple[int, int]] = []
            if assign(v, c, trail):
                top = max(used, max(color[u] for u, _ in trail if _ < 0))
                if rec(i + 1, top):
                    return True
            undo(trail)
        return False

    return color if rec(0, 0) else None


def k_colorable(g: Graph, k: int) -> Coloring | None:
    """A proper k-colouring of g, or None when none exists."""
    if k < 1:
        raise ValueError("k must be at least 1")
    if g.n == 0:
        return Coloring((), k)
    sol = _solve(g, k, _order(g))
    return None if sol is None else Coloring(tuple(sol), k)


def is_3_colorable(g: Graph) -> bool:
    return g.n == 0 or _solve(g, 3, _order(g)) is not None


def iter_colorings(g: Graph, k: int) -> Iterator[Coloring]:
    """All proper k-colourings (as labelled assignments) in lexicographic order."""
    n = g.n
    color = [0] * n

    def rec(v: int) -> Iterator[Coloring]:
        if v == n:
            yield Coloring(tuple(color), k)
            return
        taken = {color[u] for u in bits(g.adj[v]) if u < v}
        for c in range(1, k + 1):
            if c not in taken:
                color[v] = c
                yield from rec(v + 1)
        color[v] = 0

    yield from rec(0)


def chromatic_number(g: Graph, limit: int = 4) -> int | None:
    """Smallest k <= limit with a k-colouring, None if above limit."""
    if g.n == 0:
        return 0
    for k in range(1, limit + 1):
        if k_colorable(g, k) is not None:
            return k
    return None


def is_4_critical(g: Graph) -> bool:
    """Not 3-colourable, while every edge-deleted subgraph is.

    Isolated vertices are rejected too: deleting one would leave a proper
    subgraph that is still not 3-colourable.
    """
    if any(d == 0 for d in g.degrees) or is_3_colorable(g):
        return False
    return all(is_3_colorable(g.remove_edge(u, v)) for u, v in g.edges())


class CriticalSubgraph(NamedTuple):
    graph: Graph
    vertices: tuple[int, ...]  # graph vertex i is input vertex vertices[i]


def critical_subgraph(g: Graph) -> CriticalSubgraph:
    """Strip edges in lexicographic order while the graph stays non-3-colourable.

    One pass suffices: an edge kept at its turn stays essential after later
    deletions, because a subgraph of a 3-colourable graph is 3-colourable.
    """
    if is_3_colorable(g):
        raise GraphError("graph is 3-colourable; it has no 4-critical subgraph")
    h = g
    for u, v in g.edges():
        trial = h.remove_edge(u, v)
        if not is_3_colorable(trial):
            h = trial
    keep = [v for v in range(h.n) if h.adj[v]]
    sub = induced_subgraph(h, keep).graph
    return CriticalSubgraph(sub, tuple(keep))


def is_identifiable_pair(g: Graph, r: Iterable[int], u: int, v: int) -> bool:
    """True iff G[r] plus the edge uv is not 3-colourable."""
    if u == v:
        raise GraphError("an identifiable pair needs two distinct vertices")
    rset = set(r)
    if u not in rset or v not in rset:
        raise GraphError("both vertices must lie in r")
    if not rset < set(range(g.n)):
        raise GraphError("r must be a proper subset of V(g)")
    sub, mapping = induced_subgraph(g, rset)
    a, b = mapping[u], mapping[v]
    if not sub.has_edge(a, b):
        sub = sub.add_edge(a, b)
    return not is_3_colorable(sub)
