"""Simple undirected graphs on dense vertex indices, plus structural operations.

Adjacency is stored as one integer bitmask per vertex, which keeps neighbour
tests, degree counts and subset operations cheap for the small graphs this
package deals with (tens of vertices at most).
"""
from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Iterable, Iterator, Mapping, NamedTuple, Sequence


class GraphError(ValueError):
    pass


def bits(mask: int) -> Iterator[int]:
    """Yield the indices of set bits in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def popcount(mask: int) -> int:
    return mask.bit_count()


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.adj) != self.n:
            raise GraphError(f"adjacency has {len(self.adj)} rows for n={self.n}")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise GraphError(f"vertex {v} has a neighbour out of range")
            if row >> v & 1:
                raise GraphError(f"self-loop at vertex {v}")
            for u in bits(row):
                if not self.adj[u] >> v & 1:
                    raise GraphError(f"asymmetric adjacency between {v} and {u}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        rows = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    @classmethod
    def _trusted(cls, n: int, adj: tuple[int, ...]) -> Graph:
        # skips validation; only for callers that build adjacency symmetrically
        g = object.__new__(cls)
        object.__setattr__(g, "n", n)
        object.__setattr__(g, "adj", adj)
        return g

    @cached_property
    def m(self) -> int:
        return sum(popcount(row) for row in self.adj) // 2

    def degree(self, v: int) -> int:
        return popcount(self.adj[v])

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        return tuple(popcount(row) for row in self.adj)

    def neighbors(self, v: int) -> list[int]:
        return list(bits(self.adj[v]))

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        """All edges as (u, v) with u < v, sorted lexicographically."""
        out = []
        for u, row in enumerate(self.adj):
            for v in bits(row >> (u + 1)):
                out.append((u, u + 1 + v))
        return out

    def min_degree(self) -> int:
        return min(self.degrees) if self.n else 0

    def is_connected(self) -> bool:
        if self.n == 0:
            return True
        return component_mask(self, 0) == (1 << self.n) - 1

    def remove_edge(self, u: int, v: int) -> Graph:
        if not self.has_edge(u, v):
            raise GraphError(f"({u}, {v}) is not an edge")
        rows = list(self.adj)
        rows[u] &= ~(1 << v)
        rows[v] &= ~(1 << u)
        return Graph._trusted(self.n, tuple(rows))

    def add_edge(self, u: int, v: int) -> Graph:
        if u == v:
            raise GraphError(f"self-loop at vertex {u}")
        rows = list(self.adj)
        rows[u] |= 1 << v
        rows[v] |= 1 << u
        return Graph._trusted(self.n, tuple(rows))

    def remove_vertices(self, vs: Iterable[int]) -> Graph:
        drop = set(vs)
        return induced_subgraph(self, [v for v in range(self.n) if v not in drop]).graph

    def relabel(self, perm: Sequence[int]) -> Graph:
        """Return the graph with vertex v renamed perm[v]."""
        return Graph.from_edges(self.n, ((perm[u], perm[v]) for u, v in self.edges()))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


def component_mask(g: Graph, start: int, within: int | None = None) -> int:
    within = (1 << g.n) - 1 if within is None else within
    seen = 1 << start
    frontier = seen
    while frontier:
        nxt = 0
        for v in bits(frontier):
            nxt |= g.adj[v]
        nxt &= within & ~seen
        seen |= nxt
        frontier = nxt
    return seen


def components(g: Graph, within: int | None = None) -> list[int]:
    """Connected components (as bitmasks) of the subgraph induced by `within`."""
    left = (1 << g.n) - 1 if within is None else within
    out = []
    while left:
        v = (left & -left).bit_length() - 1
        comp = component_mask(g, v, left)
        out.append(comp)
        left &= ~comp
    return out


# --- structural operations -------------------------------------------------


class Relabeled(NamedTuple):
    graph: Graph
    mapping: dict[int, int]  # old vertex -> new vertex


class SplitResult(NamedTuple):
    graph: Graph
    z1: int
    z2: int


def induced_subgraph(g: Graph, r: Iterable[int]) -> Relabeled:
    keep = sorted(set(r))
    for v in keep:
        if not 0 <= v < g.n:
            raise GraphError(f"vertex {v} out of range for n={g.n}")
    mapping = {v: i for i, v in enumerate(keep)}
    rows = []
    for v in keep:
        row = 0
        for u in bits(g.adj[v]):
            j = mapping.get(u)
            if j is not None:
                row |= 1 << j
        rows.append(row)
    return Relabeled(Graph._trusted(len(keep), tuple(rows)), mapping)


def identify_vertices(g: Graph, s: Iterable[int]) -> Relabeled:
    """Merge an independent set into a single vertex, collapsing parallel edges.

    The merged vertex takes the position of min(s); survivors keep their
    relative order.
    """
    group = sorted(set(s))
    if not group:
        raise GraphError("cannot identify an empty set")
    smask = 0
    for v in group:
        if not 0 <= v < g.n:
            raise GraphError(f"vertex {v} out of range for n={g.n}")
        smask |= 1 << v
    for v in group:
        if g.adj[v] & smask:
            raise GraphError(f"set is not independent (vertex {v} has a neighbour in it)")
    rep = group[0]
    mapping: dict[int, int] = {}
    nxt = 0
    for v in range(g.n):
        if smask >> v & 1 and v != rep:
            continue
        mapping[v] = nxt
        nxt += 1
    for v in group:
        mapping[v] = mapping[rep]
    edges = {(min(mapping[u], mapping[v]), max(mapping[u], mapping[v])) for u, v in g.edges()}
    return Relabeled(Graph.from_edges(nxt, edges), mapping)


def split_vertex(g: Graph, z: int, part: tuple[Iterable[int], Iterable[int]]) -> SplitResult:
    """Split z into z1 (keeps z's label, adjacent to part[0]) and z2 (new last vertex)."""
    if not 0 <= z < g.n:
        raise GraphError(f"vertex {z} out of range for n={g.n}")
    a, b = set(part[0]), set(part[1])
    if not a or not b:
        raise GraphError("both parts of a split must be nonempty")
    if a & b or a | b != set(g.neighbors(z)):
        raise GraphError(f"parts must partition N({z}) = {g.neighbors(z)}")
    z2 = g.n
    edges = [e for e in g.edges() if z not in e]
    edges += [(z, u) for u in a] + [(z2, u) for u in b]
    return SplitResult(Graph.from_edges(g.n + 1, edges), z, z2)


def bipartitions(items: Sequence[int], ordered: bool = False) -> Iterator[tuple[tuple[int, ...], tuple[int, ...]]]:
    """Ways to split `items` into two nonempty parts.

    With ordered=False each unordered split is produced once (the first item
    always lands in the first part).
    """
    items = list(items)
    d = len(items)
    for mask in range(1, (1 << d) - 1):
        if not ordered and not mask & 1:
            continue
        first = tuple(items[i] for i in range(d) if mask >> i & 1)
        second = tuple(items[i] for i in range(d) if not mask >> i & 1)
        yield first, second


def girth(g: Graph) -> float:
    """Length of a shortest cycle, math.inf for forests."""
    best = math.inf
    for root in range(g.n):
        dist = {root: 0}
        parent = {root: -1}
        queue = deque([root])
        while queue:
            u = queue.popleft()
            if 2 * dist[u] >= best:
                break
            for w in bits(g.adj[u]):
                if w not in dist:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif parent[u] != w:
                    best = min(best, dist[u] + dist[w] + 1)
    return best


def has_triangle(g: Graph) -> bool:
    return any(g.adj[u] & g.adj[v] for u, v in g.edges())


def triangles(g: Graph) -> list[tuple[int, int, int]]:
    out = []
    for u, v in g.edges():
        for w in bits(g.adj[u] & g.adj[v] & ~((1 << (v + 1)) - 1)):
            out.append((u, v, w))
    return out


def contains_k4_minus_e(g: Graph) -> bool:
    """True if some 4 vertices carry at least 5 edges."""
    for c, d in g.edges():
        if popcount(g.adj[c] & g.adj[d]) >= 2:
            return True
    return False


class Diamond(NamedTuple):
    vertices: tuple[int, int, int, int]
    missing: tuple[int, int]  # the non-edge of the K4-e
    hubs: tuple[int, int]  # the two vertices of degree 3 inside the K4-e


def iter_diamond_embeddings(g: Graph) -> Iterator[Diamond]:
    """Every (hubs, missing pair) choice realising a diamond; a vertex set may repeat."""
    deg = g.degrees
    for c, d in g.edges():
        if deg[c] != 3 or deg[d] != 3:
            continue
        common = sorted(bits(g.adj[c] & g.adj[d]))
        for a, b in combinations(common, 2):
            yield Diamond(tuple(sorted((a, b, c, d))), (a, b), (c, d))


def find_diamonds(g: Graph) -> list[Diamond]:
    seen: set[tuple[int, ...]] = set()
    out = []
    for dm in iter_diamond_embeddings(g):
        if dm.vertices not in seen:
            seen.add(dm.vertices)
            out.append(dm)
    return out


def mycielskian(g: Graph) -> Graph:
    if g.n < 1:
        raise GraphError("mycielskian needs at least one vertex")
    n = g.n
    edges = list(g.edges())
    for u, v in g.edges():
        edges += [(n + u, v), (n + v, u)]
    edges += [(n + v, 2 * n) for v in range(n)]
    return Graph.from_edges(2 * n + 1, edges)


# --- basic families and named graphs ----------------------------------------


def complete(n: int) -> Graph:
    return Graph.from_edges(n, combinations(range(n), 2))


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError("a cycle needs at least 3 vertices")
    return Graph.from_edges(n, ((i, (i + 1) % n) for i in range(n)))


def path(n: int) -> Graph:
    return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)))


def empty(n: int) -> Graph:
    return Graph._trusted(n, (0,) * n)


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph.from_edges(a + b, ((i, a + j) for i in range(a) for j in range(b)))


def disjoint_union(*graphs: Graph) -> Graph:
    edges = []
    off = 0
    for h in graphs:
        edges += [(u + off, v + off) for u, v in h.edges()]
        off += h.n
    return Graph.from_edges(off, edges)


def wheel(rim: int) -> Graph:
    """Cycle on 0..rim-1 plus a hub (vertex `rim`) adjacent to all of it."""
    return Graph.from_edges(rim + 1, cycle(rim).edges() + [(i, rim) for i in range(rim)])


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, outer + spokes + inner)


def _parse_edges(spec: str) -> list[tuple[int, int]]:
    return [tuple(int(x) for x in tok.split("-")) for tok in spec.split()]  # type: ignore[misc]


# H7: two K4's composed; x=0 has degree 3, y=1 is the unique degree-4 vertex.
_H7 = "0-2 0-3 1-2 1-3 2-3 4-5 4-6 5-6 0-4 1-5 1-6"
# Vertex order follows a left-to-right reading of the drawings.
_T8 = "0-1 1-2 2-0 0-3 3-6 6-7 7-3 2-4 4-6 6-5 5-1 4-7 7-5"
_T11 = ("0-8 8-10 10-9 9-1 8-9 10-1 1-2 2-0 0-3 3-6 6-7 7-3 "
        "2-4 4-6 6-5 5-1 4-7 7-5")
_H7_GADGET = "0-1 1-3 3-6 6-2 2-0 0-4 4-8 8-5 5-1 4-2 3-5 6-7 7-8"


@dataclass(frozen=True)
class NamedGraph:
    name: str
    graph: Graph
    roles: Mapping[str, int] = field(default_factory=dict)


NAMED = ("K4", "W5", "H7", "T8", "T11", "H7_GADGET", "PETERSEN")


def construct_named(name: str) -> NamedGraph:
    """Build one of the fixed named graphs, or CYCLE(k) / Ck."""
    key = name.strip().upper()
    if key == "K4":
        return NamedGraph("K4", complete(4))
    if key == "W5":
        return NamedGraph("W5", wheel(5), {"hub": 5})
    if key == "H7":
        return NamedGraph("H7", Graph.from_edges(7, _parse_edges(_H7)), {"x": 0, "y": 1})
    if key == "T8":
        return NamedGraph("T8", Graph.from_edges(8, _parse_edges(_T8)))
    if key == "T11":
        return NamedGraph("T11", Graph.from_edges(11, _parse_edges(_T11)))
    if key == "H7_GADGET":
        g = Graph.from_edges(9, _parse_edges(_H7_GADGET))
        return NamedGraph("H7_GADGET", g, {"end": 7, "a": 6, "b": 8})
    if key == "PETERSEN":
        return NamedGraph("PETERSEN", petersen())
    k = None
    if key.startswith("CYCLE(") and key.endswith(")"):
        k = key[6:-1]
    elif key.startswith("C") and key[1:].isdigit():
        k = key[1:]
    if k is not None and k.isdigit():
        return NamedGraph(f"CYCLE({int(k)})", cycle(int(k)))
    raise GraphError(f"unknown graph name {name!r}")
