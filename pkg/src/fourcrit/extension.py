"""Colour-class identification and critical extensions of vertex sets.

Given a 4-critical G, a proper subset R (|R| >= 4) and a 3-colouring phi of
G[R], each colour class of R is contracted to one vertex x_i, the triangle
x1x2x3 is added, and a 4-critical subgraph W of the result (the extender)
pulls R out to R' = (V(W) - {x1, x2, x3}) + R.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Iterable, Mapping

from .coloring import CriticalSubgraph, critical_subgraph
from .graph import Graph, GraphError, bits, induced_subgraph
from .potential import potential_value, t_value

# size of the core -> 5|X| - 3 * C(|X|, 2)
CORE_PENALTY = {1: 5, 2: 7, 3: 6}


@dataclass(frozen=True)
class Identification:
    graph: Graph
    triangle: tuple[int, int, int]  # identified labels of x1, x2, x3
    vertex_map: Mapping[int, int]  # base vertex -> identified vertex


def _check_phi(g: Graph, r: frozenset[int], phi: Mapping[int, int]) -> None:
    if len(r) < 4:
        raise GraphError("R must have at least 4 vertices")
    if not r < frozenset(range(g.n)):
        raise GraphError("R must be a proper subset of V(G)")
    missing = [v for v in r if v not in phi]
    if missing:
        raise GraphError(f"phi is partial: no colour for {sorted(missing)}")
    for v in r:
        if phi[v] not in (1, 2, 3):
            raise GraphError(f"phi({v}) = {phi[v]} is not in {{1, 2, 3}}")
    for u in r:
        for v in bits(g.adj[u]):
            if v in r and phi[u] == phi[v]:
                raise GraphError(f"phi is improper on edge ({u}, {v})")


def phi_identification(g: Graph, r: Iterable[int], phi: Mapping[int, int]) -> Identification:
    """Contract each colour class of R to x_i and add the triangle x1x2x3.

    Vertices outside R keep their relative order as 0..k-1; x1, x2, x3 are
    k, k+1, k+2 and exist even when their colour class is empty.
    """
    rset = frozenset(r)
    _check_phi(g, rset, phi)
    outside = [v for v in range(g.n) if v not in rset]
    k = len(outside)
    vmap = {v: i for i, v in enumerate(outside)}
    for v in rset:
        vmap[v] = k + phi[v] - 1
    edges = {(k, k + 1), (k, k + 2), (k + 1, k + 2)}
    for u, v in g.edges():
        a, b = vmap[u], vmap[v]
        if a != b:
            edges.add((min(a, b), max(a, b)))
    return Identification(Graph.from_edges(k + 3, edges), (k, k + 1, k + 2), vmap)


@dataclass(frozen=True)
class ExtensionRecord:
    base: Graph
    r: frozenset[int]
    phi: Mapping[int, int]
    identified: Identification
    extender: CriticalSubgraph  # W, labelled by identified-graph vertices
    core: frozenset[int]  # identified labels of W's triangle vertices
    r_prime: frozenset[int]  # base labels
    complete: bool
    spanning: bool

    @property
    def total(self) -> bool:
        return self.complete and self.spanning

    @property
    def core_size(self) -> int:
        return len(self.core)


def critical_extension(g: Graph, r: Iterable[int], phi: Mapping[int, int]) -> ExtensionRecord:
    ident = phi_identification(g, r, phi)
    rset = frozenset(r)
    w = critical_subgraph(ident.graph)
    tri = set(ident.triangle)
    w_verts = set(w.vertices)
    core = frozenset(w_verts & tri)
    back = {iv: bv for bv, iv in ident.vertex_map.items() if bv not in rset}
    outer = sorted(back[v] for v in w_verts - tri)  # V(W) - V(T), in base labels
    r_prime = frozenset(outer) | rset

    pos = {v: i for i, v in enumerate(w.vertices)}

    def in_w(a: int, b: int) -> bool:
        return w.graph.has_edge(pos[a], pos[b])

    complete = True
    for bv in outer:
        iv = ident.vertex_map[bv]
        to_r = sum(1 for u in bits(g.adj[bv]) if u in rset)
        to_core = sum(1 for x in core if in_w(iv, x))
        if to_r > to_core:
            complete = False
            break
    if complete:
        for i, a in enumerate(outer):
            for b in outer[i + 1:]:
                if g.has_edge(a, b) and not in_w(ident.vertex_map[a], ident.vertex_map[b]):
                    complete = False
                    break
            if not complete:
                break

    return ExtensionRecord(
        base=g,
        r=rset,
        phi=dict(phi),
        identified=ident,
        extender=w,
        core=core,
        r_prime=r_prime,
        complete=complete,
        spanning=r_prime == frozenset(range(g.n)),
    )


@dataclass(frozen=True)
class ExtensionBounds:
    core_size: int
    p_r: int
    p_w: int
    p_r_prime: int
    penalty: int  # 5 / 7 / 6 by core size
    t_w: int
    t_w_minus_core: int
    fine_bound: int
    coarse_bound: int

    @property
    def fine_ok(self) -> bool:
        return self.p_r_prime <= self.fine_bound

    @property
    def coarse_ok(self) -> bool:
        return self.p_r_prime <= self.coarse_bound

    @property
    def fine_slack(self) -> int:
        return self.fine_bound - self.p_r_prime

    @property
    def coarse_slack(self) -> int:
        return self.coarse_bound - self.p_r_prime

    @property
    def passed(self) -> bool:
        return self.fine_ok and self.coarse_ok


def _w_minus_core(rec: ExtensionRecord) -> Graph:
    keep = [i for i, v in enumerate(rec.extender.vertices) if v not in rec.core]
    return induced_subgraph(rec.extender.graph, keep).graph


def check_extension_bounds(rec: ExtensionRecord) -> ExtensionBounds:
    """Evaluate p(R') <= p(R) + p(W) - f(|X|) + T(W) - T(W - X) and p(R') <= p(R) + p(W) - 3."""
    g = rec.base
    p_r = potential_value(induced_subgraph(g, rec.r).graph)
    p_rp = potential_value(induced_subgraph(g, rec.r_prime).graph)
    wg = rec.extender.graph
    p_w = potential_value(wg)
    t_w = t_value(wg)
    t_wx = t_value(_w_minus_core(rec))
    size = len(rec.core)
    if size not in CORE_PENALTY:
        raise GraphError(f"core size {size} outside 1..3")
    f = CORE_PENALTY[size]
    return ExtensionBounds(
        core_size=size,
        p_r=p_r,
        p_w=p_w,
        p_r_prime=p_rp,
        penalty=f,
        t_w=t_w,
        t_w_minus_core=t_wx,
        fine_bound=p_r + p_w - f + t_w - t_wx,
        coarse_bound=p_r + p_w - 3,
    )


def accounting(rec: ExtensionRecord) -> dict[str, int]:
    """Vertex and edge counts behind the extension bound, for audit."""
    g = rec.base
    x = len(rec.core)
    return {
        "r_prime": len(rec.r_prime),
        "r_plus_w_minus_x": len(rec.r) + rec.extender.graph.n - x,
        "edges_r_prime": induced_subgraph(g, rec.r_prime).graph.m,
        "edges_lower": induced_subgraph(g, rec.r).graph.m + rec.extender.graph.m - comb(x, 2),
        "t_drop": t_value(rec.extender.graph) - t_value(_w_minus_core(rec)),
        "core": x,
    }


def random_coloring(g: Graph, k: int, rng) -> dict[int, int] | None:
    """A proper k-colouring (colours 1..k) found by DFS with shuffled vertex and colour orders."""
    order = list(range(g.n))
    rng.shuffle(order)
    prefs = [rng.sample(range(1, k + 1), k) for _ in order]
    col = [0] * g.n

    def rec(i: int) -> bool:
        if i == len(order):
            return True
        v = order[i]
        taken = {col[u] for u in bits(g.adj[v])}
        for c in prefs[i]:
            if c not in taken:
                col[v] = c
                if rec(i + 1):
                    return True
        col[v] = 0
        return False

    return {v: col[v] for v in range(g.n)} if rec(0) else None


def random_instance(g: Graph, rng, min_size: int = 4) -> tuple[frozenset[int], dict[int, int]]:
    """A connected proper subset R with min_size <= |R| < n and a random 3-colouring of G[R].

    G is assumed connected with a 3-colourable G[R] for every proper R, as
    holds for 4-critical graphs.
    """
    if g.n <= min_size:
        raise GraphError(f"need more than {min_size} vertices")
    size = rng.randint(min_size, g.n - 1)
    r = {rng.randrange(g.n)}
    while len(r) < size:
        frontier = sorted({u for v in r for u in bits(g.adj[v])} - r)
        if not frontier:
            raise GraphError("graph is disconnected")
        r.add(rng.choice(frontier))
    sub = induced_subgraph(g, sorted(r))
    phi = random_coloring(sub.graph, 3, rng)
    if phi is None:
        raise GraphError("G[R] is not 3-colourable")
    back = sorted(r)
    return frozenset(r), {back[i]: c for i, c in phi.items()}
