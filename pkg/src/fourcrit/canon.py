"""Canonical labelling for small graphs.

Colour refinement to an equitable ordered partition, then individualisation
of vertices in the first non-singleton cell, keeping the lexicographically
largest adjacency certificate over all leaves. Vertices that are twins
(same neighbourhood apart from each other) generate identical subtrees, so
only one representative per twin class is branched on.
"""
from __future__ import annotations

from functools import lru_cache
from itertools import permutations
from typing import Sequence

from .graph import Graph, GraphError, bits

DEFAULT_CAP = 16


def _refine(adj: tuple[int, ...], cells: list[list[int]]) -> list[list[int]]:
    while True:
        masks = []
        for c in cells:
            mk = 0
            for v in c:
                mk |= 1 << v
            masks.append(mk)
        out: list[list[int]] = []
        changed = False
        for c in cells:
            if len(c) == 1:
                out.append(c)
                continue
            groups: dict[tuple[int, ...], list[int]] = {}
            for v in c:
                row = adj[v]
                key = tuple((row & mk).bit_count() for mk in masks)
                groups.setdefault(key, []).append(v)
            if len(groups) == 1:
                out.append(c)
                continue
            changed = True
            for key in sorted(groups):
                out.append(groups[key])
        cells = out
        if not changed:
            return cells


def _certificate(adj: tuple[int, ...], order: list[int]) -> tuple[int, ...]:
    pos = [0] * len(order)
    for i, v in enumerate(order):
        pos[v] = i
    rows = []
    for v in order:
        row = 0
        for u in bits(adj[v]):
            row |= 1 << pos[u]
        rows.append(row)
    return tuple(rows)


def _search(adj: tuple[int, ...], cells: list[list[int]]) -> tuple[tuple[int, ...], list[int]]:
    best: tuple[int, ...] | None = None
    best_order: list[int] = []
    stack = [cells]
    while stack:
        part = _refine(adj, stack.pop())
        target = next((i for i, c in enumerate(part) if len(c) > 1), None)
        if target is None:
            order = [c[0] for c in part]
            cert = _certificate(adj, order)
            if best is None or cert > best:
                best, best_order = cert, order
            continue
        cell = part[target]
        reps: list[int] = []
        for v in cell:
            if not any(adj[v] & ~(1 << r) == adj[r] & ~(1 << v) for r in reps):
                reps.append(v)
        for v in reversed(reps):
            rest = [u for u in cell if u != v]
            stack.append(part[:target] + [[v], rest] + part[target + 1:])
    assert best is not None
    return best, best_order


def _initial_cells(g: Graph, colors: Sequence[int] | None) -> list[list[int]]:
    groups: dict[tuple[int, int], list[int]] = {}
    for v in range(g.n):
        key = (colors[v] if colors is not None else 0, g.degrees[v])
        groups.setdefault(key, []).append(v)
    return [groups[k] for k in sorted(groups)]


def canonical_labeling(g: Graph, colors: Sequence[int] | None = None) -> list[int]:
    """Vertex order (canonical position -> original vertex)."""
    if g.n == 0:
        return []
    return _search(g.adj, _initial_cells(g, colors))[1]


def _encode(n: int, rows: Sequence[int], colors: Sequence[int] | None) -> bytes:
    # graph6 body of the canonically ordered graph, so the form is also a valid graph
    out = bytearray([63 + n]) if n < 63 else bytearray(b"~") + n.to_bytes(3, "big")
    acc = 0
    nbits = 0
    for j in range(1, n):
        for i in range(j):
            acc = acc << 1 | (rows[i] >> j & 1)
            nbits += 1
            if nbits == 6:
                out.append(63 + acc)
                acc = nbits = 0
    if nbits:
        out.append(63 + (acc << (6 - nbits)))
    if colors is not None:
        out += b"|" + ",".join(str(c) for c in colors).encode()
    return bytes(out)


@lru_cache(maxsize=1 << 16)
def _canonical(g: Graph, colors: tuple[int, ...] | None) -> bytes:
    if g.n == 0:
        return _encode(0, (), colors)
    cert, order = _search(g.adj, _initial_cells(g, colors))
    ordered_colors = None if colors is None else [colors[v] for v in order]
    return _encode(g.n, cert, ordered_colors)


def canonical_form(g: Graph, cap: int = DEFAULT_CAP, colors: Sequence[int] | None = None) -> bytes:
    """Byte string equal for two graphs iff they are isomorphic.

    With `colors`, isomorphisms must also preserve the vertex colouring.
    """
    if g.n > cap:
        raise GraphError(f"graph has {g.n} vertices, above the canonical-form cap {cap}")
    return _canonical(g, None if colors is None else tuple(colors))


def is_isomorphic(g: Graph, h: Graph, cap: int = DEFAULT_CAP) -> bool:
    if g.n != h.n or g.m != h.m or sorted(g.degrees) != sorted(h.degrees):
        for x in (g, h):
            if x.n > cap:
                raise GraphError(f"graph has {x.n} vertices, above the canonical-form cap {cap}")
        return False
    return canonical_form(g, cap) == canonical_form(h, cap)


def canonical_graph(g: Graph, cap: int = DEFAULT_CAP) -> Graph:
    """The canonically relabelled copy of g."""
    if g.n > cap:
        raise GraphError(f"graph has {g.n} vertices, above the canonical-form cap {cap}")
    order = canonical_labeling(g)
    perm = [0] * g.n
    for i, v in enumerate(order):
        perm[v] = i
    return g.relabel(perm)


def vertex_orbits(g: Graph, cap: int = DEFAULT_CAP) -> list[list[int]]:
    """Automorphism orbits on vertices, each sorted, ordered by least member."""
    groups: dict[bytes, list[int]] = {}
    for v in range(g.n):
        colors = [0] * g.n
        colors[v] = 1
        groups.setdefault(canonical_form(g, cap, colors), []).append(v)
    return sorted(groups.values())


def edge_orbits(g: Graph, cap: int = DEFAULT_CAP) -> list[list[tuple[int, int]]]:
    groups: dict[bytes, list[tuple[int, int]]] = {}
    for u, v in g.edges():
        colors = [0] * g.n
        colors[u] = colors[v] = 1
        groups.setdefault(canonical_form(g, cap, colors), []).append((u, v))
    return sorted(groups.values())


def canonical_form_bruteforce(g: Graph) -> tuple[int, ...]:
    """Max adjacency certificate over all n! orders; reference for n <= 8."""
    if g.n > 8:
        raise GraphError("brute-force canonical form is limited to 8 vertices")
    if g.n == 0:
        return ()
    return max(_certificate(g.adj, list(p)) for p in permutations(range(g.n)))
