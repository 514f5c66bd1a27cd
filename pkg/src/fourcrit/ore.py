"""Ore-composition and the catalogue of 4-Ore graphs."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator, Sequence

from .canon import DEFAULT_CAP, canonical_form, edge_orbits, vertex_orbits
from .graph import Graph, GraphError, bipartitions, complete, find_diamonds, girth
from .potential import t_value


@dataclass(frozen=True)
class OreRecipe:
    edge_side: Graph
    replaced_edge: tuple[int, int]
    split_side: Graph
    split_vertex: int
    partition: tuple[tuple[int, ...], tuple[int, ...]]
    result: Graph
    role_map: dict[str, int] = field(hash=False, compare=False, default_factory=dict)


def ore_compose(
    edge_side: Graph,
    replaced_edge: tuple[int, int],
    split_side: Graph,
    split_vertex: int,
    partition: tuple[Sequence[int], Sequence[int]],
) -> OreRecipe:
    """Delete xy from the edge side, split z on the split side, glue x=z1 and y=z2.

    Edge-side vertices keep their labels; the split side's other vertices
    follow in increasing order. partition[0] (neighbours of z1) attaches to x.
    """
    x, y = replaced_edge
    if x == y or not (0 <= x < edge_side.n and 0 <= y < edge_side.n) or not edge_side.has_edge(x, y):
        raise GraphError(f"replaced edge {replaced_edge} is not an edge of the edge side")
    z = split_vertex
    if not 0 <= z < split_side.n:
        raise GraphError(f"split vertex {z} out of range")
    a, b = tuple(sorted(partition[0])), tuple(sorted(partition[1]))
    if not a or not b:
        raise GraphError("both parts of the split must be nonempty")
    if set(a) & set(b) or set(a) | set(b) != set(split_side.neighbors(z)):
        raise GraphError(f"partition must split N({z}) = {split_side.neighbors(z)}")

    n1 = edge_side.n
    label = {}
    for v in range(split_side.n):
        if v != z:
            label[v] = n1 + len(label)
    edges = [e for e in edge_side.edges() if e != (min(x, y), max(x, y))]
    edges += [(label[u], label[v]) for u, v in split_side.edges() if z not in (u, v)]
    edges += [(x, label[u]) for u in a] + [(y, label[u]) for u in b]
    result = Graph.from_edges(n1 + split_side.n - 1, edges)
    return OreRecipe(edge_side, (x, y), split_side, z, (a, b), result, {"x": x, "y": y})


@dataclass(frozen=True)
class OreEntry:
    graph: Graph
    canon: bytes
    p: int
    t: int
    girth: float
    diamonds: int


def _entry(g: Graph, cap: int) -> OreEntry:
    t = t_value(g)
    return OreEntry(g, canonical_form(g, cap), 5 * g.n - 3 * g.m - t, t, girth(g), len(find_diamonds(g)))


@dataclass
class OreCatalog:
    max_n: int
    by_order: dict[int, dict[bytes, OreEntry]]

    def members(self) -> list[OreEntry]:
        return [e for n in sorted(self.by_order) for _, e in sorted(self.by_order[n].items())]

    def __contains__(self, g: Graph) -> bool:
        layer = self.by_order.get(g.n)
        return layer is not None and canonical_form(g, max(self.max_n, g.n)) in layer

    def __len__(self) -> int:
        return sum(len(layer) for layer in self.by_order.values())


def iter_compositions(edge_side: Graph, split_side: Graph, cap: int = DEFAULT_CAP) -> Iterator[OreRecipe]:
    """Every composition up to automorphisms of either side.

    Replaced edges run over edge orbits of the edge side, split vertices over
    vertex orbits of the split side, and partitions over all ordered splits
    of the neighbourhood (order matters because x and y are distinguished).
    """
    for orbit in edge_orbits(edge_side, cap):
        xy = orbit[0]
        for vorb in vertex_orbits(split_side, cap):
            z = vorb[0]
            for part in bipartitions(split_side.neighbors(z), ordered=True):
                yield ore_compose(edge_side, xy, split_side, z, part)


_LAYERS: dict[int, dict[bytes, OreEntry]] = {}


def _build_layer(n: int, cap: int) -> dict[bytes, OreEntry]:
    if n == 4:
        k4 = complete(4)
        return {canonical_form(k4, cap): _entry(k4, cap)}
    layer: dict[bytes, OreEntry] = {}
    for n1 in range(4, n - 2, 3):
        n2 = n + 1 - n1
        for e1 in _layer(n1, cap).values():
            for e2 in _layer(n2, cap).values():
                for rec in iter_compositions(e1.graph, e2.graph, cap):
                    key = canonical_form(rec.result, cap)
                    if key not in layer:
                        layer[key] = _entry(rec.result, cap)
    return layer


def _layer(n: int, cap: int) -> dict[bytes, OreEntry]:
    if n not in _LAYERS:
        _LAYERS[n] = _build_layer(n, cap)
    return _LAYERS[n]


def enumerate_4_ore(max_n: int, cap: int = DEFAULT_CAP) -> OreCatalog:
    """All 4-Ore graphs with at most max_n vertices, up to isomorphism."""
    if max_n > cap:
        raise GraphError(f"cap exceeded: max_n={max_n} > {cap}")
    orders = range(4, max_n + 1, 3)
    return OreCatalog(max_n, {n: dict(_layer(n, cap)) for n in orders})


def install_catalog(catalog: OreCatalog) -> None:
    """Seed the in-process layer cache (e.g. from a persisted catalogue file)."""
    for n, layer in catalog.by_order.items():
        _LAYERS.setdefault(n, dict(layer))


def is_4_ore(g: Graph, cap: int = DEFAULT_CAP) -> bool:
    if g.n > cap:
        raise GraphError(f"cap exceeded: n={g.n} > {cap}")
    if g.n < 4 or g.n % 3 != 1 or 5 * g.n - 3 * g.m != 2:
        return False
    return canonical_form(g, cap) in _layer(g.n, cap)
