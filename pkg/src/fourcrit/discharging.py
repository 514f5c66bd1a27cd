"""Charges ch(v) = 5 - 3d(v)/2 and the four degree-3 discharging rules."""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction

from .graph import Graph, GraphError, bits, components, induced_subgraph
from .potential import potential_value, t_value

AMOUNTS = frozenset({Fraction(1, 6), Fraction(1, 4), Fraction(1, 3), Fraction(3, 8)})


class RulesInapplicable(GraphError):
    pass


@dataclass(frozen=True)
class D3Component:
    vertices: tuple[int, ...]  # host-graph labels
    acyclic: bool
    diameter: int | None  # tree diameter in edges; None when cyclic
    leaves: tuple[int, ...]  # degree-1 vertices inside the component


@dataclass(frozen=True)
class D3Info:
    graph: Graph  # subgraph induced by the degree-3 vertices
    vertices: tuple[int, ...]  # D3 vertex i is host vertex vertices[i]
    components: tuple[D3Component, ...]


def _eccentric(g: Graph, start: int, within: int) -> tuple[int, int]:
    dist = {start: 0}
    queue = deque([start])
    far = start
    while queue:
        u = queue.popleft()
        if dist[u] > dist[far]:
            far = u
        for w in bits(g.adj[u] & within):
            if w not in dist:
                dist[w] = dist[u] + 1
                queue.append(w)
    return far, dist[far]


def d3_subgraph(g: Graph) -> D3Info:
    host = [v for v in range(g.n) if g.degrees[v] == 3]
    sub = induced_subgraph(g, host).graph
    comps = []
    for mask in components(sub):
        vs = list(bits(mask))
        edges = sum((sub.adj[v] & mask).bit_count() for v in vs) // 2
        acyclic = edges == len(vs) - 1
        diameter = None
        if acyclic:
            far, _ = _eccentric(sub, vs[0], mask)
            diameter = _eccentric(sub, far, mask)[1]
        leaves = tuple(host[v] for v in vs if (sub.adj[v] & mask).bit_count() == 1)
        comps.append(D3Component(tuple(host[v] for v in vs), acyclic, diameter, leaves))
    comps.sort(key=lambda c: c.vertices)
    return D3Info(sub, tuple(host), tuple(comps))


def initial_charge(degree: int) -> Fraction:
    return 5 - Fraction(3, 2) * degree


@dataclass(frozen=True)
class ChargeLedger:
    initial: tuple[Fraction, ...]
    final: tuple[Fraction, ...]
    d3_components: tuple[D3Component, ...]
    transfers: tuple[tuple[int, int, Fraction], ...]
    rich_edges: int  # edges with both ends of degree >= 4

    def component_sums(self) -> list[Fraction]:
        return [sum((self.final[v] for v in c.vertices), Fraction(0)) for c in self.d3_components]

    def overcharged(self) -> list[int]:
        """Vertices of degree >= 4 left with positive charge (reported, not an error)."""
        return [v for v, ch in enumerate(self.final) if ch > 0 and self.initial[v] <= -1]

    @property
    def conserved(self) -> bool:
        return sum(self.initial) == sum(self.final)


def _rule_amount(comp: D3Component, v: int) -> tuple[Fraction, bool]:
    """Amount v sends and whether it goes to every neighbour (rule 1) or only rich ones."""
    size = len(comp.vertices)
    if size == 1:
        return Fraction(1, 6), True
    if size == 2:
        return Fraction(1, 4), False
    leaf = v in comp.leaves
    if comp.diameter == 2:
        return (Fraction(1, 3) if leaf else Fraction(1, 6)), False
    if comp.diameter == 3:
        return (Fraction(3, 8) if leaf else Fraction(1, 4)), False
    raise RulesInapplicable(f"no rule for a component of size {size}, diameter {comp.diameter}")


def discharge(g: Graph) -> ChargeLedger:
    info = d3_subgraph(g)
    for comp in info.components:
        if not comp.acyclic:
            raise RulesInapplicable(f"rules inapplicable: D3 component {comp.vertices} contains a cycle")
        if comp.diameter is not None and comp.diameter >= 4:
            raise RulesInapplicable(f"rules inapplicable: D3 component {comp.vertices} has diameter {comp.diameter}")
    deg = g.degrees
    initial = tuple(initial_charge(d) for d in deg)
    final = list(initial)
    transfers = []
    for comp in info.components:
        for v in comp.vertices:
            amount, everyone = _rule_amount(comp, v)
            for u in bits(g.adj[v]):
                if everyone or deg[u] >= 4:
                    final[v] -= amount
                    final[u] += amount
                    transfers.append((v, u, amount))
    rich = sum(1 for u, v in g.edges() if deg[u] >= 4 and deg[v] >= 4)
    return ChargeLedger(initial, tuple(final), info.components, tuple(transfers), rich)


@dataclass(frozen=True)
class ChargeIdentity:
    total_charge: Fraction
    five_n_minus_3m: int
    p: int
    t: int

    @property
    def ok(self) -> bool:
        return self.total_charge == self.five_n_minus_3m == self.p + self.t


def charge_identity_check(g: Graph) -> ChargeIdentity:
    total = sum((initial_charge(d) for d in g.degrees), Fraction(0))
    return ChargeIdentity(total, 5 * g.n - 3 * g.m, potential_value(g), t_value(g))
