from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import assume, given, settings

from fourcrit.discharging import (
    AMOUNTS,
    RulesInapplicable,
    charge_identity_check,
    d3_subgraph,
    discharge,
    initial_charge,
)
from fourcrit.graph import Graph, complete, complete_bipartite, construct_named

from conftest import graphs


def test_initial_charges():
    assert initial_charge(3) == Fraction(1, 2)
    assert initial_charge(4) == -1
    assert initial_charge(5) == Fraction(-5, 2)


def test_k34_ledger_by_hand():
    # parts {0,1,2} (degree 4) and {3,4,5,6} (degree 3); each degree-3 vertex is its own
    # D3 component and sends 1/6 to each of its three neighbours: -1 + 4/6 = -1/3
    g = complete_bipartite(3, 4)
    led = discharge(g)
    assert [led.final[v] for v in range(3)] == [Fraction(-1, 3)] * 3
    assert [led.final[v] for v in range(3, 7)] == [0] * 4
    assert led.conserved
    assert sum(led.final) == 5 * 7 - 3 * 12


def test_cyclic_d3_is_rejected():
    with pytest.raises(RulesInapplicable, match="rules inapplicable"):
        discharge(complete(4))


def test_long_d3_path_is_rejected():
    # path 0-1-2-3-4 of degree-3 vertices hanging off a K5 on 5..9
    edges = [(0, 1), (1, 2), (2, 3), (3, 4)]
    edges += [(a, b) for a in range(5, 10) for b in range(a + 1, 10)]
    edges += [(0, 5), (0, 6), (1, 7), (2, 8), (3, 9), (4, 5), (4, 6)]
    g = Graph.from_edges(10, edges)
    info = d3_subgraph(g)
    assert [c.diameter for c in info.components] == [4]
    with pytest.raises(RulesInapplicable, match="diameter 4"):
        discharge(g)


def test_size_two_and_star_components():
    # K5 hub plus two degree-3 vertices joined to each other and to two hub vertices each
    edges = [(a, b) for a in range(5) for b in range(a + 1, 5)]
    edges += [(5, 6), (5, 0), (5, 1), (6, 2), (6, 3)]
    led = discharge(Graph.from_edges(7, edges))
    assert led.final[5] == led.final[6] == 0
    assert {a for *_, a in led.transfers} == {Fraction(1, 4)}
    assert led.conserved


@settings(max_examples=200)
@given(graphs(max_n=9, density=0.55))
def test_conservation_and_amounts(g):
    try:
        led = discharge(g)
    except RulesInapplicable:
        return
    assert led.conserved
    assert {a for *_, a in led.transfers} <= AMOUNTS
    assert sum(led.initial) == 5 * g.n - 3 * g.m


@settings(max_examples=200)
@given(graphs(min_n=5, max_n=10, density=0.6))
def test_component_sums_vanish_with_min_degree_three(g):
    assume(g.min_degree() >= 3)
    try:
        led = discharge(g)
    except RulesInapplicable:
        return
    assert all(s == 0 for s in led.component_sums())


@settings(max_examples=150)
@given(graphs(max_n=9))
def test_charge_identity(g):
    c = charge_identity_check(g)
    assert c.ok
    assert c.total_charge == c.p + c.t


def test_named_charge_identity():
    for name in ("K4", "H7", "W5", "T8", "T11"):
        c = charge_identity_check(construct_named(name).graph)
        assert c.ok
