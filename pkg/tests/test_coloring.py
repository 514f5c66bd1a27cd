from __future__ import annotations

from itertools import product

import pytest
from hypothesis import given, settings

from fourcrit.coloring import (
    chromatic_number,
    critical_subgraph,
    is_3_colorable,
    is_4_critical,
    is_identifiable_pair,
    iter_colorings,
    k_colorable,
)
from fourcrit.graph import GraphError, complete, construct_named, cycle, disjoint_union, wheel

from conftest import graphs


def brute_colourable(g, k):
    return any(all(c[u] != c[v] for u, v in g.edges()) for c in product(range(k), repeat=g.n))


def brute_critical(g):
    if any(d == 0 for d in g.degrees) or brute_colourable(g, 3):
        return False
    return all(brute_colourable(g.remove_edge(u, v), 3) for u, v in g.edges())


@settings(max_examples=150)
@given(graphs(max_n=8, density=0.6))
def test_three_colourability_matches_brute_force(g):
    assert is_3_colorable(g) == brute_colourable(g, 3)
    col = k_colorable(g, 3)
    if col is not None:
        assert col.is_proper(g)


@settings(max_examples=60)
@given(graphs(min_n=4, max_n=7, density=0.7))
def test_criticality_matches_brute_force(g):
    assert is_4_critical(g) == brute_critical(g)


@settings(max_examples=60)
@given(graphs(max_n=6))
def test_iter_colorings_counts_match_brute_force(g):
    brute = sum(all(c[u] != c[v] for u, v in g.edges()) for c in product(range(3), repeat=g.n))
    cols = list(iter_colorings(g, 3))
    assert len(cols) == brute
    assert all(c.is_proper(g) for c in cols)


@settings(max_examples=60)
@given(graphs(min_n=4, max_n=8, density=0.7))
def test_critical_subgraph_is_critical(g):
    if is_3_colorable(g):
        with pytest.raises(GraphError):
            critical_subgraph(g)
        return
    sub = critical_subgraph(g)
    assert is_4_critical(sub.graph)
    for i, j in sub.graph.edges():
        assert g.has_edge(sub.vertices[i], sub.vertices[j])


def test_chromatic_numbers():
    assert chromatic_number(complete(4)) == 4
    assert chromatic_number(cycle(5)) == 3
    assert chromatic_number(cycle(6)) == 2
    assert chromatic_number(complete(5)) is None


def test_known_critical_and_non_critical():
    assert is_4_critical(wheel(5))
    assert not is_4_critical(wheel(6))  # even wheel is 3-colourable
    assert not is_4_critical(disjoint_union(complete(4), complete(1)))
    assert not is_4_critical(complete(5))


def test_mutated_t8_is_not_critical():
    g = construct_named("T8").graph
    u, v = g.edges()[0]
    assert not is_4_critical(g.remove_edge(u, v))


def test_identifiable_pair():
    g = wheel(5)  # rim 0..4, hub 5
    fan = [0, 1, 2, 3, 5]
    # chord 0-2 in the fan closes a K4 on {0, 1, 2, hub}
    assert is_identifiable_pair(g, fan, 0, 2)
    # chord 0-3 closes a wheel with a 4-cycle rim, which is 3-colourable
    assert not is_identifiable_pair(g, fan, 0, 3)
    # a chord of the bare rim leaves a 3-colourable graph
    assert not is_identifiable_pair(g, [0, 1, 2, 3, 4], 0, 2)
    with pytest.raises(GraphError):
        is_identifiable_pair(g, range(6), 0, 2)
