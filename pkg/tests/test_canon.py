from __future__ import annotations

import random

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fourcrit.canon import (
    canonical_form,
    canonical_form_bruteforce,
    canonical_graph,
    edge_orbits,
    is_isomorphic,
    vertex_orbits,
)
from fourcrit.graph import GraphError, construct_named, cycle, petersen, wheel
from fourcrit.graph6 import decode

from conftest import graphs


@settings(max_examples=150)
@given(graphs(max_n=8), st.randoms(use_true_random=False))
def test_invariant_under_relabelling(g, rnd):
    perm = list(range(g.n))
    rnd.shuffle(perm)
    h = g.relabel(perm)
    assert canonical_form(g) == canonical_form(h)
    assert canonical_graph(g) == canonical_graph(h)


@settings(max_examples=150)
@given(graphs(max_n=7), graphs(max_n=7))
def test_agrees_with_brute_force(g, h):
    same = canonical_form_bruteforce(g) == canonical_form_bruteforce(h) and g.n == h.n
    assert (canonical_form(g) == canonical_form(h)) == same


@settings(max_examples=60)
@given(graphs(min_n=5, max_n=9), graphs(min_n=5, max_n=9))
def test_agrees_with_networkx_isomorphism(g, h):
    a, b = nx.Graph(), nx.Graph()
    a.add_nodes_from(range(g.n)), a.add_edges_from(g.edges())
    b.add_nodes_from(range(h.n)), b.add_edges_from(h.edges())
    assert is_isomorphic(g, h) == nx.is_isomorphic(a, b)


def test_hundred_random_permutations_of_petersen():
    g = petersen()
    rnd = random.Random(0)
    key = canonical_form(g)
    for _ in range(100):
        perm = list(range(10))
        rnd.shuffle(perm)
        assert canonical_form(g.relabel(perm)) == key


def test_form_is_valid_graph6():
    g = construct_named("T11").graph
    assert decode(canonical_form(g).decode()) == canonical_graph(g)


def test_orbits():
    assert vertex_orbits(cycle(6)) == [list(range(6))]
    assert vertex_orbits(wheel(5)) == [[0, 1, 2, 3, 4], [5]]
    assert len(edge_orbits(wheel(5))) == 2
    assert len(vertex_orbits(construct_named("H7").graph)) == 3


def test_cap():
    with pytest.raises(GraphError, match="cap"):
        canonical_form(cycle(20))
    assert canonical_form(cycle(20), cap=62) == canonical_form(cycle(20).relabel(list(range(19, -1, -1))), cap=62)
