import networkx as nx
import pytest
from hypothesis import given, settings

from data_sources import fixtures
from engine.cycles import enumerate_cycles
from engine.digraph import (
    add_dominating_vertex, bidirect, induced_subdigraph, is_acyclic, is_semicomplete,
    strong_components, strongly_connected, underlying_graph,
)
from engine.errors import InputError
from engine.models import Digraph, UndirectedGraph
from tests.strategies import digraphs


def test_digraph_rejects_loops_and_out_of_range():
    with pytest.raises(InputError):
        Digraph(3, frozenset({(1, 1)}))
    with pytest.raises(InputError):
        Digraph(3, frozenset({(0, 3)}))
    with pytest.raises(InputError):
        UndirectedGraph(2, frozenset({(0, 0)}))


def test_adjacency_is_sorted():
    d = Digraph.from_arcs(4, [(0, 3), (0, 1), (2, 0)])
    assert d.succ[0] == (1, 3)
    assert d.pred[0] == (2,)
    assert d.out_neighbors(0) == (1, 3) and d.in_neighbors(3) == (0,)
    assert d.adjacent(1, 0) and not d.adjacent(1, 3)


def test_strong_components_follow_condensation_order():
    assert strong_components(fixtures.transitive_tournament(3)) == [(0,), (1,), (2,)]
    d = Digraph.from_arcs(4, [(3, 0), (0, 1), (1, 2), (2, 0)])
    assert strong_components(d) == [(3,), (0, 1, 2)]


@given(digraphs(max_n=6))
@settings(max_examples=100, deadline=None)
def test_arcs_between_components_point_forward(d):
    comps = strong_components(d)
    index = {v: i for i, comp in enumerate(comps) for v in comp}
    assert sorted(index) == list(range(d.n))
    for u, v in d.arcs:
        assert index[u] <= index[v]
    assert len(comps) == nx.number_strongly_connected_components(d.to_networkx())


def test_strongly_connected():
    assert strongly_connected(fixtures.directed_cycle(4))
    assert not strongly_connected(fixtures.directed_path(3))
    assert strongly_connected(Digraph(1))


def test_induced_subdigraph_reindexes():
    sub = induced_subdigraph(fixtures.directed_cycle(4), {3, 1, 2})
    assert sub.original == (1, 2, 3)
    assert sub.digraph.arcs == frozenset({(0, 1), (1, 2)})
    assert sub.local(3) == 2
    assert sub.pull_back([5, 6, 7], 4, fill=9) == [9, 5, 6, 7]
    host = [0, 0, 0, 0]
    assert sub.pull_back([5, 6, 7], into=host) is host and host == [0, 5, 6, 7]
    with pytest.raises(InputError):
        induced_subdigraph(fixtures.directed_cycle(4), {4})


def test_bidirect_and_underlying():
    g = fixtures.undirected_path(3)
    d = bidirect(g)
    assert d.arcs == frozenset({(0, 1), (1, 0), (1, 2), (2, 1)})
    assert underlying_graph(d) == g
    assert underlying_graph(fixtures.directed_cycle(3)).edges == frozenset({(0, 1), (1, 2), (0, 2)})


def test_dominating_vertex_makes_strong():
    d = add_dominating_vertex(fixtures.directed_path(3))
    assert d.n == 4
    assert strongly_connected(d)
    assert all(d.has_arc(3, v) and d.has_arc(v, 3) for v in range(3))


def test_semicomplete_and_acyclic():
    assert is_semicomplete(fixtures.strong_tournament(5))
    assert not is_semicomplete(fixtures.directed_cycle(4))
    assert is_acyclic(fixtures.transitive_tournament(4))
    assert not is_acyclic(fixtures.directed_cycle(3))


@given(digraphs(max_n=5))
@settings(max_examples=300, deadline=None)
def test_acyclic_iff_no_cycles_enumerated(d):
    assert is_acyclic(d) == (enumerate_cycles(d).cycles == ())
