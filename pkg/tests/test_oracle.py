import pytest
from hypothesis import given, settings, strategies as st

from data_sources import fixtures
from engine.cycles import hypothesis_holds
from engine.digraph import underlying_graph
from engine.errors import OracleBoundExceeded
from engine.models import Digraph, UndirectedGraph
from engine.oracle import (
    clique_number, exact_acyclic_chromatic, exact_chromatic, find_acyclic_coloring,
    find_proper_coloring, greedy_color_count,
)
from engine.verification import verify_acyclic, verify_proper
from tests.strategies import digraphs


@pytest.mark.parametrize('graph, chi, omega', [
    (fixtures.petersen(), 3, 2),
    (fixtures.complete_graph(5), 5, 5),
    (fixtures.undirected_cycle(5), 3, 2),
    (fixtures.undirected_cycle(6), 2, 2),
    (UndirectedGraph(3), 1, 1),
])
def test_exact_chromatic_on_named_graphs(graph, chi, omega):
    assert exact_chromatic(graph) == chi
    assert clique_number(graph) == omega
    assert greedy_color_count(graph) >= chi


def test_counterexample_needs_four_colors_without_k4():
    g = underlying_graph(fixtures.odd_wheel_counterexample(2))
    assert exact_chromatic(g) == 4
    assert clique_number(g) == 3


def test_find_proper_coloring():
    k4 = fixtures.complete_graph(4)
    assert find_proper_coloring(k4, 3) is None
    colors = find_proper_coloring(k4, 4)
    assert verify_proper(k4, colors).ok
    assert find_proper_coloring(UndirectedGraph(0), 1) == ()


def test_exact_acyclic_chromatic():
    assert exact_acyclic_chromatic(fixtures.directed_cycle(3)) == 2
    assert exact_acyclic_chromatic(fixtures.bidirected_complete(3)) == 3
    assert exact_acyclic_chromatic(fixtures.transitive_tournament(4)) == 1
    assert exact_acyclic_chromatic(Digraph(0)) == 0


def test_find_acyclic_coloring_is_valid():
    d = fixtures.odd_wheel_counterexample(2)
    colors = find_acyclic_coloring(d, 2)
    assert colors is not None
    assert verify_acyclic(d, colors).ok
    assert find_acyclic_coloring(fixtures.bidirected_complete(3), 2) is None


def test_oracle_refuses_large_instances():
    with pytest.raises(OracleBoundExceeded):
        exact_chromatic(fixtures.complete_graph(13))
    with pytest.raises(OracleBoundExceeded):
        exact_acyclic_chromatic(fixtures.directed_cycle(6), max_vertices=5)


@given(digraphs(max_n=6))
@settings(max_examples=150, deadline=None)
def test_acyclic_chromatic_at_most_underlying_chromatic(d):
    assert exact_acyclic_chromatic(d) <= exact_chromatic(underlying_graph(d))


@given(digraphs(max_n=7), st.sampled_from([2, 3, 4]), st.integers(min_value=0, max_value=3))
@settings(max_examples=150, deadline=None)
def test_hypothesis_bounds_acyclic_chromatic(d, k, r):
    if not hypothesis_holds(d, k, r % k).holds:
        return
    assert exact_acyclic_chromatic(d) <= k
