import pytest
from hypothesis import given, settings

from data_sources import fixtures
from engine.cycles import undirected_hypothesis_holds
from engine.errors import HypothesisViolation, InputError
from engine.models import UndirectedGraph
from engine.undirected import color_undirected
from engine.verification import verify_proper
from tests.strategies import undirected_graphs

BOWTIE = UndirectedGraph.from_edges(5, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)])


def test_five_cycle_odd_block():
    report = color_undirected(fixtures.undirected_cycle(5), 2, 2)
    assert report.method == 'odd-block'
    assert report.bound == 3
    assert report.coloring.color_count == 3
    assert report.coloring.verified


def test_petersen_mod_4():
    report = color_undirected(fixtures.petersen(), 4, 3)
    assert report.method == 'acyclic-reduction'
    assert report.bound == 4
    assert report.coloring.color_count <= 4
    assert verify_proper(fixtures.petersen(), report.coloring.colors).ok


@pytest.mark.parametrize('k', [3, 4, 5])
def test_complete_graphs_need_k(k):
    report = color_undirected(fixtures.complete_graph(k), k, 1)
    assert report.coloring.color_count == k


def test_bipartite_route():
    report = color_undirected(fixtures.undirected_cycle(6), 2, 1)
    assert report.method == 'bipartite'
    assert report.coloring.color_count == 2


def test_odd_block_keeps_trees_at_two_colors():
    report = color_undirected(fixtures.undirected_path(5), 2, 0)
    assert report.coloring.colors == (0, 1, 0, 1, 0)


def test_odd_block_on_shared_vertex_and_isolated_vertex():
    report = color_undirected(BOWTIE, 2, 0)
    assert verify_proper(BOWTIE, report.coloring.colors, max_colors=3).ok
    lonely = UndirectedGraph.from_edges(6, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)])
    report = color_undirected(lonely, 2, 0)
    assert report.coloring.colors[5] == 0
    assert report.coloring.color_count == 3


def test_residue_two_uses_exact_fallback():
    report = color_undirected(fixtures.undirected_cycle(4), 3, 2)
    assert report.method == 'exact-fallback'
    assert report.bound == 4
    assert report.coloring.color_count == 2


def test_rejections():
    with pytest.raises(HypothesisViolation):
        color_undirected(fixtures.undirected_cycle(4), 2, 0)
    with pytest.raises(InputError):
        color_undirected(fixtures.undirected_cycle(4), 1, 0)


@given(undirected_graphs(max_n=7))
@settings(max_examples=80, deadline=None)
def test_random_graphs_get_independent_classes(g):
    for k in (2, 3, 4):
        for r in range(k):
            if not undirected_hypothesis_holds(g, k, r).holds:
                continue
            report = color_undirected(g, k, r, check_hypothesis=False)
            assert verify_proper(g, report.coloring.colors, max_colors=report.bound).ok
