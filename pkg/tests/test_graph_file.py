import pytest

from data_sources import fixtures
from data_sources.fixtures import FIXTURES, build_fixture
from data_sources.graph_file import (
    load_coloring, load_graph, parse_coloring, parse_graph, save_graph, serialize_coloring,
    serialize_graph,
)
from engine.errors import InputError
from engine.models import Digraph, UndirectedGraph


def test_parse_directed_default():
    gf = parse_graph("# a triangle\n3 3\n0 1\n1 2\n\n2 0\n")
    assert gf.directed
    assert gf.graph.sorted_arcs() == [(0, 1), (1, 2), (2, 0)]


def test_parse_undirected():
    gf = parse_graph("mode undirected\n3 2\n1 0\n1 2\n")
    assert not gf.directed
    assert isinstance(gf.graph, UndirectedGraph)
    assert gf.graph.sorted_edges() == [(0, 1), (1, 2)]


def test_serialized_graph_parses_back(tmp_path):
    d = fixtures.odd_wheel_counterexample(2)
    text = serialize_graph(d)
    assert text.splitlines()[0] == 'mode directed'
    assert parse_graph(text).graph == d
    path = tmp_path / 'petersen.txt'
    save_graph(fixtures.petersen(), path)
    assert load_graph(path).graph == fixtures.petersen()


def test_directed_pair_in_both_directions_is_two_arcs():
    gf = parse_graph("2 2\n0 1\n1 0\n")
    assert len(gf.graph.arcs) == 2


@pytest.mark.parametrize('text', [
    '',
    '3\n',
    'mode sideways\n2 0\n',
    '2 2\n0 1\n',
    '2 1\n0 2\n',
    '2 1\n1 1\n',
    '2 1\n0 x\n',
    '-1 0\n',
    '2 2\n0 1\n0 1\n',
    'mode undirected\n2 2\n0 1\n1 0\n',
])
def test_parse_graph_rejects(text):
    with pytest.raises(InputError):
        parse_graph(text)


def test_missing_graph_file(tmp_path):
    with pytest.raises(InputError):
        load_graph(tmp_path / 'absent.txt')


def test_coloring_files(tmp_path):
    assert parse_coloring("2 1\n0 0\n# note\n1 3\n", 3) == (0, 3, 1)
    path = tmp_path / 'colors.txt'
    path.write_text(serialize_coloring((1, 0, 1)))
    assert load_coloring(path, 3) == (1, 0, 1)


@pytest.mark.parametrize('text', ['0 0\n', '0 0\n0 1\n1 1\n', '0 0\n5 1\n', '0 -1\n1 0\n', '0 0 0\n1 0\n'])
def test_parse_coloring_rejects(text):
    with pytest.raises(InputError):
        parse_coloring(text, 2)


def test_fixtures():
    assert build_fixture('petersen').n == 10
    assert build_fixture('cycle').sorted_arcs() == [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]
    assert build_fixture('complete', 3).sorted_edges() == [(0, 1), (0, 2), (1, 2)]
    assert (3, 0) in build_fixture('tournament', 4).arcs
    counterexample = build_fixture('counterexample')
    assert isinstance(counterexample, Digraph) and counterexample.n == 6
    assert set(FIXTURES) >= {'counterexample', 'petersen', 'tournament'}
    with pytest.raises(InputError):
        build_fixture('nope')
    with pytest.raises(InputError):
        build_fixture('cycle', 1)
