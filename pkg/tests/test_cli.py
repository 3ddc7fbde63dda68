import json

import pytest

from coloring_lab import run
from data_sources import fixtures
from data_sources.graph_file import parse_graph


def run_json(capsys, argv):
    code = run(argv)
    out = capsys.readouterr().out
    return code, json.loads(out)


def test_color1_on_five_cycle(capsys, graph_path):
    code, report = run_json(capsys, ['color1', graph_path(fixtures.directed_cycle(5)), '--k', '3'])
    assert code == 0
    assert report['status'] == 'ok'
    assert report['coloring']['colors'] == [0, 1, 2, 0, 1]
    assert report['verification']['verified']
    assert report['hypothesis']['holds']
    assert list(report)[:4] == ['command', 'input', 'parameters', 'status']
    assert list(report)[-1] == 'timing'


def test_check_reports_witness(capsys, graph_path):
    code, report = run_json(capsys, ['check', graph_path(fixtures.bidirected_complete(3)), '--k', '2', '--r', '0'])
    assert code == 1
    assert report['status'] == 'hypothesis-violated'
    assert len(report['hypothesis']['witness']) == 2


def test_acyclic_reports_order(capsys, graph_path):
    code, report = run_json(capsys, ['acyclic', graph_path(fixtures.directed_cycle(5)), '--k', '3', '--r', '0'])
    assert code == 0
    assert report['decomposition']['order'] == [0, 1, 2, 3, 4]


def test_acyclic_hypothesis_violation(capsys, graph_path):
    code, report = run_json(capsys, ['acyclic', graph_path(fixtures.directed_cycle(3)), '--k', '3', '--r', '0'])
    assert code == 1
    assert report['error']['type'] == 'HypothesisViolation'
    assert report['hypothesis']['holds'] is False


def test_undirected_petersen(capsys, graph_path):
    code, report = run_json(capsys, ['undirected', graph_path(fixtures.petersen()), '--k', '4', '--r', '3'])
    assert code == 0
    assert report['bound']['bound'] == 4
    assert report['coloring']['color_count'] <= 4


def test_bound_on_counterexample(capsys, graph_path):
    path = graph_path(fixtures.odd_wheel_counterexample(2))
    code, report = run_json(capsys, ['bound', path, '--theorem', 'odd-circ'])
    assert code == 0
    assert report['bound']['bound'] == 4
    assert report['coloring']['color_count'] == 4


def test_bound_rejects_wrong_mode(capsys, graph_path):
    code, report = run_json(capsys, ['bound', graph_path(fixtures.petersen()), '--theorem', 'circ'])
    assert code == 2
    assert report['status'] == 'input-error'


def test_verify(capsys, graph_path, tmp_path):
    path = graph_path(fixtures.directed_cycle(3))
    good = tmp_path / 'good.txt'
    good.write_text("0 0\n1 0\n2 1\n")
    bad = tmp_path / 'bad.txt'
    bad.write_text("0 0\n1 0\n2 0\n")

    code, report = run_json(capsys, ['verify', path, '--coloring', str(good), '--acyclic'])
    assert code == 0 and report['verification']['verified']
    code, report = run_json(capsys, ['verify', path, '--coloring', str(bad), '--acyclic'])
    assert code == 1 and report['status'] == 'verification-failed'
    code, report = run_json(capsys, ['verify', path, '--coloring', str(good)])
    assert code == 1


def test_missing_file(capsys, tmp_path):
    assert run(['stats', str(tmp_path / 'absent.txt')]) == 2
    assert 'error' in capsys.readouterr().err


def test_directed_command_on_undirected_graph(capsys, graph_path):
    code, report = run_json(capsys, ['color1', graph_path(fixtures.petersen()), '--k', '3'])
    assert code == 2
    assert report['error']['type'] == 'InputError'


def test_cycle_cap(capsys, graph_path):
    path = graph_path(fixtures.bidirected_complete(4))
    code, report = run_json(capsys, ['census', path, '--k', '3', '--max-cycles', '1'])
    assert code == 3
    assert report['status'] == 'resource-limit'
    code, report = run_json(capsys, ['census', path, '--k', '3'])
    assert code == 0
    assert report['result']['realized'] == [True, True, True]


def test_stats_exact(capsys, graph_path):
    path = graph_path(fixtures.odd_wheel_counterexample(2))
    code, report = run_json(capsys, ['stats', path, '--exact'])
    assert code == 0
    assert report['result']['odd_circumference'] == 3
    assert report['result']['circumference'] == 4
    assert report['result']['longest_path_vertices'] == 6
    assert report['result']['clique_number'] == 3
    assert report['result']['chromatic_number'] == 4


def test_clique_cycle(capsys, graph_path):
    path = graph_path(fixtures.strong_tournament(4))
    code, report = run_json(capsys, ['clique-cycle', path, '--set', '0,1,2,3'])
    assert code == 0
    assert sorted(report['result']['cycle']) == [0, 1, 2, 3]
    code, report = run_json(capsys, ['clique-cycle', path, '--set', '0,x'])
    assert code == 2


def test_fixture_output(capsys):
    assert run(['fixture', 'counterexample']) == 0
    gf = parse_graph(capsys.readouterr().out)
    assert gf.graph == fixtures.odd_wheel_counterexample(2)
    assert run(['fixture', 'cycle', '--n', '1']) == 2


def test_plain_report(capsys, graph_path):
    assert run(['color1', graph_path(fixtures.directed_cycle(5)), '--k', '3', '--plain']) == 0
    out = capsys.readouterr().out
    assert '== color1 ==' in out
    assert 'verification: PASS' in out
    assert 'coloring (3 colors, proper)' in out


def test_unknown_theorem_is_rejected_by_parser(graph_path):
    with pytest.raises(SystemExit):
        run(['bound', graph_path(fixtures.petersen()), '--theorem', 'nope'])
