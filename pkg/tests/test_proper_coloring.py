import pytest
from hypothesis import given, settings

from data_sources import fixtures
from engine.cycles import hypothesis_holds
from engine.ears import seed_state
from engine.errors import HypothesisViolation, InputError
from engine.models import Digraph, VertexCycle
from engine.proper_coloring import assert_AB, color_mod1, residue_priority
from engine.verification import verify_proper
from tests.strategies import strong_digraphs


def test_residue_priority_skips_one():
    assert residue_priority(2) == [0]
    assert residue_priority(5) == [0, 4, 3, 2]


def test_directed_five_cycle_with_three_colors():
    run = color_mod1(fixtures.directed_cycle(5), 3)
    assert run.coloring.colors == (0, 1, 2, 0, 1)
    assert run.coloring.verified
    assert run.seed_residue == 2
    assert run.seed.successor_empty
    assert run.steps == ()
    assert run.hypothesis.holds


@pytest.mark.parametrize('k', [2, 3, 4, 5, 6])
def test_bidirected_complete_is_sharp(k):
    d = fixtures.bidirected_complete(k)
    assert hypothesis_holds(d, k, 1).holds
    run = color_mod1(d, k, check_invariants=True)
    assert run.coloring.color_count == k


@pytest.mark.parametrize('n', range(3, 9))
def test_strong_tournaments_use_every_color(n):
    run = color_mod1(fixtures.strong_tournament(n), n)
    assert run.coloring.color_count == n
    assert verify_proper(run.digraph, run.coloring.colors, max_colors=n).ok


def test_counterexample_needs_four():
    run = color_mod1(fixtures.odd_wheel_counterexample(2), 4, check_invariants=True)
    assert run.coloring.color_count == 4


def test_every_choice_had_an_empty_successor_class():
    run = color_mod1(fixtures.odd_wheel_counterexample(3), 4, check_invariants=True)
    assert run.seed.successor_empty
    assert run.steps
    assert all(step.successor_empty for step in run.steps)
    assert [s['ear'] for s in run.summary()['steps']] == [list(e.vertices) for e in run.decomposition]


def test_hypothesis_violation_carries_witness():
    with pytest.raises(HypothesisViolation) as exc:
        color_mod1(fixtures.directed_cycle(4), 3)
    assert exc.value.witness.length == 4
    assert exc.value.exit_code == 1


@pytest.mark.parametrize('d, k', [
    (fixtures.directed_path(3), 3),
    (fixtures.directed_cycle(3), 1),
])
def test_preconditions(d, k):
    with pytest.raises(InputError):
        color_mod1(d, k)


def test_assert_AB_flags_bad_seed_coloring():
    d = fixtures.bidirected_complete(3)
    good = seed_state(d, VertexCycle((0, 1, 2)), 3)
    assert assert_AB(good).ok
    bad = seed_state(d, VertexCycle((0, 1, 2)), 3, f_values=[0, 0, 1])
    diagnostic = assert_AB(bad)
    assert not diagnostic.ok and diagnostic.violated == 'A'
    # 0 -> 1 -> 2 -> 3 -> 0 has length 4 = 1 (mod 3)
    host = Digraph.from_arcs(4, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 0)])
    diagnostic = assert_AB(seed_state(host, VertexCycle((0, 1, 2)), 3))
    assert diagnostic.violated == 'B'
    assert diagnostic.witness == (2, 3, 0)


@given(strong_digraphs(max_n=6))
@settings(max_examples=120, deadline=None)
def test_random_strong_digraphs(d):
    for k in (2, 3, 4):
        if not hypothesis_holds(d, k, 1).holds:
            continue
        run = color_mod1(d, k, check_hypothesis=False, check_invariants=True)
        assert run.coloring.color_count <= k
        assert verify_proper(d, run.coloring.colors).ok
        assert all(step.successor_empty for step in run.steps)
