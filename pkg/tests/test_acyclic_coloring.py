import pytest
from hypothesis import given, settings, strategies as st

from data_sources import fixtures
from engine.acyclic_coloring import (
    AlphaTable, LinearOrder, acyclic_color, advance, assert_ABC, backward_priority, classify_ear,
    color_strong, cyclic_priority, forward_priority, seed_acyclic_state, seed_priority,
)
from engine.cycles import hypothesis_holds
from engine.digraph import bidirect
from engine.ears import enumerate_ears
from engine.errors import HypothesisViolation, InputError, InvalidEarError
from engine.models import Digraph, Ear, EarDirection
from engine.verification import verify_acyclic, verify_proper
from tests.strategies import digraphs


# ============================================
# ORDER, ALPHA, PRIORITIES
# ============================================

def test_linear_order_insertions():
    order = LinearOrder([0, 1, 2])
    after = order.insert_after(0, [5, 6])
    assert after.sequence == (0, 5, 6, 1, 2)
    assert order.sequence == (0, 1, 2)
    assert order.insert_before(0, [7]).sequence == (7, 0, 1, 2)
    assert order.insert_before(2, [8, 9]).sequence == (0, 1, 8, 9, 2)
    assert after.successor(6) == 1 and after.predecessor(5) == 0
    assert after.successor(2) is None and after.predecessor(0) is None
    assert after.precedes(5, 1) and after.compare(2, 6) == 1 and after.compare(1, 1) == 0
    assert after.interval_size(5, 2) == 4


def test_linear_order_rejects_repeats():
    with pytest.raises(ValueError):
        LinearOrder([0, 1, 0])


def test_alpha_lookup_normalizes_pair():
    order = LinearOrder([3, 1, 2])
    alpha = AlphaTable(4).with_entries({(3, 1): 6, (3, 2): -1, (1, 2): 2})
    assert alpha.value(1, 3, order) == 2
    assert alpha.value(3, 1, order) == 2
    assert alpha.value(2, 3, order) == 3
    assert alpha.corrupted((1, 2), 5).value(2, 1, order) == 1
    assert len(alpha) == 3


def test_priorities():
    assert seed_priority(4, 1) == [0, 3, 2]
    assert seed_priority(3, 0) == [2, 1]
    assert forward_priority(4) == [0, 3, 2]
    assert cyclic_priority(5, 2) == [1, 0, 4, 3]
    assert backward_priority(3, 0) == [2, 1]
    for k in (2, 3, 4, 5):
        for r in range(k):
            assert sorted(seed_priority(k, r) + [r]) == list(range(k))


# ============================================
# CLASSIFICATION AND PROPERTIES
# ============================================

@pytest.fixture
def k3_seed():
    # cycles of bidirected K3 have lengths 2 and 3, so residue 1 mod 3 is free
    state, _ = seed_acyclic_state(fixtures.bidirected_complete(3), 3, 1)
    return state


def test_classify_ear(k3_seed):
    a, b, c = k3_seed.order.sequence
    es, order = k3_seed.ears, k3_seed.order
    assert classify_ear(es, order, Ear((a, 9, c))) == EarDirection.FORWARD
    assert classify_ear(es, order, Ear((c, b))) == EarDirection.BACKWARD
    assert classify_ear(es, order, Ear((b, 9, b))) == EarDirection.CYCLIC
    with pytest.raises(InvalidEarError):
        classify_ear(es, order, Ear((a, 7)))


def test_seed_follows_cycle_order(k3_seed):
    vs = k3_seed.order.sequence
    assert k3_seed.ears.seed.vertices == vs
    assert [k3_seed.ears.f[v] for v in vs] == [0, 1, 2]
    assert k3_seed.alpha.value(vs[0], vs[2], k3_seed.order) == (0 - 2 + 1) % 3
    assert assert_ABC(k3_seed.ears, k3_seed.order, k3_seed.alpha).ok


def test_corrupted_alpha_breaks_property_C(k3_seed):
    order = k3_seed.order
    backward = [e for e in enumerate_ears(k3_seed.ears)
                if classify_ear(k3_seed.ears, order, e) == EarDirection.BACKWARD]
    assert backward
    e = backward[0]
    alpha = k3_seed.alpha.corrupted((e.terminus, e.origin), e.length % 3)
    diagnostic = assert_ABC(k3_seed.ears, order, alpha)
    assert not diagnostic.ok
    assert diagnostic.violated == 'C'


def test_completed_run_passes_vacuously():
    state, seed, steps = color_strong(fixtures.bidirected_complete(4), 4, 1, check_invariants=True)
    assert state.complete
    assert assert_ABC(state.ears, state.order, state.alpha).ok
    assert len(state.alpha) == 4 * 3 // 2


def test_advance_records_forward_step(k3_seed):
    state, step = advance(k3_seed)
    assert step.branch == 'forward'
    assert step.successor_empty
    assert len(state.ears.arcs_in) == 4


# ============================================
# FULL RUNS
# ============================================

def test_directed_five_cycle():
    run = acyclic_color(fixtures.directed_cycle(5), 3, 0)
    assert run.coloring.colors == (0, 1, 2, 0, 1)
    assert run.coloring.verified
    assert run.order.sequence == (0, 1, 2, 3, 4)


def test_bidirected_path_classes_are_independent():
    d = bidirect(fixtures.undirected_path(4))
    run = acyclic_color(d, 2, 1, check_invariants=True)
    assert verify_acyclic(d, run.coloring.colors, max_colors=2).ok
    assert verify_proper(fixtures.undirected_path(4), run.coloring.colors).ok


def test_bidirected_petersen():
    d = bidirect(fixtures.petersen())
    run = acyclic_color(d, 4, 3)
    assert run.coloring.color_count <= 4
    assert verify_proper(fixtures.petersen(), run.coloring.colors).ok


def test_non_strong_input_is_split_into_components():
    run = acyclic_color(fixtures.transitive_tournament(4), 2, 0)
    assert run.coloring.colors == (0, 0, 0, 0)
    assert len(run.components) == 4
    assert all(c.seed is None for c in run.components)


def test_two_triangles_joined_by_an_arc():
    d = Digraph.from_arcs(6, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5), (5, 3)])
    run = acyclic_color(d, 2, 0, check_invariants=True)
    assert [c.vertices for c in run.components] == [(0, 1, 2), (3, 4, 5)]
    assert verify_acyclic(d, run.coloring.colors, max_colors=2).ok
    assert run.summary()['components'][1]['seed_residue'] == 1


def test_backward_branch_inserts_before_x():
    # both triangles have length 3; only a backward ear from 2 to 1 remains after the seed
    d = Digraph.from_arcs(4, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 1)])
    run = acyclic_color(d, 2, 0, check_invariants=True)
    (step,) = run.steps
    assert step.branch == 'backward'
    assert step.pair == (1, 2)
    assert step.residue == 0 and step.successor_empty
    (inner,) = step.ear.internal
    assert run.order.position(inner) == run.order.position(1) - 1
    assert verify_acyclic(d, run.coloring.colors, max_colors=2).ok


def test_residue_is_normalized():
    assert acyclic_color(fixtures.directed_cycle(5), 3, 3).r == 0


def test_hypothesis_violation_and_bad_k():
    with pytest.raises(HypothesisViolation) as exc:
        acyclic_color(fixtures.directed_cycle(3), 3, 0)
    assert exc.value.witness.length == 3
    with pytest.raises(InputError):
        acyclic_color(fixtures.directed_cycle(3), 1, 0)


def test_successor_classes_were_empty():
    run = acyclic_color(fixtures.odd_wheel_counterexample(2), 4, 1, check_invariants=True)
    for comp in run.components:
        assert comp.seed.successor_empty
    for step in run.steps:
        assert step.successor_empty
        if step.branch == 'cyclic':
            assert step.cyclic_successor_empty


def test_monochromatic_arcs_point_backward():
    d = fixtures.odd_wheel_counterexample(3)
    run = acyclic_color(d, 4, 1)
    colors = run.coloring.colors
    for comp in run.components:
        pos = {v: i for i, v in enumerate(comp.order)}
        for u, v in d.arcs:
            if u in pos and v in pos and colors[u] == colors[v]:
                assert pos[u] > pos[v]


@given(digraphs(max_n=5), st.sampled_from([2, 3, 4]), st.integers(min_value=0, max_value=3))
@settings(max_examples=200, deadline=None)
def test_random_digraphs(d, k, r):
    r %= k
    if not hypothesis_holds(d, k, r).holds:
        return
    run = acyclic_color(d, k, r, check_hypothesis=False, check_invariants=True)
    assert run.coloring.color_count <= k
    assert verify_acyclic(d, run.coloring.colors).ok
    assert all(step.successor_empty for step in run.steps)
    assert all(step.cyclic_successor_empty for step in run.steps if step.branch == 'cyclic')
