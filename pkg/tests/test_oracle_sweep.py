import random
from types import SimpleNamespace

import pytest

import scripts.oracle_sweep as oracle_sweep
from data_sources import fixtures
from scripts.oracle_sweep import SWEEPS, Tally, brute_force_cycle_count, build_parser


def test_brute_force_count_matches_known_values():
    assert brute_force_cycle_count(fixtures.bidirected_complete(3)) == 5
    assert brute_force_cycle_count(fixtures.directed_cycle(5)) == 1
    assert brute_force_cycle_count(fixtures.transitive_tournament(4)) == 0


def test_acceptance_sized_defaults():
    args = build_parser().parse_args([])
    assert args.instances == 10000
    assert args.sweep == 'all'


@pytest.mark.parametrize('name', sorted(SWEEPS))
def test_reduced_sweeps_pass(name):
    tally = Tally(name)
    SWEEPS[name](random.Random(f"7:{name}"), 15, tally)
    assert tally.instances > 0
    assert tally.failures == []


def test_invariant_sweep_flags_nonempty_successor_class(monkeypatch):
    skipped = SimpleNamespace(successor_empty=False)
    monkeypatch.setattr(oracle_sweep, 'color_mod1',
                        lambda *args, **kwargs: SimpleNamespace(seed=skipped, steps=()))
    monkeypatch.setattr(oracle_sweep, 'acyclic_color',
                        lambda *args, **kwargs: SimpleNamespace(
                            components=(), steps=(SimpleNamespace(successor_empty=True,
                                                                  cyclic_successor_empty=False),)))
    tally = Tally('invariants')
    oracle_sweep.sweep_invariants(random.Random(0), 0, tally)
    assert tally.failures
    assert any('proper run' in f for f in tally.failures)
    assert any('acyclic run' in f for f in tally.failures)
