"""
Proper k-coloring of a strong digraph with no cycle of length 1 modulo k.

The construction grows an ear decomposition while keeping two properties of
the potential f on the current subdigraph D_i:

  (A) no arc of D_i is monochromatic;
  (B) no D_i-ear P has f_i(P) = |P| - (f(v) - f(u)) congruent to 1.

Each step adds an ear from the first nonempty residue class in the order
0, k-1, k-2, ..., 2 and colors its interior consecutively from f(u_0).
"""

import logging
from dataclasses import dataclass
from typing import List, Optional, Tuple

from engine.config import Config
from engine.cycles import hypothesis_holds, residue_census
from engine.digraph import strongly_connected
from engine.ears import (
    EarState, classify_by_residue, enumerate_ears, extend, first_nonempty_class, residue_of_ear,
    seed_state,
)
from engine.errors import HypothesisViolation, InputError, InvariantBreach
from engine.models import (
    Coloring, ColoringKind, Digraph, Ear, HypothesisVerdict, InvariantDiagnostic, VertexCycle,
)
from engine.verification import certify

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SeedRecord:
    cycle: VertexCycle
    residue: int
    successor_empty: bool      # C_{t+1} had no cycle


@dataclass(frozen=True)
class StepRecord:
    ear: Ear
    residue: int               # the chosen class s
    successor_empty: bool      # P_{s+1} was empty when s was chosen

    def to_dict(self):
        return {'ear': self.ear.to_list(), 'class': self.residue,
                'successor_empty': self.successor_empty}


@dataclass(frozen=True)
class ProperColoringRun:
    digraph: Digraph
    k: int
    coloring: Coloring
    seed: SeedRecord
    steps: Tuple[StepRecord, ...]
    hypothesis: Optional[HypothesisVerdict] = None

    @property
    def seed_residue(self) -> int:
        return self.seed.residue

    @property
    def decomposition(self) -> Tuple[Ear, ...]:
        return tuple(s.ear for s in self.steps)

    def summary(self):
        return {
            'seed_cycle': self.seed.cycle.to_list(),
            'seed_residue': self.seed.residue,
            'ears': len(self.steps),
            'steps': [s.to_dict() for s in self.steps],
        }


def residue_priority(k: int) -> List[int]:
    """Class order 0 (i.e. k), k-1, ..., 2; residue 1 is the forbidden one."""
    return [0] + list(range(k - 1, 1, -1))


# ============================================
# INVARIANT CHECK
# ============================================

def assert_AB(state: EarState, max_paths: Optional[int] = None) -> InvariantDiagnostic:
    """Re-derive every ear and check (A) on D_i's arcs and (B) on all ears."""
    f = state.f
    for u, v in sorted(state.arcs_in):
        if f[u] == f[v]:
            return InvariantDiagnostic(False, 'A', f"arc ({u}, {v}) is monochromatic", (u, v))
    for e in enumerate_ears(state, max_paths):
        if residue_of_ear(state, e) == 1 % state.k:
            return InvariantDiagnostic(False, 'B', f"ear {e.vertices} has f_i = 1", e.vertices)
    return InvariantDiagnostic.passed()


def _guard(state: EarState, enabled: bool):
    if not enabled:
        return
    diagnostic = assert_AB(state)
    if not diagnostic.ok:
        raise InvariantBreach(f"Property ({diagnostic.violated}) failed: {diagnostic.detail}",
                              witness=diagnostic)


# ============================================
# CONSTRUCTION
# ============================================

def color_mod1(d: Digraph, k: int, check_hypothesis: bool = True,
               check_invariants: Optional[bool] = None) -> ProperColoringRun:
    """Proper coloring with colors 0..k-1 of a strong digraph lacking cycles = 1 (mod k)."""
    if k < 2:
        raise InputError(f"k must be at least 2, got {k}")
    if d.n < 2:
        raise InputError("The digraph must have at least two vertices")
    if not strongly_connected(d):
        raise InputError("The digraph must be strongly connected")
    if check_invariants is None:
        check_invariants = Config.DEFAULTS['check_invariants']

    verdict = None
    if check_hypothesis:
        verdict = hypothesis_holds(d, k, 1)
        if not verdict.holds:
            raise HypothesisViolation(
                f"Cycle of length {verdict.witness.length} = 1 (mod {k}) exists", witness=verdict.witness)

    priority = residue_priority(k)
    census = residue_census(d, k)
    t = next((j for j in priority if census.realized(j)), None)
    if t is None:
        raise HypothesisViolation(f"Every cycle has length 1 (mod {k})", witness=census.witness(1))
    seed = SeedRecord(census.witness(t), t, not census.realized(t + 1))
    state = seed_state(d, seed.cycle, k)
    logger.debug("Seed D_0=%s from class %d", seed.cycle.vertices, t)
    _guard(state, check_invariants)

    steps = []
    while not state.complete:
        ears = enumerate_ears(state)
        if not ears:
            raise InvariantBreach("Strong host has no ear of a proper subdigraph")
        choice = first_nonempty_class(ears, state, priority)
        if choice is None:
            raise InvariantBreach(
                f"Only ears with f_i = 1 (mod {k}) remain; the hypothesis must be false",
                witness=min(ears, key=lambda e: e.vertices))
        s, ear = choice
        classes = classify_by_residue(ears, state)
        steps.append(StepRecord(ear, s, not classes.get((s + 1) % k)))
        base = state.f[ear.origin]
        state = extend(state, ear, [(base + j) % k for j in range(1, ear.length)])
        logger.debug("Added ear %s from class %d", ear.vertices, s)
        _guard(state, check_invariants)

    colors = tuple(state.f[v] for v in range(d.n))
    coloring = certify(d, Coloring(colors, ColoringKind.PROPER), max_colors=k)
    logger.info("Proper coloring: n=%d k=%d colors=%d ears=%d",
                d.n, k, coloring.color_count, len(steps))
    return ProperColoringRun(d, k, coloring, seed, tuple(steps), verdict)
