"""
Acyclic k-coloring of a digraph with no cycle of length r modulo k.

Each nontrivial strong component is colored by an ear decomposition that
maintains, besides the potential f, a linear order on D_i and a table alpha
over ordered pairs, with three properties:

  (A) no forward arc of D_i is monochromatic;
  (B) no forward D_i-ear has f_i(P) congruent to 1;
  (C) no backward D_i-ear from v to u (u before v) has length alpha(u, v) mod k.

Monochromatic arcs are therefore backward, so every color class is acyclic.
alpha is kept for every pair of D_i, not only for pairs that already have a
backward ear; a pair gets its value once, when its later vertex arrives.
"""

import logging
from dataclasses import dataclass
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Tuple

from engine.config import Config
from engine.cycles import hypothesis_holds, residue_census
from engine.digraph import induced_subdigraph, strong_components
from engine.ears import (
    EarState, classify_by_residue, enumerate_ears, extend, first_nonempty_class, length_residue,
    residue_of_ear, seed_state,
)
from engine.errors import HypothesisViolation, InputError, InvalidEarError, InvariantBreach
from engine.models import (
    Coloring, ColoringKind, Digraph, Ear, EarDirection, HypothesisVerdict,
    InvariantDiagnostic, VertexCycle,
)
from engine.verification import certify

logger = logging.getLogger(__name__)


# ============================================
# ORDER AND ALPHA TABLE
# ============================================

class LinearOrder:
    """Total order on the vertices of D_i. Insertions return a new order."""

    def __init__(self, sequence: Iterable[int]):
        self._seq = tuple(sequence)
        self._pos = {v: i for i, v in enumerate(self._seq)}
        if len(self._pos) != len(self._seq):
            raise ValueError("Order contains a repeated vertex")

    def __iter__(self) -> Iterator[int]:
        return iter(self._seq)

    def __len__(self) -> int:
        return len(self._seq)

    def __contains__(self, v) -> bool:
        return v in self._pos

    def __repr__(self):
        return f"LinearOrder({list(self._seq)})"

    @property
    def sequence(self) -> Tuple[int, ...]:
        return self._seq

    def position(self, v: int) -> int:
        return self._pos[v]

    def precedes(self, u: int, v: int) -> bool:
        return self._pos[u] < self._pos[v]

    def compare(self, u: int, v: int) -> int:
        pu, pv = self._pos[u], self._pos[v]
        return (pu > pv) - (pu < pv)

    def successor(self, v: int) -> Optional[int]:
        i = self._pos[v] + 1
        return self._seq[i] if i < len(self._seq) else None

    def predecessor(self, v: int) -> Optional[int]:
        i = self._pos[v] - 1
        return self._seq[i] if i >= 0 else None

    def interval_size(self, x: int, y: int) -> int:
        """|[x, y]|, the number of vertices z with x <= z <= y."""
        return abs(self._pos[y] - self._pos[x]) + 1

    def insert_after(self, anchor: int, block: Sequence[int]) -> 'LinearOrder':
        i = self._pos[anchor] + 1
        return LinearOrder(self._seq[:i] + tuple(block) + self._seq[i:])

    def insert_before(self, anchor: int, block: Sequence[int]) -> 'LinearOrder':
        i = self._pos[anchor]
        return LinearOrder(self._seq[:i] + tuple(block) + self._seq[i:])


class AlphaTable:
    """alpha over ordered pairs (a, b) with a before b, values in 0..k-1."""

    def __init__(self, k: int, values: Optional[Dict[Tuple[int, int], int]] = None):
        self.k = k
        self._values = dict(values or {})

    def __len__(self) -> int:
        return len(self._values)

    def __contains__(self, pair) -> bool:
        return pair in self._values

    def items(self):
        return self._values.items()

    def value(self, u: int, v: int, order: LinearOrder) -> int:
        """alpha of the pair {u, v}, whichever of the two comes first."""
        key = (u, v) if order.precedes(u, v) else (v, u)
        return self._values[key]

    def with_entries(self, entries: Dict[Tuple[int, int], int]) -> 'AlphaTable':
        values = dict(self._values)
        for pair, value in entries.items():
            values[pair] = value % self.k
        return AlphaTable(self.k, values)

    def corrupted(self, pair: Tuple[int, int], value: int) -> 'AlphaTable':
        """Copy with one entry overwritten (mutation testing)."""
        values = dict(self._values)
        values[pair] = value % self.k
        return AlphaTable(self.k, values)


@dataclass(frozen=True)
class AcyclicState:
    ears: EarState
    order: LinearOrder
    alpha: AlphaTable
    r: int

    @property
    def k(self) -> int:
        return self.ears.k

    @property
    def complete(self) -> bool:
        return self.ears.complete


@dataclass(frozen=True)
class SeedRecord:
    cycle: VertexCycle
    residue: int
    successor_empty: bool      # C_{t+1} had no cycle


@dataclass(frozen=True)
class AcyclicStep:
    branch: str                # 'forward', 'cyclic' or 'backward'
    ear: Ear
    residue: int               # s of the chosen class P_s, Q_s or R_s
    successor_empty: bool      # P_{s+1} (forward/cyclic) or R_{s+1} (backward) was empty
    cyclic_successor_empty: Optional[bool] = None   # Q_{s+1}, recorded when a cyclic ear is chosen
    pair: Optional[Tuple[int, int]] = None          # backward pair (x, y)

    def relabel(self, original: Sequence[int]) -> 'AcyclicStep':
        pair = None if self.pair is None else (original[self.pair[0]], original[self.pair[1]])
        return AcyclicStep(self.branch, Ear(tuple(original[v] for v in self.ear.vertices)),
                           self.residue, self.successor_empty, self.cyclic_successor_empty, pair)

    def to_dict(self):
        out = {'branch': self.branch, 'ear': self.ear.to_list(), 'class': self.residue,
               'successor_empty': self.successor_empty}
        if self.cyclic_successor_empty is not None:
            out['cyclic_successor_empty'] = self.cyclic_successor_empty
        if self.pair is not None:
            out['pair'] = list(self.pair)
        return out


@dataclass(frozen=True)
class ComponentRun:
    vertices: Tuple[int, ...]  # host ids
    order: Tuple[int, ...]     # host ids, final order on the component
    seed: Optional[SeedRecord]
    steps: Tuple[AcyclicStep, ...]


@dataclass(frozen=True)
class AcyclicColoringRun:
    digraph: Digraph
    k: int
    r: int
    coloring: Coloring
    components: Tuple[ComponentRun, ...]
    hypothesis: Optional[HypothesisVerdict] = None

    @property
    def order(self) -> LinearOrder:
        """Component orders concatenated in condensation order."""
        return LinearOrder(v for comp in self.components for v in comp.order)

    @property
    def steps(self) -> Tuple[AcyclicStep, ...]:
        return tuple(s for comp in self.components for s in comp.steps)

    def summary(self):
        return {
            'components': [
                {
                    'vertices': list(c.vertices),
                    'seed_cycle': None if c.seed is None else c.seed.cycle.to_list(),
                    'seed_residue': None if c.seed is None else c.seed.residue,
                    'order': list(c.order),
                    'steps': [s.to_dict() for s in c.steps],
                }
                for c in self.components
            ],
            'ears': len(self.steps),
        }


# ============================================
# PRIORITIES
# ============================================

def descending_from(start: int, k: int) -> List[int]:
    """start, start-1, ..., start+2 (mod k): the k-1 residues other than start+1."""
    return [(start - i) % k for i in range(k - 1)]


def seed_priority(k: int, r: int) -> List[int]:
    """C_{r-1} > ... > C_0 > C_{k-1} > ... > C_{r+1}."""
    return descending_from(r - 1, k)


def forward_priority(k: int) -> List[int]:
    """P_0 > P_{k-1} > ... > P_2."""
    return [0] + list(range(k - 1, 1, -1))


def cyclic_priority(k: int, r: int) -> List[int]:
    """Q_{r-1} > ... > Q_0 > Q_{k-1} > ... > Q_{r+1}."""
    return descending_from(r - 1, k)


def backward_priority(k: int, alpha: int) -> List[int]:
    """R_{alpha-1} > R_{alpha-2} > ... > R_{alpha+1}."""
    return descending_from(alpha - 1, k)


# ============================================
# CLASSIFICATION AND INVARIANTS
# ============================================

def classify_ear(state: EarState, order: LinearOrder, e: Ear) -> EarDirection:
    if e.origin not in order or e.terminus not in order:
        raise InvalidEarError(f"Ear {e.vertices} has an endpoint outside the order")
    if e.origin == e.terminus:
        return EarDirection.CYCLIC
    return EarDirection.FORWARD if order.precedes(e.origin, e.terminus) else EarDirection.BACKWARD


def assert_ABC(state: EarState, order: LinearOrder, alpha: AlphaTable,
               max_paths: Optional[int] = None) -> InvariantDiagnostic:
    """Re-derive every ear and check (A), (B) and (C)."""
    if set(order) != set(state.vertices_in):
        return InvariantDiagnostic(False, 'order', "order does not cover exactly the vertices of D_i")
    f, k = state.f, state.k
    for u, v in sorted(state.arcs_in):
        if order.precedes(u, v) and f[u] == f[v]:
            return InvariantDiagnostic(False, 'A', f"forward arc ({u}, {v}) is monochromatic", (u, v))
    for e in enumerate_ears(state, max_paths):
        direction = classify_ear(state, order, e)
        if direction == EarDirection.FORWARD and residue_of_ear(state, e) == 1 % k:
            return InvariantDiagnostic(False, 'B', f"forward ear {e.vertices} has f_i = 1", e.vertices)
        if direction == EarDirection.BACKWARD:
            a = alpha.value(e.terminus, e.origin, order)
            if e.length % k == a:
                return InvariantDiagnostic(
                    False, 'C', f"backward ear {e.vertices} has length = alpha = {a} (mod {k})", e.vertices)
    return InvariantDiagnostic.passed()


# ============================================
# CONSTRUCTION STEPS
# ============================================

def seed_acyclic_state(d: Digraph, k: int, r: int) -> Tuple[AcyclicState, SeedRecord]:
    """D_0 from the first nonempty class of the seed order; f and alpha along it."""
    r = r % k
    census = residue_census(d, k)
    t = next((j for j in seed_priority(k, r) if census.realized(j)), None)
    if t is None:
        raise HypothesisViolation(f"Every cycle has length {r} (mod {k})", witness=census.witness(r))
    cycle = census.witness(t)
    vs = cycle.vertices
    alpha = AlphaTable(k).with_entries({
        (vs[i], vs[j]): i - j + r for i in range(len(vs)) for j in range(i + 1, len(vs))
    })
    state = AcyclicState(seed_state(d, cycle, k), LinearOrder(vs), alpha, r)
    return state, SeedRecord(cycle, t, not census.realized(t + 1))


def _forward_alpha(state: AcyclicState, order: LinearOrder, f: Dict[int, int], ear: Ear) -> Dict:
    """alpha for every pair gaining a vertex from a forward or cyclic ear u_0 ... u_h."""
    old_order, alpha, r = state.order, state.alpha, state.r
    vs, h = ear.vertices, ear.length
    u0, uh = vs[0], vs[-1]
    index = {vs[j]: j for j in range(h)}
    index.setdefault(uh, h)
    new = set(ear.internal)
    entries = {}
    seq = order.sequence
    for i, a in enumerate(seq):
        for b in seq[i + 1:]:
            if a not in new and b not in new:
                continue
            if a in index and b in index:
                entries[(a, b)] = r - (index[b] - index[a])
            elif a in new:
                if old_order.precedes(uh, b):
                    entries[(a, b)] = alpha.value(uh, b, old_order) - (h - index[a])
                else:
                    entries[(a, b)] = f[a] - f[b] + 1
            else:
                entries[(a, b)] = alpha.value(a, u0, old_order) - f[b] + f[u0]
    return entries


def _backward_alpha(state: AcyclicState, order: LinearOrder, f: Dict[int, int], ear: Ear,
                    x: int, y: int, alpha_xy: int) -> Dict:
    """alpha for every pair gaining a vertex from a backward ear y = u_h ... u_0 = x."""
    old_order, alpha, r = state.order, state.alpha, state.r
    h = ear.length
    on_ear = set(ear.vertices)
    new = set(ear.internal)
    entries = {}
    seq = order.sequence
    for i, a in enumerate(seq):
        for b in seq[i + 1:]:
            if a not in new and b not in new:
                continue
            if a in new and b == y:
                entries[(a, b)] = alpha_xy - f[x] + f[a]
            elif a in new and b in on_ear:
                entries[(a, b)] = f[a] - f[b] + r
            elif a in new:
                entries[(a, b)] = alpha.value(b, x, old_order) - f[x] + f[a]
            else:
                entries[(a, b)] = alpha.value(a, y, old_order) - h + f[x] - f[b]
    return entries


def advance(state: AcyclicState, max_paths: Optional[int] = None) -> Tuple[AcyclicState, AcyclicStep]:
    """One ear: forward/cyclic branch when such ears exist, otherwise the backward branch."""
    es, order, k, r = state.ears, state.order, state.k, state.r
    ears = enumerate_ears(es, max_paths)
    if not ears:
        raise InvariantBreach("Strong host has no ear of a proper subdigraph")
    by_direction: Dict[EarDirection, List[Ear]] = {d: [] for d in EarDirection}
    for e in ears:
        by_direction[classify_ear(es, order, e)].append(e)

    if by_direction[EarDirection.FORWARD] or by_direction[EarDirection.CYCLIC]:
        forward, cyclic = by_direction[EarDirection.FORWARD], by_direction[EarDirection.CYCLIC]
        p_classes = classify_by_residue(forward, es)
        q_classes = classify_by_residue(cyclic, es)
        branch, choice = 'forward', first_nonempty_class(forward, es, forward_priority(k))
        if choice is None:
            branch, choice = 'cyclic', first_nonempty_class(cyclic, es, cyclic_priority(k, r))
        if choice is None:
            raise InvariantBreach(
                f"Every forward ear has f_i = 1 and every cyclic ear length {r} (mod {k})")
        s, ear = choice
        step = AcyclicStep(
            branch, ear, s,
            successor_empty=not p_classes.get((s + 1) % k),
            cyclic_successor_empty=(not q_classes.get((s + 1) % k)) if branch == 'cyclic' else None,
        )
        u0 = ear.origin
        f_values = [(es.f[u0] + j) % k for j in range(1, ear.length)]
        new_ears = extend(es, ear, f_values)
        new_order = order.insert_after(u0, ear.internal)
        entries = _forward_alpha(state, new_order, new_ears.f, ear)
    else:
        backward = by_direction[EarDirection.BACKWARD]
        x, y = min(
            {(e.terminus, e.origin) for e in backward},
            key=lambda p: (order.interval_size(p[0], p[1]), order.position(p[0]), order.position(p[1])),
        )
        alpha_xy = state.alpha.value(x, y, order)
        def spans_pair(e: Ear) -> bool:
            return e.origin == y and e.terminus == x

        r_classes = classify_by_residue(backward, es, spans_pair, residue=length_residue)
        choice = first_nonempty_class(backward, es, backward_priority(k, alpha_xy), spans_pair,
                                      residue=length_residue)
        if choice is None:
            raise InvariantBreach(f"Every backward ear from {y} to {x} has length alpha = {alpha_xy}")
        s, ear = choice
        step = AcyclicStep('backward', ear, s, successor_empty=not r_classes.get((s + 1) % k), pair=(x, y))
        h = ear.length
        # traversal position t holds u_{h-t}, colored f(x) - (h - t)
        f_values = [(es.f[x] - (h - t)) % k for t in range(1, h)]
        new_ears = extend(es, ear, f_values)
        new_order = order.insert_before(x, ear.internal)
        entries = _backward_alpha(state, new_order, new_ears.f, ear, x, y, alpha_xy)

    logger.debug("%s ear %s from class %d", step.branch, ear.vertices, step.residue)
    new_state = AcyclicState(new_ears, new_order, state.alpha.with_entries(entries), r)
    return new_state, step


def _guard(state: AcyclicState, enabled: bool):
    if not enabled:
        return
    diagnostic = assert_ABC(state.ears, state.order, state.alpha)
    if not diagnostic.ok:
        raise InvariantBreach(f"Property ({diagnostic.violated}) failed: {diagnostic.detail}",
                              witness=diagnostic)


def color_strong(d: Digraph, k: int, r: int,
                 check_invariants: bool = False) -> Tuple[AcyclicState, SeedRecord, List[AcyclicStep]]:
    """Run the construction on a nontrivial strong digraph to completion."""
    state, seed = seed_acyclic_state(d, k, r)
    _guard(state, check_invariants)
    steps = []
    while not state.complete:
        state, step = advance(state)
        steps.append(step)
        _guard(state, check_invariants)
    return state, seed, steps


# ============================================
# ENTRY POINT
# ============================================

def acyclic_color(d: Digraph, k: int, r: int, check_hypothesis: bool = True,
                  check_invariants: Optional[bool] = None) -> AcyclicColoringRun:
    """Acyclic coloring with colors 0..k-1 of a digraph lacking cycles = r (mod k).

    Strong components are colored independently with the same palette; arcs
    between components lie on no cycle, so the union stays acyclic per class.
    """
    if k < 2:
        raise InputError(f"k must be at least 2, got {k}")
    r = r % k
    if check_invariants is None:
        check_invariants = Config.DEFAULTS['check_invariants']

    verdict = None
    if check_hypothesis:
        verdict = hypothesis_holds(d, k, r)
        if not verdict.holds:
            raise HypothesisViolation(
                f"Cycle of length {verdict.witness.length} = {r} (mod {k}) exists", witness=verdict.witness)

    colors = [0] * d.n
    runs = []
    for comp in strong_components(d):
        if len(comp) == 1:
            runs.append(ComponentRun(comp, comp, None, ()))
            continue
        sub = induced_subdigraph(d, comp)
        state, seed, steps = color_strong(sub.digraph, k, r, check_invariants)
        original = sub.original
        sub.pull_back([state.ears.f[v] for v in range(len(original))], into=colors)
        runs.append(ComponentRun(
            vertices=comp,
            order=tuple(original[v] for v in state.order),
            seed=SeedRecord(VertexCycle.canonical(original[v] for v in seed.cycle.vertices),
                            seed.residue, seed.successor_empty),
            steps=tuple(s.relabel(original) for s in steps),
        ))

    coloring = certify(d, Coloring(tuple(colors), ColoringKind.ACYCLIC), max_colors=k)
    logger.info("Acyclic coloring: n=%d k=%d r=%d colors=%d components=%d",
                d.n, k, r, coloring.color_count, len(runs))
    return AcyclicColoringRun(d, k, r, coloring, tuple(runs), verdict)
