"""
Ear decomposition machinery shared by both coloring constructions.

An EarState is the growing strong subdigraph D_i of the host together with
the vertex potential f (colors 0..k-1) defined on its vertices. States are
values: extend() returns a new one.
"""

import logging
from dataclasses import dataclass, field
from typing import Callable, Dict, FrozenSet, Iterable, Iterator, List, Optional, Sequence, Tuple

import networkx as nx

from engine.config import Config
from engine.errors import EarSearchLimitExceeded, InvalidEarError
from engine.models import Arc, Digraph, Ear, VertexCycle

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class EarState:
    host: Digraph
    k: int
    vertices_in: FrozenSet[int]
    arcs_in: FrozenSet[Arc]
    f: Dict[int, int]
    seed: VertexCycle
    ears_added: Tuple[Ear, ...] = ()

    @property
    def complete(self) -> bool:
        return len(self.vertices_in) == self.host.n and len(self.arcs_in) == len(self.host.arcs)

    def color(self, v: int) -> int:
        return self.f[v]

    def is_strong(self) -> bool:
        g = nx.DiGraph()
        g.add_nodes_from(self.vertices_in)
        g.add_edges_from(self.arcs_in)
        return len(self.vertices_in) <= 1 or nx.is_strongly_connected(g)


def seed_state(host: Digraph, cycle: VertexCycle, k: int,
               f_values: Optional[Sequence[int]] = None) -> EarState:
    """D_0 = the given cycle; by default f(v_p) = p mod k along it."""
    vs = cycle.vertices
    if f_values is None:
        f_values = [p % k for p in range(len(vs))]
    for u, v in cycle.arcs():
        if not host.has_arc(u, v):
            raise InvalidEarError(f"Seed cycle uses missing arc ({u}, {v})")
    return EarState(
        host=host,
        k=k,
        vertices_in=frozenset(vs),
        arcs_in=frozenset(cycle.arcs()),
        f={v: f_values[p] % k for p, v in enumerate(vs)},
        seed=cycle,
    )


# ============================================
# EAR RESIDUES
# ============================================

def residue_of_ear(state: EarState, e: Ear) -> int:
    """f_i(P) = |P| - (f(v) - f(u)) mod k; for a cycle-ear this is |P| mod k."""
    try:
        fu, fv = state.f[e.origin], state.f[e.terminus]
    except KeyError as exc:
        raise InvalidEarError(f"Ear endpoint {exc.args[0]} lies outside the current subdigraph")
    return (e.length - (fv - fu)) % state.k


def length_residue(state: EarState, e: Ear) -> int:
    return e.length % state.k


# ============================================
# DISCOVERY
# ============================================

def iter_ears(state: EarState, max_paths: Optional[int] = None) -> Iterator[Ear]:
    """Every simple D_i-ear of the host, each exactly once.

    Single arcs between D_i vertices that D_i lacks come first per origin,
    then paths whose interior avoids D_i. A cycle-ear returns to its origin.
    Exceeding the path cap is an error: a truncated search could misjudge
    which ear classes are empty.
    """
    cap = Config.limit('max_ear_paths', max_paths)
    host, inside, arcs_in = state.host, state.vertices_in, state.arcs_in
    succ = host.succ
    count = 0

    def emit(vertices):
        nonlocal count
        count += 1
        if count > cap:
            logger.warning("Ear search cap of %d reached", cap)
            raise EarSearchLimitExceeded(f"More than {cap} ear paths; raise --max-ear-paths", limit=cap)
        return Ear(tuple(vertices))

    for u in sorted(inside):
        for w in succ[u]:
            if w in inside:
                if (u, w) not in arcs_in:
                    yield emit((u, w))
                continue
            path = [u, w]
            visited = {w}
            stack = [iter(succ[w])]
            while stack:
                nxt = next(stack[-1], None)
                if nxt is None:
                    stack.pop()
                    visited.discard(path.pop())
                    continue
                if nxt in inside:
                    yield emit(path + [nxt])
                elif nxt not in visited:
                    path.append(nxt)
                    visited.add(nxt)
                    stack.append(iter(succ[nxt]))


def enumerate_ears(state: EarState, max_paths: Optional[int] = None) -> List[Ear]:
    return list(iter_ears(state, max_paths))


def first_nonempty_class(ears: Iterable[Ear], state: EarState, priority: Sequence[int],
                         accept: Optional[Callable[[Ear], bool]] = None,
                         residue: Callable[[EarState, Ear], int] = residue_of_ear
                         ) -> Optional[Tuple[int, Ear]]:
    """Scan residues in priority order; return (s, lexicographically least ear of class s)."""
    classes = classify_by_residue(ears, state, accept, residue)
    for s in priority:
        members = classes.get(s % state.k)
        if members:
            return s % state.k, min(members, key=lambda e: e.vertices)
    return None


def classify_by_residue(ears: Iterable[Ear], state: EarState,
                        accept: Optional[Callable[[Ear], bool]] = None,
                        residue: Callable[[EarState, Ear], int] = residue_of_ear
                        ) -> Dict[int, List[Ear]]:
    classes: Dict[int, List[Ear]] = {}
    for e in ears:
        if accept is not None and not accept(e):
            continue
        classes.setdefault(residue(state, e), []).append(e)
    return classes


# ============================================
# EXTENSION
# ============================================

def validate_ear(state: EarState, e: Ear):
    vs = e.vertices
    if len(vs) < 2:
        raise InvalidEarError(f"Ear {vs} has no arc")
    if e.origin not in state.vertices_in or e.terminus not in state.vertices_in:
        raise InvalidEarError(f"Ear {vs} must start and end in the current subdigraph")
    interior = e.internal
    if any(v in state.vertices_in for v in interior):
        raise InvalidEarError(f"Ear {vs} re-enters the current subdigraph")
    if len(set(interior)) != len(interior) or (e.origin != e.terminus and e.origin in interior) \
            or e.terminus in interior:
        raise InvalidEarError(f"Ear {vs} is not simple")
    if e.origin == e.terminus and e.length < 2:
        raise InvalidEarError(f"Cycle-ear {vs} is too short")
    for a in e.arcs():
        if not state.host.has_arc(*a):
            raise InvalidEarError(f"Ear {vs} uses missing arc {a}")
        if a in state.arcs_in:
            raise InvalidEarError(f"Ear {vs} reuses arc {a} of the current subdigraph")


def extend(state: EarState, e: Ear, f_values: Sequence[int]) -> EarState:
    """D_{i+1} = D_i + e, with f extended to the ear's internal vertices."""
    validate_ear(state, e)
    if len(f_values) != len(e.internal):
        raise InvalidEarError(
            f"Ear {e.vertices} has {len(e.internal)} internal vertices, got {len(f_values)} colors")
    f = dict(state.f)
    for v, c in zip(e.internal, f_values):
        f[v] = c % state.k
    new_state = EarState(
        host=state.host,
        k=state.k,
        vertices_in=state.vertices_in | frozenset(e.internal),
        arcs_in=state.arcs_in | frozenset(e.arcs()),
        f=f,
        seed=state.seed,
        ears_added=state.ears_added + (e,),
    )
    if not new_state.is_strong():
        raise InvalidEarError(f"Adding ear {e.vertices} broke strong connectivity")
    return new_state


def replay(state: EarState) -> Tuple[FrozenSet[int], FrozenSet[Arc]]:
    """Rebuild D_i from the seed and the ear log."""
    vertices = set(state.seed.vertices)
    arcs = set(state.seed.arcs())
    for e in state.ears_added:
        vertices.update(e.vertices)
        arcs.update(e.arcs())
    return frozenset(vertices), frozenset(arcs)
