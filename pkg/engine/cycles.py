"""
Cycle oracle: exact facts about simple cycles and paths.

Every answer here is exact. When a search would exceed its configured cap the
functions raise instead of returning a partial answer, except
enumerate_cycles(limit=...) which reports truncation explicitly.
"""

import logging
from functools import lru_cache
from typing import Iterator, Optional, Set

import networkx as nx

from engine.config import Config
from engine.digraph import bidirect
from engine.errors import CycleLimitExceeded, InputError, OracleBoundExceeded
from engine.models import (
    CycleListing, CycleStats, Digraph, HypothesisVerdict, ResidueCensus,
    UndirectedGraph, VertexCycle,
)

logger = logging.getLogger(__name__)


def _check_modulus(k: int):
    if k < 2:
        raise InputError(f"Modulus k must be at least 2, got {k}")


# ============================================
# ENUMERATION
# ============================================

def iter_cycles(d: Digraph) -> Iterator[VertexCycle]:
    """Yield every simple directed cycle once, in canonical rotation.

    Johnson's algorithm (networkx); the order is fixed for a fixed digraph
    because the networkx graph is always built from sorted arcs.
    """
    for cycle in nx.simple_cycles(d.to_networkx()):
        yield VertexCycle.canonical(cycle)


def _capped(d: Digraph, max_cycles: Optional[int]) -> Iterator[VertexCycle]:
    cap = Config.limit('max_cycles', max_cycles)
    for count, cycle in enumerate(iter_cycles(d), start=1):
        if count > cap:
            logger.warning("Cycle cap of %d reached on n=%d", cap, d.n)
            raise CycleLimitExceeded(f"More than {cap} cycles; raise --max-cycles", limit=cap)
        yield cycle


def enumerate_cycles(d: Digraph, limit: Optional[int] = None) -> CycleListing:
    """All simple cycles, or the first `limit` of them with truncated=True."""
    cycles = []
    for cycle in iter_cycles(d):
        if limit is not None and len(cycles) >= limit:
            return CycleListing(tuple(cycles), truncated=True)
        cycles.append(cycle)
    return CycleListing(tuple(cycles), truncated=False)


def cycle_lengths(d: Digraph, min_length: int = 2, max_cycles: Optional[int] = None) -> Set[int]:
    return {c.length for c in _capped(d, max_cycles) if c.length >= min_length}


# ============================================
# RESIDUES
# ============================================

def residue_census(d: Digraph, k: int, with_counts: bool = False,
                   max_cycles: Optional[int] = None, min_length: int = 2) -> ResidueCensus:
    """Which residues j in 0..k-1 are realised by cycle lengths, with witnesses.

    Without counts the scan stops once every residue has a witness. Cycles
    shorter than min_length are skipped (3 for a bidirected undirected graph).
    """
    _check_modulus(k)
    witnesses = {}
    counts = {j: 0 for j in range(k)}
    for cycle in _capped(d, max_cycles):
        if cycle.length < min_length:
            continue
        j = cycle.length % k
        witnesses.setdefault(j, cycle)
        counts[j] += 1
        if not with_counts and len(witnesses) == k:
            return ResidueCensus(k, witnesses, counts=None)
    return ResidueCensus(k, witnesses, counts=counts)


def hypothesis_holds(d: Digraph, k: int, r: int, max_cycles: Optional[int] = None) -> HypothesisVerdict:
    """Decide 'd has no cycle of length r modulo k'; on failure return a witness."""
    _check_modulus(k)
    r = r % k
    for cycle in _capped(d, max_cycles):
        if cycle.length % k == r:
            return HypothesisVerdict(k, r, holds=False, witness=cycle)
    return HypothesisVerdict(k, r, holds=True)


def undirected_hypothesis_holds(g: UndirectedGraph, k: int, r: int,
                                max_cycles: Optional[int] = None) -> HypothesisVerdict:
    """Same test for an undirected graph: only cycles of length >= 3 count.

    The 2-cycles of the bidirected digraph are artifacts, not cycles of g.
    """
    _check_modulus(k)
    r = r % k
    for cycle in _capped(bidirect(g), max_cycles):
        if cycle.length >= 3 and cycle.length % k == r:
            return HypothesisVerdict(k, r, holds=False, witness=cycle)
    return HypothesisVerdict(k, r, holds=True)


def odd_cycle_lengths(g: UndirectedGraph, max_cycles: Optional[int] = None) -> Set[int]:
    """L_o(G): the distinct odd cycle lengths of an undirected graph."""
    return {n for n in cycle_lengths(bidirect(g), 3, max_cycles) if n % 2 == 1}


def even_cycle_lengths(g: UndirectedGraph, max_cycles: Optional[int] = None) -> Set[int]:
    """L_e(G): the distinct even cycle lengths (>= 4) of an undirected graph."""
    return {n for n in cycle_lengths(bidirect(g), 3, max_cycles) if n % 2 == 0}


# ============================================
# LENGTH STATISTICS
# ============================================

def longest_path_vertices(d: Digraph, max_vertices: Optional[int] = None) -> int:
    """Number of vertices on a longest simple directed path (exact)."""
    bound = Config.limit('longest_path_max_vertices', max_vertices)
    if d.n > bound:
        raise OracleBoundExceeded(f"Longest path search refuses n={d.n} > {bound}", limit=bound)
    if d.n == 0:
        return 0
    succ = d.succ

    @lru_cache(maxsize=None)
    def best_from(v: int, visited: int) -> int:
        best = 1
        for w in succ[v]:
            if not visited >> w & 1:
                best = max(best, 1 + best_from(w, visited | (1 << w)))
        return best

    result = max(best_from(v, 1 << v) for v in range(d.n))
    best_from.cache_clear()
    return result


def cycle_stats(d: Digraph, max_cycles: Optional[int] = None) -> CycleStats:
    lengths = cycle_lengths(d, 2, max_cycles)
    odd = [n for n in lengths if n % 2 == 1]
    return CycleStats(
        circumference=max(lengths, default=0),
        odd_circumference=max(odd, default=1),
        longest_path_vertices=longest_path_vertices(d),
    )
