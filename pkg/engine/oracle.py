"""
Exact chromatic oracles for desk-scale instances.

Branch-and-bound search pruned by a clique lower bound and a DSATUR greedy
upper bound. Instances above Config.LIMITS['oracle_max_vertices'] are refused.
"""

from typing import List, Optional, Set, Tuple

import networkx as nx

from engine.config import Config
from engine.errors import OracleBoundExceeded
from engine.models import Digraph, UndirectedGraph


def check_oracle_bound(n: int, max_vertices: Optional[int] = None):
    bound = Config.limit('oracle_max_vertices', max_vertices)
    if n > bound:
        raise OracleBoundExceeded(f"Exact oracle refuses n={n} > {bound}", limit=bound)


def clique_number(g: UndirectedGraph) -> int:
    if g.n == 0:
        return 0
    return max(len(c) for c in nx.find_cliques(g.to_networkx()))


def greedy_color_count(g: UndirectedGraph) -> int:
    if g.n == 0:
        return 0
    coloring = nx.greedy_color(g.to_networkx(), strategy='DSATUR')
    return len(set(coloring.values()))


# ============================================
# PROPER COLORING
# ============================================

def find_proper_coloring(g: UndirectedGraph, k: int) -> Optional[Tuple[int, ...]]:
    """A proper coloring with colors 0..k-1, or None if none exists."""
    n = g.n
    if n == 0:
        return ()
    if k <= 0:
        return None
    nbrs = g.neighbors
    order = sorted(range(n), key=lambda v: (-len(nbrs[v]), v))
    colors = [-1] * n

    def place(i: int, used: int) -> bool:
        if i == n:
            return True
        v = order[i]
        forbidden = {colors[w] for w in nbrs[v]}
        # a fresh color is only ever the next unused one (symmetry breaking)
        for c in range(min(used + 1, k)):
            if c in forbidden:
                continue
            colors[v] = c
            if place(i + 1, max(used, c + 1)):
                return True
        colors[v] = -1
        return False

    return tuple(colors) if place(0, 0) else None


def exact_chromatic(g: UndirectedGraph, max_vertices: Optional[int] = None) -> int:
    check_oracle_bound(g.n, max_vertices)
    if g.n == 0:
        return 0
    if not g.edges:
        return 1
    lower = clique_number(g)
    upper = greedy_color_count(g)
    for k in range(lower, upper):
        if find_proper_coloring(g, k) is not None:
            return k
    return upper


# ============================================
# ACYCLIC COLORING
# ============================================

def _closes_cycle(succ, members: Set[int], v: int) -> bool:
    """Whether v lies on a cycle inside members + {v} (members itself acyclic)."""
    stack = [w for w in succ[v] if w in members]
    seen = set(stack)
    while stack:
        u = stack.pop()
        for w in succ[u]:
            if w == v:
                return True
            if w in members and w not in seen:
                seen.add(w)
                stack.append(w)
    return False


def find_acyclic_coloring(d: Digraph, k: int) -> Optional[Tuple[int, ...]]:
    """Colors 0..k-1 such that every class induces an acyclic subdigraph."""
    n = d.n
    if n == 0:
        return ()
    if k <= 0:
        return None
    succ = d.succ
    order = sorted(range(n), key=lambda v: (-(len(succ[v]) + len(d.pred[v])), v))
    colors = [-1] * n
    classes: List[Set[int]] = [set() for _ in range(k)]

    def place(i: int, used: int) -> bool:
        if i == n:
            return True
        v = order[i]
        for c in range(min(used + 1, k)):
            if _closes_cycle(succ, classes[c], v):
                continue
            colors[v] = c
            classes[c].add(v)
            if place(i + 1, max(used, c + 1)):
                return True
            classes[c].discard(v)
        colors[v] = -1
        return False

    return tuple(colors) if place(0, 0) else None


def exact_acyclic_chromatic(d: Digraph, max_vertices: Optional[int] = None) -> int:
    check_oracle_bound(d.n, max_vertices)
    for k in range(0, d.n + 1):
        if find_acyclic_coloring(d, k) is not None:
            return k
    return d.n
