"""
Digraph structure: connectivity, strong components, and graph transformations.

All functions are pure: they take immutable graphs and return new values.
"""

from dataclasses import dataclass
from typing import Iterable, List, Optional, Sequence, Tuple

import networkx as nx

from engine.errors import InputError
from engine.models import Digraph, UndirectedGraph


@dataclass(frozen=True)
class InducedSubdigraph:
    """D[S] re-indexed to 0..|S|-1; `original[i]` is the host vertex of local vertex i."""
    digraph: Digraph
    original: Tuple[int, ...]

    def local(self, host_vertex: int) -> int:
        return self.original.index(host_vertex)

    def pull_back(self, local_colors: Sequence[int], host_n: int = 0, fill: int = 0,
                  into: Optional[List[int]] = None) -> List[int]:
        """Spread a coloring of the subdigraph onto host vertex ids.

        With `into`, the host list is updated in place and returned.
        """
        colors = into if into is not None else [fill] * host_n
        for i, v in enumerate(self.original):
            colors[v] = local_colors[i]
        return colors


# ============================================
# CONNECTIVITY
# ============================================

def strongly_connected(d: Digraph) -> bool:
    """True iff every ordered vertex pair is joined by a directed path."""
    if d.n <= 1:
        return True
    return nx.is_strongly_connected(d.to_networkx())


def strong_components(d: Digraph) -> List[Tuple[int, ...]]:
    """Strong components in a topological order of the condensation.

    Every arc between two components goes from an earlier to a later one.
    Ties are broken by smallest member so the order is reproducible.
    """
    if d.n == 0:
        return []
    g = d.to_networkx()
    cond = nx.condensation(g)
    members = {c: tuple(sorted(cond.nodes[c]['members'])) for c in cond.nodes}
    order = nx.lexicographical_topological_sort(cond, key=lambda c: members[c][0])
    return [members[c] for c in order]


def is_acyclic(d: Digraph) -> bool:
    return nx.is_directed_acyclic_graph(d.to_networkx())


def is_semicomplete(d: Digraph) -> bool:
    """Every pair of distinct vertices is joined by at least one arc."""
    return all(d.adjacent(u, v) for u in range(d.n) for v in range(u + 1, d.n))


# ============================================
# TRANSFORMATIONS
# ============================================

def bidirect(g: UndirectedGraph) -> Digraph:
    """Replace each edge {u, v} by the opposite arcs (u, v) and (v, u)."""
    arcs = set()
    for u, v in g.edges:
        arcs.add((u, v))
        arcs.add((v, u))
    return Digraph(g.n, frozenset(arcs))


def underlying_graph(d: Digraph) -> UndirectedGraph:
    return UndirectedGraph(d.n, frozenset((min(u, v), max(u, v)) for u, v in d.arcs))


def induced_subdigraph(d: Digraph, s: Iterable[int]) -> InducedSubdigraph:
    members = tuple(sorted(set(s)))
    for v in members:
        if not 0 <= v < d.n:
            raise InputError(f"Vertex {v} out of range for n={d.n}")
    index = {v: i for i, v in enumerate(members)}
    arcs = frozenset((index[u], index[v]) for u, v in d.arcs if u in index and v in index)
    return InducedSubdigraph(Digraph(len(members), arcs), members)


def add_dominating_vertex(d: Digraph) -> Digraph:
    """Append vertex n joined to every vertex by a pair of opposite arcs."""
    apex = d.n
    arcs = set(d.arcs)
    for v in range(d.n):
        arcs.add((apex, v))
        arcs.add((v, apex))
    return Digraph(d.n + 1, frozenset(arcs))
