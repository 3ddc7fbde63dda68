"""
Independent coloring checkers.

These never look at how a coloring was produced; reports take their verdicts
from here only.
"""

from dataclasses import replace
from typing import Optional, Sequence, Union

import networkx as nx

from engine.digraph import induced_subdigraph
from engine.errors import VerificationFailure
from engine.models import (
    Coloring, ColoringKind, Digraph, UndirectedGraph, VerificationResult,
)


def _check_length(n: int, colors: Sequence[int], kind: ColoringKind) -> Optional[VerificationResult]:
    if len(colors) != n:
        return VerificationResult(False, kind, detail=f"expected {n} colors, got {len(colors)}")
    return None


def verify_proper(graph: Union[Digraph, UndirectedGraph], colors: Sequence[int],
                  max_colors: Optional[int] = None) -> VerificationResult:
    """No arc (or edge) joins two vertices of the same color."""
    kind = ColoringKind.PROPER
    bad = _check_length(graph.n, colors, kind)
    if bad:
        return bad
    pairs = graph.arcs if isinstance(graph, Digraph) else graph.edges
    for u, v in sorted(pairs):
        if colors[u] == colors[v]:
            return VerificationResult(False, kind, violation=(u, v),
                                      detail=f"monochromatic pair ({u}, {v}) in color {colors[u]}")
    if max_colors is not None and len(set(colors)) > max_colors:
        return VerificationResult(False, kind, detail=f"uses {len(set(colors))} > {max_colors} colors")
    return VerificationResult(True, kind)


def verify_acyclic(d: Digraph, colors: Sequence[int],
                   max_colors: Optional[int] = None) -> VerificationResult:
    """Every color class induces an acyclic subdigraph."""
    kind = ColoringKind.ACYCLIC
    bad = _check_length(d.n, colors, kind)
    if bad:
        return bad
    for color in sorted(set(colors)):
        members = [v for v in range(d.n) if colors[v] == color]
        sub = induced_subdigraph(d, members)
        g = sub.digraph.to_networkx()
        if not nx.is_directed_acyclic_graph(g):
            cycle = tuple(sub.original[u] for u, _ in nx.find_cycle(g))
            return VerificationResult(False, kind, violation=cycle,
                                      detail=f"color {color} contains a cycle")
    if max_colors is not None and len(set(colors)) > max_colors:
        return VerificationResult(False, kind, detail=f"uses {len(set(colors))} > {max_colors} colors")
    return VerificationResult(True, kind)


def verify(graph: Union[Digraph, UndirectedGraph], coloring: Coloring,
           max_colors: Optional[int] = None) -> VerificationResult:
    if coloring.kind == ColoringKind.ACYCLIC:
        return verify_acyclic(graph, coloring.colors, max_colors)
    return verify_proper(graph, coloring.colors, max_colors)


def certify(graph: Union[Digraph, UndirectedGraph], coloring: Coloring,
            max_colors: Optional[int] = None) -> Coloring:
    """Verify and return the coloring marked verified; raise on failure."""
    result = verify(graph, coloring, max_colors)
    if not result.ok:
        raise VerificationFailure(f"Coloring rejected: {result.detail}", witness=result)
    return replace(coloring, verified=True)
