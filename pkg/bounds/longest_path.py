"""
Longest path: a digraph whose longest path has k vertices is k-colorable.

A bidirected apex joined to every vertex makes the digraph strong without
creating a cycle longer than k + 1. The proper-coloring construction then
runs with modulus k + 1. The apex keeps a color of its own, so dropping it
leaves at most k colors on the original vertices.
"""

from typing import Optional

from bounds.base_bound import BaseBound
from bounds.registry import register_bound
from engine.cycles import longest_path_vertices
from engine.digraph import add_dominating_vertex
from engine.errors import InputError
from engine.models import BoundReport, Coloring, ColoringKind, Digraph
from engine.proper_coloring import color_mod1
from engine.verification import certify


class LongestPathBound(BaseBound):

    theorem_id = 'longest-path'
    input_kind = 'directed'

    def compute(self, graph: Digraph, k: Optional[int] = None) -> BoundReport:
        if graph.n < 1:
            raise InputError("The digraph needs at least one vertex")
        size = longest_path_vertices(graph)
        extended = add_dominating_vertex(graph)
        run = color_mod1(extended, size + 1, check_hypothesis=False)
        apex_color = run.coloring.colors[graph.n]
        colors = tuple(c - 1 if c > apex_color else c for c in run.coloring.colors[:graph.n])
        coloring = certify(graph, Coloring(colors, ColoringKind.PROPER), max_colors=size)
        return BoundReport(self.theorem_id, {'longest_path_vertices': size, 'k': size + 1},
                           size, coloring, 'proper-ears-apex')


def color_by_longest_path(d: Digraph) -> BoundReport:
    return LongestPathBound().compute(d)


register_bound(LongestPathBound())
