"""
Circumference: a strong digraph with longest cycle length c is c-colorable.
"""

from typing import Optional

from bounds.base_bound import BaseBound
from bounds.registry import register_bound
from engine.cycles import cycle_lengths
from engine.errors import InputError
from engine.models import BoundReport, Digraph
from engine.proper_coloring import color_mod1


class CircumferenceBound(BaseBound):

    theorem_id = 'circ'
    input_kind = 'directed'

    def compute(self, graph: Digraph, k: Optional[int] = None) -> BoundReport:
        c = max(cycle_lengths(graph), default=0)
        if c < 2:
            raise InputError("The digraph has no cycle")
        # every cycle length lies in 2..c, so none is 1 (mod c)
        run = color_mod1(graph, c, check_hypothesis=False)
        return BoundReport(self.theorem_id, {'circumference': c, 'k': c}, c, run.coloring, 'proper-ears')


def color_by_circumference(d: Digraph) -> BoundReport:
    return CircumferenceBound().compute(d)


register_bound(CircumferenceBound())
