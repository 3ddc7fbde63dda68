"""
Odd circumference: a strong digraph whose longest odd cycle has length l
is (l + 1)-colorable.

A cycle of length 1 modulo l + 1 would be odd and longer than l, so the
proper-coloring construction applies with k = l + 1.
"""

from typing import Optional

from bounds.base_bound import BaseBound
from bounds.registry import register_bound
from engine.cycles import cycle_lengths, residue_census
from engine.errors import InvariantBreach
from engine.models import BoundReport, Digraph
from engine.proper_coloring import color_mod1


class OddCircumferenceBound(BaseBound):

    theorem_id = 'odd-circ'
    input_kind = 'directed'

    def compute(self, graph: Digraph, k: Optional[int] = None) -> BoundReport:
        odd = [n for n in cycle_lengths(graph) if n % 2 == 1]
        l = max(odd, default=1)
        modulus = l + 1
        census = residue_census(graph, modulus)
        if census.realized(1):
            raise InvariantBreach(f"Cycle of length 1 (mod {modulus}) exists with l = {l}",
                                  witness=census.witness(1))
        run = color_mod1(graph, modulus, check_hypothesis=False)
        return BoundReport(self.theorem_id, {'odd_circumference': l, 'k': modulus},
                           modulus, run.coloring, 'proper-ears')


def color_by_odd_circumference(d: Digraph) -> BoundReport:
    return OddCircumferenceBound().compute(d)


register_bound(OddCircumferenceBound())
