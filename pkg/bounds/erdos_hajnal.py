"""
Erdos-Hajnal: a graph whose longest odd cycle has length l is (l + 1)-colorable.
"""

from typing import Optional

from bounds.base_bound import BaseBound
from bounds.registry import register_bound
from engine.cycles import odd_cycle_lengths
from engine.models import BoundReport, UndirectedGraph
from engine.undirected import color_undirected


class ErdosHajnalBound(BaseBound):

    theorem_id = 'erdos-hajnal'
    input_kind = 'undirected'

    def compute(self, graph: UndirectedGraph, k: Optional[int] = None) -> BoundReport:
        l = max(odd_cycle_lengths(graph), default=1)
        report = color_undirected(graph, l + 1, 1)
        return BoundReport(self.theorem_id, {'odd_circumference': l, 'k': l + 1, 'r': 1},
                           l + 1, report.coloring, report.method)


def erdos_hajnal(g: UndirectedGraph) -> BoundReport:
    return ErdosHajnalBound().compute(g)


register_bound(ErdosHajnalBound())
