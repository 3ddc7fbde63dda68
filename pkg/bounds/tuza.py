"""
Tuza: a graph with no cycle of length 1 modulo k is k-colorable.
"""

from typing import Optional

from bounds.base_bound import BaseBound
from bounds.registry import register_bound
from engine.errors import InputError
from engine.models import BoundReport, UndirectedGraph
from engine.undirected import color_undirected


class TuzaBound(BaseBound):

    theorem_id = 'tuza'
    input_kind = 'undirected'
    needs_k = True

    def compute(self, graph: UndirectedGraph, k: Optional[int] = None) -> BoundReport:
        if k is None:
            raise InputError("The tuza bound needs --k")
        report = color_undirected(graph, k, 1)
        return BoundReport(self.theorem_id, {'k': k, 'r': 1}, k, report.coloring, report.method)


def tuza(g: UndirectedGraph, k: int) -> BoundReport:
    return TuzaBound().compute(g, k)


register_bound(TuzaBound())
