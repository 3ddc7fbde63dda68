"""
Gyarfas: a graph with m distinct odd cycle lengths is (2m + 2)-colorable.

Modulo 2m + 2 the odd lengths fall into the m + 1 odd residues 1, 3, ...,
2m + 1, so one of them is empty and serves as r.
"""

import logging
from typing import Optional

from bounds.base_bound import BaseBound
from bounds.registry import register_bound
from engine.cycles import odd_cycle_lengths
from engine.errors import InvariantBreach
from engine.models import BoundReport, UndirectedGraph
from engine.undirected import color_undirected

logger = logging.getLogger(__name__)


class GyarfasBound(BaseBound):

    theorem_id = 'gyarfas'
    input_kind = 'undirected'

    def compute(self, graph: UndirectedGraph, k: Optional[int] = None) -> BoundReport:
        lengths = sorted(odd_cycle_lengths(graph))
        modulus = 2 * len(lengths) + 2
        used = {n % modulus for n in lengths}
        r = next((j for j in range(1, modulus, 2) if j not in used), None)
        if r is None:
            raise InvariantBreach(f"Every odd residue mod {modulus} is realized by {lengths}")
        report = color_undirected(graph, modulus, r)
        if report.coloring.color_count == modulus:
            logger.info("Gyarfas bound %d attained", modulus)
        return BoundReport(self.theorem_id, {'odd_lengths': lengths, 'k': modulus, 'r': r},
                           modulus, report.coloring, report.method)


def gyarfas(g: UndirectedGraph) -> BoundReport:
    return GyarfasBound().compute(g)


register_bound(GyarfasBound())
