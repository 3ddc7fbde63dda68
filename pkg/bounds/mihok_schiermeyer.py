"""
Mihok-Schiermeyer: a graph with m distinct even cycle lengths is
(2m + 3)-colorable.

Modulo 2m + 2 one of the m + 1 even residues 0, 2, ..., 2m is empty. Any
empty residue other than 2 gives a (2m + 2)-coloring; residue 2 alone goes
through the fallback with one extra color.
"""

from typing import Optional

from bounds.base_bound import BaseBound
from bounds.registry import register_bound
from engine.cycles import even_cycle_lengths
from engine.errors import InvariantBreach
from engine.models import BoundReport, UndirectedGraph
from engine.undirected import color_undirected


class MihokSchiermeyerBound(BaseBound):

    theorem_id = 'mihok-schiermeyer'
    input_kind = 'undirected'

    def compute(self, graph: UndirectedGraph, k: Optional[int] = None) -> BoundReport:
        lengths = sorted(even_cycle_lengths(graph))
        modulus = 2 * len(lengths) + 2
        used = {n % modulus for n in lengths}
        empty = [j for j in range(0, modulus, 2) if j not in used]
        if not empty:
            raise InvariantBreach(f"Every even residue mod {modulus} is realized by {lengths}")
        preferred = [j for j in empty if j != 2 % modulus]
        r = preferred[0] if preferred else empty[0]
        report = color_undirected(graph, modulus, r)
        return BoundReport(self.theorem_id, {'even_lengths': lengths, 'k': modulus, 'r': r},
                           modulus + 1, report.coloring, report.method)


def mihok_schiermeyer(g: UndirectedGraph) -> BoundReport:
    return MihokSchiermeyerBound().compute(g)


register_bound(MihokSchiermeyerBound())
