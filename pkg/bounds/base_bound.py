"""
Abstract base class for all corollary bounds.

To add a bound:
1. Create a new file in bounds/
2. Subclass BaseBound
3. Implement compute()
4. The registry will auto-discover it
"""

from abc import ABC, abstractmethod
from typing import Optional, Union

from engine.models import BoundReport, Digraph, UndirectedGraph


class BaseBound(ABC):

    theorem_id: str = ''
    input_kind: str = 'directed'     # 'directed' or 'undirected'
    needs_k: bool = False

    @abstractmethod
    def compute(self, graph: Union[Digraph, UndirectedGraph], k: Optional[int] = None) -> BoundReport:
        """Compute the bound's parameter and a verified coloring within the bound.

        The coloring in the returned report has already passed the
        independent checker.
        """
        pass

    def accepts(self, graph) -> bool:
        if self.input_kind == 'undirected':
            return isinstance(graph, UndirectedGraph)
        return isinstance(graph, Digraph)
