"""
Named graph instances used by tests, the sweep script and `coloring_lab.py fixture`.
"""

from typing import Callable, Dict, NamedTuple, Optional, Union

import networkx as nx

from engine.digraph import bidirect
from engine.errors import InputError
from engine.models import Digraph, UndirectedGraph


def odd_wheel_counterexample(n: int = 2) -> Digraph:
    """Strong digraph with odd circumference 3 and chromatic number 4 but no K4.

    The rim is the (2n+1)-cycle oriented v1 -> v2 <- v3 -> ... <- v_{2n+1} -> v1
    (0-based here); the apex 2n+1 is joined to every rim vertex in both directions.
    """
    if n < 1:
        raise InputError("The counterexample needs n >= 1")
    rim = 2 * n + 1
    apex = rim
    arcs = set()
    for j in range(rim - 1):
        arcs.add((j, j + 1) if j % 2 == 0 else (j + 1, j))
    arcs.add((rim - 1, 0))
    for v in range(rim):
        arcs.add((apex, v))
        arcs.add((v, apex))
    return Digraph(rim + 1, frozenset(arcs))


def petersen() -> UndirectedGraph:
    g = nx.petersen_graph()
    return UndirectedGraph.from_edges(g.number_of_nodes(), g.edges())


def complete_graph(n: int) -> UndirectedGraph:
    return UndirectedGraph.from_edges(n, ((u, v) for u in range(n) for v in range(u + 1, n)))


def undirected_cycle(n: int) -> UndirectedGraph:
    if n < 3:
        raise InputError("An undirected cycle needs n >= 3")
    return UndirectedGraph.from_edges(n, ((i, (i + 1) % n) for i in range(n)))


def undirected_path(n: int) -> UndirectedGraph:
    return UndirectedGraph.from_edges(n, ((i, i + 1) for i in range(n - 1)))


def directed_cycle(n: int) -> Digraph:
    if n < 2:
        raise InputError("A directed cycle needs n >= 2")
    return Digraph.from_arcs(n, ((i, (i + 1) % n) for i in range(n)))


def directed_path(n: int) -> Digraph:
    return Digraph.from_arcs(n, ((i, i + 1) for i in range(n - 1)))


def bidirected_complete(n: int) -> Digraph:
    return bidirect(complete_graph(n))


def bidirected_cycle(n: int) -> Digraph:
    return bidirect(undirected_cycle(n))


def transitive_tournament(n: int) -> Digraph:
    return Digraph.from_arcs(n, ((u, v) for u in range(n) for v in range(u + 1, n)))


def strong_tournament(n: int) -> Digraph:
    """Transitive tournament with the arc between its ends reversed."""
    if n < 3:
        raise InputError("A strong tournament needs n >= 3")
    arcs = {(u, v) for u in range(n) for v in range(u + 1, n)}
    arcs.discard((0, n - 1))
    arcs.add((n - 1, 0))
    return Digraph(n, frozenset(arcs))


def rotational_tournament(n: int) -> Digraph:
    """Regular tournament on an odd number of vertices: i -> i+1, ..., i+(n-1)/2."""
    if n < 3 or n % 2 == 0:
        raise InputError("A rotational tournament needs odd n >= 3")
    half = (n - 1) // 2
    return Digraph.from_arcs(n, ((i, (i + j) % n) for i in range(n) for j in range(1, half + 1)))


class Fixture(NamedTuple):
    build: Callable[..., Union[Digraph, UndirectedGraph]]
    default_n: Optional[int]    # None: the fixture takes no size
    description: str


FIXTURES: Dict[str, Fixture] = {
    'counterexample': Fixture(odd_wheel_counterexample, 2, 'odd wheel with l(D)=3 and chromatic number 4'),
    'petersen': Fixture(petersen, None, 'Petersen graph (undirected)'),
    'complete': Fixture(complete_graph, 4, 'complete graph K_n (undirected)'),
    'bidirected-complete': Fixture(bidirected_complete, 4, 'K_n with every edge in both directions'),
    'cycle': Fixture(directed_cycle, 5, 'directed n-cycle'),
    'undirected-cycle': Fixture(undirected_cycle, 5, 'undirected n-cycle'),
    'bidirected-cycle': Fixture(bidirected_cycle, 4, 'n-cycle with every edge in both directions'),
    'tournament': Fixture(strong_tournament, 5, 'strong tournament on n vertices'),
    'transitive-tournament': Fixture(transitive_tournament, 5, 'transitive tournament on n vertices'),
}


def build_fixture(name: str, n: Optional[int] = None) -> Union[Digraph, UndirectedGraph]:
    fixture = FIXTURES.get(name)
    if fixture is None:
        raise InputError(f"Unknown fixture {name!r}; choose from {', '.join(sorted(FIXTURES))}")
    if fixture.default_n is None:
        return fixture.build()
    return fixture.build(fixture.default_n if n is None else n)
