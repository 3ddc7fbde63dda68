"""
Cycles through a set of pairwise adjacent vertices of a strong digraph.

The strong components U_1, ..., U_t of D[U] are totally ordered. A shortest
path P from U_t back to U_1 leaves U only along detours P_i from x_i to y_i;
minimality forces the arc (y_i, x_i) and forbids (x_i, y_i). H is D[U] plus
the arcs (x_i, y_i); it is strong and semicomplete, so it has a Hamiltonian
cycle, and replacing each (x_i, y_i) on it by P_i gives the cycle.
"""

import logging
from typing import Dict, Iterable, List, Tuple

import networkx as nx

from engine.digraph import induced_subdigraph, is_semicomplete, strong_components, strongly_connected
from engine.errors import InputError, InvariantBreach
from engine.models import Arc, CliqueCycleCertificate, Digraph, VertexCycle, VertexPath

logger = logging.getLogger(__name__)


def _nearest(g: nx.DiGraph, sources: Iterable[int], targets: Iterable[int]) -> List[int]:
    """Shortest path from any source to any target; ties go to the least target."""
    sources = set(sources)
    if not sources:
        return []
    dist, paths = nx.multi_source_dijkstra(g, sources)
    reachable = [t for t in targets if t in dist]
    if not reachable:
        return []
    best = min(reachable, key=lambda t: (dist[t], t))
    return paths[best]


# ============================================
# HAMILTONIAN CYCLE OF A STRONG SEMICOMPLETE DIGRAPH
# ============================================

def hamiltonian_semicomplete(h: Digraph) -> VertexCycle:
    """Hamiltonian cycle of a strong semicomplete digraph on n >= 2 vertices.

    Grows a cycle from a shortest cycle through vertex 0. An outside vertex
    with arcs both to and from the cycle slots in between some c_j -> w -> c_{j+1}.
    When none exists, a shortest path from a vertex the cycle dominates to one
    that dominates the cycle is spliced in whole.
    """
    if h.n < 2:
        raise InputError("A Hamiltonian cycle needs at least two vertices")
    if not is_semicomplete(h):
        raise InputError("Digraph is not semicomplete")
    if not strongly_connected(h):
        raise InputError("Digraph is not strongly connected")

    g = h.to_networkx()
    reach = nx.single_source_shortest_path(g, 0)
    back = min((w for w in h.pred[0] if w in reach), key=lambda w: (len(reach[w]), w))
    cycle = list(reach[back])

    while len(cycle) < h.n:
        inside = set(cycle)
        outside = [w for w in range(h.n) if w not in inside]
        inserted = False
        for w in outside:
            for j, c in enumerate(cycle):
                nxt = cycle[(j + 1) % len(cycle)]
                if h.has_arc(c, w) and h.has_arc(w, nxt):
                    cycle.insert(j + 1, w)
                    inserted = True
                    break
            if inserted:
                break
        if inserted:
            continue

        dominated = [w for w in outside if all(h.has_arc(c, w) for c in cycle)]
        dominating = [w for w in outside if all(h.has_arc(w, c) for c in cycle)]
        bridge = _nearest(g.subgraph(outside), dominated, dominating)
        if not bridge:
            raise InvariantBreach(f"No bridging path outside cycle {cycle}")
        cycle[1:1] = bridge

    result = VertexCycle.canonical(cycle)
    for u, v in result.arcs():
        if not h.has_arc(u, v):
            raise InvariantBreach(f"Hamiltonian cycle uses missing arc ({u}, {v})")
    return result


# ============================================
# CYCLE THROUGH A CLIQUE
# ============================================

def _detours(d: Digraph, path: List[int], members: set) -> List[VertexPath]:
    """Sub-paths of `path` between consecutive U-vertices with at least two arcs."""
    hits = [i for i, v in enumerate(path) if v in members]
    detours = []
    for i, j in zip(hits, hits[1:]):
        if j - i < 2:
            continue
        p = VertexPath(tuple(path[i:j + 1]))
        x, y = p.origin, p.terminus
        if not d.has_arc(y, x) or d.has_arc(x, y):
            raise InvariantBreach(f"Detour {p.vertices} is not bypassed by the arc ({y}, {x}) alone")
        detours.append(p)
    return detours


def cycle_through_clique(d: Digraph, u_set: Iterable[int]) -> CliqueCycleCertificate:
    """A cycle of d containing every vertex of the pairwise adjacent set u_set."""
    members = sorted(set(u_set))
    if len(members) < 2:
        raise InputError("The vertex set needs at least two vertices")
    for v in members:
        if not 0 <= v < d.n:
            raise InputError(f"Vertex {v} out of range for n={d.n}")
    if not strongly_connected(d):
        raise InputError("The digraph must be strongly connected")
    for i, u in enumerate(members):
        for v in members[i + 1:]:
            if not d.adjacent(u, v):
                raise InputError(f"Vertices {u} and {v} are not adjacent")

    sub = induced_subdigraph(d, members)
    components = [tuple(sub.original[i] for i in comp) for comp in strong_components(sub.digraph)]

    detours: List[VertexPath] = []
    if len(components) > 1:
        path = _nearest(d.to_networkx(), components[-1], components[0])
        if not path:
            raise InvariantBreach(f"No path from {components[-1]} to {components[0]}")
        detours = _detours(d, path, set(members))

    extra: Dict[Arc, VertexPath] = {(sub.local(p.origin), sub.local(p.terminus)): p for p in detours}
    h = Digraph(len(members), sub.digraph.arcs | frozenset(extra))
    if not strongly_connected(h):
        raise InvariantBreach("D[U] plus the detour arcs is not strongly connected")
    core = hamiltonian_semicomplete(h)

    walk: List[int] = []
    for a, b in core.arcs():
        if (a, b) in extra:
            walk.extend(extra[(a, b)].vertices[:-1])
        else:
            walk.append(sub.original[a])
    cycle = VertexCycle.canonical(walk)

    if len(set(cycle.vertices)) != cycle.length:
        raise InvariantBreach(f"Spliced cycle {cycle.vertices} repeats a vertex")
    for u, v in cycle.arcs():
        if not d.has_arc(u, v):
            raise InvariantBreach(f"Spliced cycle uses missing arc ({u}, {v})")

    logger.info("Cycle of length %d through %d clique vertices (%d components, %d detours)",
                cycle.length, len(members), len(components), len(detours))
    return CliqueCycleCertificate(
        cycle=cycle,
        covered=tuple(members),
        components=tuple(components),
        detours=tuple(detours),
        hamiltonian_core=VertexCycle.canonical(sub.original[v] for v in core.vertices),
    )
