"""
Undirected graphs without cycles of length r modulo k.

Routes:
  k = 2, r odd   -> bipartite 2-coloring
  k = 2, r even  -> every block is an edge or an odd cycle; 3 colors block by block
  r = 2 (k >= 3) -> exact (k+1)-coloring search
  otherwise      -> acyclic coloring of the bidirected graph; its classes are independent
"""

import logging
from collections import deque
from typing import Dict, List, Optional

import networkx as nx

from engine.acyclic_coloring import acyclic_color
from engine.cycles import undirected_hypothesis_holds
from engine.digraph import bidirect
from engine.errors import HypothesisViolation, InputError, InvariantBreach
from engine.models import BoundReport, Coloring, ColoringKind, UndirectedGraph
from engine.oracle import check_oracle_bound, find_proper_coloring
from engine.verification import certify

logger = logging.getLogger(__name__)


def _bipartite(g: UndirectedGraph) -> List[int]:
    try:
        sides = nx.bipartite.color(g.to_networkx())
    except nx.NetworkXError as exc:
        raise HypothesisViolation(f"Graph has an odd cycle: {exc}")
    return [sides[v] for v in range(g.n)]


def _cycle_order(block: nx.Graph, start: int) -> List[int]:
    order = [start]
    prev, cur = None, start
    while True:
        nxt = min(w for w in block.neighbors(cur) if w != prev)
        if nxt == start:
            return order
        order.append(nxt)
        prev, cur = cur, nxt


def _odd_block_coloring(g: UndirectedGraph) -> List[int]:
    """3-coloring of a graph whose blocks are edges and odd cycles.

    Components are rooted at their least vertex with color 0. Each block is
    colored from the vertex through which the search first reached it.
    """
    nxg = g.to_networkx()
    blocks = [frozenset(b) for b in nx.biconnected_components(nxg)]
    blocks_of: Dict[int, List[int]] = {}
    for i, b in enumerate(blocks):
        for v in b:
            blocks_of.setdefault(v, []).append(i)
    for v in blocks_of:
        blocks_of[v].sort(key=lambda i: min(blocks[i]))

    colors: List[Optional[int]] = [None] * g.n
    done = set()
    for root in range(g.n):
        if colors[root] is not None:
            continue
        colors[root] = 0
        queue = deque([root])
        while queue:
            v = queue.popleft()
            c = colors[v]
            for i in blocks_of.get(v, []):
                if i in done:
                    continue
                done.add(i)
                b = blocks[i]
                other = min(x for x in (0, 1) if x != c)
                if len(b) == 2:
                    (w,) = b - {v}
                    colors[w] = other
                    queue.append(w)
                    continue
                sub = nxg.subgraph(b)
                if sub.number_of_edges() != len(b) or len(b) % 2 == 0:
                    raise InvariantBreach(f"Block {sorted(b)} is neither an edge nor an odd cycle")
                cyc = _cycle_order(sub, v)
                third = ({0, 1, 2} - {c, other}).pop()
                for j, w in enumerate(cyc[1:], start=1):
                    if j == len(cyc) - 1:
                        colors[w] = third
                    else:
                        colors[w] = other if j % 2 == 1 else c
                    queue.append(w)
    return list(colors)


def color_undirected(g: UndirectedGraph, k: int, r: int, check_hypothesis: bool = True) -> BoundReport:
    """Proper coloring with at most k colors (k+1 when r = 2 mod k)."""
    if k < 2:
        raise InputError(f"k must be at least 2, got {k}")
    r = r % k
    if check_hypothesis:
        verdict = undirected_hypothesis_holds(g, k, r)
        if not verdict.holds:
            raise HypothesisViolation(
                f"Cycle of length {verdict.witness.length} = {r} (mod {k}) exists", witness=verdict.witness)

    bound = k + 1 if r == 2 % k else k
    if k == 2 and r == 1:
        method, colors = 'bipartite', _bipartite(g)
    elif k == 2:
        method, colors = 'odd-block', _odd_block_coloring(g)
    elif r == 2:
        check_oracle_bound(g.n)
        logger.warning("r = 2 (mod %d): falling back to exact %d-coloring search", k, k + 1)
        found = find_proper_coloring(g, k + 1)
        if found is None:
            raise InvariantBreach(f"No proper {k + 1}-coloring found")
        method, colors = 'exact-fallback', list(found)
    else:
        run = acyclic_color(bidirect(g), k, r, check_hypothesis=False)
        method, colors = 'acyclic-reduction', list(run.coloring.colors)

    coloring = certify(g, Coloring(tuple(colors), ColoringKind.PROPER, metadata={'method': method}),
                       max_colors=bound)
    logger.info("Undirected coloring via %s: n=%d k=%d r=%d colors=%d", method, g.n, k, r, coloring.color_count)
    return BoundReport('undirected', {'k': k, 'r': r}, bound, coloring, method)
