"""
Graph and coloring files.

Graph file:
    # comment lines are ignored anywhere
    mode directed|undirected      (optional, before the header; default directed)
    n m
    u v                           (m lines, 0-based)

Coloring file: one "vertex color" line per vertex.
"""

from dataclasses import dataclass
from pathlib import Path
from typing import Iterator, List, Tuple, Union

from engine.errors import InputError
from engine.models import Digraph, UndirectedGraph

Graph = Union[Digraph, UndirectedGraph]

MODES = ('directed', 'undirected')


@dataclass(frozen=True)
class GraphFile:
    mode: str
    graph: Graph

    @property
    def directed(self) -> bool:
        return self.mode == 'directed'


def _content_lines(text: str) -> Iterator[Tuple[int, List[str]]]:
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith('#'):
            continue
        yield lineno, line.split()


def _ints(tokens: List[str], lineno: int, expected: int) -> List[int]:
    if len(tokens) != expected:
        raise InputError(f"Line {lineno}: expected {expected} integers, got {' '.join(tokens)!r}")
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise InputError(f"Line {lineno}: not an integer in {' '.join(tokens)!r}")


# ============================================
# GRAPHS
# ============================================

def parse_graph(text: str) -> GraphFile:
    lines = list(_content_lines(text))
    mode = 'directed'
    if lines and lines[0][1][0] == 'mode':
        lineno, tokens = lines.pop(0)
        if len(tokens) != 2 or tokens[1] not in MODES:
            raise InputError(f"Line {lineno}: mode must be one of {', '.join(MODES)}")
        mode = tokens[1]
    if not lines:
        raise InputError("Missing header line 'n m'")
    lineno, tokens = lines.pop(0)
    n, m = _ints(tokens, lineno, 2)
    if n < 0 or m < 0:
        raise InputError(f"Line {lineno}: negative size in header")
    if len(lines) != m:
        raise InputError(f"Header announces {m} pairs, file has {len(lines)}")

    seen = set()
    pairs = []
    for lineno, tokens in lines:
        u, v = _ints(tokens, lineno, 2)
        if not (0 <= u < n and 0 <= v < n):
            raise InputError(f"Line {lineno}: vertex out of range for n={n}")
        if u == v:
            raise InputError(f"Line {lineno}: loop at vertex {u}")
        key = (u, v) if mode == 'directed' else (min(u, v), max(u, v))
        if key in seen:
            raise InputError(f"Line {lineno}: duplicate pair ({u}, {v})")
        seen.add(key)
        pairs.append((u, v))

    graph = Digraph.from_arcs(n, pairs) if mode == 'directed' else UndirectedGraph.from_edges(n, pairs)
    return GraphFile(mode, graph)


def serialize_graph(graph: Graph) -> str:
    if isinstance(graph, Digraph):
        mode, pairs = 'directed', graph.sorted_arcs()
    else:
        mode, pairs = 'undirected', graph.sorted_edges()
    lines = [f"mode {mode}", f"{graph.n} {len(pairs)}"]
    lines.extend(f"{u} {v}" for u, v in pairs)
    return '\n'.join(lines) + '\n'


def load_graph(path: Union[str, Path]) -> GraphFile:
    try:
        text = Path(path).read_text()
    except OSError as e:
        raise InputError(f"Cannot read graph file {path}: {e}")
    return parse_graph(text)


def save_graph(graph: Graph, path: Union[str, Path]):
    Path(path).write_text(serialize_graph(graph))


# ============================================
# COLORINGS
# ============================================

def parse_coloring(text: str, n: int) -> Tuple[int, ...]:
    colors = [None] * n
    for lineno, tokens in _content_lines(text):
        v, c = _ints(tokens, lineno, 2)
        if not 0 <= v < n:
            raise InputError(f"Line {lineno}: vertex {v} out of range for n={n}")
        if c < 0:
            raise InputError(f"Line {lineno}: negative color {c}")
        if colors[v] is not None:
            raise InputError(f"Line {lineno}: vertex {v} colored twice")
        colors[v] = c
    missing = [v for v, c in enumerate(colors) if c is None]
    if missing:
        raise InputError(f"Vertices without a color: {missing}")
    return tuple(colors)


def serialize_coloring(colors) -> str:
    return ''.join(f"{v} {c}\n" for v, c in enumerate(colors))


def load_coloring(path: Union[str, Path], n: int) -> Tuple[int, ...]:
    try:
        text = Path(path).read_text()
    except OSError as e:
        raise InputError(f"Cannot read coloring file {path}: {e}")
    return parse_coloring(text, n)
