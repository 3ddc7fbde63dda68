"""
Core data models for the Digraph Coloring Lab.

Vertices are dense integers 0..n-1. Every model here is immutable once built.
"""

from dataclasses import dataclass, field
from enum import Enum
from functools import cached_property
from typing import Dict, FrozenSet, Iterable, Iterator, List, Optional, Tuple

from engine.errors import InputError


Arc = Tuple[int, int]


# ============================================
# GRAPHS
# ============================================

@dataclass(frozen=True)
class Digraph:
    """Loopless digraph without parallel arcs; opposite arcs are allowed."""
    n: int
    arcs: FrozenSet[Arc] = frozenset()

    def __post_init__(self):
        if self.n < 0:
            raise InputError(f"Vertex count must be non-negative, got {self.n}")
        arcs = frozenset((int(u), int(v)) for u, v in self.arcs)
        for u, v in arcs:
            if u == v:
                raise InputError(f"Loop at vertex {u} is not allowed")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise InputError(f"Arc ({u}, {v}) out of range for n={self.n}")
        object.__setattr__(self, 'arcs', arcs)

    @classmethod
    def from_arcs(cls, n: int, arcs: Iterable[Arc]) -> 'Digraph':
        return cls(n, frozenset(arcs))

    @property
    def vertices(self) -> range:
        return range(self.n)

    @cached_property
    def succ(self) -> Tuple[Tuple[int, ...], ...]:
        """Out-neighbours per vertex, ascending."""
        out: List[List[int]] = [[] for _ in range(self.n)]
        for u, v in self.arcs:
            out[u].append(v)
        return tuple(tuple(sorted(vs)) for vs in out)

    @cached_property
    def pred(self) -> Tuple[Tuple[int, ...], ...]:
        """In-neighbours per vertex, ascending."""
        inc: List[List[int]] = [[] for _ in range(self.n)]
        for u, v in self.arcs:
            inc[v].append(u)
        return tuple(tuple(sorted(us)) for us in inc)

    def out_neighbors(self, v: int) -> Tuple[int, ...]:
        return self.succ[v]

    def in_neighbors(self, v: int) -> Tuple[int, ...]:
        return self.pred[v]

    def has_arc(self, u: int, v: int) -> bool:
        return (u, v) in self.arcs

    def adjacent(self, u: int, v: int) -> bool:
        return (u, v) in self.arcs or (v, u) in self.arcs

    def sorted_arcs(self) -> List[Arc]:
        return sorted(self.arcs)

    def to_networkx(self):
        import networkx as nx
        g = nx.DiGraph()
        g.add_nodes_from(range(self.n))
        g.add_edges_from(self.sorted_arcs())
        return g


@dataclass(frozen=True)
class UndirectedGraph:
    """Simple graph; edges stored as (min, max) pairs."""
    n: int
    edges: FrozenSet[Arc] = frozenset()

    def __post_init__(self):
        if self.n < 0:
            raise InputError(f"Vertex count must be non-negative, got {self.n}")
        edges = set()
        for u, v in self.edges:
            u, v = int(u), int(v)
            if u == v:
                raise InputError(f"Self-edge at vertex {u} is not allowed")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise InputError(f"Edge {{{u}, {v}}} out of range for n={self.n}")
            edges.add((min(u, v), max(u, v)))
        object.__setattr__(self, 'edges', frozenset(edges))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Arc]) -> 'UndirectedGraph':
        return cls(n, frozenset(edges))

    @cached_property
    def neighbors(self) -> Tuple[Tuple[int, ...], ...]:
        adj: List[List[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return tuple(tuple(sorted(vs)) for vs in adj)

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self.edges

    def sorted_edges(self) -> List[Arc]:
        return sorted(self.edges)

    def to_networkx(self):
        import networkx as nx
        g = nx.Graph()
        g.add_nodes_from(range(self.n))
        g.add_edges_from(self.sorted_edges())
        return g


# ============================================
# PATHS AND CYCLES
# ============================================

@dataclass(frozen=True)
class VertexPath:
    vertices: Tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.vertices) - 1

    @property
    def origin(self) -> int:
        return self.vertices[0]

    @property
    def terminus(self) -> int:
        return self.vertices[-1]

    def arcs(self) -> Iterator[Arc]:
        return zip(self.vertices, self.vertices[1:])


@dataclass(frozen=True)
class VertexCycle:
    """Directed cycle; the closing arc last -> first is implied."""
    vertices: Tuple[int, ...]

    @classmethod
    def canonical(cls, sequence: Iterable[int]) -> 'VertexCycle':
        """Rotate so the minimum vertex comes first, keeping the direction."""
        seq = tuple(sequence)
        if not seq:
            raise ValueError("A cycle needs at least one vertex")
        start = seq.index(min(seq))
        return cls(seq[start:] + seq[:start])

    @property
    def length(self) -> int:
        return len(self.vertices)

    def arcs(self) -> Iterator[Arc]:
        vs = self.vertices
        for i, u in enumerate(vs):
            yield u, vs[(i + 1) % len(vs)]

    def to_list(self) -> List[int]:
        return list(self.vertices)


@dataclass(frozen=True)
class CycleListing:
    cycles: Tuple[VertexCycle, ...]
    truncated: bool = False


@dataclass(frozen=True)
class ResidueCensus:
    """Which cycle-length residues modulo k occur, each with one witness."""
    k: int
    witnesses: Dict[int, VertexCycle]
    counts: Optional[Dict[int, int]] = None   # only when enumeration ran to completion

    def realized(self, residue: int) -> bool:
        return (residue % self.k) in self.witnesses

    @property
    def realized_residues(self) -> List[int]:
        return sorted(self.witnesses)

    def witness(self, residue: int) -> Optional[VertexCycle]:
        return self.witnesses.get(residue % self.k)

    def to_dict(self) -> Dict:
        return {
            'k': self.k,
            'realized': [j in self.witnesses for j in range(self.k)],
            'witnesses': {str(j): self.witnesses[j].to_list() for j in sorted(self.witnesses)},
            'counts': None if self.counts is None else [self.counts.get(j, 0) for j in range(self.k)],
        }


@dataclass(frozen=True)
class HypothesisVerdict:
    """Outcome of checking 'no cycle of length r modulo k'."""
    k: int
    r: int
    holds: bool
    witness: Optional[VertexCycle] = None

    def to_dict(self) -> Dict:
        return {
            'k': self.k,
            'r': self.r,
            'holds': self.holds,
            'witness': None if self.witness is None else self.witness.to_list(),
        }


@dataclass(frozen=True)
class CycleStats:
    circumference: int            # 0 when acyclic
    odd_circumference: int        # 1 when there is no odd cycle
    longest_path_vertices: int

    def to_dict(self) -> Dict:
        return {
            'circumference': self.circumference,
            'odd_circumference': self.odd_circumference,
            'longest_path_vertices': self.longest_path_vertices,
        }


# ============================================
# COLORINGS
# ============================================

class ColoringKind(Enum):
    PROPER = "proper"
    ACYCLIC = "acyclic"


@dataclass(frozen=True)
class Coloring:
    """Vertex -> color map; `verified` is set only by the independent checker."""
    colors: Tuple[int, ...]
    kind: ColoringKind
    verified: bool = False
    metadata: Dict[str, object] = field(default_factory=dict)

    @property
    def color_count(self) -> int:
        return len(set(self.colors))

    def classes(self) -> Dict[int, List[int]]:
        out: Dict[int, List[int]] = {}
        for v, c in enumerate(self.colors):
            out.setdefault(c, []).append(v)
        return out

    def to_dict(self) -> Dict:
        return {
            'kind': self.kind.value,
            'colors': list(self.colors),
            'color_count': self.color_count,
            'verified': self.verified,
        }


@dataclass(frozen=True)
class VerificationResult:
    ok: bool
    kind: ColoringKind
    violation: Optional[Tuple[int, ...]] = None   # offending arc/edge or monochromatic cycle
    detail: str = ''

    def to_dict(self) -> Dict:
        return {
            'verified': self.ok,
            'kind': self.kind.value,
            'violation': None if self.violation is None else list(self.violation),
            'detail': self.detail,
        }


# ============================================
# EARS
# ============================================

class EarKind(Enum):
    PATH = "path"
    CYCLE = "cycle"


class EarDirection(Enum):
    FORWARD = "forward"
    BACKWARD = "backward"
    CYCLIC = "cyclic"


@dataclass(frozen=True)
class Ear:
    """A path with both ends in the current subdigraph and interior outside it,
    or a cycle meeting the subdigraph in exactly one vertex."""
    vertices: Tuple[int, ...]

    @property
    def origin(self) -> int:
        return self.vertices[0]

    @property
    def terminus(self) -> int:
        return self.vertices[-1]

    @property
    def length(self) -> int:
        return len(self.vertices) - 1

    @property
    def internal(self) -> Tuple[int, ...]:
        return self.vertices[1:-1]

    @property
    def kind(self) -> EarKind:
        return EarKind.CYCLE if self.origin == self.terminus else EarKind.PATH

    def arcs(self) -> Iterator[Arc]:
        return zip(self.vertices, self.vertices[1:])

    def to_list(self) -> List[int]:
        return list(self.vertices)


@dataclass(frozen=True)
class InvariantDiagnostic:
    """Result of re-deriving all ears and checking the construction's properties."""
    ok: bool
    violated: Optional[str] = None      # 'A', 'B', 'C', 'order', ...
    detail: str = ''
    witness: Optional[Tuple[int, ...]] = None

    @classmethod
    def passed(cls) -> 'InvariantDiagnostic':
        return cls(ok=True)


# ============================================
# REPORTS
# ============================================

@dataclass(frozen=True)
class BoundReport:
    """A classical bound realised as a concrete, verified coloring."""
    theorem: str
    parameters: Dict[str, object]
    bound: int
    coloring: Optional[Coloring] = None
    method: str = ''

    def to_dict(self) -> Dict:
        return {
            'theorem': self.theorem,
            'parameters': dict(self.parameters),
            'bound': self.bound,
            'coloring': None if self.coloring is None else self.coloring.to_dict(),
            'method': self.method,
        }


@dataclass(frozen=True)
class CliqueCycleCertificate:
    cycle: VertexCycle
    covered: Tuple[int, ...]
    components: Tuple[Tuple[int, ...], ...]
    detours: Tuple[VertexPath, ...]
    hamiltonian_core: VertexCycle

    def to_dict(self) -> Dict:
        return {
            'cycle': self.cycle.to_list(),
            'length': self.cycle.length,
            'covered': list(self.covered),
            'components': [list(c) for c in self.components],
            'detours': [list(p.vertices) for p in self.detours],
            'hamiltonian_core': self.hamiltonian_core.to_list(),
        }
