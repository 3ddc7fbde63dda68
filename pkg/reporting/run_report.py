"""
Run reports: one document per CLI invocation.

The verification section is always recomputed here from the coloring and
the input graph, never copied from whichever construction produced it.
"""

import hashlib
import json
import os
import time
from typing import Any, Dict, Optional, Union

import pandas as pd
from jinja2 import Environment, FileSystemLoader

from data_sources.graph_file import serialize_graph
from engine.models import Coloring, Digraph, HypothesisVerdict, UndirectedGraph
from engine.verification import verify

TEMPLATE_DIR = os.path.join(os.path.dirname(os.path.abspath(__file__)), 'templates')

Graph = Union[Digraph, UndirectedGraph]


def input_digest(graph: Graph) -> str:
    return hashlib.sha256(serialize_graph(graph).encode()).hexdigest()


class RunReport:
    """Accumulates the sections of a report; to_dict() fixes the key order."""

    def __init__(self, command: str, graph: Graph, parameters: Optional[Dict[str, Any]] = None):
        self.command = command
        self.graph = graph
        self.parameters = dict(parameters or {})
        self.status = 'ok'
        self.hypothesis: Optional[Dict] = None
        self.coloring: Optional[Dict] = None
        self.bound: Optional[Dict] = None
        self.verification: Optional[Dict] = None
        self.decomposition: Optional[Dict] = None
        self.result: Optional[Dict] = None
        self.error: Optional[Dict] = None
        self._started = time.perf_counter()
        self._seconds: Optional[float] = None

    def set_hypothesis(self, verdict: HypothesisVerdict):
        self.hypothesis = verdict.to_dict()
        if not verdict.holds:
            self.status = 'hypothesis-violated'

    def set_coloring(self, coloring: Coloring, max_colors: Optional[int] = None):
        self.coloring = coloring.to_dict()
        result = verify(self.graph, coloring, max_colors)
        self.verification = result.to_dict()
        if not result.ok:
            self.status = 'verification-failed'

    def set_error(self, error: Exception, status: str):
        self.status = status
        witness = getattr(error, 'witness', None)
        self.error = {'type': type(error).__name__, 'message': str(error)}
        if witness is not None and hasattr(witness, 'to_list'):
            self.error['witness'] = witness.to_list()

    def finish(self):
        self._seconds = time.perf_counter() - self._started

    def to_dict(self) -> Dict[str, Any]:
        if self._seconds is None:
            self.finish()
        out = {
            'command': self.command,
            'input': {
                'digest': input_digest(self.graph),
                'mode': 'directed' if isinstance(self.graph, Digraph) else 'undirected',
                'n': self.graph.n,
            },
            'parameters': self.parameters,
            'status': self.status,
        }
        for key in ('hypothesis', 'coloring', 'bound', 'verification', 'decomposition', 'result', 'error'):
            value = getattr(self, key)
            if value is not None:
                out[key] = value
        out['timing'] = {'seconds': round(self._seconds, 6)}
        return out


# ============================================
# RENDERING
# ============================================

def render_json(report: RunReport) -> str:
    return json.dumps(report.to_dict(), indent=2)


def color_table(coloring: Optional[Dict]) -> str:
    """Color classes as a fixed-width table: color, size, members."""
    if not coloring:
        return ''
    df = pd.DataFrame({'vertex': range(len(coloring['colors'])), 'color': coloring['colors']})
    table = (df.groupby('color')['vertex']
               .agg(size='count', members=lambda vs: ' '.join(str(v) for v in vs))
               .reset_index())
    return table.to_string(index=False)


def render_plain(report: RunReport) -> str:
    env = Environment(loader=FileSystemLoader(TEMPLATE_DIR), trim_blocks=True, lstrip_blocks=True)
    template = env.get_template('report.txt.j2')
    data = report.to_dict()
    return template.render(report=data, color_table=color_table(data.get('coloring')))
