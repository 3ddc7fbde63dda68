import os
import sys

import pytest

# Add project root to path so imports work
sys.path.insert(0, os.path.join(os.path.dirname(os.path.abspath(__file__)), '..'))

from data_sources.graph_file import save_graph
from engine.config import Config


@pytest.fixture(autouse=True)
def restore_limits():
    saved = dict(Config.LIMITS)
    yield
    Config.LIMITS.clear()
    Config.LIMITS.update(saved)


@pytest.fixture
def graph_path(tmp_path):
    """Write a graph to a temporary GraphFile and return its path."""
    def write(graph, name='graph.txt'):
        path = tmp_path / name
        save_graph(graph, path)
        return str(path)
    return write
