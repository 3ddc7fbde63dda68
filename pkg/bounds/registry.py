"""
Bound registry: auto-discovers and loads all bound modules.
"""

import importlib
import logging
import pkgutil
from typing import Dict, List, Optional

from bounds.base_bound import BaseBound

logger = logging.getLogger(__name__)


# Global registry
_bounds: Dict[str, BaseBound] = {}
_discovered = False


def _discover_bounds():
    """Import all modules in bounds/ package to trigger registration."""
    global _discovered
    _discovered = True
    import bounds
    for importer, modname, ispkg in pkgutil.iter_modules(bounds.__path__):
        if modname in ('base_bound', 'registry', '__init__'):
            continue
        try:
            importlib.import_module(f"bounds.{modname}")
        except Exception as e:
            logger.warning("Could not load bound module '%s': %s", modname, e)


def register_bound(bound: BaseBound):
    _bounds[bound.theorem_id] = bound


def all_bounds(input_kind: Optional[str] = None) -> List[BaseBound]:
    """Registered bounds sorted by id, optionally only those for one input kind."""
    if not _discovered:
        _discover_bounds()
    results = [_bounds[t] for t in sorted(_bounds)]
    if input_kind:
        results = [b for b in results if b.input_kind == input_kind]
    return results


def get_bound(theorem_id: str) -> Optional[BaseBound]:
    if not _discovered:
        _discover_bounds()
    return _bounds.get(theorem_id)


def theorem_ids() -> List[str]:
    return [b.theorem_id for b in all_bounds()]
