"""
Centralized configuration.

All limits that guard exponential searches live here. Values come from the
environment (optionally a .env file next to the project root).
"""

import os
from pathlib import Path

from dotenv import load_dotenv


BASE_DIR = Path(__file__).resolve().parent.parent
load_dotenv(BASE_DIR / '.env')


def _env_int(name, default):
    raw = os.environ.get(name)
    if raw is None or raw.strip() == '':
        return default
    return int(raw)


def _env_flag(name, default=False):
    raw = os.environ.get(name)
    if raw is None:
        return default
    return raw.strip().lower() in ('1', 'true', 'yes', 'on')


class Config:
    """Global settings for the coloring lab"""

    BASE_DIR = BASE_DIR

    # Search caps (exceeding one aborts, never truncates a decision)
    LIMITS = {
        'max_cycles': _env_int('COLORING_MAX_CYCLES', 1_000_000),
        'max_ear_paths': _env_int('COLORING_MAX_EAR_PATHS', 1_000_000),
        'oracle_max_vertices': _env_int('COLORING_ORACLE_MAX_VERTICES', 12),
        'longest_path_max_vertices': _env_int('COLORING_LONGEST_PATH_MAX_VERTICES', 20),
    }

    # Behaviour switches
    DEFAULTS = {
        'check_hypothesis': True,
        'check_invariants': _env_flag('COLORING_CHECK_INVARIANTS', False),
    }

    LOG_LEVEL = os.environ.get('COLORING_LOG_LEVEL', 'WARNING').upper()

    @classmethod
    def limit(cls, name, override=None):
        """Return a limit, preferring an explicit per-call override."""
        if override is not None:
            return override
        return cls.LIMITS[name]

    @classmethod
    def set_limits(cls, **overrides):
        """Override limits for the current process (used by CLI flags)."""
        for key, value in overrides.items():
            if key not in cls.LIMITS:
                raise KeyError(f"Unknown limit: {key}")
            if value is not None:
                cls.LIMITS[key] = int(value)
