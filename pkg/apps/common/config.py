"""
Typed readers for the REVBOUND_* environment variables.

Unparseable numbers fall back to the default so a stray value never stops
the CLI; revbound.settings clamps the counts afterwards.
"""
import os
from typing import List

_TRUTHY = ('true', '1', 'yes', 'on')


def get_env_list(key: str, default: str = '') -> List[str]:
    """Comma-separated items, blanks dropped: `REVBOUND_SWEEP_DIMS=2, 3,,4` gives ['2', '3', '4']."""
    value = os.environ.get(key, default)
    return [item.strip() for item in value.split(',') if item.strip()]


def get_env_bool(key: str, default: bool = False) -> bool:
    return os.environ.get(key, str(default)).strip().lower() in _TRUTHY


def get_env_int(key: str, default: int = 0) -> int:
    try:
        return int(os.environ.get(key, str(default)))
    except ValueError:
        return default


def get_env_float(key: str, default: float = 0.0) -> float:
    """Accepts scientific notation, e.g. REVBOUND_HOLDS_TOLERANCE=1e-9."""
    try:
        return float(os.environ.get(key, str(default)))
    except ValueError:
        return default


def get_env_str(key: str, default: str = '') -> str:
    return os.environ.get(key, default).strip() or default
