"""
Unified logging configuration for the CLI, sweep workers and tests.
"""

from .config import configure_logging, setup_logging
from .context import run_context

__all__ = ["configure_logging", "run_context", "setup_logging"]
