"""
Run context for structlog.

Binds a run_id and the command name to structlog contextvars so every log
entry emitted while a CLI command runs can be correlated.
"""

from contextlib import contextmanager
from typing import Any, Iterator
from uuid import uuid4

import structlog


@contextmanager
def run_context(command: str, **fields: Any) -> Iterator[str]:
    """
    Bind run_id, command and `fields` for the duration of the block.

    Yields:
        The generated run_id.
    """
    run_id = uuid4().hex
    structlog.contextvars.bind_contextvars(run_id=run_id, command=command, **fields)
    try:
        yield run_id
    finally:
        # Clear context after the command completes
        structlog.contextvars.clear_contextvars()
