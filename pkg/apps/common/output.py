"""
Standardized output helpers for consistent command output.

Machine formats print floats in shortest round-trip form (repr, at most 17
significant digits); human tables use 6 significant digits.
"""

import math
from pathlib import Path
from typing import Any, Optional, Union

import numpy as np
import orjson
from rich.console import Console

HUMAN_DIGITS = 6

stdout_console = Console(highlight=False, soft_wrap=True)
stderr_console = Console(stderr=True, highlight=False, soft_wrap=True)


def format_human(value: Optional[float], digits: int = HUMAN_DIGITS) -> str:
    if value is None:
        return "-"
    if isinstance(value, complex):
        if value.imag == 0.0:
            return format_human(value.real, digits)
        sign = "+" if value.imag >= 0 else "-"
        return f"{value.real:.{digits}g}{sign}{abs(value.imag):.{digits}g}i"
    return f"{float(value):.{digits}g}"


def format_machine(value: Optional[float]) -> str:
    """Shortest string that round-trips to the same double; empty for None."""
    if value is None:
        return ""
    value = float(value)
    if math.isnan(value):
        return "nan"
    return repr(value)


def _default(value: Any) -> Any:
    if isinstance(value, complex):
        return [value.real, value.imag]
    if isinstance(value, np.ndarray):
        if np.iscomplexobj(value):
            return np.stack([value.real, value.imag], axis=-1).tolist()
        return value.tolist()
    if isinstance(value, (np.floating, np.integer)):
        return value.item()
    if hasattr(value, "model_dump"):
        return value.model_dump(mode="json")
    raise TypeError(f"Type is not JSON serializable: {type(value).__name__}")


def dumps_json(data: Any) -> bytes:
    """Sorted keys, 2-space indent, trailing newline; byte-stable for equal input."""
    return orjson.dumps(
        data,
        default=_default,
        option=orjson.OPT_SORT_KEYS | orjson.OPT_INDENT_2 | orjson.OPT_APPEND_NEWLINE | orjson.OPT_NON_STR_KEYS,
    )


def write_bytes(path: Union[str, Path], payload: bytes) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_bytes(payload)
    return path


def echo_json(data: Any) -> None:
    """Write JSON to stdout without rich markup processing."""
    stdout_console.file.write(dumps_json(data).decode())
    stdout_console.file.flush()
