"""
Log-safe summaries for numerical payloads (matrices, state vectors, records).
Arrays are reduced to shape and norm; long strings are trimmed.
No dependency on other core modules to avoid circular imports.
"""

from typing import Any

import numpy as np
import orjson

PLACEHOLDER = "<unprintable>"


def _trim(s: str, max_string_len: int) -> str:
    if len(s) <= max_string_len:
        return s
    suffix = f"...<len={len(s)}>..."
    half = max(0, (max_string_len - len(suffix)) // 2)
    return f"{s[:half]}{suffix}{s[-half:]}"


def summarize_array(arr: np.ndarray) -> str:
    if arr.size <= 4:
        return np.array2string(arr, precision=6, separator=",")
    return f"<array shape={arr.shape} dtype={arr.dtype} norm={float(np.linalg.norm(arr)):.6g}>"


def log_safe_output(data: Any, max_string_len: int = 300) -> str:
    """
    Produce a log-safe string: arrays become summaries, containers are
    serialized then trimmed. On conversion failure returns a fixed placeholder.
    """
    if isinstance(data, np.ndarray):
        return summarize_array(data)
    if isinstance(data, str):
        return _trim(data, max_string_len)

    try:
        if isinstance(data, (dict, list, tuple)):
            s = orjson.dumps(data, default=_default, option=orjson.OPT_SERIALIZE_NUMPY).decode()
        else:
            s = str(data)
        return _trim(s, max_string_len)
    except Exception:
        return PLACEHOLDER


def _default(value: Any) -> Any:
    if isinstance(value, complex):
        return [value.real, value.imag]
    if isinstance(value, np.ndarray):
        return summarize_array(value)
    if hasattr(value, "model_dump"):
        return value.model_dump(mode="json")
    raise TypeError
