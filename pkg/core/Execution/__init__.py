"""Execution management modules."""

from .pool_executor import PoolExecutor, PoolType

__all__ = [
    "PoolExecutor",
    "PoolType",
]
