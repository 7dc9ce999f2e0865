from concurrent.futures import Executor, ProcessPoolExecutor, ThreadPoolExecutor
from enum import Enum
from typing import Callable, Iterable, List, Optional, TypeVar

import structlog

from ..exceptions import ConfigError

logger = structlog.get_logger(__name__)

T = TypeVar("T")
R = TypeVar("R")


class PoolType(Enum):
    SERIAL = "SERIAL"
    THREAD = "THREAD"
    PROCESS = "PROCESS"

    @classmethod
    def parse(cls, value: "str | PoolType") -> "PoolType":
        if isinstance(value, cls):
            return value
        try:
            return cls(str(value).strip().upper())
        except ValueError:
            raise ConfigError(f"Unknown execution pool: {value}", available=[p.value for p in cls]) from None


class PoolExecutor:
    """
    Runs independent tasks in a serial loop, a thread pool or a process pool.
    `map` always returns results in input order, so callers can reduce them
    deterministically whatever the worker count.
    """

    def __init__(self, pool: PoolType = PoolType.SERIAL, max_workers: int = 1):
        if max_workers < 1:
            raise ConfigError(f"max_workers must be >= 1, got {max_workers}", max_workers=max_workers)
        self.pool = PoolType.parse(pool)
        self.max_workers = max_workers
        self._thread_pool: Optional[ThreadPoolExecutor] = None
        self._process_pool: Optional[ProcessPoolExecutor] = None

    @property
    def is_serial(self) -> bool:
        return self.pool is PoolType.SERIAL or self.max_workers == 1

    def _executor(self) -> Executor:
        if self.pool is PoolType.THREAD:
            if self._thread_pool is None:
                self._thread_pool = ThreadPoolExecutor(max_workers=self.max_workers)
            return self._thread_pool
        if self._process_pool is None:
            self._process_pool = ProcessPoolExecutor(max_workers=self.max_workers)
        return self._process_pool

    def map(self, fn: Callable[[T], R], items: Iterable[T], chunksize: int = 1) -> List[R]:
        """
        Apply `fn` to every item. For PROCESS pools `fn` and the items must be
        picklable (module-level functions, pydantic models, plain values).
        """
        items = list(items)
        if self.is_serial or len(items) <= 1:
            return [fn(item) for item in items]
        logger.debug("Dispatching to pool", pool=self.pool.value, workers=self.max_workers, tasks=len(items))
        if self.pool is PoolType.PROCESS:
            return list(self._executor().map(fn, items, chunksize=max(1, chunksize)))
        return list(self._executor().map(fn, items))

    def shutdown(self, wait: bool = True) -> None:
        if self._thread_pool:
            self._thread_pool.shutdown(wait=wait)
            self._thread_pool = None
        if self._process_pool:
            self._process_pool.shutdown(wait=wait)
            self._process_pool = None

    def __enter__(self) -> "PoolExecutor":
        return self

    def __exit__(self, *exc_info) -> None:
        self.shutdown()
