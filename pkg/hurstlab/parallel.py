"""Worker pool helpers for independent numeric tasks.

Windows, scales and ensemble members are independent, so they fan out over
a joblib thread pool. Results always come back in input order and never
depend on the worker count.
"""

from __future__ import annotations

import os
from collections.abc import Callable, Iterable, Sequence
from typing import TypeVar

from joblib import Parallel, delayed
from loguru import logger

T = TypeVar("T")
R = TypeVar("R")


def resolve_workers(threads: int | None = None) -> int:
    """Map a configured cap to a worker count: None or 0 means one per CPU."""
    if threads:
        return max(1, int(threads))
    return os.cpu_count() or 1


def chunked(items: Sequence[T], size: int) -> list[Sequence[T]]:
    size = max(1, size)
    return [items[i : i + size] for i in range(0, len(items), size)]


def ordered_map(fn: Callable[[T], R], items: Iterable[T], workers: int = 1) -> list[R]:
    """Apply ``fn`` to every item, in parallel when workers > 1, preserving order."""
    items = list(items)
    if workers <= 1 or len(items) <= 1:
        return [fn(item) for item in items]
    logger.debug("Dispatching {} task(s) over {} worker(s)", len(items), workers)
    return Parallel(n_jobs=workers, prefer="threads")(delayed(fn)(item) for item in items)
