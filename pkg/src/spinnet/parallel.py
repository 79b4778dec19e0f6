"""Deterministic thread-pool helpers.

Work items carry explicit indices and results are returned in input
order, so outputs are identical for any thread count. The environment
variable PST_THREADS caps parallelism globally.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Iterable, Sequence, TypeVar

T = TypeVar("T")
R = TypeVar("R")

__all__ = ["resolve_threads", "thread_map"]


def resolve_threads(requested: int | None = None) -> int:
    """Effective worker count: the request capped by PST_THREADS (default 1)."""
    cap_env = os.environ.get("PST_THREADS")
    cap = None
    if cap_env is not None:
        try:
            cap = max(1, int(cap_env))
        except ValueError:
            raise ValueError(f"PST_THREADS must be an integer, got {cap_env!r}") from None
    if requested is None:
        return cap if cap is not None else 1
    requested = max(1, requested)
    return min(requested, cap) if cap is not None else requested


def thread_map(fn: Callable[[T], R], items: Sequence[T], threads: int | None = None) -> list[R]:
    """Map fn over items, preserving order; serial when threads <= 1."""
    workers = resolve_threads(threads)
    items = list(items)
    if workers <= 1 or len(items) <= 1:
        return [fn(item) for item in items]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items))
