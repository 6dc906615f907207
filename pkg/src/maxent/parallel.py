"""Deterministic sharded execution.

Work is split into shards whose boundaries do not depend on the worker count;
results come back in shard order, so merged output is identical for any
number of workers.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Sequence, TypeVar

T = TypeVar("T")
R = TypeVar("R")

ENV_WORKERS = "MAXENT_WORKERS"


def default_workers() -> int:
    value = os.environ.get(ENV_WORKERS, "")
    try:
        return max(1, int(value))
    except ValueError:
        return 1


def run_shards(func: Callable[[T], R], shards: Sequence[T], workers: int | None = None) -> list[R]:
    """``[func(s) for s in shards]``, optionally across processes; order preserved."""
    workers = default_workers() if workers is None else max(1, workers)
    if workers == 1 or len(shards) <= 1:
        return [func(s) for s in shards]
    with ProcessPoolExecutor(max_workers=min(workers, len(shards))) as pool:
        return list(pool.map(func, shards))


def split_range(total: int, parts: int) -> list[tuple[int, int]]:
    """Contiguous half-open ranges covering 0..total."""
    parts = max(1, min(parts, total)) if total else 1
    step, extra = divmod(total, parts)
    out = []
    start = 0
    for k in range(parts):
        end = start + step + (k < extra)
        out.append((start, end))
        start = end
    return out
