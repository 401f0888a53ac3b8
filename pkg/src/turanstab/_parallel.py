from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Iterable, Iterator, TypeVar

T = TypeVar("T")
R = TypeVar("R")


def default_workers() -> int:
    return os.cpu_count() or 1


def pmap(fn: Callable[[T], R], items: Iterable[T], workers: int = 1, chunksize: int = 256) -> Iterator[R]:
    """Order-preserving map; runs in-process when ``workers <= 1``."""
    if workers <= 1:
        return map(fn, items)
    pool = ProcessPoolExecutor(max_workers=workers)

    def run():
        with pool:
            yield from pool.map(fn, items, chunksize=chunksize)

    return run()
