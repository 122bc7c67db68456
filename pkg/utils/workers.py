"""
Process pool helpers with deterministic, submission-ordered results.
"""

import logging
import os
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Iterable, List, Optional, TypeVar

from tqdm import tqdm

logger = logging.getLogger(__name__)

T = TypeVar("T")
R = TypeVar("R")


def resolve_workers(requested: Optional[int] = None) -> int:
    """
    Turn a configured worker count into a usable one.

    Args:
        requested: Worker count; None or 0 means available parallelism

    Returns:
        Worker count >= 1
    """
    if requested is None or requested <= 0:
        try:
            return max(1, len(os.sched_getaffinity(0)))
        except AttributeError:
            return max(1, os.cpu_count() or 1)
    return int(requested)


def ordered_map(
    func: Callable[[T], R],
    items: Iterable[T],
    workers: int = 1,
    show_progress: bool = False,
    desc: Optional[str] = None,
) -> List[R]:
    """
    Apply func to every item, returning results in input order.

    With workers > 1 the calls run in a process pool, so func and the items
    must be picklable. The output does not depend on the worker count.

    Args:
        func: Top-level function
        items: Work items
        workers: Process count (1 runs in-process)
        show_progress: Show a tqdm bar on stderr
        desc: Progress bar label

    Returns:
        Results, one per item
    """
    items = list(items)
    if not items:
        return []

    workers = min(resolve_workers(workers), len(items))
    bar = tqdm(total=len(items), desc=desc, disable=not show_progress, leave=False)

    results: List[R] = []
    try:
        if workers == 1:
            for item in items:
                results.append(func(item))
                bar.update(1)
        else:
            logger.debug("Dispatching %d work items to %d processes", len(items), workers)
            with ProcessPoolExecutor(max_workers=workers) as pool:
                for result in pool.map(func, items):
                    results.append(result)
                    bar.update(1)
    finally:
        bar.close()

    return results
