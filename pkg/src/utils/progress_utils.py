"""
Utility functions for running sweeps with progress bars and optional worker processes.
"""

import logging
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Iterable, List, TypeVar

from tqdm import tqdm

logger = logging.getLogger(__name__)

T = TypeVar("T")
R = TypeVar("R")


def sweep(
    func: Callable[[T], R],
    items: Iterable[T],
    jobs: int = 1,
    desc: str = "sweep",
    progress: bool = False
) -> List[R]:
    """
    Apply func to every item, keeping the input order.

    Args:
        func: Picklable top-level function when jobs > 1
        items: Work items
        jobs: Number of worker processes (1 runs in-process)
        desc: Label shown on the progress bar
        progress: Whether to show a tqdm progress bar on stderr

    Returns:
        Results in the order of items, identical for every value of jobs
    """
    items = list(items)
    progress_bar = tqdm(total=len(items), desc=desc, unit="job", disable=not progress, leave=False)
    try:
        if jobs <= 1 or len(items) < 2:
            results = []
            for item in items:
                results.append(func(item))
                progress_bar.update(1)
            return results

        logger.debug("%s: %d items on %d workers", desc, len(items), jobs)
        chunksize = max(1, len(items) // (4 * jobs))
        results = []
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for result in pool.map(func, items, chunksize=chunksize):
                results.append(result)
                progress_bar.update(1)
        return results
    finally:
        progress_bar.close()
