import logging
import os
from concurrent.futures import ThreadPoolExecutor

LOG = logging.getLogger(__name__)

THREADS_ENV_VAR = "COLLOC_THREADS"


def worker_count(threads=None) -> int:
    """
    Number of worker threads to use for row-block assembly and
    per-cell experiments.

    An explicit `threads` argument wins, then the `COLLOC_THREADS`
    environment variable, then `os.cpu_count()`.

    Args:
        threads (int, optional): explicit override

    Returns:
        int: a positive thread count
    """
    if threads is not None:
        if int(threads) < 1:
            raise ValueError(f"thread count must be positive, got {threads}")
        return int(threads)
    value = os.environ.get(THREADS_ENV_VAR)
    if value is None:
        return os.cpu_count() or 1
    try:
        count = int(value)
    except ValueError:
        LOG.warning("Ignoring invalid %s=%r, using 1 thread", THREADS_ENV_VAR, value)
        return 1
    if count < 1:
        LOG.warning("Ignoring invalid %s=%r, using 1 thread", THREADS_ENV_VAR, value)
        return 1
    return count


def parallel_map(func, items, threads=None):
    """
    Apply `func` to each item, possibly on a thread pool.

    Results are returned in the order of `items` regardless of
    completion order.

    Args:
        func (callable): function of a single argument
        items (iterable): inputs
        threads (int, optional): worker count override, see `worker_count`

    Returns:
        list: `[func(item) for item in items]`
    """
    items = list(items)
    nworkers = min(worker_count(threads), max(len(items), 1))
    if nworkers == 1:
        return [func(item) for item in items]
    LOG.debug("Mapping %d items over %d threads", len(items), nworkers)
    with ThreadPoolExecutor(max_workers=nworkers) as pool:
        return list(pool.map(func, items))
