import logging
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, List, Sequence, Tuple, TypeVar

from tqdm import tqdm

from config import config

logger = logging.getLogger(__name__)

T = TypeVar("T")
R = TypeVar("R")


def split_range(lo: int, hi: int, shards: int) -> List[Tuple[int, int]]:
    """Partition [lo, hi] into at most `shards` contiguous, non-empty ranges."""
    if hi < lo:
        return []
    shards = max(1, min(shards, hi - lo + 1))
    size, extra = divmod(hi - lo + 1, shards)
    ranges = []
    start = lo
    for i in range(shards):
        end = start + size + (1 if i < extra else 0) - 1
        ranges.append((start, end))
        start = end + 1
    return ranges


def split_items(items: Sequence[T], shards: int) -> List[Sequence[T]]:
    """Partition items into at most `shards` contiguous slices."""
    return [items[lo : hi + 1] for lo, hi in split_range(0, len(items) - 1, shards)]


def run_sharded(
    worker: Callable[[T], R],
    tasks: Sequence[T],
    shards: int,
    initializer: Callable = None,
    initargs: tuple = (),
) -> List[R]:
    """
    Apply worker to every task, in a process pool when shards > 1.

    Results come back in task order, so callers merge deterministically.
    """
    desc = getattr(worker, "__name__", "shards")
    if shards <= 1 or len(tasks) <= 1:
        if initializer is not None:
            initializer(*initargs)
        return [worker(t) for t in tqdm(tasks, desc=desc, disable=not config.progress)]

    logger.info("🚀 Running %d tasks on %d worker processes", len(tasks), shards)
    with ProcessPoolExecutor(max_workers=shards, initializer=initializer, initargs=initargs) as pool:
        return list(tqdm(pool.map(worker, tasks), total=len(tasks), desc=desc, disable=not config.progress))
