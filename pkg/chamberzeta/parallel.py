import logging
from concurrent.futures import ProcessPoolExecutor, as_completed
from typing import Callable, List, Sequence

logger = logging.getLogger(__name__)


def chunked(items: Sequence, count: int) -> List[list]:
    size = max(1, -(-len(items) // max(count, 1)))
    return [list(items[i:i + size]) for i in range(0, len(items), size)]


def map_chunks(func: Callable, items: Sequence, workers: int, *args) -> list:
    """Apply func(chunk, *args) to consecutive chunks of items; results come back in chunk order."""
    if workers <= 1 or len(items) < 2 * workers:
        return [func(list(items), *args)]

    chunks = chunked(items, workers)
    results = [None] * len(chunks)
    logger.debug(f"Fanning {len(items)} items out to {workers} workers")
    with ProcessPoolExecutor(max_workers=workers) as ex:
        fut = {ex.submit(func, chunk, *args): j for j, chunk in enumerate(chunks)}
        for ft in as_completed(fut):
            results[fut[ft]] = ft.result()
    return results
