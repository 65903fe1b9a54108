import logging
from collections.abc import Callable, Sequence
from concurrent.futures import ProcessPoolExecutor, as_completed
from typing import TypeVar

T = TypeVar("T")
R = TypeVar("R")

logger = logging.getLogger(__name__)


def map_ordered(
    fn: Callable[[T], R],
    items: Sequence[T],
    threads: int = 1,
    on_done: Callable[[int], None] | None = None,
) -> list[R]:
    """Applies `fn` to every item, placing each result at its item's index.

    Runs in-process when `threads <= 1`; otherwise `fn` and the items must be
    picklable.

    Args:
        fn (Callable): Function applied to each item.
        items (Sequence): Inputs.
        threads (int): Number of worker processes.
        on_done (Callable[[int], None] | None): Called with the index of each finished item.

    Returns:
        Results in the order of `items`, whatever order the workers finish in.

    Examples:
        >>> map_ordered(abs, [-2, 1, -3])
        [2, 1, 3]
    """  # noqa: E501
    if threads <= 1 or len(items) <= 1:
        results = []
        for index, item in enumerate(items):
            results.append(fn(item))
            if on_done is not None:
                on_done(index)
        return results

    logger.debug("dispatching %d items to %d workers", len(items), threads)

    placed: list = [None] * len(items)
    with ProcessPoolExecutor(max_workers=threads) as executor:
        futures = {executor.submit(fn, item): index for index, item in enumerate(items)}
        for future in as_completed(futures):
            index = futures[future]
            placed[index] = future.result()
            if on_done is not None:
                on_done(index)

    return placed
