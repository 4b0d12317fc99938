"""
Row-block executor.

Rows of a K x L matrix are cut into fixed blocks of Defaults.ROW_BLOCK rows.
The block layout never depends on the worker count, and each block writes
only its own rows, so results are bit-identical for any thread count.
"""

import logging
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, List, Optional, Tuple

from tfsqueeze.core.utils.constants import Defaults

logger = logging.getLogger(__name__)

BlockFn = Callable[[int, int], None]


def row_blocks(n_rows: int, block: int = Defaults.ROW_BLOCK) -> List[Tuple[int, int]]:
    """Half-open (start, stop) row ranges covering 0..n_rows."""
    return [(start, min(start + block, n_rows)) for start in range(0, n_rows, block)]


def run_row_blocks(n_rows: int, fn: BlockFn, threads: Optional[int] = None, block: int = Defaults.ROW_BLOCK) -> None:
    """
    Call fn(start, stop) for every row block.

    With threads <= 1 (or a single block) the blocks run inline in order.
    numpy releases the GIL inside FFTs and ufuncs, so threads give real
    parallelism for the per-row work.
    """
    blocks = row_blocks(n_rows, block)
    workers = 1 if threads is None else max(1, int(threads))
    if workers == 1 or len(blocks) <= 1:
        for start, stop in blocks:
            fn(start, stop)
        return

    logger.debug(f"Running {len(blocks)} row blocks on {workers} threads")
    with ThreadPoolExecutor(max_workers=min(workers, len(blocks))) as pool:
        futures = [pool.submit(fn, start, stop) for start, stop in blocks]
        for future in futures:
            future.result()
