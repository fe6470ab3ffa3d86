"""
Parallel scanning of principal minors.

Subsets are enumerated in cardinality-major order and split into disjoint
contiguous ranges. Each range is scanned by a worker thread, and the
earliest range that reports a difference wins, so the result is the one the
sequential scan would give.
"""

import concurrent.futures
import itertools
import logging
import time
from typing import Dict, List, Optional, Tuple

from . import minors
from .bifunction import LabeledBiFunction
from .settings import MAX_WORKERS


class MinorScanner:
    """Compares principal minors of two matrices across worker threads."""

    def __init__(self, max_workers: Optional[int] = None, chunk_size: int = 256):
        """
        Initialize the scanner.

        Args:
            max_workers: Maximum number of worker threads. If None, uses MAX_WORKERS
            chunk_size: Number of consecutive subsets per task
        """
        self.max_workers = max_workers or MAX_WORKERS
        self.chunk_size = max(1, chunk_size)
        self.stats = {
            "subsets_checked": 0,
            "chunks": 0,
            "differences": 0,
            "total_time": 0.0,
        }

    def ranges(self, n: int, max_card: int) -> List[Tuple[int, int]]:
        """Split the enumeration [0, total) into contiguous (start, stop) ranges."""
        total = minors.count_subsets(n, max_card)
        return [
            (start, min(start + self.chunk_size, total))
            for start in range(0, total, self.chunk_size)
        ]

    def _scan_range(
        self,
        L: LabeledBiFunction,
        M: LabeledBiFunction,
        max_card: int,
        start: int,
        stop: int,
        tolerance: float,
    ) -> Tuple[Optional[minors.MinorDifference], int]:
        subsets = itertools.islice(minors.iter_subsets(L.n, max_card), start, stop)
        return minors.first_difference(L, M, subsets, tolerance)

    def first_difference(
        self,
        L: LabeledBiFunction,
        M: LabeledBiFunction,
        max_card: int,
        tolerance: float,
    ) -> Optional[minors.MinorDifference]:
        """First differing subset in enumeration order, or None."""
        start_time = time.time()
        ranges = self.ranges(L.n, max_card)
        found: Dict[int, minors.MinorDifference] = {}

        with concurrent.futures.ThreadPoolExecutor(
            max_workers=self.max_workers
        ) as executor:
            future_to_range = {
                executor.submit(
                    self._scan_range, L, M, max_card, start, stop, tolerance
                ): index
                for index, (start, stop) in enumerate(ranges)
            }

            for future in concurrent.futures.as_completed(future_to_range):
                index = future_to_range[future]
                diff, checked = future.result()
                self.stats["chunks"] += 1
                self.stats["subsets_checked"] += checked
                if diff is not None:
                    found[index] = diff
                    self.stats["differences"] += 1

        self.stats["total_time"] += time.time() - start_time
        logging.debug(
            f"Scanned {self.stats['subsets_checked']} subsets in "
            f"{len(ranges)} chunks with {self.max_workers} workers"
        )

        if not found:
            return None
        return found[min(found)]

    def get_stats(self) -> Dict[str, float]:
        return dict(self.stats)
