"""Monotone bucket priority queue used by the peeling loops.

Keys are nonnegative integers that only ever decrease, and never below
the level currently being peeled, so a single forward cursor over the
buckets suffices. Each bucket is a lazy min-heap of entity ids: stale
entries (id pushed before a later decrease) are skipped on pop, which
keeps decrease O(log) and makes pop order fully deterministic: minimum
key first, smallest id within a key.
"""

from __future__ import annotations

from heapq import heappop, heappush

__all__ = ["BucketQueue"]


class BucketQueue:
    __slots__ = ("key", "done", "_buckets", "_cursor")

    def __init__(self, keys: list[int]):
        self.key = list(keys)
        self.done = [False] * len(keys)
        top = max(keys, default=0)
        buckets: list[list[int]] = [[] for _ in range(top + 1)]
        # Ids appended in ascending order form valid heaps as-is.
        for i, k in enumerate(keys):
            buckets[k].append(i)
        self._buckets = buckets
        self._cursor = 0

    def pop(self) -> tuple[int, int] | None:
        """Next (id, key) in peel order, or None when exhausted."""
        buckets = self._buckets
        while self._cursor < len(buckets):
            bucket = buckets[self._cursor]
            while bucket:
                i = heappop(bucket)
                if not self.done[i] and self.key[i] == self._cursor:
                    self.done[i] = True
                    return i, self._cursor
            self._cursor += 1
        return None

    def decrease(self, i: int, new_key: int) -> None:
        """Lower the key of a pending entity; clamped keys must stay at or
        above the current peel level."""
        if new_key < self._cursor:
            raise ValueError(
                f"key {new_key} below current peel level {self._cursor}"
            )
        if new_key < self.key[i]:
            self.key[i] = new_key
            heappush(self._buckets[new_key], i)
