"""Tiny optional-capacity memo table used by the counting recurrences."""

from __future__ import annotations


class Memo:
    """Dict-backed cache, unbounded unless a limit is set.

    CPython dict reads and writes are atomic, so concurrent callers at worst
    recompute an entry; stored results are pure functions of the key, hence
    deterministic either way.  When the limit is reached new entries are
    simply not stored (no eviction), which keeps behaviour deterministic.
    """

    def __init__(self) -> None:
        self._data: dict = {}
        self._limit: int | None = None

    def get(self, key):
        return self._data.get(key)

    def put(self, key, value) -> None:
        if self._limit is None or len(self._data) < self._limit:
            self._data[key] = value

    def clear(self) -> None:
        self._data.clear()

    def set_limit(self, limit: int | None) -> None:
        if limit is not None and limit < 0:
            raise ValueError("cache limit must be >= 0 or None")
        self._limit = limit

    def __len__(self) -> int:
        return len(self._data)
