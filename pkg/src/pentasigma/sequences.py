"""Finite prefixes of integer sequences indexed from 0."""

from __future__ import annotations

from typing import Iterator

import numpy as np


class SignSequence:
    """Values ``a(0..N)`` of an integer sequence, stored as ``int64``.

    Integer indexing below 0 yields 0, matching the convention that all
    sequences used here vanish at negative arguments. Indexing past ``N``
    raises ``IndexError`` since the value is unknown, not zero.
    """

    __slots__ = ("_values",)

    def __init__(self, values):
        arr = np.array(values, dtype=np.int64)
        if arr.ndim != 1:
            raise ValueError("sequence values must be one-dimensional")
        arr.setflags(write=False)
        self._values = arr

    @property
    def values(self) -> np.ndarray:
        return self._values

    @property
    def bound(self) -> int:
        """Largest index ``N`` covered."""
        return len(self._values) - 1

    def __len__(self) -> int:
        return len(self._values)

    def __getitem__(self, n):
        if isinstance(n, slice):
            return self._values[n]
        n = int(n)
        if n < 0:
            return 0
        return int(self._values[n])

    def __iter__(self) -> Iterator[int]:
        return (int(v) for v in self._values)

    def tolist(self) -> list[int]:
        return self._values.tolist()

    def __eq__(self, other) -> bool:
        if isinstance(other, SignSequence):
            return np.array_equal(self._values, other._values)
        return NotImplemented

    __hash__ = None

    def __repr__(self) -> str:
        head = ", ".join(str(v) for v in self._values[:8].tolist())
        tail = ", ..." if len(self) > 8 else ""
        return f"{type(self).__name__}([{head}{tail}], bound={self.bound})"
