"""Membership store for families of n-bit sets (winning families, P and Q)."""

from __future__ import annotations

from typing import Iterable, Iterator

import numpy as np


class SubsetFamily:
    """A family of n-bit keys held as one byte per possible key.

    Direct indexing gives O(1) insert, remove and contains; ascending
    traversal scans the 2^n table. ``frozen`` families reject writes.
    """

    __slots__ = ("n", "_table", "_count", "_frozen")

    def __init__(self, n: int, keys: Iterable[int] = ()):
        if n < 0:
            raise ValueError("key width must be non-negative")
        self.n = n
        self._table = np.zeros(1 << n, dtype=np.bool_)
        self._count = 0
        self._frozen = False
        for k in keys:
            self.insert(k)

    @classmethod
    def from_table(cls, table: np.ndarray, n: int | None = None) -> "SubsetFamily":
        """Wrap a boolean table of length 2^n without copying."""
        table = np.asarray(table, dtype=np.bool_)
        if n is None:
            n = int(table.size).bit_length() - 1
        if table.shape != (1 << n,):
            raise ValueError(f"table of shape {table.shape} does not match n={n}")
        fam = cls.__new__(cls)
        fam.n = n
        fam._table = table
        fam._count = int(np.count_nonzero(table))
        fam._frozen = False
        return fam

    def _check_key(self, x: int) -> None:
        if x < 0 or x >> self.n:
            raise ValueError(f"key {x:#b} does not fit in {self.n} bits")

    def insert(self, x: int) -> None:
        if self._frozen:
            raise TypeError("family is frozen")
        self._check_key(x)
        if not self._table[x]:
            self._table[x] = True
            self._count += 1

    def remove(self, x: int) -> None:
        if self._frozen:
            raise TypeError("family is frozen")
        self._check_key(x)
        if self._table[x]:
            self._table[x] = False
            self._count -= 1

    def contains(self, x: int) -> bool:
        if x < 0 or x >> self.n:
            return False
        return bool(self._table[x])

    __contains__ = contains

    def traverse(self) -> Iterator[int]:
        for k in np.flatnonzero(self._table):
            yield int(k)

    __iter__ = traverse

    def __len__(self) -> int:
        return self._count

    @property
    def count(self) -> int:
        return self._count

    def freeze(self) -> "SubsetFamily":
        self._frozen = True
        self._table.flags.writeable = False
        return self

    @property
    def frozen(self) -> bool:
        return self._frozen

    @property
    def table(self) -> np.ndarray:
        """Read-only view of the membership table."""
        view = self._table.view()
        view.flags.writeable = False
        return view

    def copy(self) -> "SubsetFamily":
        return SubsetFamily.from_table(self._table.copy(), self.n)

    def __eq__(self, other):
        if not isinstance(other, SubsetFamily):
            return NotImplemented
        return self.n == other.n and np.array_equal(self._table, other._table)

    def __repr__(self):
        shown = list(self.traverse())[:8]
        more = ", ..." if self._count > len(shown) else ""
        return f"SubsetFamily(n={self.n}, keys=[{', '.join(map(hex, shown))}{more}])"
