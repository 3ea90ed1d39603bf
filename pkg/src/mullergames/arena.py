"""Arenas, subarenas, traps and attractors over bitmask vertex sets.

A vertex set is a plain ``int`` whose bit ``v`` stands for the vertex with
index ``v`` (0-based, so the first vertex is the least significant bit).
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from math import comb
from typing import Iterator, Sequence

import numpy as np

from .errors import (
    ArenaValidationError,
    MissingOutEdge,
    NotBipartite,
    OwnershipGap,
    OwnershipOverlap,
)

VertexSet = int


def full_mask(n: int) -> VertexSet:
    return (1 << n) - 1


def bits(mask: VertexSet) -> Iterator[int]:
    """Yield the indices of the set bits of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def popcount(mask: VertexSet) -> int:
    return mask.bit_count()


def mask_of(indices) -> VertexSet:
    m = 0
    for i in indices:
        m |= 1 << i
    return m


@dataclass(frozen=True)
class Arena:
    """A bipartite game graph.

    ``owner0`` is the mask of Player 0 positions, ``succ[v]`` the successor
    mask of vertex ``v``. Construction does not validate; call
    :func:`validate` (the file loader always does).
    """

    n: int
    owner0: VertexSet
    succ: tuple[VertexSet, ...]
    names: tuple[str, ...] = ()
    pred: tuple[VertexSet, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if len(self.succ) != self.n:
            raise ArenaValidationError(f"expected {self.n} successor masks, got {len(self.succ)}")
        if not self.names:
            object.__setattr__(self, "names", tuple(f"v{i + 1}" for i in range(self.n)))
        elif len(self.names) != self.n:
            raise ArenaValidationError(f"expected {self.n} names, got {len(self.names)}")
        pred = [0] * self.n
        for v, s in enumerate(self.succ):
            for u in bits(s & self.full):
                pred[u] |= 1 << v
        object.__setattr__(self, "succ", tuple(int(s) for s in self.succ))
        object.__setattr__(self, "pred", tuple(pred))

    @classmethod
    def from_edges(
        cls,
        n: int,
        owner0: Sequence[int],
        edges: Sequence[tuple[int, int]],
        names: Sequence[str] = (),
    ) -> "Arena":
        succ = [0] * n
        for u, v in edges:
            succ[u] |= 1 << v
        return cls(n, mask_of(owner0), tuple(succ), tuple(names))

    @property
    def full(self) -> VertexSet:
        return full_mask(self.n)

    @property
    def owner1(self) -> VertexSet:
        return self.full & ~self.owner0

    def owned_by(self, sigma: int) -> VertexSet:
        return self.owner0 if sigma == 0 else self.owner1

    def dual(self) -> "Arena":
        """The same graph with the players' positions exchanged."""
        return Arena(self.n, self.owner1, self.succ, self.names)

    def edges(self) -> list[tuple[int, int]]:
        return [(v, u) for v in range(self.n) for u in bits(self.succ[v])]

    def succ_array(self) -> np.ndarray:
        return np.asarray(self.succ, dtype=np.int64)

    def restricted_succ(self, context: VertexSet) -> list[VertexSet]:
        return [s & context for s in self.succ]


def validate(arena: Arena, owner1: VertexSet | None = None) -> None:
    """Raise the first violated arena invariant, or return ``None``.

    ``owner1`` lets a caller that tracks both ownership masks separately
    (the file loader) have overlaps and gaps reported; by default it is the
    complement of ``owner0``.
    """
    full = arena.full
    names = arena.names
    if owner1 is None:
        owner1 = arena.owner1
    if (arena.owner0 | owner1) & ~full:
        raise ArenaValidationError("ownership mask has bits beyond the vertex count")
    for v in range(arena.n):
        in0 = (arena.owner0 >> v) & 1
        in1 = (owner1 >> v) & 1
        if in0 and in1:
            raise OwnershipOverlap(names[v])
        if not (in0 or in1):
            raise OwnershipGap(names[v])
    for v in range(arena.n):
        s = arena.succ[v]
        if s & ~full:
            raise ArenaValidationError(f"vertex {names[v]!r} has a successor outside the arena", names[v])
        same_side = arena.owner0 if (arena.owner0 >> v) & 1 else owner1
        clash = s & same_side
        if clash:
            u = (clash & -clash).bit_length() - 1
            raise NotBipartite(names[v], names[u])
    for v in range(arena.n):
        if not arena.succ[v]:
            raise MissingOutEdge(names[v])


def is_subarena(arena: Arena, x: VertexSet) -> bool:
    if not x:
        return False
    return all(arena.succ[v] & x for v in bits(x))


def is_trap(arena: Arena, x: VertexSet, sigma: int, context: VertexSet | None = None) -> bool:
    """Whether ``x`` is a ``sigma``-trap of the subarena on ``context``.

    Player ``sigma`` cannot leave ``x`` and the opponent can always stay.
    ``context`` defaults to the whole arena.
    """
    if context is None:
        context = arena.full
    if not x or x & ~context:
        return False
    own = arena.owned_by(sigma)
    for v in bits(x):
        s = arena.succ[v] & context
        if (own >> v) & 1:
            if s & ~x:
                return False
        elif not s & x:
            return False
    return True


def attractor(arena: Arena, context: VertexSet, target: VertexSet, sigma: int) -> VertexSet:
    """Positions of ``context`` from which player ``sigma`` forces a visit to ``target``.

    Worklist over predecessors with out-degree counters, linear in the edges
    inside ``context``.
    """
    own = arena.owned_by(sigma)
    attr = target & context
    # opponent vertices with no successor in context are forced vacuously
    for u in bits(context & ~attr & ~own):
        if not arena.succ[u] & context:
            attr |= 1 << u
    remaining = {}
    queue = deque(bits(attr))
    while queue:
        w = queue.popleft()
        for u in bits(arena.pred[w] & context & ~attr):
            if (own >> u) & 1:
                attr |= 1 << u
                queue.append(u)
                continue
            left = remaining.get(u)
            if left is None:
                left = popcount(arena.succ[u] & context)
            left -= 1
            remaining[u] = left
            if left == 0:
                attr |= 1 << u
                queue.append(u)
    return attr


def submask_iteration(i: VertexSet) -> Iterator[VertexSet]:
    """Nonempty proper submasks of ``i``, in descending numeric order."""
    j = (i - 1) & i
    while j:
        yield j
        j = (j - 1) & i


def proper_pair_count(n: int) -> int:
    """Number of (i, j) with nonempty proper submask j of i, over all n-bit i."""
    return sum(comb(n, k) * (2**k - 2) for k in range(1, n + 1))


def subset_pair_bound(n: int) -> int:
    """The classical count sum_k C(n,k)(2^k - 1) = 3^n - 2^n."""
    return sum(comb(n, k) * (2**k - 1) for k in range(1, n + 1))
