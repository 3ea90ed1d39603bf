"""Independent reference solver for small games.

Any regular condition is turned into a max-parity game with a latest
appearance record (LAR): a position remembers the order in which arena
vertices were last visited, and the index at which the current vertex was
found before it moved to the front. The parity game is then solved with the
classical recursive attractor decomposition. Nothing here shares code with
the subset-partition solver.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .arena import Arena, bits
from .conditions import WinningCondition
from .errors import OracleScaleExceeded

ORACLE_CAP = 6


@dataclass
class ParityGame:
    """Max-parity game: Player 0 wins iff the largest priority seen infinitely often is even."""

    owner: list[int]
    priority: list[int]
    succ: list[list[int]]
    labels: list = field(default_factory=list)
    initial: dict[int, int] = field(default_factory=dict)
    pred: list[list[int]] = field(init=False, repr=False)

    def __post_init__(self):
        self.pred = [[] for _ in self.owner]
        for v, out in enumerate(self.succ):
            if not out:
                raise ValueError(f"parity position {v} has no successor")
            for u in out:
                self.pred[u].append(v)

    def __len__(self):
        return len(self.owner)


def lar_reduce(
    arena: Arena,
    cond: WinningCondition,
    initial_order: Sequence[int] | None = None,
) -> ParityGame:
    """Build the LAR parity game reachable from the initial record of every vertex.

    The initial record for start vertex ``s`` is ``initial_order`` (identity
    by default) with ``s`` rotated to the front; its hit index is the
    1-based position ``s`` had in that order.
    """
    n = arena.n
    if n > ORACLE_CAP:
        raise OracleScaleExceeded(n, ORACLE_CAP)
    order = tuple(range(n)) if initial_order is None else tuple(initial_order)
    if sorted(order) != list(range(n)):
        raise ValueError("initial_order must be a permutation of the vertices")

    index: dict[tuple, int] = {}
    labels: list[tuple] = []
    owner: list[int] = []
    priority: list[int] = []
    succ: list[list[int]] = []

    def intern(perm: tuple, h: int) -> int:
        key = (perm, h)
        pid = index.get(key)
        if pid is None:
            pid = len(labels)
            index[key] = pid
            labels.append((perm[0], perm, h))
            v = perm[0]
            owner.append(0 if (arena.owner0 >> v) & 1 else 1)
            seen = 0
            for x in perm[:h]:
                seen |= 1 << x
            priority.append(2 * h if cond.accepts(seen) else 2 * h + 1)
            succ.append([])
            stack.append(pid)
        return pid

    stack: list[int] = []
    initial = {}
    for s in range(n):
        h = order.index(s) + 1
        perm = (s,) + tuple(x for x in order if x != s)
        initial[s] = intern(perm, h)
    while stack:
        pid = stack.pop()
        _, perm, _ = labels[pid]
        outs = []
        for u in bits(arena.succ[perm[0]]):
            at = perm.index(u)
            outs.append(intern((u,) + perm[:at] + perm[at + 1 :], at + 1))
        succ[pid] = outs
    return ParityGame(owner, priority, succ, labels, initial)


def _attract(pg: ParityGame, alive: set, target: set, player: int) -> set:
    attr = set(target)
    queue = list(target)
    left: dict[int, int] = {}
    while queue:
        w = queue.pop()
        for u in pg.pred[w]:
            if u not in alive or u in attr:
                continue
            if pg.owner[u] == player:
                attr.add(u)
                queue.append(u)
                continue
            c = left.get(u)
            if c is None:
                c = sum(1 for x in pg.succ[u] if x in alive)
            c -= 1
            left[u] = c
            if c == 0:
                attr.add(u)
                queue.append(u)
    return attr


def _zielonka(pg: ParityGame, alive: set) -> tuple[set, set]:
    if not alive:
        return set(), set()
    top = max(pg.priority[v] for v in alive)
    p = top % 2
    heads = {v for v in alive if pg.priority[v] == top}
    a = _attract(pg, alive, heads, p)
    sub = _zielonka(pg, alive - a)
    if not sub[1 - p]:
        win = [set(), set()]
        win[p] = set(alive)
        return win[0], win[1]
    b = _attract(pg, alive, sub[1 - p], 1 - p)
    rest = _zielonka(pg, alive - b)
    win = [None, None]
    win[p] = rest[p]
    win[1 - p] = rest[1 - p] | b
    return win[0], win[1]


def solve_parity(pg: ParityGame) -> tuple[frozenset, frozenset]:
    w0, w1 = _zielonka(pg, set(range(len(pg))))
    return frozenset(w0), frozenset(w1)


def oracle_solve(
    arena: Arena,
    cond: WinningCondition,
    initial_order: Sequence[int] | None = None,
) -> tuple[int, int]:
    """Winning regions (as vertex masks) computed through the LAR parity game."""
    pg = lar_reduce(arena, cond, initial_order)
    w0, _ = solve_parity(pg)
    win0 = 0
    for v, pid in pg.initial.items():
        if pid in w0:
            win0 |= 1 << v
    return win0, arena.full & ~win0
