"""Full-win partition of all subgames and winning-region extraction.

For every vertex set whose restriction is a subarena the solver decides
whether Player 0 wins the restricted game from every position (table P) or
not (table Q). Keys are processed in ascending numeric order, so every
proper subset of a key is already classified when the key is reached.

Non-accepted keys are settled either by the attractor-based witness test
(``alg1``) or by the size/closure test that needs no attractor (``alg2``).
Winning regions then come from the numerically largest member of P that is
a Player 1 trap of the whole arena.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

from .arena import Arena, validate
from .conditions import STREETT, WinningCondition
from .errors import CapExceeded
from .family import SubsetFamily
from .kernels import get_backend

DEFAULT_CAP = 24
ALG1 = "alg1"
ALG2 = "alg2"
ALGORITHMS = (ALG1, ALG2)


@dataclass(frozen=True)
class PartitionTables:
    P: SubsetFamily
    Q: SubsetFamily
    pairs_enumerated: int
    attractor_calls: int


@dataclass(frozen=True)
class SolveResult:
    win0: int
    win1: int
    tables: PartitionTables
    algorithm: str
    elapsed: float
    backend: str = ""


def check_cap(n: int, cap: int = DEFAULT_CAP) -> None:
    if n > cap:
        raise CapExceeded(n, cap)


def partition(
    arena: Arena,
    cond: WinningCondition,
    algorithm: str = ALG2,
    *,
    cap: int = DEFAULT_CAP,
    backend: str | None = None,
    verify: bool = False,
) -> PartitionTables:
    """Split every subarena carrier into P (Player 0 fully wins) and Q.

    ``verify`` makes ``alg2`` re-check each local closure decision with a
    real attractor computation; those checks are not counted.
    """
    if algorithm not in ALGORITHMS:
        raise ValueError(f"unknown algorithm {algorithm!r}")
    check_cap(arena.n, cap)
    validate(arena)
    accept = cond.accept_table(arena.n)
    kernels = get_backend(backend)
    P, Q, pairs, calls = kernels.partition(
        arena.n,
        arena.owner0,
        arena.succ_array(),
        accept,
        1 if algorithm == ALG1 else 2,
        verify,
    )
    return PartitionTables(
        SubsetFamily.from_table(P, arena.n).freeze(),
        SubsetFamily.from_table(Q, arena.n).freeze(),
        int(pairs),
        int(calls),
    )


def partition_alg1(arena: Arena, cond: WinningCondition, **kwargs) -> PartitionTables:
    return partition(arena, cond, ALG1, **kwargs)


def partition_alg2(arena: Arena, cond: WinningCondition, **kwargs) -> PartitionTables:
    return partition(arena, cond, ALG2, **kwargs)


def winning_regions(arena: Arena, tables: PartitionTables, backend: str | None = None) -> tuple[int, int]:
    kernels = get_backend(backend)
    best = int(kernels.max_one_trap(arena.n, arena.owner0, arena.succ_array(), tables.P.table))
    return best, arena.full & ~best


def solve(
    arena: Arena,
    cond: WinningCondition,
    algorithm: str = ALG2,
    *,
    cap: int = DEFAULT_CAP,
    backend: str | None = None,
    verify: bool = False,
    streett_via_duality: bool = True,
) -> SolveResult:
    """Decide the game; Streett conditions go through Rabin duality by default."""
    if cond.kind == STREETT and streett_via_duality:
        from .reductions import solve_streett_via_duality

        return solve_streett_via_duality(arena, cond, algorithm, cap=cap, backend=backend, verify=verify)
    start = time.perf_counter()
    tables = partition(arena, cond, algorithm, cap=cap, backend=backend, verify=verify)
    win0, win1 = winning_regions(arena, tables, backend)
    elapsed = time.perf_counter() - start
    return SolveResult(win0, win1, tables, algorithm, elapsed, get_backend(backend).NAME)
