"""Condition transformations: Rabin to KL, KL to Müller, Streett by duality."""

from __future__ import annotations

import time
from dataclasses import dataclass

import numpy as np

from .arena import Arena, full_mask
from .conditions import KL, RABIN, STREETT, KLCondition, Muller, Rabin, WinningCondition
from .errors import UnsupportedConversion
from .family import SubsetFamily
from .solver import ALG2, DEFAULT_CAP, SolveResult, check_cap, solve


@dataclass(frozen=True)
class ReductionReport:
    source: str
    target: str
    pairs_in: int
    pairs_out: int
    family_size: int
    elapsed: float

    def as_dict(self) -> dict:
        return {
            "source": self.source,
            "target": self.target,
            "pairs_in": self.pairs_in,
            "pairs_out": self.pairs_out,
            "family_size": self.family_size,
            "elapsed_ms": round(self.elapsed * 1000, 3),
        }


def rabin_to_kl(cond: Rabin, n: int) -> KLCondition:
    """One KL pair ``(u, V \\ V_i)`` per vertex ``u`` of ``U_i \\ V_i``; duplicates dropped."""
    if cond.kind != RABIN:
        raise UnsupportedConversion(f"rabin_to_kl expects a Rabin condition, got {cond.kind}")
    full = full_mask(n)
    seen = set()
    out = []
    for u_set, v_set in cond.pairs:
        hit = u_set & ~v_set
        allowed = full & ~v_set
        for u in range(n):
            if (hit >> u) & 1 and (u, allowed) not in seen:
                seen.add((u, allowed))
                out.append((u, allowed))
    return KLCondition(tuple(out))


def kl_insertions_bound(cond: KLCondition) -> int:
    return sum(1 << (s.bit_count() - 1) for u, s in cond.pairs if (s >> u) & 1)


def kl_to_muller(cond: KLCondition, n: int, *, cap: int = DEFAULT_CAP) -> Muller:
    return kl_to_muller_counted(cond, n, cap=cap)[0]


def kl_to_muller_counted(cond: KLCondition, n: int, *, cap: int = DEFAULT_CAP) -> tuple[Muller, int]:
    """Materialise the KL family; also returns the number of insertions made.

    For each pair every subset of ``S`` containing ``u`` is inserted, by
    enumerating the submasks of ``S`` without ``u``.
    """
    if cond.kind != KL:
        raise UnsupportedConversion(f"kl_to_muller expects a KL condition, got {cond.kind}")
    check_cap(n, cap)
    omega = SubsetFamily(n)
    insertions = 0
    for u, s in cond.pairs:
        ubit = 1 << u
        if not s & ubit:
            continue
        rest = s & ~ubit
        sub = rest
        while True:
            omega.insert(sub | ubit)
            insertions += 1
            if sub == 0:
                break
            sub = (sub - 1) & rest
    return Muller(omega), insertions


def rabin_to_muller(cond: Rabin, n: int, *, cap: int = DEFAULT_CAP) -> Muller:
    return kl_to_muller(rabin_to_kl(cond, n), n, cap=cap)


def materialize_omega(cond: WinningCondition, n: int, *, cap: int = DEFAULT_CAP) -> Muller:
    """The Müller family of all nonempty sets the condition accepts."""
    check_cap(n, cap)
    table = np.array(cond.accept_table(n), dtype=np.bool_)
    table[0] = False
    return Muller(SubsetFamily.from_table(table, n))


def solve_streett_via_duality(
    arena: Arena,
    cond: WinningCondition,
    algorithm: str = ALG2,
    **kwargs,
) -> SolveResult:
    """Solve the Streett game as the opponent's Rabin game on the same pairs.

    The Streett predicate is the negation of the Rabin predicate, so Player 0
    loses the Streett game exactly where Player 1, playing the Rabin
    objective, wins. The Rabin game is solved on the arena with the players'
    positions exchanged and the two regions are swapped back.
    """
    if cond.kind != STREETT:
        raise UnsupportedConversion(f"expected a Streett condition, got {cond.kind}")
    res = solve(arena.dual(), Rabin(cond.pairs), algorithm, **kwargs)
    return SolveResult(res.win1, res.win0, res.tables, res.algorithm, res.elapsed, res.backend)


def convert(cond: WinningCondition, n: int, target: str, *, cap: int = DEFAULT_CAP):
    """Apply the conversion chain to ``target`` ("kl" or "muller").

    Returns the new condition and a :class:`ReductionReport`.
    """
    start = time.perf_counter()
    pairs_in = len(cond.pairs) if cond.kind in (KL, RABIN, STREETT) else 0
    if target == KL:
        if cond.kind == RABIN:
            out = rabin_to_kl(cond, n)
        elif cond.kind == KL:
            out = cond
        else:
            raise UnsupportedConversion(f"cannot convert {cond.kind} to kl")
        report = ReductionReport(cond.kind, KL, pairs_in, len(out.pairs), 0, time.perf_counter() - start)
        return out, report
    if target == "muller":
        pairs_out = 0
        if cond.kind == RABIN:
            kl = rabin_to_kl(cond, n)
            pairs_out = len(kl.pairs)
            out = kl_to_muller(kl, n, cap=cap)
        elif cond.kind == KL:
            out = kl_to_muller(cond, n, cap=cap)
        else:
            out = materialize_omega(cond, n, cap=cap)
        report = ReductionReport(
            cond.kind, "muller", pairs_in, pairs_out, len(out.omega), time.perf_counter() - start
        )
        return out, report
    raise UnsupportedConversion(f"unknown conversion target {target!r}")
