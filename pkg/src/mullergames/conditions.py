"""Winning conditions for regular games and the large-game classifier.

Each condition decides, for a nonempty infinity set ``x`` (a vertex mask),
whether Player 0 wins a play with exactly that infinity set. Besides the
scalar predicate every condition can tabulate itself over all 2^n masks,
which is what the solver kernels consume.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Union

import numpy as np

from .arena import bits, full_mask
from .errors import DomainError, ValidationError
from .family import SubsetFamily

MULLER = "muller"
MCNAUGHTON = "mcnaughton"
COLOURED = "coloured"
KL = "kl"
RABIN = "rabin"
STREETT = "streett"
KINDS = (MULLER, MCNAUGHTON, COLOURED, KL, RABIN, STREETT)


def _all_masks(n: int) -> np.ndarray:
    return np.arange(1 << n, dtype=np.int64)


def _check_family(omega: SubsetFamily, what: str) -> None:
    if omega.contains(0):
        raise ValidationError(f"{what} contains the empty set")


@dataclass(frozen=True, eq=False)
class Muller:
    omega: SubsetFamily
    kind = MULLER

    def __post_init__(self):
        _check_family(self.omega, "omega")
        self.omega.freeze()

    def accepts(self, x: int) -> bool:
        return self.omega.contains(x)

    def accept_table(self, n: int) -> np.ndarray:
        if self.omega.n != n:
            raise ValidationError(f"omega is over {self.omega.n} bits, arena has {n} vertices")
        return np.array(self.omega.table, dtype=np.bool_)

    def parameter(self) -> int:
        return len(self.omega)

    def check(self, n: int) -> None:
        if self.omega.n != n:
            raise ValidationError(f"omega is over {self.omega.n} bits, arena has {n} vertices")


@dataclass(frozen=True, eq=False)
class McNaughton:
    W: int
    omega: SubsetFamily
    kind = MCNAUGHTON

    def __post_init__(self):
        _check_family(self.omega, "omega")
        for key in self.omega:
            if key & ~self.W:
                raise ValidationError("omega member is not a subset of W")
        self.omega.freeze()

    def accepts(self, x: int) -> bool:
        return self.omega.contains(x & self.W)

    def accept_table(self, n: int) -> np.ndarray:
        self.check(n)
        return self.omega.table[_all_masks(n) & self.W]

    def parameter(self) -> int:
        return self.W.bit_count()

    def check(self, n: int) -> None:
        if self.omega.n != n or self.W & ~full_mask(n):
            raise ValidationError("McNaughton payload does not fit the arena")


@dataclass(frozen=True, eq=False)
class ColouredMuller:
    """``colour[v]`` is the colour index of vertex ``v``; ``omega`` holds colour masks."""

    colour: tuple[int, ...]
    colour_count: int
    omega: SubsetFamily
    colour_names: tuple[str, ...] = ()
    kind = COLOURED

    def __post_init__(self):
        if self.colour_count < 1:
            raise ValidationError("at least one colour is required")
        if self.omega.n != self.colour_count:
            raise ValidationError("omega width differs from the colour count")
        if any(not 0 <= c < self.colour_count for c in self.colour):
            raise ValidationError("colour index out of range")
        _check_family(self.omega, "omega")
        object.__setattr__(self, "colour", tuple(self.colour))
        if not self.colour_names:
            object.__setattr__(self, "colour_names", tuple(f"c{i}" for i in range(self.colour_count)))
        elif len(self.colour_names) != self.colour_count:
            raise ValidationError("colour name list does not match the colour count")
        self.omega.freeze()

    def colours_of(self, x: int) -> int:
        m = 0
        for v in bits(x):
            m |= 1 << self.colour[v]
        return m

    def accepts(self, x: int) -> bool:
        return self.omega.contains(self.colours_of(x))

    def accept_table(self, n: int) -> np.ndarray:
        self.check(n)
        cmask = np.zeros(1 << n, dtype=np.int64)
        for v in range(n):
            lo = 1 << v
            cmask[lo : 2 * lo] = cmask[:lo] | (1 << self.colour[v])
        return self.omega.table[cmask]

    def parameter(self) -> int:
        return self.colour_count

    def check(self, n: int) -> None:
        if len(self.colour) != n:
            raise ValidationError("colour map does not cover the arena")


@dataclass(frozen=True, eq=False)
class KLCondition:
    """Pairs ``(u, S)``: Player 0 wins iff some ``u`` is visited infinitely often inside ``S``."""

    pairs: tuple[tuple[int, int], ...]
    kind = KL

    def __post_init__(self):
        object.__setattr__(self, "pairs", tuple((int(u), int(s)) for u, s in self.pairs))

    def accepts(self, x: int) -> bool:
        return any((x >> u) & 1 and not x & ~s for u, s in self.pairs)

    def accept_table(self, n: int) -> np.ndarray:
        self.check(n)
        masks = _all_masks(n)
        table = np.zeros(1 << n, dtype=np.bool_)
        for u, s in self.pairs:
            table |= ((masks >> u) & 1).astype(np.bool_) & ((masks & ~s) == 0)
        return table

    def parameter(self) -> int:
        return len(self.pairs)

    def check(self, n: int) -> None:
        full = full_mask(n)
        for u, s in self.pairs:
            if not 0 <= u < n or s & ~full:
                raise ValidationError("KL pair does not fit the arena")


@dataclass(frozen=True, eq=False)
class _PairCondition:
    pairs: tuple[tuple[int, int], ...]

    def __post_init__(self):
        object.__setattr__(self, "pairs", tuple((int(u), int(v)) for u, v in self.pairs))

    def parameter(self) -> int:
        return len(self.pairs)

    def check(self, n: int) -> None:
        full = full_mask(n)
        for u, v in self.pairs:
            if (u | v) & ~full:
                raise ValidationError(f"{self.kind} pair does not fit the arena")


class Rabin(_PairCondition):
    """Player 0 wins iff for some pair the infinity set hits ``U`` and avoids ``V``."""

    kind = RABIN

    def accepts(self, x: int) -> bool:
        return any(x & u and not x & v for u, v in self.pairs)

    def accept_table(self, n: int) -> np.ndarray:
        self.check(n)
        masks = _all_masks(n)
        table = np.zeros(1 << n, dtype=np.bool_)
        for u, v in self.pairs:
            table |= ((masks & u) != 0) & ((masks & v) == 0)
        return table


class Streett(_PairCondition):
    """Player 0 wins iff every pair whose ``U`` is hit also has ``V`` hit."""

    kind = STREETT

    def accepts(self, x: int) -> bool:
        return all(not x & u or bool(x & v) for u, v in self.pairs)

    def accept_table(self, n: int) -> np.ndarray:
        self.check(n)
        masks = _all_masks(n)
        table = np.ones(1 << n, dtype=np.bool_)
        for u, v in self.pairs:
            table &= ((masks & u) == 0) | ((masks & v) != 0)
        table[0] = False
        return table


WinningCondition = Union[Muller, McNaughton, ColouredMuller, KLCondition, Rabin, Streett]


def player0_accepts(cond: WinningCondition, x: int) -> bool:
    if not x:
        raise ValueError("infinity sets are never empty")
    return cond.accepts(x)


def complement_muller(cond: Muller, n: int) -> Muller:
    """The Müller condition accepting exactly the nonempty sets ``cond`` rejects."""
    if cond.kind != MULLER:
        raise TypeError("complement_muller expects a Müller condition")
    cond.check(n)
    table = ~cond.omega.table
    table[0] = False
    return Muller(SubsetFamily.from_table(table, n))


def muller_from_sets(n: int, sets) -> Muller:
    return Muller(SubsetFamily(n, sets))


def lambert_w(z: float) -> float:
    """Principal branch of the Lambert W function for ``z > 0``.

    Damped Newton iteration on ``w * exp(w) = z`` started at ``log(1 + z)``.
    """
    if not z > 0:
        raise DomainError(f"lambert_w needs z > 0, got {z}")
    w = math.log1p(z)
    tol = 1e-9 * max(1.0, z)

    def residual(w):
        return w * math.exp(w) - z

    r = residual(w)
    for _ in range(200):
        step = r / (math.exp(w) * (w + 1.0))
        t = 1.0
        while True:
            cand = w - t * step
            if cand > 0.0:
                rc = residual(cand)
                if abs(rc) <= abs(r):
                    break
            t *= 0.5
            if t < 1e-12:
                cand, rc = w, r
                break
        converged = abs(cand - w) <= 4e-16 * max(1.0, cand)
        w, r = cand, rc
        if converged:
            break
    if abs(r) > tol:
        raise ArithmeticError(f"lambert_w did not converge for z={z}")
    return w


def large_threshold(n: int, c: float = math.log(3)) -> float:
    if c <= 0:
        raise DomainError(f"constant c must be positive, got {c}")
    cn = c * n
    return cn / lambert_w(cn)


def classify_large(p: int, n: int, c: float = math.log(3)) -> bool:
    """Whether a game with parameter value ``p`` on ``n`` vertices is large."""
    if p < 1 or n < 1:
        raise DomainError("p and n must be positive")
    return p > large_threshold(n, c)


def game_parameter(cond: WinningCondition) -> int:
    """|Ω|, |W|, |C|, t or k depending on the condition kind."""
    return cond.parameter()
