"""Seeded random games."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .arena import Arena
from .conditions import (
    COLOURED,
    KINDS,
    KL,
    MCNAUGHTON,
    MULLER,
    RABIN,
    ColouredMuller,
    KLCondition,
    McNaughton,
    Muller,
    Rabin,
    Streett,
    WinningCondition,
)
from .errors import InfeasibleSpec
from .family import SubsetFamily
from .gamefile import dumps, game_to_dict


@dataclass(frozen=True)
class GenSpec:
    """Parameters of a random game. ``None`` parameters are drawn from the seed."""

    seed: int
    n: int
    edge_density: float = 0.5
    kind: str = MULLER
    omega_size: int | None = None
    pairs: int | None = None
    colours: int | None = None
    owner_split: float = 0.5


def _random_arena(rng, spec: GenSpec) -> Arena:
    n = spec.n
    if n < 2:
        raise InfeasibleSpec("an arena needs at least two vertices")
    if not 0 < spec.owner_split < 1:
        raise InfeasibleSpec("owner_split must lie strictly between 0 and 1")
    if not 0 < spec.edge_density <= 1:
        raise InfeasibleSpec("edge_density must lie in (0, 1]")
    n0 = int(round(n * spec.owner_split))
    if n0 == 0 or n0 == n:
        raise InfeasibleSpec(f"owner_split {spec.owner_split} leaves a player without positions for n={n}")
    perm = rng.permutation(n)
    side0 = sorted(int(v) for v in perm[:n0])
    side1 = sorted(int(v) for v in perm[n0:])
    succ = [0] * n
    for mine, other in ((side0, side1), (side1, side0)):
        for v in mine:
            succ[v] |= 1 << other[int(rng.integers(len(other)))]
            extra = rng.random(len(other)) < spec.edge_density
            for u, keep in zip(other, extra):
                if keep:
                    succ[v] |= 1 << u
    width = len(str(n))
    names = tuple(f"v{i + 1:0{width}d}" for i in range(n))
    owner0 = 0
    for v in side0:
        owner0 |= 1 << v
    return Arena(n, owner0, tuple(succ), names)


def _random_family(rng, width: int, size: int | None, within: int | None = None) -> SubsetFamily:
    keys = np.arange(1, 1 << width, dtype=np.int64)
    if within is not None:
        keys = keys[(keys & ~within) == 0]
    if size is None:
        chosen = keys[rng.random(keys.size) < 0.5]
    else:
        if size > keys.size:
            raise InfeasibleSpec(f"cannot draw {size} distinct sets out of {keys.size}")
        chosen = rng.choice(keys, size=size, replace=False)
    fam = SubsetFamily(width)
    fam._table[chosen] = True
    fam._count = int(np.count_nonzero(fam._table))
    return fam


def _random_mask(rng, n: int, p: float) -> int:
    m = 0
    for v, keep in enumerate(rng.random(n) < p):
        if keep:
            m |= 1 << v
    return m


def random_instance(spec: GenSpec) -> tuple[Arena, WinningCondition]:
    if spec.kind not in KINDS:
        raise InfeasibleSpec(f"unknown kind {spec.kind!r}")
    rng = np.random.default_rng(spec.seed)
    arena = _random_arena(rng, spec)
    n = spec.n
    if spec.kind == MULLER:
        cond = Muller(_random_family(rng, n, spec.omega_size))
    elif spec.kind == MCNAUGHTON:
        w = _random_mask(rng, n, 0.6)
        cond = McNaughton(w, _random_family(rng, n, spec.omega_size, within=w))
    elif spec.kind == COLOURED:
        count = spec.colours if spec.colours is not None else int(rng.integers(1, n + 1))
        if count < 1:
            raise InfeasibleSpec("at least one colour is required")
        colour = tuple(int(c) for c in rng.integers(count, size=n))
        cond = ColouredMuller(colour, count, _random_family(rng, count, spec.omega_size))
    elif spec.kind == KL:
        t = spec.pairs if spec.pairs is not None else int(rng.integers(0, 2 * n + 1))
        pairs = []
        for _ in range(t):
            u = int(rng.integers(n))
            pairs.append((u, _random_mask(rng, n, 0.6) | (1 << u)))
        cond = KLCondition(tuple(pairs))
    else:
        k = spec.pairs if spec.pairs is not None else int(rng.integers(0, n + 1))
        pairs = tuple((_random_mask(rng, n, 0.4), _random_mask(rng, n, 0.3)) for _ in range(k))
        cond = Rabin(pairs) if spec.kind == RABIN else Streett(pairs)
    return arena, cond


def random_game(spec: GenSpec) -> dict:
    """A random game in canonical game-file form; identical specs give identical files."""
    return game_to_dict(*random_instance(spec))


def random_game_text(spec: GenSpec) -> str:
    return dumps(random_game(spec))
