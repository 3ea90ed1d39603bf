import os

import numpy as np
import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from mullergames.arena import Arena, bits, popcount
from mullergames.conditions import Muller
from mullergames.family import SubsetFamily
from mullergames.kernels import numba_available

settings.register_profile("default", deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

BACKENDS = ["numpy"] + (["numba"] if numba_available() else [])

# a=0, b=1, c=2, d=3
G_A = Arena.from_edges(2, [0], [(0, 1), (1, 0)], ("v1", "v2"))
G_C = Arena.from_edges(4, [0, 3], [(0, 1), (0, 2), (1, 0), (2, 3), (3, 2)], ("a", "b", "c", "d"))
G_D = Arena.from_edges(3, [0], [(0, 1), (0, 2), (1, 0), (2, 0)], ("a", "b", "c"))


def arena_from_choice(n, owner0, picks):
    """Bipartite arena where ``picks[v]`` selects a nonempty subset of the other side."""
    side = [v for v in range(n) if (owner0 >> v) & 1]
    other = [v for v in range(n) if not (owner0 >> v) & 1]
    succ = []
    for v in range(n):
        targets = other if (owner0 >> v) & 1 else side
        chosen = [t for k, t in enumerate(targets) if (picks[v] >> k) & 1]
        if not chosen:
            chosen = [targets[picks[v] % len(targets)]]
        succ.append(sum(1 << t for t in chosen))
    return Arena(n, owner0, tuple(succ))


@st.composite
def arenas(draw, min_n=2, max_n=6):
    n = draw(st.integers(min_n, max_n))
    owner0 = draw(st.integers(1, (1 << n) - 2))
    picks = draw(st.lists(st.integers(0, (1 << n) - 1), min_size=n, max_size=n))
    return arena_from_choice(n, owner0, picks)


@st.composite
def muller_games(draw, min_n=2, max_n=6):
    arena = draw(arenas(min_n, max_n))
    keys = draw(st.sets(st.integers(1, arena.full), max_size=1 << arena.n))
    return arena, Muller(SubsetFamily(arena.n, keys))


def brute_attractor(arena, context, target, sigma):
    """Plain fixpoint iteration, independent of the worklist version."""
    attr = target & context
    while True:
        grown = attr
        for v in bits(context & ~attr):
            out = arena.succ[v] & context
            mine = ((arena.owner0 >> v) & 1) == (sigma == 0)
            if (mine and out & attr) or (not mine and out & ~attr == 0):
                grown |= 1 << v
        if grown == attr:
            return attr
        attr = grown


def brute_trap(arena, x, sigma, context):
    for v in bits(x):
        out = arena.succ[v] & context
        mine = ((arena.owner0 >> v) & 1) == (sigma == 0)
        if mine and out & ~x:
            return False
        if not mine and not out & x:
            return False
    return True


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


__all__ = ["BACKENDS", "G_A", "G_C", "G_D", "popcount"]
