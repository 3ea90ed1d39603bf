import numpy as np
import pytest
from hypothesis import given, settings

from conftest import BACKENDS, G_A, G_C, G_D, muller_games
from mullergames.arena import Arena, bits, is_subarena, is_trap, popcount
from mullergames.conditions import KINDS, Streett, muller_from_sets
from mullergames.errors import CapExceeded, MissingOutEdge
from mullergames.family import SubsetFamily
from mullergames.generate import GenSpec, random_instance
from mullergames.oracle import oracle_solve
from mullergames.solver import (
    PartitionTables,
    partition,
    partition_alg1,
    partition_alg2,
    solve,
    winning_regions,
)

AB, CD = 0b0011, 0b1100


def subgame(arena, cond, x):
    """The game played on subarena ``x``, relabelled to 0..|x|-1 with a materialised condition."""
    idx = list(bits(x))
    pos = {v: k for k, v in enumerate(idx)}
    succ = tuple(sum(1 << pos[u] for u in bits(arena.succ[v] & x)) for v in idx)
    owner0 = sum(1 << pos[v] for v in idx if (arena.owner0 >> v) & 1)
    keys = []
    for y in range(1, 1 << len(idx)):
        orig = sum(1 << idx[k] for k in bits(y))
        if cond.accepts(orig):
            keys.append(y)
    return Arena(len(idx), owner0, succ), muller_from_sets(len(idx), keys)


def expected_pairs(arena):
    return sum((1 << popcount(i)) - 2 for i in range(1, arena.full + 1) if is_subarena(arena, i))


@pytest.mark.parametrize("algorithm", ["alg1", "alg2"])
@pytest.mark.parametrize("backend", BACKENDS)
def test_small_tables(algorithm, backend):
    t = partition(G_A, muller_from_sets(2, [0b11]), algorithm, backend=backend)
    assert list(t.P) == [0b11] and list(t.Q) == []
    t = partition(G_C, muller_from_sets(4, [AB]), algorithm, backend=backend)
    assert list(t.P) == [AB] and list(t.Q) == [0b1100, 0b1101, 0b1111]
    assert t.pairs_enumerated == expected_pairs(G_C) == 24
    t = partition(G_A, muller_from_sets(2, []), algorithm, backend=backend)
    assert list(t.P) == [] and list(t.Q) == [0b11]


def test_alg2_never_calls_the_attractor():
    t = partition_alg2(G_C, muller_from_sets(4, [AB]))
    assert t.attractor_calls == 0
    assert partition_alg1(G_C, muller_from_sets(4, [AB])).attractor_calls > 0


def test_full_set_decision_in_gc():
    # {a,c,d} is one smaller and lies in Q; {a,b} is closed but {c,d} is lost
    t = partition_alg2(G_C, muller_from_sets(4, [AB]))
    assert 0b1101 in t.Q and AB in t.P and CD not in t.P
    assert 0b1111 in t.Q


def test_winning_region_examples():
    r = solve(G_C, muller_from_sets(4, [AB]), "alg1")
    assert (r.win0, r.win1) == (AB, CD)
    r = solve(G_A, muller_from_sets(2, [0b11]))
    assert (r.win0, r.win1) == (0b11, 0)
    r = solve(G_D, muller_from_sets(3, [0b111]))
    assert r.win0 == 0b111
    empty = PartitionTables(SubsetFamily(4).freeze(), SubsetFamily(4).freeze(), 0, 0)
    assert winning_regions(G_C, empty) == (0, 0b1111)


def test_streett_example_via_both_paths():
    cond = Streett(((AB, 0),))
    # Player 0 escapes to the c-d cycle from a, and b must return to a
    assert solve(G_C, cond).win0 == 0b1111
    assert solve(G_C, cond, streett_via_duality=False).win0 == 0b1111
    assert oracle_solve(G_C, cond) == (0b1111, 0)
    assert solve(G_C, Streett(())).win0 == 0b1111


def test_empty_rabin_loses_everywhere():
    arena, cond = random_instance(GenSpec(seed=4, n=6, kind="rabin", pairs=0))
    assert solve(arena, cond).win1 == arena.full


def test_cap_and_validation():
    with pytest.raises(CapExceeded):
        solve(G_C, muller_from_sets(4, [AB]), cap=3)
    broken = Arena.from_edges(2, [0], [(0, 1)])
    with pytest.raises(MissingOutEdge):
        solve(broken, muller_from_sets(2, []))
    with pytest.raises(ValueError):
        solve(G_A, muller_from_sets(2, []), "alg3")


@settings(max_examples=150)
@given(muller_games(max_n=6))
def test_algorithms_and_backends_agree(game):
    arena, cond = game
    seen = set()
    for backend in BACKENDS:
        for alg in ("alg1", "alg2"):
            t = partition(arena, cond, alg, backend=backend, verify=alg == "alg2")
            seen.add((tuple(t.P), tuple(t.Q), t.pairs_enumerated))
            assert t.pairs_enumerated == expected_pairs(arena) <= 3**arena.n
    assert len(seen) == 1


@settings(max_examples=60)
@given(muller_games(max_n=5))
def test_p_means_player0_wins_the_whole_subgame(game):
    arena, cond = game
    t = partition_alg2(arena, cond)
    for x in range(1, arena.full + 1):
        if not is_subarena(arena, x):
            assert x not in t.P and x not in t.Q
            continue
        assert (x in t.P) != (x in t.Q)
        sub, subcond = subgame(arena, cond, x)
        assert (x in t.P) == (oracle_solve(sub, subcond)[0] == sub.full)


@settings(max_examples=100)
@given(muller_games(max_n=6))
def test_p_invariants(game):
    arena, cond = game
    t = partition_alg2(arena, cond)
    traps = [x for x in t.P if is_trap(arena, x, 1)]
    for x in traps:
        for y in traps:
            assert x | y in t.P
    win0, win1 = winning_regions(arena, t)
    union = 0
    for x in traps:
        union |= x
    assert win0 == union
    assert win0 | win1 == arena.full and not win0 & win1


@pytest.mark.parametrize("kind", KINDS)
def test_matches_oracle_on_generated_games(kind):
    rng = np.random.default_rng(KINDS.index(kind))
    for _ in range(25):
        spec = GenSpec(seed=int(rng.integers(2**31)), n=int(rng.integers(2, 7)), edge_density=0.6, kind=kind)
        arena, cond = random_instance(spec)
        r = solve(arena, cond)
        assert (r.win0, r.win1) == oracle_solve(arena, cond)


def test_rabin_and_streett_are_complementary_games():
    rng = np.random.default_rng(9)
    for _ in range(40):
        arena, cond = random_instance(GenSpec(seed=int(rng.integers(2**31)), n=6, kind="rabin"))
        rabin = solve(arena, cond)
        streett = solve(arena.dual(), Streett(cond.pairs), streett_via_duality=False)
        assert rabin.win0 == streett.win1
