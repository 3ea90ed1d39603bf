import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st
from scipy.special import lambertw

from mullergames.conditions import (
    ColouredMuller,
    KLCondition,
    McNaughton,
    Muller,
    Rabin,
    Streett,
    classify_large,
    complement_muller,
    game_parameter,
    lambert_w,
    large_threshold,
    muller_from_sets,
    player0_accepts,
)
from mullergames.errors import DomainError, ValidationError
from mullergames.family import SubsetFamily

A, B, C = 1, 2, 4


def test_mcnaughton_projects_onto_w():
    cond = McNaughton(A | B, SubsetFamily(3, [A]))
    assert player0_accepts(cond, A | C)
    assert not player0_accepts(cond, B | C)


def test_pair_conditions():
    pairs = ((A, B),)
    assert player0_accepts(Rabin(pairs), A | C)
    assert not player0_accepts(Streett(pairs), A | C)
    assert player0_accepts(Streett(pairs), A | B)
    assert player0_accepts(Streett(()), B)
    assert not player0_accepts(Rabin(()), B)


def test_kl_condition():
    cond = KLCondition(((0, A | B),))
    assert player0_accepts(cond, A)
    assert not player0_accepts(cond, A | C)
    assert not player0_accepts(cond, B)


def test_coloured_condition():
    cond = ColouredMuller((0, 1, 1), 2, SubsetFamily(2, [0b11]))
    assert player0_accepts(cond, A | C)
    assert not player0_accepts(cond, B | C)


def test_empty_infinity_set_rejected():
    with pytest.raises(ValueError):
        player0_accepts(Rabin(()), 0)


def test_families_cannot_hold_the_empty_set():
    with pytest.raises(ValidationError):
        Muller(SubsetFamily(2, [0, 1]))


def test_mcnaughton_members_inside_w():
    with pytest.raises(ValidationError):
        McNaughton(A, SubsetFamily(2, [B]))


def test_complement_examples():
    assert list(complement_muller(muller_from_sets(2, [0b11]), 2).omega) == [0b01, 0b10]
    assert list(complement_muller(muller_from_sets(3, []), 3).omega) == list(range(1, 8))


@given(st.integers(1, 6), st.data())
def test_complement_involution(n, data):
    keys = data.draw(st.sets(st.integers(1, (1 << n) - 1)))
    cond = muller_from_sets(n, keys)
    twice = complement_muller(complement_muller(cond, n), n)
    assert twice.omega == cond.omega
    for x in range(1, 1 << n):
        assert cond.accepts(x) != complement_muller(cond, n).accepts(x)


masks = st.integers(0, 63)
pair_lists = st.lists(st.tuples(masks, masks), max_size=5)


@given(pair_lists, st.integers(1, 63))
def test_rabin_streett_are_dual_predicates(pairs, x):
    assert player0_accepts(Rabin(tuple(pairs)), x) != player0_accepts(Streett(tuple(pairs)), x)


@given(st.data())
def test_accept_tables_match_predicates(data):
    n = data.draw(st.integers(1, 6))
    full = (1 << n) - 1
    kind = data.draw(st.sampled_from(["muller", "mcn", "col", "kl", "rabin", "streett"]))
    if kind == "muller":
        cond = Muller(SubsetFamily(n, data.draw(st.sets(st.integers(1, full)))))
    elif kind == "mcn":
        w = data.draw(st.integers(0, full))
        keys = {k & w for k in data.draw(st.sets(st.integers(1, full)))} - {0}
        cond = McNaughton(w, SubsetFamily(n, keys))
    elif kind == "col":
        k = data.draw(st.integers(1, 3))
        colour = tuple(data.draw(st.lists(st.integers(0, k - 1), min_size=n, max_size=n)))
        cond = ColouredMuller(colour, k, SubsetFamily(k, data.draw(st.sets(st.integers(1, (1 << k) - 1)))))
    elif kind == "kl":
        pairs = data.draw(st.lists(st.tuples(st.integers(0, n - 1), st.integers(0, full)), max_size=4))
        cond = KLCondition(tuple(pairs))
    else:
        pairs = tuple(data.draw(st.lists(st.tuples(st.integers(0, full), st.integers(0, full)), max_size=4)))
        cond = Rabin(pairs) if kind == "rabin" else Streett(pairs)
    table = cond.accept_table(n)
    assert table.shape == (1 << n,)
    assert not table[0]
    assert [bool(table[x]) for x in range(1, 1 << n)] == [cond.accepts(x) for x in range(1, 1 << n)]


def test_parameters():
    assert game_parameter(muller_from_sets(2, [1, 3])) == 2
    assert game_parameter(Rabin(((1, 2), (2, 1), (3, 0)))) == 3
    assert game_parameter(KLCondition(((0, 1),))) == 1


def test_lambert_w_known_values():
    assert lambert_w(math.e) == pytest.approx(1.0, abs=1e-12)
    assert lambert_w(1.0) == pytest.approx(0.5671432904097838, abs=1e-12)


@pytest.mark.parametrize("z", np.logspace(-3, 6, 97))
def test_lambert_w_against_scipy(z):
    w = lambert_w(float(z))
    assert w == pytest.approx(lambertw(z).real, rel=1e-10, abs=1e-13)
    assert abs(w * math.exp(w) - z) <= 1e-9 * max(1.0, z)
    assert math.exp(w) == pytest.approx(z / w, rel=1e-9)


@pytest.mark.parametrize("z", [0.0, -1.0, float("nan")])
def test_lambert_w_domain(z):
    with pytest.raises(DomainError):
        lambert_w(z)


def test_classify_large_examples():
    assert large_threshold(1) > 1
    assert not classify_large(1, 1)
    assert classify_large(256, 8)
    with pytest.raises(DomainError):
        classify_large(0, 3)
    with pytest.raises(DomainError):
        large_threshold(3, c=0.0)


@pytest.mark.parametrize("n", [1, 2, 5, 10, 20])
def test_classify_large_monotone_in_p(n):
    flags = [classify_large(p, n) for p in range(1, 200)]
    assert flags == sorted(flags)
