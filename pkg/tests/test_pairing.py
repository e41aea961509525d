import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from hfskit import (
    SCHEMES,
    CapExceededError,
    NatPair,
    NotAPairError,
    bitmerge_pair,
    bitmerge_unpair,
    cantor_pair,
    cantor_unpair,
    kuratowski_pair,
    kuratowski_unpair,
    max_bits,
)
from oracles import ack_encode, cantor_table, deinterleave, interleave

GRID = [(a, b) for a in range(4) for b in range(4)]


def test_kuratowski_table():
    assert [kuratowski_pair(a, b) for a, b in GRID] == [
        2, 10, 34, 514, 12, 4, 68, 1028, 48, 80, 16, 4112, 768, 1280, 4352, 256]


def test_kuratowski_matches_set_construction():
    for a in range(6):
        for b in range(6):
            pair = frozenset({frozenset({a_h(a)}), frozenset({a_h(a), a_h(b)})})
            assert kuratowski_pair(a, b) == ack_encode(pair)


def a_h(n):
    from oracles import ack_decode
    return ack_decode(n)


def test_kuratowski_unpair():
    assert kuratowski_unpair(2) == (0, 0)
    assert kuratowski_unpair(10) == (0, 1)
    assert kuratowski_unpair(12) == (1, 0)
    for z in [7, 0, 1, 3, 8]:
        with pytest.raises(NotAPairError):
            kuratowski_unpair(z)


def test_kuratowski_injective_not_surjective():
    # (19, 18) is the largest pair whose code fits the default 2**20-bit cap
    outputs = {kuratowski_pair(a, b) for a in range(20) for b in range(20)}
    assert len(outputs) == 20 * 20
    assert 1 not in outputs
    for a in range(12):
        for b in range(12):
            assert kuratowski_unpair(kuratowski_pair(a, b)) == (a, b)
    with pytest.raises(CapExceededError):
        kuratowski_pair(20, 0)


def test_kuratowski_exponent_sets_distinct():
    # on [0, 50]^2 the codes are too large to build; distinct exponent sets
    # imply distinct codes because set_to_nat is a bijection
    exps = {frozenset({1 << a, 1 << a | 1 << b}) for a in range(51) for b in range(51)}
    assert len(exps) == 51 * 51
    assert frozenset({0}) not in exps


def test_kuratowski_cap():
    with max_bits(1000):
        with pytest.raises(CapExceededError):
            kuratowski_pair(10, 0)


def test_cantor_table():
    assert [cantor_pair(a, b) for a, b in GRID] == [
        0, 2, 5, 9, 1, 4, 8, 13, 3, 7, 12, 18, 6, 11, 17, 24]


def test_cantor_unpair_examples():
    assert cantor_unpair(0) == (0, 0)
    assert cantor_unpair(9) == (0, 3)
    assert cantor_unpair(13) == (1, 3)


def test_cantor_against_diagonal_walk():
    table = cantor_table(60)
    for z, pair in table.items():
        assert cantor_unpair(z) == pair
        assert cantor_pair(*pair) == z


def test_bitmerge_examples():
    assert bitmerge_pair(0, 0) == 0
    assert bitmerge_pair(60, 26) == 2008
    assert bitmerge_pair(3, 1) == 7
    assert bitmerge_unpair(2008) == (60, 26)
    assert bitmerge_unpair(1) == (1, 0)
    assert bitmerge_unpair(2) == (0, 1)


@pytest.mark.parametrize("name", ["cantor", "bitmerge"])
def test_bijective_roundtrips(name):
    scheme = SCHEMES[name]
    rng = random.Random(3)
    zs = list(range(1001)) + [rng.getrandbits(128) for _ in range(100)]
    for z in zs:
        assert scheme.pair(*scheme.unpair(z)) == z
    for a in range(0, 1001, 13):
        for b in range(0, 1001, 17):
            assert scheme.unpair(scheme.pair(a, b)) == (a, b)
    for _ in range(100):
        a, b = rng.getrandbits(128), rng.getrandbits(128)
        assert scheme.unpair(scheme.pair(a, b)) == (a, b)


def test_surjectivity_on_ranges():
    assert sorted(cantor_pair(a, s - a) for s in range(45) for a in range(s + 1)) == list(range(1035))
    assert sorted(bitmerge_pair(a, b) for a in range(32) for b in range(32)) == list(range(1024))


@given(st.integers(0, 1 << 300), st.integers(0, 1 << 300))
def test_bitmerge_oracle_and_growth(a, b):
    z = bitmerge_pair(a, b)
    assert z == interleave(a, b)
    assert bitmerge_unpair(z) == (a, b) == deinterleave(z)
    assert z < 2 ** (2 * max(a.bit_length(), b.bit_length()))


def test_scheme_adapters():
    pairs = [NatPair(1, 2), (3, 4)]
    for scheme in SCHEMES.values():
        codes = list(map(scheme.encode, pairs))
        assert list(map(scheme.decode, codes)) == [(1, 2), (3, 4)]
    assert not SCHEMES["kuratowski"].bijective
