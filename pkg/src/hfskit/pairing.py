"""Pairing functions Nat x Nat -> Nat: Kuratowski (injective), Cantor and BitMerge (bijective)."""

from math import isqrt
from typing import Callable, NamedTuple

from .bitset import check_nat, nat_to_set, set_to_nat
from .errors import NotAPairError
from .kernels import compact_bits, spread_bits


class NatPair(NamedTuple):
    first: int
    second: int


def kuratowski_pair(a: int, b: int) -> int:
    """Code of ``{{a},{a,b}}``; grows doubly exponentially and misses most naturals."""
    check_nat(a)
    check_nat(b)
    return set_to_nat({set_to_nat([a]), set_to_nat({a, b})})


def kuratowski_unpair(z: int) -> NatPair:
    members = nat_to_set(z)
    if len(members) == 1:
        inner = nat_to_set(members[0])
        if len(inner) == 1:
            return NatPair(inner[0], inner[0])
    elif len(members) == 2:
        # {a} always encodes below {a,b}
        single, double = (nat_to_set(m) for m in members)
        if len(single) == 1 and len(double) == 2 and single[0] in double:
            a = single[0]
            b = double[0] if double[1] == a else double[1]
            return NatPair(a, b)
    raise NotAPairError(f"{z} does not encode a Kuratowski pair")


def cantor_pair(k1: int, k2: int) -> int:
    check_nat(k1)
    check_nat(k2)
    s = k1 + k2
    return s * (s + 1) // 2 + k2


def cantor_unpair(z: int) -> NatPair:
    check_nat(z)
    i = (isqrt(8 * z + 1) - 1) // 2
    return NatPair(i * (3 + i) // 2 - z, z - i * (i + 1) // 2)


def bitmerge_pair(a: int, b: int) -> int:
    """Interleave bits: ``a`` on even positions, ``b`` on odd positions."""
    check_nat(a)
    check_nat(b)
    return spread_bits(a) | spread_bits(b) << 1


def bitmerge_unpair(z: int) -> NatPair:
    check_nat(z)
    return NatPair(compact_bits(z), compact_bits(z >> 1))


class Scheme(NamedTuple):
    name: str
    pair: Callable[[int, int], int]
    unpair: Callable[[int], NatPair]
    bijective: bool

    def encode(self, p) -> int:
        """Single-argument form taking a ``(first, second)`` pair, for use with ``map``."""
        first, second = p
        return self.pair(first, second)

    def decode(self, z: int) -> NatPair:
        return self.unpair(z)


SCHEMES = {
    "kuratowski": Scheme("kuratowski", kuratowski_pair, kuratowski_unpair, False),
    "cantor": Scheme("cantor", cantor_pair, cantor_unpair, True),
    "bitmerge": Scheme("bitmerge", bitmerge_pair, bitmerge_unpair, True),
}
