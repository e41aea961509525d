"""Bijection between naturals and finite sets of naturals via binary expansion."""

from collections.abc import Iterable, Iterator

from .config import get_max_bits
from .errors import CapExceededError, DuplicateMemberError, HfsError
from .kernels import bit_positions


def check_nat(n, what="value"):
    if not isinstance(n, int) or isinstance(n, bool) or n < 0:
        raise HfsError(f"{what} must be a non-negative integer, got {n!r}")
    return n


def check_exponent(x):
    """Raise if setting bit ``x`` would exceed the configured cap."""
    cap = get_max_bits()
    if x >= cap:
        shown = str(x) if x.bit_length() <= 64 else f"of {x.bit_length()} bits"
        raise CapExceededError(f"bit position {shown} exceeds the cap of {cap} bits")


def set_to_nat(s: Iterable[int]) -> int:
    """Sum of ``2**x`` over the elements of ``s``.

    Element order is irrelevant, but duplicates are rejected since a
    duplicated exponent would not denote a set.
    """
    elements = list(s)
    if not elements:
        return 0
    for x in elements:
        check_nat(x, "set element")
    if len(set(elements)) != len(elements):
        raise DuplicateMemberError(f"duplicate elements in {elements!r}")
    check_exponent(max(elements))
    n = 0
    for x in elements:
        n |= 1 << x
    return n


def nat_to_set(n: int) -> list[int]:
    """Ascending bit positions of ``n``; inverse of :func:`set_to_nat`."""
    check_nat(n)
    return bit_positions(n)


def bit_elements(n: int) -> Iterator[int]:
    """Lazily yield the set bits of ``n`` in ascending order."""
    check_nat(n)
    if not n:
        return
    data = n.to_bytes((n.bit_length() + 7) >> 3, "little")
    for i, byte in enumerate(data):
        while byte:
            low = byte & -byte
            yield (i << 3) + low.bit_length() - 1
            byte ^= low
