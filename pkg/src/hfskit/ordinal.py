"""Powersets on codes, von Neumann ordinals and choice functions."""

from .bitset import check_exponent, check_nat, nat_to_set, set_to_nat
from .errors import CapExceededError, EmptyMemberError
from .hfs import EMPTY, HSet
from .pairing import bitmerge_pair
from .streams import MAX_POWERSET_INPUT
from .transport import hfs_powerset, lift_to_hfs


def nat_powset(n: int) -> int:
    """Code of the powerset of the set decoded from ``n``."""
    check_nat(n)
    if n.bit_count() > MAX_POWERSET_INPUT:
        raise CapExceededError(
            f"{n} has {n.bit_count()} members; powerset cap is {MAX_POWERSET_INPUT}"
        )
    return lift_to_hfs(lambda hs: hfs_powerset(hs[0]), [n])


def _ordinals(k):
    """Yield ``(hfs, code)`` for ordinals ``0..k``; each step adjoins the previous ordinal."""
    check_nat(k)
    h, code = EMPTY, 0
    yield h, code
    for _ in range(k):
        try:
            check_exponent(code)
        except CapExceededError as exc:
            raise CapExceededError(f"ordinal {k} exceeds the bit cap: {exc}") from None
        h, code = HSet((*h.members, h)), code + (1 << code)
        yield h, code


def hfs_ordinal(k: int) -> HSet:
    """Von Neumann ordinal ``k`` = the set of all smaller ordinals."""
    for h, _ in _ordinals(k):
        pass
    return h


def nat_ordinal(k: int) -> int:
    for _, code in _ordinals(k):
        pass
    return code


def nat_choice_fun(n: int) -> int:
    """Encode the choice function picking each member's smallest element.

    Each member ``e`` of ``n`` contributes the pair ``bitmerge_pair(e, min(e))``.
    Odd ``n`` contains the empty set, which has nothing to choose.
    """
    check_nat(n)
    if n & 1:
        raise EmptyMemberError(f"{n} is odd: it contains the empty set, which has no choice")
    pairs = []
    for e in nat_to_set(n):
        smallest = (e & -e).bit_length() - 1
        pairs.append(bitmerge_pair(e, smallest))
    return set_to_nat(pairs)
