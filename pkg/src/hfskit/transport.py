"""Folds over HFS trees and directly over codes, and transport of operations
between the two representations."""

from collections.abc import Callable, Sequence
from typing import Any, NamedTuple

from .bitset import check_exponent, check_nat, nat_to_set
from .hfs import HFS, HSet, Urelement, hfs_to_nat, nat_to_hfs
from .streams import powerset


class FoldAlgebra(NamedTuple):
    """``combine`` receives the list of member results at a set node; ``leaf`` the urelement index."""

    combine: Callable[[list], Any]
    leaf: Callable[[int], Any]


HSIZE = FoldAlgebra(combine=lambda rs: sum(rs) + 1, leaf=lambda _: 1)
DEPTH = FoldAlgebra(combine=lambda rs: 1 + max(rs, default=0), leaf=lambda _: 0)


def hfold(alg: FoldAlgebra, h: HFS):
    if isinstance(h, Urelement):
        return alg.leaf(h.index)
    return alg.combine([hfold(alg, m) for m in h.members])


def nat_fold(alg: FoldAlgebra, ulimit: int, n: int):
    """Same result as ``hfold(alg, nat_to_hfs(n, ulimit))`` without building the tree.

    Set codes are shifted down by ``ulimit`` before decomposition so the fold
    agrees with the urelement bijection for every ``ulimit``.
    """
    check_nat(n)
    memo = {}

    def go(k):
        if k < ulimit:
            return alg.leaf(k)
        if k in memo:
            return memo[k]
        r = alg.combine([go(x) for x in nat_to_set(k - ulimit)])
        memo[k] = r
        return r

    return go(n)


def nat_size(n: int, ulimit: int = 0) -> int:
    """Node count of the fully expanded tree of ``n``, a structural complexity measure."""
    return nat_fold(HSIZE, ulimit, n)


def hsize(h: HFS) -> int:
    return hfold(HSIZE, h)


def lift_to_nat(f: Callable[[list[int]], int], args: Sequence[HFS], ulimit: int = 0) -> HFS:
    """Run an operation on codes against HFS arguments: encode, apply, decode."""
    return nat_to_hfs(f([hfs_to_nat(h, ulimit) for h in args]), ulimit)


def lift_to_hfs(f: Callable[[list[HFS]], HFS], args: Sequence[int], ulimit: int = 0) -> int:
    """Run an operation on sets against code arguments: decode, apply, encode."""
    return hfs_to_nat(f([nat_to_hfs(n, ulimit) for n in args]), ulimit)


def hfs_powerset(h: HSet) -> HSet:
    return HSet(HSet(s) for s in powerset(h.members))


def nat_union(a: int, b: int) -> int:
    return lift_to_hfs(lambda hs: hs[0] | hs[1], [a, b])


def nat_intersection(a: int, b: int) -> int:
    return lift_to_hfs(lambda hs: hs[0] & hs[1], [a, b])


def nat_difference(a: int, b: int) -> int:
    return lift_to_hfs(lambda hs: hs[0] - hs[1], [a, b])


def nat_adduction(a: int, s: int) -> int:
    """Code of ``s ∪ {a}``."""
    check_nat(a)
    check_exponent(a)
    return lift_to_hfs(lambda hs: hs[1].adjoin(hs[0]), [a, s])
