"""Infinite enumerations of hereditarily finite sets."""

import itertools
from collections.abc import Iterator, Sequence

from .errors import CapExceededError, DuplicateMemberError
from .hfs import EMPTY, HFS, HSet, nat_to_hfs

MAX_POWERSET_INPUT = 24


def nat_stream() -> Iterator[int]:
    return itertools.count()


def hfs_stream(ulimit: int = 0) -> Iterator[HFS]:
    """Unrank 0, 1, 2, ... in turn."""
    for n in itertools.count():
        yield nat_to_hfs(n, ulimit)


def powerset(xs: Sequence) -> list[list]:
    """All subsets of ``xs`` as lists.

    The order matches the classic recursion: subsets of the tail are
    computed first, then each one is emitted without and with the head.
    For ``[a, b]`` that gives ``[], [a], [b], [a, b]``.
    """
    xs = list(xs)
    if len(xs) > MAX_POWERSET_INPUT:
        raise CapExceededError(
            f"powerset of {len(xs)} elements exceeds the cap of {MAX_POWERSET_INPUT}"
        )
    try:
        distinct = len(set(xs)) == len(xs)
    except TypeError:
        distinct = True
    if not distinct:
        raise DuplicateMemberError("powerset input has duplicates")
    subsets = [[]]
    for x in reversed(xs):
        extended = []
        for ys in subsets:
            extended.append(ys)
            extended.append([x, *ys])
        subsets = extended
    return subsets


def hfs_level_stream() -> Iterator[HSet]:
    """Pure HFS generated stage by stage from iterated powersets of the empty set.

    Level ``N`` yields the members of stage ``N+1`` missing from stage ``N``,
    in construction order. Stages grow as 1, 2, 4, 16, 65536, so the stream
    raises :class:`CapExceededError` once the 65536-set stage is exhausted.
    """
    previous: list[HSet] = []
    current: list[HSet] = [EMPTY]
    while True:
        seen = set(previous)
        for h in current:
            if h not in seen:
                yield h
        following = [HSet(s) for s in powerset(current)]
        previous, current = current, following
