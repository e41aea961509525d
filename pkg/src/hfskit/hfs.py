"""Ackermann's bijection (with urelements) between naturals and hereditarily
finite sets, the hypergraph codec, and the brace notation used for I/O.

Sets keep their members sorted by Ackermann code. That order does not depend
on the urelement limit: urelements sort below sets and by index among
themselves, and two sets compare like the binary numbers they encode, i.e.
by their members taken in descending order.
"""

from __future__ import annotations

from collections.abc import Iterable

from .bitset import check_nat, nat_to_set, set_to_nat
from .errors import DuplicateMemberError, HfsSyntaxError, UrelementRangeError


def _key_of(h):
    try:
        return h._key
    except AttributeError:
        raise TypeError(f"not an HFS value: {h!r}") from None


class Urelement:
    """An atom with no elements, identified by its index below the urelement limit."""

    __slots__ = ("index", "_key")

    def __init__(self, index: int):
        check_nat(index, "urelement index")
        self.index = index
        self._key = (0, index)

    def __eq__(self, other):
        return isinstance(other, Urelement) and other.index == self.index

    def __hash__(self):
        return hash(self._key)

    def __lt__(self, other):
        return self._key < other._key

    def __repr__(self):
        return f"Urelement({self.index})"


class HSet:
    """An immutable finite set of HFS values in canonical member order."""

    __slots__ = ("members", "_key", "_hash")

    def __init__(self, members: Iterable[HFS] = ()):
        ms = sorted(members, key=_key_of)
        for a, b in zip(ms, ms[1:]):
            if a._key == b._key:
                raise DuplicateMemberError(f"duplicate member {a!r}")
        self.members = tuple(ms)
        self._key = (1, tuple(m._key for m in reversed(ms)))
        self._hash = None

    def __eq__(self, other):
        return isinstance(other, HSet) and other._key == self._key

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self._key)
        return self._hash

    def __lt__(self, other):
        return self._key < other._key

    def __iter__(self):
        return iter(self.members)

    def __len__(self):
        return len(self.members)

    def __contains__(self, item):
        return item in set(self.members)

    def __or__(self, other: HSet) -> HSet:
        return HSet(set(self.members) | set(other.members))

    def __and__(self, other: HSet) -> HSet:
        return HSet(set(self.members) & set(other.members))

    def __sub__(self, other: HSet) -> HSet:
        return HSet(set(self.members) - set(other.members))

    def adjoin(self, item: HFS) -> HSet:
        """``self | {item}``."""
        return HSet(set(self.members) | {item})

    def __repr__(self):
        return f"HSet({print_hfs(self)})"


HFS = Urelement | HSet

EMPTY = HSet()


def hfs_to_nat(h: HFS, ulimit: int = 0) -> int:
    """Ackermann code of ``h`` with urelements ``0..ulimit-1`` mapped to themselves."""
    check_nat(ulimit, "ulimit")
    memo: dict[HSet, int] = {}

    def encode(x):
        if isinstance(x, Urelement):
            if x.index >= ulimit:
                raise UrelementRangeError(f"urelement {x.index} is not below ulimit {ulimit}")
            return x.index
        code = memo.get(x)
        if code is None:
            code = ulimit + set_to_nat([encode(m) for m in x.members])
            memo[x] = code
        return code

    return encode(h)


def nat_to_hfs(n: int, ulimit: int = 0) -> HFS:
    """Inverse of :func:`hfs_to_nat`."""
    check_nat(n)
    check_nat(ulimit, "ulimit")
    memo: dict[int, HFS] = {}

    def decode(k):
        if k < ulimit:
            return Urelement(k)
        h = memo.get(k)
        if h is None:
            # nat_to_set is ascending, which is already canonical member order
            h = HSet.__new__(HSet)
            ms = tuple(decode(x) for x in nat_to_set(k - ulimit))
            h.members = ms
            h._key = (1, tuple(m._key for m in reversed(ms)))
            h._hash = None
            memo[k] = h
        return h

    return decode(n)


# -- textual notation ------------------------------------------------------

def _parse_nested(text: str):
    """Parse braces/commas/decimals into ``(pos, int)`` or ``(pos, [children])`` nodes."""
    i = 0
    size = len(text)

    def skip_ws():
        nonlocal i
        while i < size and text[i].isspace():
            i += 1

    def read_item():
        nonlocal i
        skip_ws()
        if i >= size:
            raise HfsSyntaxError("unexpected end of input", i)
        c = text[i]
        start = i
        if c.isdigit() and c.isascii():
            while i < size and text[i].isdigit() and text[i].isascii():
                i += 1
            return start, int(text[start:i])
        if c == "{":
            i += 1
            return start, None
        raise HfsSyntaxError(f"unexpected character {c!r}", i)

    pos, value = read_item()
    if value is not None:
        root = (pos, value)
    else:
        root = (pos, [])
        stack = [root[1]]
        state = "open"  # just after '{'; "member" after a member; "comma" after ','
        while stack:
            skip_ws()
            if i >= size:
                raise HfsSyntaxError("unterminated set", i)
            c = text[i]
            if c == "}" and state != "comma":
                i += 1
                stack.pop()
                state = "member"
                continue
            if state == "member":
                if c != ",":
                    raise HfsSyntaxError(f"expected ',' or '}}', got {c!r}", i)
                i += 1
                state = "comma"
                continue
            pos, value = read_item()
            if value is None:
                child = []
                stack[-1].append((pos, child))
                stack.append(child)
                state = "open"
            else:
                stack[-1].append((pos, value))
                state = "member"
    skip_ws()
    if i != size:
        raise HfsSyntaxError(f"trailing input {text[i]!r}", i)
    return root


def parse_hfs(text: str, ulimit: int = 0) -> HFS:
    """Read the brace notation; decimal literals are urelements and must be below ``ulimit``."""
    check_nat(ulimit, "ulimit")

    def build(node):
        pos, value = node
        if isinstance(value, int):
            if value >= ulimit:
                raise UrelementRangeError(
                    f"urelement {value} at position {pos} is not below ulimit {ulimit}"
                )
            return Urelement(value)
        members = [build(child) for child in value]
        seen = {}
        for child, m in zip(value, members):
            if m in seen:
                raise DuplicateMemberError(f"duplicate member at position {child[0]}")
            seen[m] = True
        return HSet(members)

    return build(_parse_nested(text))


def print_hfs(h: HFS) -> str:
    """Canonical brace notation without whitespace."""
    if isinstance(h, Urelement):
        return str(h.index)
    return "{" + ",".join(print_hfs(m) for m in h.members) + "}"


# -- hypergraphs -------------------------------------------------------------

def nat_to_hypergraph(n: int) -> list[list[int]]:
    """One level of Ackermann decoding: a set of sets of urelement indices."""
    return [nat_to_set(e) for e in nat_to_set(n)]


def hypergraph_to_nat(edges: Iterable[Iterable[int]]) -> int:
    codes = [set_to_nat(e) for e in edges]
    if len(set(codes)) != len(codes):
        raise DuplicateMemberError("hypergraph has duplicate edges")
    return set_to_nat(codes)


def parse_hypergraph(text: str) -> list[list[int]]:
    """Read ``{{0,1},{2}}``-style text; returns edges in canonical order."""
    pos, value = _parse_nested(text)
    if isinstance(value, int):
        raise HfsSyntaxError("expected a set of sets", pos)
    edges = []
    for epos, edge in value:
        if isinstance(edge, int):
            raise HfsSyntaxError("hypergraph edge must be a set", epos)
        items = []
        for ipos, item in edge:
            if not isinstance(item, int):
                raise HfsSyntaxError("hypergraph vertex must be a number", ipos)
            items.append(item)
        edges.append(items)
    return nat_to_hypergraph(hypergraph_to_nat(edges))


def print_hypergraph(edges: Iterable[Iterable[int]]) -> str:
    ordered = sorted((sorted(e) for e in edges), key=set_to_nat)
    return "{" + ",".join("{" + ",".join(map(str, e)) + "}" for e in ordered) + "}"
