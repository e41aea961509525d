"""Membership graphs of codes, DAG compression and decoration, and the
digraph <-> Nat bijection."""

from __future__ import annotations

import json
from collections.abc import Iterable
from graphlib import CycleError as _GraphlibCycleError
from graphlib import TopologicalSorter

from .bitset import check_nat, nat_to_set, set_to_nat
from .errors import CycleError, HfsError, IsolatedVertexError
from .pairing import bitmerge_pair, bitmerge_unpair

Edge = tuple[int, int]


class Digraph:
    """Immutable adjacency form: ascending vertices, each with ascending out-neighbours."""

    __slots__ = ("_adj",)

    def __init__(self, edges: Iterable[Edge] = (), vertices: Iterable[int] = ()):
        adj: dict[int, set[int]] = {}
        for v in vertices:
            adj.setdefault(check_nat(v, "vertex"), set())
        for src, dst in edges:
            adj.setdefault(check_nat(src, "vertex"), set()).add(dst)
            adj.setdefault(check_nat(dst, "vertex"), set())
        self._adj = {v: tuple(sorted(adj[v])) for v in sorted(adj)}

    @classmethod
    def from_adjacency(cls, adjacency: Iterable[tuple[int, Iterable[int]]]) -> Digraph:
        adjacency = list(adjacency)
        return cls(
            ((v, w) for v, ws in adjacency for w in ws),
            vertices=(v for v, _ in adjacency),
        )

    @property
    def vertices(self) -> list[int]:
        return list(self._adj)

    @property
    def adjacency(self) -> list[tuple[int, tuple[int, ...]]]:
        return list(self._adj.items())

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self._adj[v]

    def edges(self) -> list[Edge]:
        return [(v, w) for v, ws in self._adj.items() for w in ws]

    def transpose(self) -> Digraph:
        return Digraph(((w, v) for v, w in self.edges()), vertices=self._adj)

    def isolated_vertices(self) -> list[int]:
        touched = {x for e in self.edges() for x in e}
        return [v for v in self._adj if v not in touched]

    def __eq__(self, other):
        return isinstance(other, Digraph) and other._adj == self._adj

    def __hash__(self):
        return hash(tuple(self._adj.items()))

    def __len__(self):
        return len(self._adj)

    def __str__(self):
        """Adjacency text like ``0-[1,2],1-[],2-[]``."""
        return ",".join(f"{v}-[{','.join(map(str, ws))}]" for v, ws in self._adj.items())

    def __repr__(self):
        return f"Digraph({self})"


# -- membership views ------------------------------------------------------

def contains_edges(n: int, ulimit: int = 0) -> list[Edge]:
    """Edges ``(set, element)`` of the containment relation reachable from ``n``."""
    check_nat(n)
    edges = set()
    seen = set()
    stack = [n]
    while stack:
        x = stack.pop()
        if x in seen or x < ulimit:
            continue
        seen.add(x)
        for y in nat_to_set(x - ulimit):
            edges.add((x, y))
            stack.append(y)
    return sorted(edges)


def member_edges(n: int, ulimit: int = 0) -> list[Edge]:
    """Edges ``(element, set)`` of the membership relation reachable from ``n``."""
    return sorted((y, x) for x, y in contains_edges(n, ulimit))


def contains_dag(n: int, ulimit: int = 0) -> Digraph:
    return Digraph(contains_edges(n, ulimit), vertices=[n])


def member_dag(n: int, ulimit: int = 0) -> Digraph:
    return Digraph(member_edges(n, ulimit), vertices=[n])


def compress_dag(n: int) -> Digraph:
    """Containment DAG of ``n`` (no urelements) relabelled into ``0..k-1``.

    Vertices are numbered in descending order of their codes, so the root
    becomes 0.
    """
    g = contains_dag(n)
    label = {v: i for i, v in enumerate(reversed(g.vertices))}
    return Digraph(((label[a], label[b]) for a, b in g.edges()), vertices=[0])


def decorate(g: Digraph) -> int:
    """Recover the code of the smallest-labelled vertex from an unlabelled DAG.

    A vertex is decorated with the code of the set of its children's
    decorations; sinks get 0. Equal child decorations are merged.
    """
    if not len(g):
        raise HfsError("cannot decorate an empty graph")
    sorter = TopologicalSorter({v: g.neighbors(v) for v in g.vertices})
    try:
        order = list(sorter.static_order())
    except _GraphlibCycleError as exc:
        raise CycleError(f"graph has a cycle through {exc.args[1]}") from None

    root = g.vertices[0]
    reachable = {root}
    stack = [root]
    while stack:
        for w in g.neighbors(stack.pop()):
            if w not in reachable:
                reachable.add(w)
                stack.append(w)

    decoration: dict[int, int] = {}
    for v in order:
        if v in reachable:
            decoration[v] = set_to_nat({decoration[w] for w in g.neighbors(v)})
    return decoration[root]


# -- digraphs as naturals ----------------------------------------------------

def nat_to_digraph(n: int) -> Digraph:
    """Each set bit of ``n`` is an edge, recovered by bitmerge unpairing."""
    return Digraph(bitmerge_unpair(p) for p in nat_to_set(n))


def digraph_to_nat(g: Digraph) -> int:
    isolated = g.isolated_vertices()
    if isolated:
        raise IsolatedVertexError(f"isolated vertices {isolated} cannot be encoded")
    return set_to_nat([bitmerge_pair(a, b) for a, b in g.edges()])


def transpose_nat(n: int) -> int:
    """Reverse every edge of the digraph encoded by ``n``; an involution."""
    return digraph_to_nat(nat_to_digraph(n).transpose())


# -- serialisation -----------------------------------------------------------

_JSON_SAFE = 1 << 53


def _json_int(x):
    return x if x < _JSON_SAFE else str(x)


def _read_int(x):
    if isinstance(x, bool):
        raise HfsError(f"expected an integer, got {x!r}")
    if isinstance(x, str):
        if not x.isdigit():
            raise HfsError(f"expected a decimal integer, got {x!r}")
        return int(x)
    if isinstance(x, int):
        return check_nat(x)
    raise HfsError(f"expected an integer, got {x!r}")


def to_json(g: Digraph) -> str:
    return json.dumps({
        "vertices": [_json_int(v) for v in g.vertices],
        "edges": [[_json_int(a), _json_int(b)] for a, b in g.edges()],
    })


def from_json(text: str) -> Digraph:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise HfsError(f"invalid graph JSON: {exc}") from None
    if not isinstance(data, dict):
        raise HfsError("graph JSON must be an object")
    edges = data.get("edges", [])
    if not all(isinstance(e, list) and len(e) == 2 for e in edges):
        raise HfsError("graph edges must be [src, dst] pairs")
    return Digraph(
        ((_read_int(a), _read_int(b)) for a, b in edges),
        vertices=(_read_int(v) for v in data.get("vertices", [])),
    )


def to_dot(g: Digraph) -> str:
    """Deterministic dot text; isolated vertices are listed before the edges."""
    lines = ["digraph g {"]
    lines += [f"  {v};" for v in g.isolated_vertices()]
    lines += [f"  {a} -> {b};" for a, b in g.edges()]
    lines.append("}")
    return "\n".join(lines) + "\n"
