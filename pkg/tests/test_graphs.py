import random

import pytest

from hfskit import (
    CycleError,
    Digraph,
    HfsError,
    IsolatedVertexError,
    compress_dag,
    contains_dag,
    contains_edges,
    decorate,
    digraph_to_nat,
    member_dag,
    member_edges,
    nat_to_digraph,
    to_dot,
    transpose_nat,
)
from hfskit.graphs import from_json, to_json
from oracles import contains, deinterleave, interleave, bits

APPENDIX = Digraph.from_adjacency([
    (0, [1, 2, 5, 6, 7]), (1, [7, 9]), (2, [7, 10]), (3, [7]), (4, [8, 10]),
    (5, [8, 9]), (6, [8]), (7, [9]), (8, [9]), (9, [10]), (10, []),
])


def test_edges_of_42():
    assert contains_edges(42) == [(1, 0), (2, 1), (3, 0), (3, 1), (5, 0), (5, 2), (42, 1), (42, 3), (42, 5)]
    assert member_edges(42) == [(0, 1), (0, 3), (0, 5), (1, 2), (1, 3), (1, 42), (2, 5), (3, 42), (5, 42)]
    assert contains_edges(0) == [] and member_edges(0) == []
    assert contains_edges(2, 3) == []
    assert member_edges(1) == [(0, 1)]


@pytest.mark.parametrize("u", [0, 1, 3])
def test_edges_against_backtracking(u):
    for n in range(0, 2001, 3):
        assert contains_edges(n, u) == sorted(set(contains(n, u)))
        assert set(member_edges(n, u)) == {(b, a) for a, b in contains_edges(n, u)}


def test_dags_of_42():
    assert str(contains_dag(42, 1)) == "0-[],1-[],2-[0],3-[1],5-[2],42-[0,3,5]"
    assert str(member_dag(42, 1)) == "0-[2,42],1-[3],2-[5],3-[42],5-[42],42-[]"
    assert str(contains_dag(0, 0)) == "0-[]"
    assert member_dag(42, 1) == contains_dag(42, 1).transpose()


def test_compress():
    assert str(compress_dag(42)) == "0-[1,2,4],1-[3,5],2-[4,5],3-[4],4-[5],5-[]"
    assert str(compress_dag(0)) == "0-[]"
    assert str(compress_dag(1)) == "0-[1],1-[]"


def test_decorate_examples():
    assert decorate(Digraph(vertices=[0])) == 0
    assert decorate(compress_dag(42)) == 42
    # hand decoration: 10->0, 9->1, 7,8->2, 6,3->4, 4,2->5, 5,1->6, root {6,5,4,2}
    n = decorate(APPENDIX)
    assert n == 116
    assert decorate(compress_dag(n)) == n


def test_decorate_inverts_compress():
    rng = random.Random(11)
    for n in list(range(2001)) + [rng.getrandbits(64) for _ in range(100)]:
        assert decorate(compress_dag(n)) == n


def test_contains_dag_acyclic():
    from graphlib import TopologicalSorter
    for n in range(2001):
        g = contains_dag(n)
        list(TopologicalSorter({v: g.neighbors(v) for v in g.vertices}).static_order())


def test_decorate_errors():
    with pytest.raises(CycleError):
        decorate(Digraph([(0, 1), (1, 2), (2, 0)]))
    with pytest.raises(CycleError):
        decorate(Digraph([(0, 0)]))
    with pytest.raises(HfsError):
        decorate(Digraph())


def test_digraph_fixtures():
    assert str(nat_to_digraph(255)) == "0-[0,1],1-[0,1],2-[0,1],3-[0,1]"
    assert str(nat_to_digraph(2008)) == "0-[2,3],1-[1,2],2-[0,1],3-[1]"
    assert len(nat_to_digraph(0)) == 0
    assert digraph_to_nat(Digraph()) == 0
    assert digraph_to_nat(Digraph.from_adjacency([(v, [0, 1]) for v in range(4)])) == 255
    assert digraph_to_nat(Digraph.from_adjacency([(0, [2, 3]), (1, [1, 2]), (2, [0, 1]), (3, [1])])) == 2008


def test_digraph_roundtrip():
    for n in range(5001):
        g = nat_to_digraph(n)
        assert digraph_to_nat(g) == n
        assert len(g.edges()) == n.bit_count()
        assert set(g.edges()) == {deinterleave(p) for p in bits(n)}


def test_isolated_vertex():
    with pytest.raises(IsolatedVertexError):
        digraph_to_nat(Digraph([(0, 1)], vertices=[5]))


def test_transpose():
    ts = [transpose_nat(n) for n in range(8)]
    assert ts == [0, 1, 4, 5, 2, 3, 6, 7]
    assert [transpose_nat(t) for t in ts] == list(range(8))
    for n in range(2001):
        assert transpose_nat(transpose_nat(n)) == n
        swapped = sum(2 ** interleave(b, a) for a, b in map(deinterleave, bits(n)))
        assert transpose_nat(n) == swapped


def test_dot():
    assert to_dot(Digraph()) == "digraph g {\n}\n"
    text = to_dot(Digraph([(0, 1)]))
    assert text.splitlines()[1:-1] == ["  0 -> 1;"]
    lines = to_dot(nat_to_digraph(2008)).splitlines()[1:-1]
    assert len(lines) == 7 and lines == sorted(lines)
    assert "  9;" in to_dot(Digraph([(0, 1)], vertices=[9]))


def test_json_roundtrip():
    g = Digraph([(0, 1), (2 ** 60, 3)], vertices=[7])
    text = to_json(g)
    assert '"1152921504606846976"' in text
    assert from_json(text) == g
    assert to_json(Digraph()) == '{"vertices": [], "edges": []}'
    for bad in ["[]", "{", '{"edges": [[1]]}', '{"edges": [["x", 1]]}', '{"vertices": [-1]}']:
        with pytest.raises(HfsError):
            from_json(bad)
