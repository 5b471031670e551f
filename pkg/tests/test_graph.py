import pytest
from hypothesis import given, settings, strategies as st

from mzhalve.core import DigitString, digit_string_value, parse_digit_string
from mzhalve.graph import (
    BinaryGraph,
    GraphTooLargeError,
    Kind,
    VertexId,
    binarize,
    build,
    count_8cycles_bruteforce,
    count_c8_structural,
    count_leaves,
    edge_count,
    expected_c8,
    expected_edge_count,
    expected_order,
    is_connected,
    is_path,
    iter_cycles_of_length,
    leaves,
    order,
    pair_row,
    row,
    to_adjacency_text,
    to_graph_text,
)

digit_strings = st.lists(st.integers(0, 9), min_size=1, max_size=6).map(DigitString)


def test_g1_458_is_p13():
    g = build("458", 1)
    assert order(g) == 13
    assert edge_count(g) == 12
    assert is_path(g)
    assert count_leaves(g) == 2


def test_g2_375_order():
    g = build("375", 2)
    assert order(g) == 26 == expected_order(3, 2)
    assert not is_path(g)


def test_g3_35_counts():
    # enumerated: 32 vertices and 36 edges, both agreeing with the closed forms
    g = build("35", 3)
    assert order(g) == 32 == expected_order(2, 3)
    assert edge_count(g) == 36 == expected_edge_count(2, 3)


def test_k0_isolated():
    g = build("7", 0)
    assert order(g) == 1
    assert edge_count(g) == 0
    assert count_leaves(g) == 0
    assert not is_path(g)
    assert count_c8_structural(g) == 0


def test_rows():
    assert row(build("265", 1), 1) == parse_digit_string("1325")
    g = build("35", 3)
    assert row(g, 0) == (3, 5)
    assert row(g, 3) == (0, 4, 3, 7, 5)
    with pytest.raises(IndexError):
        row(g, 4)
    with pytest.raises(IndexError):
        row(g, -1)


def test_pair_row():
    assert pair_row(build("458", 1), 1) == [(2, 0), (2, 5), (4, 0)]
    with pytest.raises(IndexError):
        pair_row(build("458", 1), 0)


@pytest.mark.parametrize("x, k, expected", [("458", 1, 0), ("35", 3, 5), ("375", 2, 3)])
def test_c8_counts(x, k, expected):
    g = build(x, k)
    assert count_8cycles_bruteforce(g) == expected
    assert count_c8_structural(g) == expected


@pytest.mark.parametrize("x, k", [("458", 1), ("35", 3), ("7", 5)])
def test_two_leaves_at_last_row(x, k):
    g = build(x, k)
    d = len(x)
    assert sorted(leaves(g)) == sorted(
        [VertexId(k, Kind.RESULT, 0), VertexId(k, Kind.RESULT, d + k - 1)]
    )


def test_path_single_digit():
    g = build("7", 1)
    assert is_path(g)
    assert order(g) == 5


def test_bruteforce_guard():
    g = build("123456", 8)
    assert order(g) > 200
    with pytest.raises(GraphTooLargeError):
        count_8cycles_bruteforce(g)


def test_cycle_enumeration_on_known_cycle():
    # the structural 8-cycle of G_2(7) is the whole cycle space
    g = build("7", 2)
    cycles = list(iter_cycles_of_length(g, 8))
    assert len(cycles) == 1
    assert len(set(cycles[0])) == 8
    assert list(iter_cycles_of_length(g, 4)) == []


def test_binarize_265():
    g = build("265", 1)
    bg = binarize(g)
    assert isinstance(bg, BinaryGraph)
    assert [bg.labels[VertexId(0, Kind.RESULT, i)] for i in (2, 1, 0)] == [0, 0, 1]
    assert [d % 2 for d in row(g, 1)] == [1, 1, 0, 1]
    assert [bg.labels[VertexId(1, Kind.RESULT, i)] for i in (3, 2, 1, 0)] == [1, 1, 0, 1]
    assert bg.adjacency == g.adjacency


def test_binarize_all_even():
    bg = binarize(build("2468", 3))
    assert all(bg.labels[VertexId(0, Kind.RESULT, i)] == 0 for i in range(4))
    assert all(bg.labels[VertexId(1, Kind.FRACTION, j)] == 0 for j in range(4))
    assert set(bg.labels.values()) <= {0, 1}


def test_binarize_zero_is_all_zero():
    assert set(binarize(build("000", 4)).labels.values()) == {0}


def test_exports():
    g = build("7", 1)
    adj = to_adjacency_text(g).splitlines()
    assert len(adj) == 5
    assert adj[0] == "0:result:0 7 1:floor:0 1:fraction:0"
    text = to_graph_text(g).splitlines()
    vertex_lines = [ln for ln in text if len(ln.split()) == 4]
    edge_lines = [ln for ln in text if len(ln.split()) == 6]
    assert len(vertex_lines) == 5 and len(edge_lines) == 4
    assert vertex_lines[0] == "0 result 0 7"
    assert "0 result 0 1 floor 0" in edge_lines


@settings(max_examples=60, deadline=None)
@given(digit_strings, st.integers(0, 12))
def test_structure_properties(x, k):
    g = build(x, k)
    d = len(x)
    assert order(g) == expected_order(d, k)
    assert edge_count(g) == expected_edge_count(d, k)
    for r in range(k + 1):
        assert digit_string_value(row(g, r)) == 5**r * digit_string_value(x)
    if k >= 1:
        assert is_connected(g)
        assert count_leaves(g) == 2
        assert count_c8_structural(g) == expected_c8(d, k)
        assert edge_count(g) - order(g) + 1 == count_c8_structural(g)
    if k == 1:
        assert is_path(g) and order(g) == 4 * d + 1


@settings(max_examples=25, deadline=None)
@given(st.lists(st.integers(0, 9), min_size=1, max_size=3).map(DigitString), st.integers(0, 4))
def test_bruteforce_agrees_with_structure(x, k):
    g = build(x, k)
    assert count_8cycles_bruteforce(g) == count_c8_structural(g)


def test_no_loops_or_multi_edges():
    g = build("907", 4)
    for v, nbrs in g.adjacency.items():
        assert v not in nbrs
    assert sum(1 for _ in g.edges()) == edge_count(g)
