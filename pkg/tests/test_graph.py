import pytest
from hypothesis import given, settings, strategies as st

from alliance_poly.graph import (Family, Graph, GraphFormatError, CapacityError,
                                 disjoint_union, edge_mask, encode_graph6, from_edge_mask,
                                 generate, is_wheel_labeling, join, parse_edge_list,
                                 parse_graph6, upper_triangle_pairs)


@st.composite
def graphs(draw, max_n=12):
    n = draw(st.integers(0, max_n))
    mask = draw(st.integers(0, (1 << (n * (n - 1) // 2)) - 1)) if n > 1 else 0
    return from_edge_mask(n, mask)


def check_simple(g):
    for v, row in enumerate(g.rows):
        assert not row >> v & 1
        for u in range(g.n):
            assert (row >> u & 1) == (g.rows[u] >> v & 1)
    assert 2 * g.m == sum(r.bit_count() for r in g.rows)
    assert 0 <= g.min_degree <= g.max_degree <= max(g.n - 1, 0)


@pytest.mark.parametrize("text, edges", [
    ("A_", [(0, 1)]),
    ("Bw", [(0, 1), (0, 2), (1, 2)]),
    ("A?", []),
])
def test_parse_graph6_examples(text, edges):
    g = parse_graph6(text)
    assert sorted(g.edges()) == edges
    assert g.n == ord(text[0]) - 63


def test_parse_graph6_header_and_newline():
    assert parse_graph6(b">>graph6<<Bw\n") == generate("complete", 3)


@pytest.mark.parametrize("bad", [
    "~??",       # n=63 would need long form
    "B",          # payload too short
    "Bww",        # payload too long
    "B\x01",     # non-printable
    "Ax",         # bit set in padding (x = 57 = 111001)
    "",
])
def test_parse_graph6_errors(bad):
    with pytest.raises(GraphFormatError):
        parse_graph6(bad)


@given(graphs(max_n=20))
@settings(max_examples=200)
def test_graph6_round_trip(g):
    assert parse_graph6(encode_graph6(g)) == g
    check_simple(g)


def test_graph6_round_trip_order_62():
    g = generate("wheel", 62)
    assert parse_graph6(encode_graph6(g)) == g


def test_parse_edge_list():
    assert parse_edge_list("2 1\n0 1") == generate("complete", 2)
    assert parse_edge_list("3 3\n0 1\n1 2\n0 2") == generate("cycle", 3)


@pytest.mark.parametrize("bad", [
    "3 1\n0 0",           # self-loop
    "3 2\n0 1\n1 0",      # duplicate
    "3 1\n0 3",           # out of range
    "3 2\n0 1",           # count mismatch
    "3 1\n0 x",           # malformed
    "3\n",                # bad header
    "",
])
def test_parse_edge_list_errors(bad):
    with pytest.raises(GraphFormatError):
        parse_edge_list(bad)


def test_generate_examples():
    w4 = generate("wheel", 4)
    assert w4.m == 6 and w4 == generate("complete", 4)
    assert generate("cycle", 3) == generate("complete", 3)
    assert sorted(generate("star", 5).degrees) == [1, 1, 1, 1, 4]
    assert generate(Family.COMPLETE_MINUS_EDGE, 4).m == 5
    assert generate("empty", 3).m == 0
    assert generate("path", 4).edges() == [(0, 1), (1, 2), (2, 3)]


@pytest.mark.parametrize("fam, n", [("cycle", 2), ("wheel", 3), ("path", 0),
                                    ("star", 0), ("complete-minus-edge", 1)])
def test_generate_rejects_small_orders(fam, n):
    with pytest.raises(ValueError):
        generate(fam, n)


@pytest.mark.parametrize("n", range(5, 20))
def test_wheel_degree_sequence(n):
    assert sorted(generate("wheel", n).degrees, reverse=True) == [n - 1] + [3] * (n - 1)


@pytest.mark.parametrize("n", range(4, 30))
def test_join_e1_cycle_is_canonical_wheel(n):
    assert join(generate("empty", 1), generate("cycle", n - 1)) == generate("wheel", n)


def test_join_examples():
    e1 = generate("empty", 1)
    assert join(e1, e1) == generate("complete", 2)
    assert join(e1, generate("cycle", 3)) == generate("complete", 4)


def test_disjoint_union_examples():
    e1 = generate("empty", 1)
    assert disjoint_union(e1, e1) == generate("empty", 2)
    two = disjoint_union(generate("cycle", 3), generate("cycle", 3))
    assert two.n == 6 and set(two.degrees) == {2} and len(two.components()) == 2
    g = disjoint_union(generate("cycle", 3), generate("cycle", 4))
    assert (g.n, g.m) == (7, 7)


def test_capacity():
    big = generate("empty", 40)
    with pytest.raises(CapacityError):
        join(big, big)
    with pytest.raises(CapacityError):
        disjoint_union(big, big)


@given(graphs(), graphs())
@settings(max_examples=50)
def test_join_and_union_structure(g1, g2):
    j = join(g1, g2)
    u = disjoint_union(g1, g2)
    check_simple(j)
    check_simple(u)
    assert j.m == g1.m + g2.m + g1.n * g2.n
    assert u.m == g1.m + g2.m
    for a in range(g1.n):
        for b in range(g2.n):
            assert j.has_edge(a, g1.n + b) and not u.has_edge(a, g1.n + b)


def test_invalid_rows_rejected():
    with pytest.raises(ValueError):
        Graph(2, (0b10, 0))
    with pytest.raises(ValueError):
        Graph(1, (1,))


def test_edge_mask_round_trip():
    for mask in range(1 << 6):
        assert edge_mask(from_edge_mask(4, mask)) == mask
    assert upper_triangle_pairs(3) == [(0, 1), (0, 2), (1, 2)]


def test_is_wheel_labeling():
    assert is_wheel_labeling(generate("wheel", 7))
    assert is_wheel_labeling(generate("complete", 4))
    # centre plus two triangles: right degrees, disconnected rim
    tri2 = disjoint_union(generate("cycle", 3), generate("cycle", 3))
    assert not is_wheel_labeling(join(generate("empty", 1), tri2))
    assert not is_wheel_labeling(generate("cycle", 6))
