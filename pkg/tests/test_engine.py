import pytest
from hypothesis import given, settings, strategies as st

from alliance_poly.engine import (CapExceeded, alliance_polynomial,
                                  alliance_polynomial_reference, count_connected_subsets,
                                  default_cap, exact_alliance_index, is_connected_subset,
                                  is_defensive_alliance)
from alliance_poly.graph import disjoint_union, from_edge_mask, generate
from alliance_poly.poly import from_text

from test_graph import graphs


def test_index_examples():
    assert exact_alliance_index(generate("cycle", 3), 0b1) == -2
    star = generate("star", 5)
    assert exact_alliance_index(star, star.full_mask) == 1
    w5 = generate("wheel", 5)
    assert exact_alliance_index(w5, 0b111) == 0


def test_index_of_empty_set_is_an_error():
    with pytest.raises(ValueError):
        exact_alliance_index(generate("cycle", 3), 0)


def test_connected_subset_examples():
    c4 = generate("cycle", 4)
    assert is_connected_subset(c4, 0b0011)
    assert not is_connected_subset(c4, 0b0101)
    assert not is_connected_subset(c4, 0)
    for v in range(4):
        assert is_connected_subset(c4, 1 << v)


@pytest.mark.parametrize("graph, expected", [
    (generate("path", 2), "2*x^1 + 1*x^3"),
    (generate("cycle", 4), "4*x^2 + 8*x^4 + 1*x^6"),
    (generate("wheel", 5), "1*x^1 + 4*x^2 + 4*x^3 + 10*x^4 + 4*x^5 + 5*x^6 + 1*x^8"),
    (generate("wheel", 4), "4*x^1 + 6*x^3 + 4*x^5 + 1*x^7"),
    (generate("wheel", 6), "1*x^1 + 10*x^3 + 30*x^5 + 11*x^7 + 1*x^9"),
])
def test_polynomial_examples(graph, expected):
    # expected values are what the definitional scan gives; both routes must agree
    assert alliance_polynomial_reference(graph) == from_text(expected)
    p = alliance_polynomial(graph)
    assert p == from_text(expected)
    assert p.order == graph.n


@pytest.mark.parametrize("n", range(1, 9))
def test_empty_graph(n):
    assert alliance_polynomial(generate("empty", n)) == from_text(f"{n}*x^{n}")


@given(graphs(max_n=7))
@settings(max_examples=150, deadline=None)
def test_index_is_max_k(g):
    top = g.max_degree
    for s in range(1, 1 << g.n):
        k = exact_alliance_index(g, s)
        assert -top <= k <= top
        for cand in range(-top, top + 1):
            assert is_defensive_alliance(g, s, cand) == (cand <= k)


@given(graphs(max_n=9))
@settings(max_examples=100, deadline=None)
def test_vectorised_scan_matches_reference(g):
    assert alliance_polynomial(g) == alliance_polynomial_reference(g)


@given(graphs(max_n=10))
@settings(max_examples=100, deadline=None)
def test_connected_counter_matches_scan(g):
    brute = sum(is_connected_subset(g, s) for s in range(1, 1 << g.n))
    assert count_connected_subsets(g) == brute


@given(graphs(max_n=10), st.integers(1, 17))
@settings(max_examples=40, deadline=None)
def test_partition_count_does_not_matter(g, parts):
    assert alliance_polynomial(g, partitions=parts) == alliance_polynomial(g)


def test_process_pool_matches_serial():
    g = generate("wheel", 12)
    serial = alliance_polynomial(g)
    assert alliance_polynomial(g, workers=2, partitions=5).terms == serial.terms


def test_disconnected_graph_counts_only_connected_sets():
    g = disjoint_union(generate("cycle", 3), generate("cycle", 4))
    p = alliance_polynomial(g)
    assert p == alliance_polynomial_reference(g)
    # two 2-regular components
    assert p[g.n + 2] == 2


def test_cap(monkeypatch):
    with pytest.raises(CapExceeded):
        alliance_polynomial(generate("path", 10), cap=9)
    monkeypatch.setenv("ALLIANCE_CAP", "5")
    assert default_cap() == 5
    with pytest.raises(CapExceeded):
        alliance_polynomial(generate("path", 6))
    monkeypatch.setenv("ALLIANCE_CAP", "99")
    with pytest.raises(ValueError):
        default_cap()

