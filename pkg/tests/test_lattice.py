"""Filter lattices: order, meet/join, intervals, meet-irreducibles."""

import pytest
from hypothesis import given, settings

import oracles
from conftest import posets, shuffled_relabeling
from latcut import (InvalidInterval, birkhoff_roundtrip, filter_lattice,
                    lattice_isomorphism, poset_from_covers, poset_isomorphic)


def z3_lattice():
    return filter_lattice(
        poset_from_covers(["a", "b", "c"], [("b", "a"), ("b", "c")]))


def test_canonical_element_order():
    lat = z3_lattice()
    assert [lat.bitstring(a) for a in range(lat.size)] == \
        ["111", "101", "100", "001", "000"]
    assert lat.heights == (0, 1, 2, 2, 3)
    assert lat.bottom == 0 and lat.top == lat.size - 1


def test_order_is_reverse_inclusion():
    lat = z3_lattice()
    full = lat.element_by_string("111")
    empty = lat.element_by_string("000")
    for a in range(lat.size):
        assert lat.le(full, a) and lat.le(a, empty)
    a, c = lat.element_by_string("100"), lat.element_by_string("001")
    assert not lat.le(a, c) and not lat.le(c, a)


def test_meet_is_union_join_is_intersection():
    lat = z3_lattice()
    a, c = lat.element_by_string("100"), lat.element_by_string("001")
    assert lat.bitstring(lat.meet(a, c)) == "101"
    assert lat.bitstring(lat.join(a, c)) == "000"
    top = lat.element_by_string("000")
    assert lat.meet(a, top) == a and lat.join(a, top) == top


def test_element_lookup_errors():
    lat = z3_lattice()
    with pytest.raises(InvalidInterval):
        lat.element_by_bits(0b010)   # not a filter
    with pytest.raises(InvalidInterval):
        lat.interval(lat.element_by_string("100"), lat.element_by_string("001"))


def test_covers_against_naive():
    for covers in ([("b", "a"), ("b", "c")],
                   [("a", "b"), ("b", "c")],
                   [],
                   [("a", "b"), ("a", "c")]):
        lat = filter_lattice(poset_from_covers(["a", "b", "c"], covers))
        got = [(a, b) for a in range(lat.size) for b in lat.up_covers[a]]
        assert sorted(got) == sorted(oracles.naive_covers(lat))
        assert list(lat.heights) == oracles.naive_heights(lat)


def test_covers_drop_exactly_one_element():
    lat = z3_lattice()
    for a in range(lat.size):
        for b in lat.up_covers[a]:
            gone = lat.filters[a] & ~lat.filters[b]
            assert gone.bit_count() == 1


def test_maximal_chains_frozen():
    lat = z3_lattice()
    chains = lat.maximal_chains()
    assert len(chains) == 2
    assert chains == tuple(sorted(oracles.naive_maximal_chains(lat)))


def test_meet_irreducibles_frozen():
    lat = z3_lattice()
    mi = lat.meet_irreducibles()
    assert [lat.bitstring(a) for a in mi] == ["111", "100", "001"]
    assert poset_isomorphic(lat.mi_poset(), lat.base)
    assert oracles.naive_mi(lat) == sorted(mi)


def test_interval_ops():
    lat = z3_lattice()
    k = lat.interval_by_strings("101", "000")
    assert sorted(lat.bitstring(a) for a in lat.interval_elements(k)) == \
        ["000", "001", "100", "101"]
    s = lat.interval_subposet(k)
    assert set(s.labels) == {"a", "c"} and oracles.relation(s) == set()
    assert lat.interval_lattice(k).size == 4
    assert lat.is_boolean_interval(k) and lat.is_boolean_interval(k, 2)
    assert not lat.is_boolean_interval(k, 1)
    whole = lat.interval(lat.bottom, lat.top)
    assert not lat.is_boolean_interval(whole)


def test_covering_graph_size():
    lat = z3_lattice()
    assert len(lat.covering_graph()) == 5


def test_lattice_isomorphism_via_relabeling():
    p = poset_from_covers(["a", "b", "c"], [("b", "a"), ("b", "c")])
    q, _ = shuffled_relabeling(p, seed=3)
    assert lattice_isomorphism(filter_lattice(p), filter_lattice(q))
    chain = poset_from_covers(["a", "b", "c"], [("a", "b"), ("b", "c")])
    assert not lattice_isomorphism(filter_lattice(p), filter_lattice(chain))


def test_trivial_lattice():
    lat = filter_lattice(poset_from_covers([], []))
    assert lat.size == 1 and lat.heights == (0,)
    assert lat.maximal_chains() == ((0,),)
    assert list(lat.meet_irreducibles()) == []


# -- properties ---------------------------------------------------------------------


@settings(max_examples=50, deadline=None)
@given(posets(max_n=5))
def test_birkhoff_roundtrip_property(p):
    assert birkhoff_roundtrip(p)


@settings(max_examples=40, deadline=None)
@given(posets(max_n=5))
def test_lattice_axioms_hold(p):
    lat = filter_lattice(p)
    elems = range(lat.size)
    for a in elems:
        assert lat.meet(a, a) == a and lat.join(a, a) == a
        for b in elems:
            m, j = lat.meet(a, b), lat.join(a, b)
            assert lat.le(m, a) and lat.le(a, j)
            assert lat.meet(a, j) == a and lat.join(a, m) == a
            for c in elems:
                # distributivity, the defining property of these lattices
                assert lat.meet(a, lat.join(b, c)) == \
                    lat.join(lat.meet(a, b), lat.meet(a, c))


@settings(max_examples=40, deadline=None)
@given(posets(max_n=6))
def test_heights_grade_the_lattice(p):
    lat = filter_lattice(p)
    assert lat.heights[lat.bottom] == 0
    assert lat.heights[lat.top] == p.n
    for a in range(lat.size):
        for b in lat.up_covers[a]:
            assert lat.heights[b] == lat.heights[a] + 1
