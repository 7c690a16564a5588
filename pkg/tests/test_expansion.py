"""Cutting intervals, convex expansion, decomposition, sum laws."""

import pytest
from hypothesis import given, settings

import oracles
from conftest import posets
from latcut import (CUTTING_METHODS, IntervalRef, NotACutting, boundary,
                    cut_elements, decompose, expand_chain, expand_chain_steps,
                    expand_poset, filter_lattice, is_cutting, lattice_as_poset,
                    poset_from_covers, poset_isomorphic, singleton, sum_laws)


def z3():
    return poset_from_covers(["a", "b", "c"], [("b", "a"), ("b", "c")])


def z3_lattice():
    return filter_lattice(z3())


# -- boundaries --------------------------------------------------------------------


def test_boundary_of_worked_interval():
    lat = z3_lattice()
    k = lat.interval_by_strings("101", "000")
    b = boundary(lat, k)
    s, s0, s1 = b.labels(lat.base)
    assert set(s) == {"a", "c"} and set(s0) == {"b"} and set(s1) == set()


def test_boundary_of_singleton_interval():
    lat = z3_lattice()
    k = lat.interval_by_strings("101", "101")
    s, s0, s1 = boundary(lat, k).labels(lat.base)
    assert set(s) == set() and set(s0) == {"b"} and set(s1) == {"a", "c"}


def test_boundary_partitions_base():
    lat = z3_lattice()
    for a in range(lat.size):
        for b in range(lat.size):
            if lat.le(a, b):
                bd = boundary(lat, IntervalRef(a, b))
                below = lat.base.down_closure(bd.s0)
                above = lat.base.up_closure(bd.s1)
                assert bd.s | below | above == lat.base.full_mask
                assert bd.s & below == 0 and bd.s & above == 0 and below & above == 0


# -- cutting criteria ----------------------------------------------------------------


def test_four_methods_match_chain_oracle_on_z3():
    lat = z3_lattice()
    for a in range(lat.size):
        for b in range(lat.size):
            if not lat.le(a, b):
                continue
            want = oracles.naive_is_cutting(lat, a, b)
            for m in CUTTING_METHODS:
                assert is_cutting(lat, (a, b), m) == want, (a, b, m)


def test_worked_examples():
    lat = z3_lattice()
    assert is_cutting(lat, lat.interval_by_strings("101", "000"))
    assert not is_cutting(lat, lat.interval_by_strings("100", "100"))
    # the interval spanning everything is trivially cutting
    assert is_cutting(lat, (lat.bottom, lat.top))


def test_atom_of_square_is_not_cutting():
    # B_2: two incomparable elements; either atom interval misses a chain
    lat = filter_lattice(poset_from_covers(["a", "b"], []))
    atom = lat.element_by_string("10")
    assert not is_cutting(lat, (atom, atom))
    assert oracles.naive_cut_elements(lat) == []


def test_cut_elements_of_z3():
    lat = z3_lattice()
    got = cut_elements(lat)
    assert [lat.bitstring(a) for a in got] == ["101"]
    assert got == oracles.naive_cut_elements(lat)


def test_is_cutting_rejects_unknown_method():
    with pytest.raises(ValueError):
        is_cutting(z3_lattice(), (0, 1), "magic")


# -- expansion ----------------------------------------------------------------------


def test_expand_worked_example():
    lat = z3_lattice()
    k = lat.interval_by_strings("101", "000")
    exp = expand_poset(lat, k)
    assert exp.lattice.size == 9 == lat.size + 4
    assert exp.new_element in exp.poset.labels
    big = exp.lattice
    assert sorted(big.bitstring(a) for a in big.interval_elements(
        exp.source_interval)) == ["0000", "0010", "1000", "1010"]
    assert sorted(big.bitstring(a) for a in big.interval_elements(
        exp.copy_interval)) == ["0001", "0011", "1001", "1011"]
    # the new element sits above b, the lone element outside the old bottom
    assert oracles.relation(exp.poset) >= {("b", exp.new_element)}


def test_expand_rejects_non_cutting():
    lat = z3_lattice()
    with pytest.raises(NotACutting):
        expand_poset(lat, lat.interval_by_strings("100", "100"))


def test_copy_interval_is_always_cutting():
    lat = z3_lattice()
    for a in range(lat.size):
        for b in range(lat.size):
            if lat.le(a, b) and is_cutting(lat, (a, b)):
                exp = expand_poset(lat, (a, b))
                for m in CUTTING_METHODS:
                    assert is_cutting(exp.lattice, exp.copy_interval, m)


def test_singleton_interval_expansion_inserts_mid_element():
    # expanding a 2-chain lattice at its middle element gives the 3-chain
    lat = filter_lattice(singleton("a"))
    assert lat.size == 2
    exp = expand_poset(lat, (1, 1))
    assert exp.lattice.size == 3
    assert len(exp.lattice.maximal_chains()) == 1


# -- decomposition ------------------------------------------------------------------


def test_decompose_fence5_worked():
    p = poset_from_covers([str(i) for i in range(1, 6)],
                          [("2", "1"), ("2", "3"), ("4", "3"), ("4", "5")])
    dec = decompose(p, "4")
    assert dec.size == 13
    assert dec.host.size == 10
    assert len(dec.host.interval_elements(dec.interval)) == 3
    assert dec.counts_ok and dec.expansion_iso_ok


def test_decompose_every_element_of_z3():
    p = z3()
    for x in p.labels:
        dec = decompose(p, x)
        assert dec.counts_ok and dec.expansion_iso_ok
        assert poset_isomorphic(dec.minus, p.minus(x))
        assert poset_isomorphic(dec.star, p.star(x))


def test_decompose_product_form():
    p = poset_from_covers(["a", "b", "c"], [])
    dec = decompose(p, "b")
    assert dec.product_form and dec.product_iso_ok
    q = z3()
    assert not decompose(q, "b").product_form


# -- growing chains of expansions ----------------------------------------------------


def test_expand_chain_rebuilds_z3():
    steps = [("b", [], []),
             ("a", ["b"], []),
             ("c", ["b"], [])]
    sizes = []
    final = None
    for p, lat in expand_chain_steps(poset_from_covers([], []), steps):
        sizes.append(lat.size)
        final = p
    assert sizes == [1, 2, 3, 5]
    assert poset_isomorphic(final, z3())
    assert expand_chain(poset_from_covers([], []), steps).size == 5


# -- sum laws -----------------------------------------------------------------------


@pytest.mark.parametrize("covers_p,covers_q", [
    ([("b", "a"), ("b", "c")], [("x", "y")]),
    ([], [("x", "y"), ("y", "z")]),
    ([("a", "b")], []),
])
def test_sum_laws(covers_p, covers_q):
    labs_p = sorted({l for c in covers_p for l in c}) or ["a"]
    labs_q = sorted({l for c in covers_q for l in c}) or ["x"]
    p = poset_from_covers(labs_p, covers_p)
    q = poset_from_covers(labs_q, covers_q)
    rep = sum_laws(p, q)
    assert rep.ok, rep


def test_lattice_as_poset_roundtrip():
    lat = z3_lattice()
    p = lattice_as_poset(lat)
    assert p.n == lat.size
    assert len(p.cover_pairs()) == len(lat.covering_graph())


# -- properties ---------------------------------------------------------------------


@settings(max_examples=30, deadline=None)
@given(posets(max_n=4))
def test_methods_agree_everywhere(p):
    lat = filter_lattice(p)
    for a in range(lat.size):
        for b in range(lat.size):
            if lat.le(a, b):
                votes = {is_cutting(lat, (a, b), m) for m in CUTTING_METHODS}
                assert len(votes) == 1


@settings(max_examples=30, deadline=None)
@given(posets(max_n=4))
def test_expansion_size_law(p):
    lat = filter_lattice(p)
    for a in range(lat.size):
        for b in range(lat.size):
            if lat.le(a, b) and is_cutting(lat, (a, b)):
                exp = expand_poset(lat, (a, b))
                assert exp.lattice.size == \
                    lat.size + len(lat.interval_elements((a, b)))
