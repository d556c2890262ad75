import pytest
from hypothesis import given

from hibi.errors import CapExceeded, UnknownElement
from hibi.ideals import char_vector, enumerate_ideals, filters, is_filter, is_ideal, join, meet
from hibi.poset import antichain, chain, opposite, product

from support import V_poset, brute_ideals, grid, posets


def test_chain3():
    assert list(enumerate_ideals(chain(3))) == [
        frozenset(), {"p1"}, {"p1", "p2"}, {"p1", "p2", "p3"}
    ]


def test_antichain2_order():
    assert list(enumerate_ideals(antichain(2))) == [frozenset(), {"p1"}, {"p2"}, {"p1", "p2"}]


def test_grid_count_matches_power_set_scan():
    P = product(chain(2), chain(2))
    assert len(brute_ideals(P)) == 6
    assert set(enumerate_ideals(P)) == set(brute_ideals(P))


@given(posets())
def test_matches_brute_force(P):
    L = enumerate_ideals(P)
    assert sorted(L, key=sorted) == sorted(brute_ideals(P), key=sorted)
    assert len(set(L)) == len(L)
    assert all(L.index[I] == k for k, I in enumerate(L))


@given(posets())
def test_canonical_order(P):
    keys = [(len(I), sorted(P.index[p] for p in I)) for I in enumerate_ideals(P)]
    assert keys == sorted(keys)


@pytest.mark.parametrize("n", range(1, 7))
def test_counts(n):
    assert len(enumerate_ideals(chain(n))) == n + 1
    assert len(enumerate_ideals(antichain(n))) == 2**n


def test_cap():
    with pytest.raises(CapExceeded):
        enumerate_ideals(antichain(4), cap=15)
    assert len(enumerate_ideals(antichain(4), cap=16)) == 16


def test_is_ideal():
    assert not is_ideal(chain(2), {"p2"})
    assert is_ideal(chain(2), {"p1"})
    assert not is_ideal(V_poset(), {"b", "c"})
    with pytest.raises(UnknownElement):
        is_ideal(chain(2), {"zz"})


def test_join_meet():
    a, b = frozenset({"p1"}), frozenset({"p2"})
    assert join(a, b) == {"p1", "p2"} and meet(a, b) == frozenset()
    ab, ac = frozenset("ab"), frozenset("ac")
    assert join(ab, ac) == set("abc") and meet(ab, ac) == {"a"}
    assert is_ideal(grid(), join(ab, ac)) and is_ideal(grid(), meet(ab, ac))


@given(posets())
def test_lattice_closed(P):
    L = enumerate_ideals(P)
    for I in L:
        assert join(I, I) == I
        for J in L:
            assert join(I, J) in L and meet(I, J) in L


@given(posets())
def test_exponent_identity(P):
    L = enumerate_ideals(P)
    for I in L:
        for J in L:
            lhs = [x + y for x, y in zip(char_vector(P, I), char_vector(P, J))]
            rhs = [x + y for x, y in zip(char_vector(P, I | J), char_vector(P, I & J))]
            assert lhs == rhs


def test_filters():
    assert filters(chain(2)) == (frozenset(), {"p2"}, {"p1", "p2"})
    assert set(filters(antichain(2))) == {frozenset(), frozenset({"p1"}), frozenset({"p2"}), frozenset({"p1", "p2"})}


@given(posets())
def test_filters_are_opposite_ideals(P):
    F = filters(P)
    assert len(F) == len(enumerate_ideals(P))
    assert set(F) == set(enumerate_ideals(opposite(P)))
    assert all(is_filter(P, S) for S in F)


def test_char_vector():
    assert char_vector(chain(2), {"p1"}) == (1, 0)
    assert char_vector(chain(2), set()) == (0, 0)
    assert char_vector(chain(2), {"p1", "p2"}) == (1, 1)
    with pytest.raises(UnknownElement):
        char_vector(chain(2), {"q"})


def test_to_json():
    assert enumerate_ideals(V_poset()).to_json() == {
        "ideals": [[], ["a"], ["a", "b"], ["a", "c"], ["a", "b", "c"]]
    }
