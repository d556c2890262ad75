from itertools import combinations

import pytest
from hypothesis import given

from hibi.ideals import enumerate_ideals
from hibi.poset import antichain, chain, product
from hibi.ring import (
    HibiRelation,
    hibi_relations,
    presentation_json,
    ring_generators,
    verify_relation_exponents,
)

from support import posets


def test_generators_chain2():
    assert [g.exponent for g in ring_generators(chain(2))] == [(1, 0, 0), (1, 1, 0), (1, 1, 1)]


def test_generators_antichain2():
    assert [g.exponent for g in ring_generators(antichain(2))] == [
        (1, 0, 0), (1, 1, 0), (1, 0, 1), (1, 1, 1)
    ]


@pytest.mark.parametrize("n", range(1, 7))
def test_chain_has_no_relations(n):
    assert hibi_relations(chain(n)) == ()
    assert len(ring_generators(chain(n))) == n + 1


def test_segre_quadric():
    (rel,) = hibi_relations(antichain(2))
    assert set(rel.pair) == {frozenset({"p1"}), frozenset({"p2"})}
    assert rel.meet == frozenset() and rel.join == {"p1", "p2"}
    assert verify_relation_exponents(antichain(2), rel)


def test_grid_relation_count():
    P = product(chain(2), chain(2))
    ideals = list(enumerate_ideals(P))
    incomparable = [(I, J) for I, J in combinations(ideals, 2) if not (I <= J or J <= I)]
    assert len(hibi_relations(P)) == len(incomparable) == 1


def test_corrupted_relation_rejected():
    (rel,) = hibi_relations(antichain(2))
    bad = HibiRelation(rel.pair, rel.meet, frozenset({"p1"}))
    assert not verify_relation_exponents(antichain(2), bad)


@given(posets())
def test_relations_vanish_and_are_quadratic(P):
    rels = hibi_relations(P)
    for r in rels:
        assert verify_relation_exponents(P, r)
        assert {r.pair[0], r.pair[1]} != {r.meet, r.join}
    ideals = list(enumerate_ideals(P))
    comparable = sum(1 for I, J in combinations(ideals, 2) if I <= J or J <= I)
    assert len(rels) == len(ideals) * (len(ideals) - 1) // 2 - comparable
    is_chain = len(P.lt) == len(P) * (len(P) - 1) // 2
    assert (len(rels) == 0) == is_chain


def test_presentation_json():
    assert presentation_json(antichain(2)) == {
        "generators": [[1, 0, 0], [1, 1, 0], [1, 0, 1], [1, 1, 1]],
        "relations": [[1, 2, 0, 3]],
    }
