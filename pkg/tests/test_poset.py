import pytest
from hypothesis import given

from hibi.errors import CycleDetected, DuplicateElement, EmptyPoset, InvalidTree, NotACovering, UnknownElement
from hibi.poset import (
    BOT,
    TOP,
    Arborescence,
    CoveringEdge,
    antichain,
    arborescence,
    augment,
    chain,
    contract_covering,
    covering_relations,
    disjoint_union,
    hasse_components,
    maximal_elements,
    minimal_elements,
    opposite,
    poset_from_covers,
    product,
    validate_arborescence,
)

from support import V_poset, brute_augmented_covers, grid, posets


def edges(es):
    return {tuple(e) for e in es}


class TestConstruction:
    def test_two_chain(self):
        P = poset_from_covers(["a", "b"], [("a", "b")])
        assert P.lt == {("a", "b")}
        assert edges(P.covers) == {("a", "b")}

    def test_implied_cover_absorbed(self):
        P = poset_from_covers(["a", "b", "c"], [("a", "b"), ("b", "c"), ("a", "c")])
        assert edges(P.covers) == {("a", "b"), ("b", "c")}
        assert ("a", "c") in P.lt

    @pytest.mark.parametrize(
        "covers", [[("a", "b"), ("b", "a")], [("a", "a")], [("a", "b"), ("b", "c"), ("c", "a")]]
    )
    def test_cycles_rejected(self, covers):
        with pytest.raises(CycleDetected):
            poset_from_covers(["a", "b", "c"], covers)

    def test_unknown_and_duplicate(self):
        with pytest.raises(UnknownElement):
            poset_from_covers(["a"], [("a", "z")])
        with pytest.raises(DuplicateElement):
            poset_from_covers(["a", "a"], [])
        with pytest.raises(DuplicateElement):
            poset_from_covers([BOT], [])

    def test_empty_rejected(self):
        with pytest.raises(EmptyPoset):
            poset_from_covers([], [])
        with pytest.raises(EmptyPoset):
            chain(0)
        with pytest.raises(EmptyPoset):
            antichain(0)

    def test_direct_construction_validates(self):
        from hibi.poset import Poset

        with pytest.raises(CycleDetected):
            Poset(("a", "b", "c"), frozenset({("a", "b"), ("b", "c")}))


class TestCoverings:
    def test_chain2_augmented(self):
        assert edges(augment(chain(2)).covers) == {(BOT, "p1"), ("p1", "p2"), ("p2", TOP)}

    def test_antichain2_augmented(self):
        P = poset_from_covers(["a", "b"], [])
        assert edges(covering_relations(augment(P))) == {(BOT, "a"), (BOT, "b"), ("a", TOP), ("b", TOP)}

    def test_chain1_augmented(self):
        assert len(augment(chain(1)).covers) == 2

    def test_antichain3(self):
        Phat = augment(antichain(3))
        assert len(Phat.elements) == 5 and len(Phat.covers) == 6

    def test_V(self):
        assert edges(augment(V_poset()).covers) == {
            (BOT, "a"), ("a", "b"), ("a", "c"), ("b", TOP), ("c", TOP)
        }

    def test_canonical_order(self):
        es = augment(grid()).covers
        assert [str(e) for e in es] == ["_bot<a", "a<b", "a<c", "b<d", "c<d", "d<_top"]

    @given(posets())
    def test_matches_definition(self, P):
        assert edges(augment(P).covers) == brute_augmented_covers(P)

    @given(posets())
    def test_reduction_idempotent(self, P):
        assert poset_from_covers(P.elements, P.covers) == P

    @given(posets())
    def test_augmented_count(self, P):
        assert len(augment(P).covers) == len(P.covers) + len(minimal_elements(P)) + len(maximal_elements(P))

    def test_check_edge(self):
        Phat = augment(chain(2))
        assert Phat.check_edge("p1<p2") == CoveringEdge("p1", "p2")
        with pytest.raises(NotACovering):
            Phat.check_edge((BOT, "p2"))


class TestOpposite:
    def test_chain(self):
        assert opposite(poset_from_covers(["a", "b"], [("a", "b")])).lt == {("b", "a")}

    def test_antichain_self_dual(self):
        A = antichain(2)
        assert opposite(A) == A

    def test_V_to_lambda(self):
        assert edges(opposite(V_poset()).covers) == {("b", "a"), ("c", "a")}

    @given(posets())
    def test_involution(self, P):
        assert opposite(opposite(P)) == P
        assert edges(opposite(P).covers) == {(b, a) for a, b in P.covers}


class TestStructure:
    def test_components(self):
        assert len(hasse_components(chain(4))) == 1
        assert len(hasse_components(antichain(3))) == 3
        assert len(hasse_components(disjoint_union(chain(2), chain(3)))) == 2
        assert hasse_components(disjoint_union(V_poset(), chain(1))) == (("a", "b", "c"), ("p1",))

    def test_extremes(self):
        assert maximal_elements(chain(3)) == ("p3",) and minimal_elements(chain(3)) == ("p1",)
        assert maximal_elements(V_poset()) == ("b", "c") and minimal_elements(V_poset()) == ("a",)
        A = antichain(2)
        assert maximal_elements(A) == minimal_elements(A) == ("p1", "p2")


class TestArborescence:
    def test_chain(self):
        assert arborescence(chain(3)).parent == {"p1": BOT, "p2": "p1", "p3": "p2"}

    def test_antichain(self):
        assert arborescence(antichain(2)).parent == {"p1": BOT, "p2": BOT}

    def test_grid_tie_break(self):
        assert arborescence(grid()).parent["d"] == "b"

    @given(posets())
    def test_spanning(self, P):
        T = arborescence(P)
        validate_arborescence(P, T)
        assert len(T.edges(P)) == len(P)
        for p in P.elements:
            seen = 0
            while p != BOT:
                p = T.parent[p]
                seen += 1
                assert seen <= len(P)

    def test_invalid(self):
        P = grid()
        with pytest.raises(InvalidTree):
            validate_arborescence(P, Arborescence({"a": BOT, "b": "a", "c": "a"}))
        with pytest.raises(InvalidTree):
            validate_arborescence(P, Arborescence({"a": BOT, "b": "a", "c": "a", "d": "a"}))
        with pytest.raises(InvalidTree):
            validate_arborescence(P, Arborescence({"a": BOT, "b": BOT, "c": "a", "d": "c"}))


class TestContraction:
    def test_chain_inner(self):
        Q = contract_covering(chain(2), ("p1", "p2"))
        assert len(Q) == 1 and not Q.lt

    def test_chain_bottom(self):
        Q = contract_covering(chain(2), (BOT, "p1"))
        assert Q.elements == ("p2",)

    def test_V(self):
        Q = contract_covering(V_poset(), ("a", "b"))
        assert Q.elements == ("a+b", "c")
        assert Q.lt == {("a+b", "c")}

    def test_chain1_to_empty(self):
        assert len(contract_covering(chain(1), ("p1", TOP))) == 0

    def test_not_a_covering(self):
        with pytest.raises(NotACovering):
            contract_covering(chain(3), ("p1", "p3"))

    @given(posets())
    def test_size(self, P):
        for e in augment(P).covers:
            assert len(contract_covering(P, e)) == len(P) - 1


class TestConstructors:
    def test_chain(self):
        C = chain(3)
        assert C.elements == ("p1", "p2", "p3")
        assert edges(C.covers) == {("p1", "p2"), ("p2", "p3")}

    def test_grid(self):
        G = product(chain(2), chain(2))
        assert len(G) == 4 and len(G.covers) == 4
        # componentwise order, enumerated by hand
        assert G.lt == {
            ("p1.p1", "p1.p2"), ("p1.p1", "p2.p1"), ("p1.p1", "p2.p2"),
            ("p1.p2", "p2.p2"), ("p2.p1", "p2.p2"),
        }

    def test_union_of_points(self):
        U = disjoint_union(chain(1), chain(1))
        assert len(U) == 2 and not U.lt

    def test_union_keeps_disjoint_names(self):
        U = disjoint_union(chain(1, prefix="x"), chain(1, prefix="y"))
        assert U.elements == ("x1", "y1")
