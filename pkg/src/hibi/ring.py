"""Presentation of the Hibi ring: generator monomials and Hibi relations.

The ring is generated by the monomials ``t * prod(x_p for p in I)`` over the
order ideals I; the variable y_I stands for the generator of I.  Polynomial
arithmetic is never performed: a binomial ``y_I y_J - y_{I∧J} y_{I∨J}`` is
checked through its exponent vectors.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .ideals import DEFAULT_CAP, char_vector, enumerate_ideals
from .poset import Poset


@dataclass(frozen=True)
class MonomialGenerator:
    ideal: frozenset[str]
    exponent: tuple[int, ...]


@dataclass(frozen=True)
class HibiRelation:
    """``y_I y_J - y_meet y_join`` for an incomparable pair of ideals."""

    pair: tuple[frozenset[str], frozenset[str]]
    meet: frozenset[str]
    join: frozenset[str]


def exponent(P: Poset, I) -> tuple[int, ...]:
    return (1, *char_vector(P, I))


def ring_generators(P: Poset, cap: int = DEFAULT_CAP) -> tuple[MonomialGenerator, ...]:
    return tuple(MonomialGenerator(I, exponent(P, I)) for I in enumerate_ideals(P, cap))


def hibi_relations(P: Poset, cap: int = DEFAULT_CAP) -> tuple[HibiRelation, ...]:
    """One relation per unordered incomparable pair, in lattice-index order.

    Comparable pairs give the zero binomial and are left out.
    """
    lattice = enumerate_ideals(P, cap)
    out = []
    for I, J in combinations(lattice.ideals, 2):
        if I <= J or J <= I:
            continue
        out.append(HibiRelation((I, J), I & J, I | J))
    return tuple(out)


def verify_relation_exponents(P: Poset, rel: HibiRelation) -> bool:
    """Does the binomial vanish on the monomial parametrisation?"""
    I, J = rel.pair
    lhs = [a + b for a, b in zip(exponent(P, I), exponent(P, J))]
    rhs = [a + b for a, b in zip(exponent(P, rel.meet), exponent(P, rel.join))]
    return lhs == rhs


def presentation_json(P: Poset, cap: int = DEFAULT_CAP) -> dict:
    lattice = enumerate_ideals(P, cap)
    idx = lattice.index
    return {
        "generators": [list(g.exponent) for g in ring_generators(P, cap)],
        "relations": [
            [idx[r.pair[0]], idx[r.pair[1]], idx[r.meet], idx[r.join]]
            for r in hibi_relations(P, cap)
        ],
    }
