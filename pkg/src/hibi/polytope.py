"""The order polytope O(P^op), the polytope of the Hibi variety of P.

Coordinates are indexed by the elements of P.  The vertices are the
indicator vectors a_I of the order ideals I of P, and there is one facet per
covering relation p<q of P̂, written as ``<u, x> >= -offset``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product as cartesian
from typing import Iterable, Sequence

from .errors import CapExceeded, DimensionMismatch, NotAnIdeal
from .ideals import DEFAULT_CAP, char_vector, enumerate_ideals, is_ideal
from .poset import BOT, TOP, CoveringEdge, Poset, augment


@dataclass(frozen=True)
class Facet:
    edge: CoveringEdge
    normal: tuple[int, ...]
    offset: int

    def value(self, x: Sequence) -> object:
        return sum(u * xi for u, xi in zip(self.normal, x)) + self.offset

    def to_json(self) -> dict:
        return {
            "edge": [self.edge.lower, self.edge.upper],
            "normal": list(self.normal),
            "offset": self.offset,
        }


@dataclass(frozen=True)
class OrderPolytope:
    poset: Poset
    vertices: tuple[tuple[int, ...], ...]
    facets: tuple[Facet, ...]

    @property
    def dimension(self) -> int:
        # full-dimensional: the n+1 vertices of a maximal chain of ideals are affinely independent
        return len(self.poset)

    def to_json(self) -> dict:
        return {
            "vertices": [list(v) for v in self.vertices],
            "facets": [f.to_json() for f in self.facets],
        }


def facet_normal(P: Poset, edge: CoveringEdge) -> tuple[int, ...]:
    """u_{p<q}: e_p if q is TOP, -e_q if p is BOT, e_p - e_q otherwise."""
    u = [0] * len(P)
    p, q = edge
    if p != BOT:
        u[P.index[p]] += 1
    if q != TOP:
        u[P.index[q]] -= 1
    return tuple(u)


def facet(P: Poset, edge: CoveringEdge) -> Facet:
    return Facet(edge, facet_normal(P, edge), 1 if edge.lower == BOT else 0)


def order_polytope(P: Poset, cap: int = DEFAULT_CAP) -> OrderPolytope:
    lattice = enumerate_ideals(P, cap)
    vertices = tuple(char_vector(P, I) for I in lattice)
    facets = tuple(facet(P, e) for e in augment(P).covers)
    return OrderPolytope(P, vertices, facets)


def contains(poly: OrderPolytope, x: Sequence) -> bool:
    """Exact membership test against every facet inequality."""
    if len(x) != len(poly.poset):
        raise DimensionMismatch(f"expected {len(poly.poset)} coordinates, got {len(x)}")
    x = [Fraction(v) for v in x]
    return all(f.value(x) >= 0 for f in poly.facets)


def incident_facets(P: Poset, I: Iterable[str]) -> tuple[CoveringEdge, ...]:
    """C_I(P̂): coverings p<q with |{p, q} ∩ (I ∪ {BOT})| != 1."""
    I = frozenset(I)
    if not is_ideal(P, I):
        raise NotAnIdeal(f"{sorted(I)} is not an order ideal")
    low = I | {BOT}
    return tuple(e for e in augment(P).covers if (e.lower in low) + (e.upper in low) != 1)


def integral_points(poly: OrderPolytope, cap: int = DEFAULT_CAP) -> tuple[tuple[int, ...], ...]:
    """All lattice points, found by filtering the 0/1 cube.

    O(P^op) lies inside [0, 1]^P, so no other candidates exist.
    """
    n = len(poly.poset)
    if 2**n > cap:
        raise CapExceeded(f"2^{n} candidate points exceed cap {cap}")
    pts = [v for v in cartesian((0, 1), repeat=n) if all(f.value(v) >= 0 for f in poly.facets)]
    pts.sort(key=lambda v: (sum(v), tuple(i for i, c in enumerate(v) if c)))
    return tuple(pts)
