"""The full invariant and oracle suite for a single poset (``hibi verify``)."""

from __future__ import annotations

from itertools import combinations, product as cartesian
from typing import Callable

from .divisors import (
    TorusDivisor,
    cartier_certificate_by_recipe,
    class_generators,
    class_group_rank,
    divisor_from_weights,
    is_cartier,
    phi,
    picard_generators,
    reduce_to_class,
    verify_certificate,
)
from .errors import OracleMismatch
from .ideals import DEFAULT_CAP, char_vector, enumerate_ideals, filters
from .polytope import contains, incident_facets, integral_points, order_polytope
from .poset import (
    Poset,
    arborescence,
    augment,
    contract_covering,
    hasse_components,
    maximal_elements,
    minimal_elements,
    opposite,
    poset_from_covers,
    validate_arborescence,
)
from .ring import hibi_relations, verify_relation_exponents
from .zlinalg import cl_oracle, matrix_rank, phi_matrix, pic_oracle, psi_matrix

# integral_points filters 2^n candidates; skip it beyond this size
MAX_CUBE_DIM = 16


def _poset_checks(P: Poset) -> dict[str, bool]:
    Phat = augment(P)
    T = arborescence(P)
    try:
        validate_arborescence(P, T)
        tree_ok = len(T.edges(P)) == len(P)
    except Exception:
        tree_ok = False
    op = opposite(P)
    return {
        "reduction_idempotent": poset_from_covers(P.elements, P.covers) == P,
        "opposite_involution": opposite(op) == P,
        "opposite_reverses_covers": {(b, a) for a, b in P.covers} == {tuple(e) for e in op.covers},
        "augmented_cover_count": len(Phat.covers)
        == len(P.covers) + len(minimal_elements(P)) + len(maximal_elements(P)),
        "arborescence_spans": tree_ok,
        "contraction_sizes": all(len(contract_covering(P, e)) == len(P) - 1 for e in Phat.covers),
    }


def _lattice_checks(P: Poset, cap: int) -> dict[str, bool]:
    L = enumerate_ideals(P, cap)
    idx = L.index
    ideals = L.ideals
    exp_ok = closed = True
    for I, J in combinations(ideals, 2):
        if I | J not in idx or I & J not in idx:
            closed = False
        lhs = [a + b for a, b in zip(char_vector(P, I), char_vector(P, J))]
        rhs = [a + b for a, b in zip(char_vector(P, I | J), char_vector(P, I & J))]
        exp_ok &= lhs == rhs
    return {
        "lattice_has_bounds": frozenset() in idx and frozenset(P.elements) in idx,
        "lattice_closed": closed,
        "exponent_identity": exp_ok,
        "filters_are_opposite_ideals": set(filters(P, cap)) == set(enumerate_ideals(opposite(P), cap)),
    }


def _polytope_checks(P: Poset, cap: int) -> dict[str, bool]:
    poly = order_polytope(P, cap)
    L = enumerate_ideals(P, cap)
    incidence = True
    for I, v in zip(L.ideals, poly.vertices):
        tight = {f.edge for f in poly.facets if f.value(v) == 0}
        incidence &= tight == set(incident_facets(P, I))
    proper = all(
        any(f.value(v) == 0 for v in poly.vertices) and any(f.value(v) > 0 for v in poly.vertices)
        for f in poly.facets
    )
    contraction = all(
        sum(f.value(v) == 0 for v in poly.vertices)
        == len(enumerate_ideals(contract_covering(P, f.edge), cap))
        for f in poly.facets
    )
    out = {
        "vertices_feasible": all(contains(poly, v) for v in poly.vertices),
        "vertex_facet_incidence": incidence,
        "facets_proper": proper,
        "facet_contraction": contraction,
    }
    if len(P) <= MAX_CUBE_DIM:
        out["integral_points_are_vertices"] = integral_points(poly, cap=2**len(P)) == poly.vertices
    return out


def _ring_checks(P: Poset, cap: int) -> dict[str, bool]:
    rels = hibi_relations(P, cap)
    ideals = enumerate_ideals(P, cap).ideals
    comparable = sum(1 for I, J in combinations(ideals, 2) if I <= J or J <= I)
    n_pairs = len(ideals) * (len(ideals) - 1) // 2
    is_chain = len(P.lt) == len(P) * (len(P) - 1) // 2
    return {
        "relations_vanish": all(verify_relation_exponents(P, r) for r in rels),
        "relation_count": len(rels) == n_pairs - comparable,
        "relations_vanish_iff_chain": (len(rels) == 0) == is_chain,
    }


def _divisor_checks(P: Poset, cap: int) -> dict[str, bool]:
    T = arborescence(P)
    n = len(P)
    r = class_group_rank(P)
    edges = augment(P).covers
    basis = [[int(i == j) for j in range(n)] for i in range(n)]
    psi_phi = all(reduce_to_class(P, T, phi(P, m)).is_zero() for m in basis)
    gens = class_generators(P, T)
    units = all(
        reduce_to_class(P, T, TorusDivisor({e: 1})).coords == {g: int(g == e) for g in gens}
        for e in gens
    )
    comps = hasse_components(P)
    recipe_ok = cartier_ok = True
    for w in cartesian((-1, 0, 1), repeat=len(comps)) if len(comps) <= 4 else [(1,) * len(comps)]:
        D = divisor_from_weights(P, w)
        for I in enumerate_ideals(P, cap):
            recipe_ok &= verify_certificate(P, D, I, cartier_certificate_by_recipe(P, w, I))
    for D in picard_generators(P):
        cartier_ok &= is_cartier(P, D, cap)[0]
    return {
        "psi_kills_phi": psi_phi,
        "phi_rank": matrix_rank(phi_matrix(P)) == n,
        "psi_rank": matrix_rank(psi_matrix(P, T)) == r,
        "psi_surjective": units,
        "generator_count": len(gens) == r == len(edges) - n,
        "recipe_certificates": recipe_ok,
        "component_divisors_cartier": cartier_ok,
    }


def verify_poset(P: Poset, box: int = 2, cap: int = DEFAULT_CAP) -> dict:
    """Run everything; returns ``{"checks": {...}, "cl": {...}, "pic": {...}}``.

    Oracle disagreements surface as ``False`` entries, never as exceptions,
    so the caller sees the whole picture.
    """
    checks: dict[str, bool] = {}
    groups: list[Callable[[], dict[str, bool]]] = [
        lambda: _poset_checks(P),
        lambda: _lattice_checks(P, cap),
        lambda: _polytope_checks(P, cap),
        lambda: _ring_checks(P, cap),
        lambda: _divisor_checks(P, cap),
    ]
    for g in groups:
        checks.update(g())

    formula = class_group_rank(P)
    try:
        free, torsion = cl_oracle(P)
        checks["cl_oracle"] = True
    except OracleMismatch:
        free, torsion = None, None
        checks["cl_oracle"] = False
    cl = {"formula": formula, "snf": free, "torsion": torsion}

    try:
        rep = pic_oracle(P, box=box, cap=cap)
        pic = {"formula": rep.formula, "box": box, "verified": True}
    except OracleMismatch as exc:
        pic = {"formula": len(hasse_components(P)), "box": box, "verified": False, "detail": str(exc)}
    checks["pic_oracle"] = pic["verified"]
    return {"checks": checks, "cl": cl, "pic": pic}
