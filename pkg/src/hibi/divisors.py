"""Torus-invariant divisors on the Hibi variety X_P.

The prime torus-invariant divisors D_{p<q} are indexed by the coverings of
P̂.  This module implements

* the character map ``phi: Z^P -> Div_T`` and the class group rank,
* the reduction ``psi`` of a divisor to coordinates on the non-tree
  coverings of an arborescence (a basis of Cl),
* the local Cartier test at every vertex a_I of the polytope, together with
  explicit certificates, and
* the Picard rank and the generators D_C, one per Hasse component.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Mapping, Optional, Sequence, Union

from .errors import DimensionMismatch, EmptyPoset, InternalError, NotAnIdeal
from .ideals import DEFAULT_CAP, enumerate_ideals, is_ideal
from .polytope import facet_normal, incident_facets
from .poset import (
    BOT,
    TOP,
    Arborescence,
    CoveringEdge,
    Poset,
    arborescence,
    augment,
    hasse_components,
    maximal_elements,
    validate_arborescence,
)

EdgeLike = Union[CoveringEdge, tuple, str]


def _edge(e: EdgeLike) -> CoveringEdge:
    if isinstance(e, str):
        return CoveringEdge.parse(e)
    return CoveringEdge(*e)


class TorusDivisor:
    """Integer combination of the prime divisors D_{p<q}.

    Zero coefficients are dropped, so two divisors are equal exactly when
    their coefficient maps agree.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Optional[Mapping[EdgeLike, int]] = None):
        out: dict[CoveringEdge, int] = {}
        for e, a in (coeffs or {}).items():
            if isinstance(a, bool) or not isinstance(a, int):
                raise TypeError(f"coefficient of {e} must be an int, got {a!r}")
            e = _edge(e)
            a = out.get(e, 0) + a
            if a:
                out[e] = a
            else:
                out.pop(e, None)
        self.coeffs = out

    def __getitem__(self, e: EdgeLike) -> int:
        return self.coeffs.get(_edge(e), 0)

    def __add__(self, other: "TorusDivisor") -> "TorusDivisor":
        acc = dict(self.coeffs)
        for e, a in other.coeffs.items():
            acc[e] = acc.get(e, 0) + a
        return TorusDivisor(acc)

    def __neg__(self) -> "TorusDivisor":
        return TorusDivisor({e: -a for e, a in self.coeffs.items()})

    def __sub__(self, other: "TorusDivisor") -> "TorusDivisor":
        return self + -other

    def __mul__(self, k: int) -> "TorusDivisor":
        return TorusDivisor({e: k * a for e, a in self.coeffs.items()})

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        return isinstance(other, TorusDivisor) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(frozenset(self.coeffs.items()))

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __repr__(self) -> str:
        terms = " + ".join(f"{a}*D[{e}]" for e, a in self.coeffs.items())
        return f"TorusDivisor({terms or '0'})"

    def check(self, P: Poset) -> "TorusDivisor":
        Phat = augment(P)
        for e in self.coeffs:
            Phat.check_edge(e)
        return self

    def vector(self, P: Poset) -> list[int]:
        """Coefficients in the canonical order of C(P̂)."""
        self.check(P)
        return [self.coeffs.get(e, 0) for e in augment(P).covers]

    def to_json(self, P: Poset) -> dict:
        order = augment(P).edge_index
        items = sorted(self.check(P).coeffs.items(), key=lambda kv: order[kv[0]])
        return {"coeffs": {str(e): a for e, a in items}}


@dataclass(frozen=True)
class DivisorClass:
    """Coordinates of a class in Cl(X_P) w.r.t. the basis given by ``tree``.

    ``coords`` lists every non-tree covering, zeros included.  Coordinates are
    only comparable between classes that share the same tree.
    """

    tree: Arborescence
    coords: Mapping[CoveringEdge, int]

    def vector(self) -> list[int]:
        return list(self.coords.values())

    def is_zero(self) -> bool:
        return not any(self.coords.values())

    def to_json(self, P: Poset) -> dict:
        return {
            "tree": self.tree.to_json(P),
            "coords": {str(e): a for e, a in self.coords.items()},
        }


@dataclass(frozen=True)
class CartierCertificate:
    """For every ideal I, an m in Z^P matching the divisor on C_I(P̂)."""

    per_ideal: Mapping[frozenset, tuple[int, ...]]

    def to_json(self, P: Poset) -> list:
        return [
            {"ideal": list(P.sort(I)), "m": list(m)} for I, m in self.per_ideal.items()
        ]


def _require_nonempty(P: Poset) -> None:
    if not len(P):
        raise EmptyPoset("the empty poset is not supported")


# --- the class group --------------------------------------------------------


def phi(P: Poset, m: Sequence[int]) -> TorusDivisor:
    """The principal divisor of the character m: sum of <m, u_e> D_e."""
    if len(m) != len(P):
        raise DimensionMismatch(f"expected {len(P)} coordinates, got {len(m)}")
    coeffs = {}
    for e in augment(P).covers:
        coeffs[e] = sum(a * b for a, b in zip(m, facet_normal(P, e)))
    return TorusDivisor(coeffs)


def class_group_rank(P: Poset) -> int:
    _require_nonempty(P)
    return len(augment(P).covers) - len(P)


def class_generators(P: Poset, T: Optional[Arborescence] = None) -> tuple[CoveringEdge, ...]:
    """The coverings outside T; their classes freely generate Cl(X_P)."""
    T = arborescence(P) if T is None else T
    validate_arborescence(P, T)
    tree = T.edge_set()
    return tuple(e for e in augment(P).covers if e not in tree)


def _tree_order(P: Poset, T: Arborescence) -> list[str]:
    """Elements ordered so that every parent precedes its children."""
    children: dict[str, list[str]] = {BOT: []}
    for p in P.elements:
        children.setdefault(p, [])
    for p in P.elements:
        children[T.parent[p]].append(p)
    order, queue = [], deque(children[BOT])
    while queue:
        p = queue.popleft()
        order.append(p)
        queue.extend(children[p])
    return order


def reduce_to_class(P: Poset, T: Optional[Arborescence], D: TorusDivisor) -> DivisorClass:
    """psi: move D within its class until it vanishes on the tree edges.

    The character m is built from the root outwards with
    ``m_p = alpha(r_p < p) + m_{r_p}`` (and ``m_BOT = 0``); then D + phi(m)
    is supported off the tree and its coefficients are the class
    coordinates.
    """
    T = arborescence(P) if T is None else T
    gens = class_generators(P, T)
    D.check(P)
    m = {BOT: 0}
    for p in _tree_order(P, T):
        r = T.parent[p]
        m[p] = D[(r, p)] + m[r]
    vec = [m[p] for p in P.elements]
    reduced = D + phi(P, vec)
    for e in T.edges(P):
        if reduced[e]:
            raise InternalError(f"reduced divisor does not vanish on tree edge {e}")
    return DivisorClass(T, {e: reduced[e] for e in gens})


# --- Cartier criterion ------------------------------------------------------


@dataclass(frozen=True)
class _LocalPlan:
    """Propagation schedule for the equations <m, u_e> = alpha_e, e in C_I(P̂).

    Node ``n`` is a ground node pinned to 0 standing in for both BOT and TOP,
    so every equation reads ``m[lower] - m[upper] = alpha``.  ``steps`` walk a
    spanning forest (ground component first, other components rooted at 0);
    ``checks`` are the remaining equations that must hold for consistency.
    """

    ideal: frozenset
    steps: tuple[tuple[int, int, int, int], ...]
    checks: tuple[tuple[int, int, int], ...]


def _plan_for(P: Poset, I: frozenset) -> _LocalPlan:
    n = len(P)
    edges = augment(P).edge_index

    def node(x):
        return n if x in (BOT, TOP) else P.index[x]

    adj: dict[int, list[tuple[int, int, int]]] = {v: [] for v in range(n + 1)}
    eqs = []
    for e in incident_facets(P, I):
        a, b, k = node(e.lower), node(e.upper), edges[e]
        eqs.append((a, b, k))
        # m[b] = m[a] - alpha, m[a] = m[b] + alpha
        adj[a].append((b, k, -1))
        adj[b].append((a, k, +1))
    seen = set()
    used = set()
    steps = []
    for root in (n, *range(n)):
        if root in seen:
            continue
        seen.add(root)
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for w, k, sign in adj[v]:
                if w not in seen:
                    seen.add(w)
                    used.add(k)
                    steps.append((w, v, k, sign))
                    queue.append(w)
    checks = tuple(eq for eq in eqs if eq[2] not in used)
    return _LocalPlan(I, tuple(steps), checks)


@lru_cache(maxsize=256)
def _plans(P: Poset, cap: int) -> tuple[_LocalPlan, ...]:
    return tuple(_plan_for(P, I) for I in enumerate_ideals(P, cap))


def _solve_local(plan: _LocalPlan, alpha: Sequence[int], n: int) -> Optional[list[int]]:
    m = [0] * (n + 1)
    for w, v, k, sign in plan.steps:
        m[w] = m[v] + sign * alpha[k]
    for a, b, k in plan.checks:
        if m[a] - m[b] != alpha[k]:
            return None
    return m[:n]


def local_certificate(P: Poset, D: TorusDivisor, I: Iterable[str]) -> Optional[tuple[int, ...]]:
    """Some m in Z^P with <m, u_e> = D[e] for all e in C_I(P̂), or None."""
    I = frozenset(I)
    if not is_ideal(P, I):
        raise NotAnIdeal(f"{sorted(I)} is not an order ideal")
    m = _solve_local(_plan_for(P, I), D.vector(P), len(P))
    return None if m is None else tuple(m)


def local_system(P: Poset, D: TorusDivisor, I: Iterable[str]) -> tuple[list[list[int]], list[int]]:
    """The same equations as an integer system A m = b (rows = C_I(P̂))."""
    edges = incident_facets(P, I)
    D.check(P)
    return [list(facet_normal(P, e)) for e in edges], [D[e] for e in edges]


def is_cartier(
    P: Poset, D: TorusDivisor, cap: int = DEFAULT_CAP
) -> tuple[bool, Optional[CartierCertificate]]:
    """Decide whether D is locally principal; certificate included when it is."""
    alpha = D.vector(P)
    n = len(P)
    per_ideal = {}
    for plan in _plans(P, cap):
        m = _solve_local(plan, alpha, n)
        if m is None:
            return False, None
        per_ideal[plan.ideal] = tuple(m)
    return True, CartierCertificate(per_ideal)


def cartier_obstruction(P: Poset, D: TorusDivisor, cap: int = DEFAULT_CAP) -> Optional[frozenset]:
    """The first ideal (canonical order) whose local system is unsolvable."""
    alpha = D.vector(P)
    for plan in _plans(P, cap):
        if _solve_local(plan, alpha, len(P)) is None:
            return plan.ideal
    return None


def is_cartier_fast(P: Poset, alpha: Sequence[int], cap: int = DEFAULT_CAP) -> bool:
    """Verdict only, for a coefficient vector already in canonical edge order."""
    n = len(P)
    return all(_solve_local(plan, alpha, n) is not None for plan in _plans(P, cap))


def verify_certificate(P: Poset, D: TorusDivisor, I: Iterable[str], m: Sequence[int]) -> bool:
    """Substitute m into every equation of C_I(P̂)."""
    if len(m) != len(P):
        raise DimensionMismatch(f"expected {len(P)} coordinates, got {len(m)}")
    return all(
        sum(a * b for a, b in zip(m, facet_normal(P, e))) == D[e]
        for e in incident_facets(P, I)
    )


# --- the Picard group -------------------------------------------------------


def picard_rank(P: Poset) -> int:
    _require_nonempty(P)
    return len(hasse_components(P))


def component_divisor(P: Poset, component: Iterable[str]) -> TorusDivisor:
    """D_C: the sum of D_{p<TOP} over the maximal elements p of C."""
    comp = set(component)
    return TorusDivisor({(p, TOP): 1 for p in maximal_elements(P) if p in comp})


def picard_generators(P: Poset) -> tuple[TorusDivisor, ...]:
    _require_nonempty(P)
    return tuple(component_divisor(P, C) for C in hasse_components(P))


def _weights(P: Poset, component_weights) -> dict[str, int]:
    """Per-element weight from weights keyed by component, index, or listed in order."""
    comps = hasse_components(P)
    if isinstance(component_weights, Mapping):
        w = {}
        for key, a in component_weights.items():
            C = comps[key] if isinstance(key, int) else tuple(P.sort(key))
            if C not in comps:
                raise ValueError(f"{key!r} is not a Hasse component")
            w[C] = a
    else:
        component_weights = list(component_weights)
        if len(component_weights) != len(comps):
            raise DimensionMismatch(f"expected {len(comps)} component weights")
        w = dict(zip(comps, component_weights))
    return {p: w.get(C, 0) for C in comps for p in C}


def divisor_from_weights(P: Poset, component_weights) -> TorusDivisor:
    """sum over components C of alpha_C * D_C."""
    per = _weights(P, component_weights)
    return TorusDivisor({(p, TOP): per[p] for p in maximal_elements(P)})


def cartier_certificate_by_recipe(P: Poset, component_weights, I: Iterable[str]) -> tuple[int, ...]:
    """Closed-form local data for sum alpha_C D_C at the vertex a_I.

    m_p = 0 on I and m_p = alpha_C off I, C being the component of p.
    """
    I = frozenset(I)
    if not is_ideal(P, I):
        raise NotAnIdeal(f"{sorted(I)} is not an order ideal")
    per = _weights(P, component_weights)
    return tuple(0 if p in I else per[p] for p in P.elements)
