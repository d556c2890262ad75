"""Finite posets, covering relations and the augmented poset with 0̂ and 1̂.

Elements are plain strings.  The order in which they are given is the
canonical order; every set-valued result is emitted sorted by it.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from graphlib import CycleError, TopologicalSorter
from typing import Iterable, Mapping, NamedTuple, Sequence, Union

from .errors import (
    CycleDetected,
    DuplicateElement,
    EmptyPoset,
    InvalidTree,
    NotACovering,
    ParseError,
    UnknownElement,
)

BOT = "_bot"
TOP = "_top"
RESERVED = frozenset({BOT, TOP})


class CoveringEdge(NamedTuple):
    lower: str
    upper: str

    def __str__(self) -> str:
        return f"{self.lower}<{self.upper}"

    @classmethod
    def parse(cls, key: str) -> "CoveringEdge":
        lower, sep, upper = key.partition("<")
        if not sep or not lower or not upper or "<" in upper:
            raise ParseError(f"malformed edge key {key!r}, expected 'lower<upper'")
        return cls(lower, upper)


def _closure(elements: Sequence[str], pairs: Iterable[tuple[str, str]]) -> frozenset:
    """Transitive closure of ``pairs``; raises CycleDetected on a cycle."""
    preds: dict[str, set[str]] = {e: set() for e in elements}
    for a, b in pairs:
        if a == b:
            raise CycleDetected(f"self-relation {a}<{a}")
        preds[b].add(a)
    try:
        order = list(TopologicalSorter(preds).static_order())
    except CycleError as exc:
        cycle = " < ".join(reversed(exc.args[1]))
        raise CycleDetected(f"relation contains a cycle: {cycle}") from None
    below: dict[str, set[str]] = {}
    for v in order:
        acc: set[str] = set()
        for u in preds[v]:
            acc.add(u)
            acc |= below[u]
        below[v] = acc
    return frozenset((a, b) for b, lows in below.items() for a in lows)


def _check_names(elements: Sequence[str]) -> None:
    seen = set()
    for e in elements:
        if not isinstance(e, str) or not e:
            raise UnknownElement(f"element names must be non-empty strings, got {e!r}")
        if e in RESERVED:
            raise DuplicateElement(f"{e!r} is reserved for the attached bottom/top")
        if e in seen:
            raise DuplicateElement(f"duplicate element {e!r}")
        seen.add(e)


@dataclass(frozen=True)
class Poset:
    """A finite strict partial order.

    ``lt`` holds every pair ``(a, b)`` with ``a < b`` and is kept
    transitively closed.  Use :func:`poset_from_covers` to build one from a
    generating relation.
    """

    elements: tuple[str, ...]
    lt: frozenset[tuple[str, str]]

    def __post_init__(self) -> None:
        object.__setattr__(self, "elements", tuple(self.elements))
        object.__setattr__(self, "lt", frozenset(self.lt))
        _check_names(self.elements)
        known = set(self.elements)
        for a, b in self.lt:
            if a not in known or b not in known:
                raise UnknownElement(f"relation {a}<{b} references an unknown element")
            if a == b or (b, a) in self.lt:
                raise CycleDetected(f"relation is not antisymmetric at {a}, {b}")
        for b, highs in self.above.items():
            for a in self.below[b]:
                if not highs <= self.above[a]:
                    raise CycleDetected("relation is not transitively closed")

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, name: object) -> bool:
        return name in self.index

    @cached_property
    def index(self) -> dict[str, int]:
        return {e: i for i, e in enumerate(self.elements)}

    @cached_property
    def below(self) -> dict[str, frozenset[str]]:
        """Strict down-sets."""
        acc: dict[str, set[str]] = {e: set() for e in self.elements}
        for a, b in self.lt:
            acc[b].add(a)
        return {e: frozenset(s) for e, s in acc.items()}

    @cached_property
    def above(self) -> dict[str, frozenset[str]]:
        """Strict up-sets."""
        acc: dict[str, set[str]] = {e: set() for e in self.elements}
        for a, b in self.lt:
            acc[a].add(b)
        return {e: frozenset(s) for e, s in acc.items()}

    def less(self, a: str, b: str) -> bool:
        return (a, b) in self.lt

    def leq(self, a: str, b: str) -> bool:
        return a == b or (a, b) in self.lt

    def sort(self, names: Iterable[str]) -> tuple[str, ...]:
        idx = self.index
        try:
            return tuple(sorted(names, key=idx.__getitem__))
        except KeyError as exc:
            raise UnknownElement(f"unknown element {exc.args[0]!r}") from None

    @cached_property
    def covers(self) -> tuple[CoveringEdge, ...]:
        """Covering relations of the poset itself (no 0̂/1̂), canonical order."""
        out = []
        for a, b in self.lt:
            if not (self.above[a] & self.below[b]):
                out.append(CoveringEdge(a, b))
        idx = self.index
        out.sort(key=lambda e: (idx[e.lower], idx[e.upper]))
        return tuple(out)

    @cached_property
    def lower_covers(self) -> dict[str, tuple[str, ...]]:
        acc: dict[str, list[str]] = {e: [] for e in self.elements}
        for e in self.covers:
            acc[e.upper].append(e.lower)
        return {k: self.sort(v) for k, v in acc.items()}

    @cached_property
    def upper_covers(self) -> dict[str, tuple[str, ...]]:
        acc: dict[str, list[str]] = {e: [] for e in self.elements}
        for e in self.covers:
            acc[e.lower].append(e.upper)
        return {k: self.sort(v) for k, v in acc.items()}

    def to_json(self) -> dict:
        return {
            "elements": list(self.elements),
            "covers": [[e.lower, e.upper] for e in self.covers],
        }


def _build(elements: Sequence[str], pairs: Iterable[tuple[str, str]]) -> Poset:
    elements = tuple(elements)
    _check_names(elements)
    known = set(elements)
    pairs = list(pairs)
    for a, b in pairs:
        for x in (a, b):
            if x not in known:
                raise UnknownElement(f"relation {a}<{b} references unknown element {x!r}")
    return Poset(elements, _closure(elements, pairs))


def poset_from_covers(
    elements: Sequence[str], covers: Iterable[tuple[str, str]]
) -> Poset:
    """Build the poset generated by ``covers``.

    Pairs implied transitively are absorbed; the result's covering set is the
    transitive reduction of the closure.

    >>> P = poset_from_covers(["a", "b", "c"], [("a", "b"), ("b", "c"), ("a", "c")])
    >>> [str(e) for e in P.covers]
    ['a<b', 'b<c']
    """
    if len(elements) == 0:
        raise EmptyPoset("the empty poset is not supported")
    return _build(elements, covers)


@dataclass(frozen=True)
class AugmentedPoset:
    """P̂: the base poset with BOT below and TOP above everything."""

    base: Poset

    @property
    def elements(self) -> tuple[str, ...]:
        return (BOT, *self.base.elements, TOP)

    def position(self, name: str) -> int:
        if name == BOT:
            return -1
        if name == TOP:
            return len(self.base)
        try:
            return self.base.index[name]
        except KeyError:
            raise UnknownElement(f"unknown element {name!r}") from None

    def less(self, a: str, b: str) -> bool:
        if a == b:
            return False
        if a == BOT or b == TOP:
            return a != TOP and b != BOT
        if a == TOP or b == BOT:
            return False
        return self.base.less(a, b)

    @cached_property
    def covers(self) -> tuple[CoveringEdge, ...]:
        P = self.base
        edges = list(P.covers)
        edges += [CoveringEdge(BOT, p) for p in minimal_elements(P)]
        edges += [CoveringEdge(p, TOP) for p in maximal_elements(P)]
        if not P.elements:
            edges.append(CoveringEdge(BOT, TOP))
        edges.sort(key=lambda e: (self.position(e.lower), self.position(e.upper)))
        return tuple(edges)

    @cached_property
    def edge_index(self) -> dict[CoveringEdge, int]:
        return {e: i for i, e in enumerate(self.covers)}

    def check_edge(self, edge: Union[CoveringEdge, tuple[str, str], str]) -> CoveringEdge:
        """Normalise ``edge`` and make sure it is a covering of P̂."""
        if isinstance(edge, str):
            edge = CoveringEdge.parse(edge)
        edge = CoveringEdge(*edge)
        if edge not in self.edge_index:
            raise NotACovering(f"{edge} is not a covering relation of the augmented poset")
        return edge


PosetLike = Union[Poset, AugmentedPoset]


def augment(P: Poset) -> AugmentedPoset:
    return AugmentedPoset(P)


def covering_relations(P: PosetLike) -> tuple[CoveringEdge, ...]:
    return P.covers


def minimal_elements(P: Poset) -> tuple[str, ...]:
    return tuple(p for p in P.elements if not P.below[p])


def maximal_elements(P: Poset) -> tuple[str, ...]:
    return tuple(p for p in P.elements if not P.above[p])


def opposite(P: Poset) -> Poset:
    return Poset(P.elements, frozenset((b, a) for a, b in P.lt))


def hasse_components(P: Poset) -> tuple[tuple[str, ...], ...]:
    """Connected components of the undirected Hasse diagram.

    Components come out sorted internally and ordered by their first element.
    """
    parent = {p: p for p in P.elements}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for e in P.covers:
        ra, rb = find(e.lower), find(e.upper)
        if ra != rb:
            parent[max(ra, rb, key=P.index.__getitem__)] = min(ra, rb, key=P.index.__getitem__)
    groups: dict[str, list[str]] = {}
    for p in P.elements:
        groups.setdefault(find(p), []).append(p)
    return tuple(tuple(g) for g in groups.values())


@dataclass(frozen=True)
class Arborescence:
    """Spanning tree of the Hasse diagram of P ∪ {0̂}, rooted at BOT.

    ``parent[p]`` is the chosen lower cover r_p of p (BOT for minimal p).
    """

    parent: Mapping[str, str]

    def edges(self, P: Poset) -> tuple[CoveringEdge, ...]:
        return tuple(CoveringEdge(self.parent[p], p) for p in P.elements)

    def edge_set(self) -> frozenset[CoveringEdge]:
        return frozenset(CoveringEdge(r, p) for p, r in self.parent.items())

    def to_json(self, P: Poset) -> list[list[str]]:
        return [[e.lower, e.upper] for e in self.edges(P)]


def arborescence(P: Poset) -> Arborescence:
    """The canonical arborescence: each element hangs off its first lower cover."""
    return Arborescence({p: (P.lower_covers[p] or (BOT,))[0] for p in P.elements})


def validate_arborescence(P: Poset, T: Arborescence) -> None:
    if set(T.parent) != set(P.elements):
        raise InvalidTree("tree must assign a parent to every element and nothing else")
    for p, r in T.parent.items():
        ok = r == BOT and not P.below[p] or r in P.lower_covers[p]
        if not ok:
            raise InvalidTree(f"{r}<{p} is not a covering relation below {p}")
    # parents are strictly smaller, so following them always terminates at BOT


def contract_covering(P: Poset, edge: Union[CoveringEdge, tuple[str, str], str]) -> Poset:
    """Contract ``edge`` in the Hasse diagram of P̂, then drop 0̂ and 1̂.

    The merged node of an inner edge ``p<q`` is named ``"p+q"`` and sits at
    the position of ``p``.  When one endpoint is BOT or TOP the base endpoint
    is absorbed into it and disappears together with it.
    """
    Phat = augment(P)
    edge = Phat.check_edge(edge)
    p, q = edge
    if p == BOT or q == TOP:
        gone = q if p == BOT else p
        keep = [e for e in P.elements if e != gone]
        pairs = [(a, b) for a, b in P.lt if gone not in (a, b)]
        return Poset(tuple(keep), frozenset(pairs))
    merged = f"{p}+{q}"
    rename = {p: merged, q: merged}
    elements = [rename.get(e, e) for e in P.elements if e != q]
    pairs = set()
    for a, b in P.lt:
        a2, b2 = rename.get(a, a), rename.get(b, b)
        if a2 != b2:
            pairs.add((a2, b2))
    return _build(elements, pairs)


# --- constructors -----------------------------------------------------------


def chain(k: int, prefix: str = "p") -> Poset:
    """``p1 < p2 < ... < pk``."""
    if k < 1:
        raise EmptyPoset("chain length must be at least 1")
    names = [f"{prefix}{i}" for i in range(1, k + 1)]
    return poset_from_covers(names, zip(names, names[1:]))


def antichain(k: int, prefix: str = "p") -> Poset:
    if k < 1:
        raise EmptyPoset("antichain size must be at least 1")
    return poset_from_covers([f"{prefix}{i}" for i in range(1, k + 1)], [])


def disjoint_union(P: Poset, Q: Poset) -> Poset:
    """Disjoint union; on a name clash elements are prefixed ``a_`` / ``b_``."""
    if set(P.elements) & set(Q.elements):
        P = _rename(P, "a_")
        Q = _rename(Q, "b_")
    return Poset(P.elements + Q.elements, P.lt | Q.lt)


def _rename(P: Poset, prefix: str) -> Poset:
    f = {e: prefix + e for e in P.elements}
    return Poset(tuple(f[e] for e in P.elements), frozenset((f[a], f[b]) for a, b in P.lt))


def product(P: Poset, Q: Poset) -> Poset:
    """Componentwise order on P × Q; the pair (a, b) is named ``"a.b"``."""
    names = {(a, b): f"{a}.{b}" for a in P.elements for b in Q.elements}
    covers = []
    for (a, b), name in names.items():
        for a2 in P.upper_covers[a]:
            covers.append((name, names[a2, b]))
        for b2 in Q.upper_covers[b]:
            covers.append((name, names[a, b2]))
    return _build(list(names.values()), covers)
