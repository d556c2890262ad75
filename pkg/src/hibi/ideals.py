"""Order ideals, order filters and the distributive lattice I(P).

Ideals are represented as ``frozenset`` of element names, so join and meet
are just ``|`` and ``&``.  Internally the enumeration works on bitmasks over
the canonical element order.
"""

from __future__ import annotations

from collections import deque
from functools import lru_cache
from typing import Iterable, Iterator

from .errors import CapExceeded, UnknownElement
from .poset import Poset

DEFAULT_CAP = 10**6

OrderIdeal = frozenset


def _canonical_key(P: Poset, members: Iterable[str]) -> tuple[int, tuple[int, ...]]:
    idx = sorted(P.index[m] for m in members)
    return len(idx), tuple(idx)


def _below_masks(P: Poset) -> list[int]:
    idx = P.index
    out = []
    for p in P.elements:
        mask = 0
        for q in P.below[p]:
            mask |= 1 << idx[q]
        out.append(mask)
    return out


class IdealLattice:
    """All order ideals of a poset in canonical order.

    Canonical order is by cardinality, then lexicographic on the sorted
    member indices.  ``index`` maps an ideal back to its position; positions
    double as the indices of the Hibi ring variables and polytope vertices.
    """

    def __init__(self, poset: Poset, masks: Iterable[int]):
        self.poset = poset
        names = poset.elements
        n = len(names)
        masks = sorted(masks, key=lambda m: (bin(m).count("1"), _bits(m, n)))
        self.masks: tuple[int, ...] = tuple(masks)
        self.ideals: tuple[frozenset[str], ...] = tuple(
            frozenset(names[i] for i in _bits(m, n)) for m in masks
        )
        self.index: dict[frozenset[str], int] = {I: k for k, I in enumerate(self.ideals)}

    def __len__(self) -> int:
        return len(self.ideals)

    def __iter__(self) -> Iterator[frozenset[str]]:
        return iter(self.ideals)

    def __getitem__(self, k: int) -> frozenset[str]:
        return self.ideals[k]

    def __contains__(self, S: object) -> bool:
        return S in self.index

    def sorted_members(self, I: Iterable[str]) -> tuple[str, ...]:
        return self.poset.sort(I)

    def to_json(self) -> dict:
        return {"ideals": [list(self.poset.sort(I)) for I in self.ideals]}


def _bits(mask: int, n: int) -> tuple[int, ...]:
    return tuple(i for i in range(n) if mask >> i & 1)


@lru_cache(maxsize=512)
def enumerate_ideals(P: Poset, cap: int = DEFAULT_CAP) -> IdealLattice:
    """Enumerate I(P) by growing ideals one addable element at a time.

    Raises CapExceeded as soon as more than ``cap`` ideals have been found.
    """
    if cap < 1:
        raise ValueError("cap must be at least 1")
    below = _below_masks(P)
    n = len(P)
    seen = {0}
    queue = deque([0])
    while queue:
        mask = queue.popleft()
        for i in range(n):
            if mask >> i & 1 or below[i] & ~mask:
                continue
            nxt = mask | 1 << i
            if nxt not in seen:
                seen.add(nxt)
                if len(seen) > cap:
                    raise CapExceeded(f"poset has more than {cap} order ideals")
                queue.append(nxt)
    return IdealLattice(P, seen)


def _check_known(P: Poset, S: Iterable[str]) -> frozenset[str]:
    S = frozenset(S)
    unknown = [s for s in S if s not in P.index]
    if unknown:
        raise UnknownElement(f"unknown element(s) {sorted(unknown)!r}")
    return S


def is_ideal(P: Poset, S: Iterable[str]) -> bool:
    S = _check_known(P, S)
    return all(P.below[p] <= S for p in S)


def is_filter(P: Poset, S: Iterable[str]) -> bool:
    S = _check_known(P, S)
    return all(P.above[p] <= S for p in S)


def join(I: frozenset[str], J: frozenset[str]) -> frozenset[str]:
    return frozenset(I) | frozenset(J)


def meet(I: frozenset[str], J: frozenset[str]) -> frozenset[str]:
    return frozenset(I) & frozenset(J)


def filters(P: Poset, cap: int = DEFAULT_CAP) -> tuple[frozenset[str], ...]:
    """Order filters (complements of ideals), in canonical order."""
    everything = frozenset(P.elements)
    out = [everything - I for I in enumerate_ideals(P, cap)]
    out.sort(key=lambda F: _canonical_key(P, F))
    return tuple(out)


def char_vector(P: Poset, S: Iterable[str]) -> tuple[int, ...]:
    S = _check_known(P, S)
    return tuple(int(p in S) for p in P.elements)
