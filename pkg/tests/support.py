"""Corpus generators and brute-force oracles shared by the tests."""

from __future__ import annotations

import random
from itertools import combinations

from hypothesis import strategies as st

from hibi.poset import (
    BOT,
    TOP,
    antichain,
    chain,
    disjoint_union,
    opposite,
    poset_from_covers,
    product,
)

# (criterion, passed, detail) rows printed in the terminal summary
ACCEPTANCE_RESULTS: list[tuple[str, bool, str]] = []


def V_poset():
    return poset_from_covers(["a", "b", "c"], [("a", "b"), ("a", "c")])


def grid():
    return poset_from_covers(["a", "b", "c", "d"], [("a", "b"), ("a", "c"), ("b", "d"), ("c", "d")])


def random_dags(samples: int = 220, seed: int = 20261014):
    rng = random.Random(seed)
    letters = "abcdefgh"
    out = []
    for _ in range(samples):
        n = rng.randint(1, 5)
        names = list(letters[:n])
        topo = names[:]
        rng.shuffle(topo)
        density = rng.choice([0.2, 0.35, 0.5, 0.7])
        edges = [(topo[i], topo[j]) for i, j in combinations(range(n), 2) if rng.random() < density]
        out.append(poset_from_covers(names, edges))
    return out


def _chain_unions():
    def partitions(n, largest):
        if n == 0:
            yield []
            return
        for k in range(min(n, largest), 0, -1):
            for rest in partitions(n - k, k):
                yield [k, *rest]

    for total in range(2, 7):
        for parts in partitions(total, total):
            if len(parts) < 2:
                continue
            P = chain(parts[0])
            for k in parts[1:]:
                P = disjoint_union(P, chain(k))
            yield P


def named_posets():
    out = [chain(k) for k in range(1, 7)] + [antichain(k) for k in range(1, 7)]
    out += list(_chain_unions())
    out += [product(chain(a), chain(b)) for a in (1, 2) for b in (2, 3) if a * b <= 6]
    out += [V_poset(), opposite(V_poset()), grid(), disjoint_union(V_poset(), chain(1))]
    out += [opposite(product(chain(2), chain(3))), disjoint_union(grid(), chain(2))]
    return out


def corpus():
    return random_dags() + named_posets()


# --- independent brute-force oracles ---------------------------------------


def brute_ideals(P):
    """All down-closed subsets, by scanning the power set."""
    names = P.elements
    out = []
    for r in range(len(names) + 1):
        for S in combinations(names, r):
            S = frozenset(S)
            if all(a in S for a, b in P.lt if b in S):
                out.append(S)
    return out


def brute_augmented_covers(P):
    """Coverings of P with 0̂ and 1̂ attached, straight from the definition."""
    nodes = [BOT, *P.elements, TOP]

    def less(x, y):
        if x == y:
            return False
        if x == BOT:
            return y != BOT
        if y == TOP:
            return x != TOP
        if x == TOP or y == BOT:
            return False
        return (x, y) in P.lt

    return {
        (x, y)
        for x in nodes
        for y in nodes
        if less(x, y) and not any(less(x, z) and less(z, y) for z in nodes)
    }


@st.composite
def posets(draw, max_size=5):
    n = draw(st.integers(1, max_size))
    names = [f"e{i}" for i in range(n)]
    perm = draw(st.permutations(names))
    pairs = [(perm[i], perm[j]) for i, j in combinations(range(n), 2)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return poset_from_covers(names, chosen)
