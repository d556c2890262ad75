"""Exact integer linear algebra and the brute-force oracles built on it.

Matrices are numpy arrays of dtype ``object`` holding Python ints, so every
operation is exact and entries can grow without bound.  The class group is
recomputed as the cokernel of the character matrix through the Smith normal
form; the Picard group is checked by running the local Cartier test over a
box of classes.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product as cartesian
from typing import Optional, Sequence

import numpy as np

from .divisors import (
    class_generators,
    class_group_rank,
    is_cartier_fast,
    picard_generators,
    picard_rank,
    reduce_to_class,
)
from .errors import DimensionMismatch, InternalError, OracleMismatch
from .ideals import DEFAULT_CAP
from .poset import BOT, TOP, Poset, arborescence, augment


def as_matrix(A, cols: Optional[int] = None) -> np.ndarray:
    """Copy ``A`` into a 2-d object array of Python ints."""
    if isinstance(A, np.ndarray):
        if A.ndim != 2:
            raise DimensionMismatch(f"expected a 2-d matrix, got shape {A.shape}")
        M = np.zeros(A.shape, dtype=object)
        for idx, v in np.ndenumerate(A):
            M[idx] = int(v)
        return M
    rows = [[int(x) for x in row] for row in A]
    if not rows:
        return np.zeros((0, cols or 0), dtype=object)
    width = len(rows[0])
    if any(len(r) != width for r in rows):
        raise DimensionMismatch("ragged matrix")
    M = np.zeros((len(rows), width), dtype=object)
    for i, r in enumerate(rows):
        M[i, :] = r
    return M


def matvec(A: np.ndarray, x: Sequence[int]) -> list[int]:
    return [sum(a * b for a, b in zip(row, x)) for row in A]


def identity(k: int) -> np.ndarray:
    M = np.zeros((k, k), dtype=object)
    for i in range(k):
        M[i, i] = 1
    return M


def determinant(A) -> int:
    """Fraction-free Gaussian elimination (Bareiss)."""
    M = as_matrix(A)
    n = M.shape[0]
    if M.shape != (n, n):
        raise DimensionMismatch("determinant of a non-square matrix")
    if n == 0:
        return 1
    M = [list(r) for r in M]
    sign, prev = 1, 1
    for k in range(n - 1):
        if M[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if M[i][k] != 0), None)
            if swap is None:
                return 0
            M[k], M[swap] = M[swap], M[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]) // prev
        prev = M[k][k]
    return sign * M[n - 1][n - 1]


@dataclass(frozen=True)
class SNFResult:
    """``U @ A @ V == S`` with U, V unimodular and S in Smith form."""

    U: np.ndarray
    S: np.ndarray
    V: np.ndarray

    @property
    def invariant_factors(self) -> list[int]:
        k = min(self.S.shape)
        return [int(self.S[i, i]) for i in range(k) if self.S[i, i] != 0]

    @property
    def rank(self) -> int:
        return len(self.invariant_factors)


def _pivot(D: np.ndarray, t: int) -> Optional[tuple[int, int]]:
    best = None
    m, n = D.shape
    for i in range(t, m):
        for j in range(t, n):
            v = D[i, j]
            if v != 0 and (best is None or abs(v) < best[0]):
                best = (abs(v), i, j)
    return None if best is None else best[1:]


def smith_normal_form(A) -> SNFResult:
    """Smith normal form with a deterministic pivot rule.

    The pivot is the nonzero entry of least absolute value in the remaining
    block, first in row-major order.  Only S is canonical; U and V depend on
    the pivot rule.
    """
    D = as_matrix(A).copy()
    m, n = D.shape
    U, V = identity(m), identity(n)
    for t in range(min(m, n)):
        while True:
            piv = _pivot(D, t)
            if piv is None:
                return SNFResult(U, D, V)
            i, j = piv
            D[[t, i]] = D[[i, t]]
            U[[t, i]] = U[[i, t]]
            D[:, [t, j]] = D[:, [j, t]]
            V[:, [t, j]] = V[:, [j, t]]
            d = D[t, t]
            dirty = False
            for r in range(t + 1, m):
                q = D[r, t] // d
                if q:
                    D[r] -= q * D[t]
                    U[r] -= q * U[t]
                dirty |= D[r, t] != 0
            for c in range(t + 1, n):
                q = D[t, c] // d
                if q:
                    D[:, c] -= q * D[:, t]
                    V[:, c] -= q * V[:, t]
                dirty |= D[t, c] != 0
            if dirty:
                continue
            bad = next(
                (r for r in range(t + 1, m) for c in range(t + 1, n) if D[r, c] % d),
                None,
            )
            if bad is None:
                break
            D[t] += D[bad]
            U[t] += U[bad]
        if D[t, t] < 0:
            D[t] = -D[t]
            U[t] = -U[t]
    return SNFResult(U, D, V)


def matrix_rank(A) -> int:
    return smith_normal_form(A).rank


def cokernel(A) -> tuple[int, list[int]]:
    """Structure of Z^rows / im(A): free rank and nontrivial invariant factors."""
    res = smith_normal_form(A)
    rows = res.S.shape[0]
    factors = res.invariant_factors
    return rows - len(factors), [d for d in factors if d > 1]


def hermite_normal_form(A) -> tuple[np.ndarray, np.ndarray]:
    """Row-style HNF: returns (H, U) with ``U @ A == H``, U unimodular.

    H is in row echelon form with positive pivots and the entries above each
    pivot reduced into [0, pivot).
    """
    H = as_matrix(A).copy()
    m, n = H.shape
    U = identity(m)
    r = 0
    for c in range(n):
        if r == m:
            break
        while True:
            nz = [i for i in range(r, m) if H[i, c] != 0]
            if not nz:
                break
            i = min(nz, key=lambda i: (abs(H[i, c]), i))
            H[[r, i]] = H[[i, r]]
            U[[r, i]] = U[[i, r]]
            done = True
            for k in range(r + 1, m):
                q = H[k, c] // H[r, c]
                if q:
                    H[k] -= q * H[r]
                    U[k] -= q * U[r]
                done &= H[k, c] == 0
            if done:
                break
        if H[r, c] == 0:
            continue
        if H[r, c] < 0:
            H[r] = -H[r]
            U[r] = -U[r]
        for k in range(r):
            q = H[k, c] // H[r, c]
            if q:
                H[k] -= q * H[r]
                U[k] -= q * U[r]
        r += 1
    return H, U


class IntegerSolver:
    """Solve ``A x = b`` over Z for many right-hand sides.

    With ``W @ A.T == H`` in Hermite form, ``A @ W.T == H.T``, so a solution
    is ``x = W.T @ y`` where y expresses b in the echelon rows of H.
    """

    def __init__(self, A, cols: Optional[int] = None):
        self.A = as_matrix(A, cols)
        self.H, self.W = hermite_normal_form(self.A.T)
        self.pivots = []
        for k in range(self.H.shape[0]):
            nz = [c for c in range(self.H.shape[1]) if self.H[k, c] != 0]
            if not nz:
                break
            self.pivots.append(nz[0])

    def solve(self, b: Sequence[int]) -> Optional[list[int]]:
        m, n = self.A.shape
        if len(b) != m:
            raise DimensionMismatch(f"right-hand side has length {len(b)}, expected {m}")
        resid = [int(v) for v in b]
        y = [0] * n
        for k, c in enumerate(self.pivots):
            q, rem = divmod(resid[c], self.H[k, c])
            if rem:
                return None
            y[k] = q
            if q:
                resid = [a - q * h for a, h in zip(resid, self.H[k])]
        if any(resid):
            return None
        x = matvec(self.W.T, y)
        if matvec(self.A, x) != list(b):
            raise InternalError("integer_solve produced a non-solution")
        return x


def integer_solve(A, b: Sequence[int], cols: Optional[int] = None) -> Optional[list[int]]:
    """Some integer x with A x = b, or None when there is none."""
    return IntegerSolver(A, cols).solve(b)


# --- oracles ----------------------------------------------------------------


def phi_matrix(P: Poset) -> np.ndarray:
    """Matrix of the character map straight from the boundary description.

    Column p has +1 on the coverings p<q and -1 on the coverings r<p; rows
    follow the canonical order of C(P̂).
    """
    edges = augment(P).covers
    M = np.zeros((len(edges), len(P)), dtype=object)
    for i, (lo, hi) in enumerate(edges):
        if lo != BOT:
            M[i, P.index[lo]] += 1
        if hi != TOP:
            M[i, P.index[hi]] -= 1
    return M


def psi_matrix(P: Poset, T=None) -> np.ndarray:
    """Columns are the class coordinates of the prime divisors D_e."""
    from .divisors import TorusDivisor

    T = arborescence(P) if T is None else T
    edges = augment(P).covers
    cols = [reduce_to_class(P, T, TorusDivisor({e: 1})).vector() for e in edges]
    M = np.zeros((len(class_generators(P, T)), len(edges)), dtype=object)
    for j, col in enumerate(cols):
        M[:, j] = col
    return M


def cl_oracle(P: Poset) -> tuple[int, list[int]]:
    """Cokernel of the character matrix, checked against the rank formula."""
    formula = class_group_rank(P)
    free, torsion = cokernel(phi_matrix(P))
    if free != formula or torsion:
        raise OracleMismatch(
            f"class group: formula rank {formula}, Smith form gives Z^{free} + torsion {torsion}"
        )
    return free, torsion


@dataclass(frozen=True)
class PicReport:
    formula: int
    sublattice_rank: int
    box: int
    classes_checked: int
    cartier_classes: int
    verified: bool = True


def pic_oracle(P: Poset, box: int = 2, cap: int = DEFAULT_CAP) -> PicReport:
    """Exhaustive Cartier check of every class with coordinates in [-box, box].

    A class is represented by the divisor supported on the non-tree coverings
    with the class coordinates as coefficients.  The Cartier classes must be
    exactly the box points lying in the span of the classes of the D_C, and
    that span must have rank equal to the number of Hasse components.
    """
    if box < 1:
        raise ValueError("box must be at least 1")
    T = arborescence(P)
    gens = class_generators(P, T)
    edge_pos = augment(P).edge_index
    slots = [edge_pos[e] for e in gens]
    n_edges = len(edge_pos)

    span_cols = [reduce_to_class(P, T, D).vector() for D in picard_generators(P)]
    G = np.zeros((len(gens), len(span_cols)), dtype=object)
    for j, col in enumerate(span_cols):
        G[:, j] = col
    formula = picard_rank(P)
    span_rank = matrix_rank(G)
    if span_rank != formula:
        raise OracleMismatch(f"span of D_C has rank {span_rank}, expected {formula}")

    member = IntegerSolver(G, cols=len(span_cols))
    checked = cartier = 0
    for coords in cartesian(range(-box, box + 1), repeat=len(gens)):
        alpha = [0] * n_edges
        for k, c in zip(slots, coords):
            alpha[k] = c
        is_c = is_cartier_fast(P, alpha, cap)
        in_span = member.solve(coords) is not None
        if is_c != in_span:
            raise OracleMismatch(
                f"class {dict(zip(map(str, gens), coords))}: Cartier={is_c}, in span of D_C={in_span}"
            )
        checked += 1
        cartier += is_c
    return PicReport(formula, span_rank, box, checked, cartier)
