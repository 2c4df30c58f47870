"""Isometry testing for definite lattices (backtracking) and for indefinite
even 2-elementary lattices (Nikulin invariants)."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from . import intmat
from .qlattice import (DEFAULT_LIMIT, IndefiniteError, QuadLattice,
                       enumerate_norm_vectors, invariant_profile)


class NotApplicableError(ValueError):
    """The isometry criterion does not apply to the given lattices."""


@dataclass(frozen=True)
class IsometryWitness:
    """Integer matrix T whose columns are the images of the basis of L1,
    written in the basis of L2, so that T^t G2 T = G1."""

    matrix: tuple[tuple[int, ...], ...]

    def verify(self, L1: QuadLattice, L2: QuadLattice) -> bool:
        T = [list(r) for r in self.matrix]
        if abs(intmat.det(T)) != 1:
            return False
        return intmat.congruent(T, [list(r) for r in L2.gram]) == [list(r) for r in L1.gram]


def is_e8(L: QuadLattice) -> bool:
    """Positive definite even unimodular of rank 8 (a single class)."""
    return (L.rank == 8 and L.is_even and abs(L.determinant) == 1
            and L.signature == (8, 0))


def _search_order(G1):
    """Basis order that maximises early pruning: greedily pick the vector
    with most nonzero products against those already placed."""
    n = len(G1)
    order = [min(range(n), key=lambda i: (G1[i][i], i))]
    while len(order) < n:
        rest = [i for i in range(n) if i not in order]
        order.append(max(rest, key=lambda i: (sum(1 for j in order if G1[i][j]), -G1[i][i], -i)))
    return order


def is_isometric_definite(L1: QuadLattice, L2: QuadLattice,
                          limit: int = 50 * DEFAULT_LIMIT) -> Optional[IsometryWitness]:
    """Find an isometry L1 -> L2 by backtracking over short vectors of L2.

    Basis vectors of L1 are mapped to vectors of L2 of the same norm,
    pruning on partial inner products. Returns None if no isometry exists.
    """
    for L in (L1, L2):
        if not L.is_definite:
            raise IndefiniteError(f"lattice of signature {L.signature} is indefinite")
    if L1.rank != L2.rank or L1.signature != L2.signature:
        return None
    if L1.determinant != L2.determinant:
        return None
    if not (L1.is_integral and L2.is_integral):
        raise NotApplicableError("backtracking needs integral Gram matrices")
    # The search enumerates vectors of the diagonal norms of L1, so start
    # from whichever basis is shorter and invert the witness if needed.
    if _basis_cost(L1) > _basis_cost(L2):
        w = _backtrack(L2, L1, limit)
        if w is None:
            return None
        T = [[int(x) for x in row] for row in intmat.inverse([list(r) for r in w.matrix])]
        witness = IsometryWitness(tuple(tuple(r) for r in T))
    else:
        witness = _backtrack(L1, L2, limit)
        if witness is None:
            return None
    if not witness.verify(L1, L2):
        raise AssertionError("backtracking produced an invalid witness")
    return witness


def _basis_cost(L: QuadLattice):
    return sorted((abs(L.gram[i][i]) for i in range(L.rank)), reverse=True)


def _backtrack(L1: QuadLattice, L2: QuadLattice, limit: int) -> Optional[IsometryWitness]:
    G1 = L1.int_gram()
    G2 = np.array(L2.int_gram(), dtype=np.int64)
    n = L1.rank
    norms = sorted({G1[i][i] for i in range(n)}, key=abs)
    cands = []
    cand_norm = []
    for t in norms:
        vs = enumerate_norm_vectors(L2, t, limit=limit)
        cands.extend(vs)
        cand_norm.extend([t] * len(vs))
    if not cands:
        return None
    C = np.array(cands, dtype=np.int64)
    cand_norm = np.array(cand_norm, dtype=np.int64)
    P = C @ G2 @ C.T

    order = _search_order(G1)
    chosen: list[int] = []

    def rec(k):
        if k == n:
            return True
        b = order[k]
        mask = cand_norm == G1[b][b]
        for kk, c in enumerate(chosen):
            mask &= P[:, c] == G1[b][order[kk]]
        for idx in np.flatnonzero(mask):
            chosen.append(int(idx))
            if rec(k + 1):
                return True
            chosen.pop()
        return False

    if not rec(0):
        return None
    T = [[0] * n for _ in range(n)]
    for k, b in enumerate(order):
        for i in range(n):
            T[i][b] = int(C[chosen[k], i])
    return IsometryWitness(tuple(tuple(r) for r in T))


def is_isometric_indef_2elem(L1: QuadLattice, L2: QuadLattice) -> bool:
    """Compare indefinite even 2-elementary lattices by (signature, ell, delta)."""
    triples = []
    for L in (L1, L2):
        prof = invariant_profile(L)
        p, q = prof.signature
        if p == 0 or q == 0:
            raise NotApplicableError(f"signature {prof.signature} is definite")
        if not prof.even or not prof.two_elementary:
            raise NotApplicableError("lattice is not even 2-elementary")
        triples.append(prof.nikulin_triple)
    return triples[0] == triples[1]
