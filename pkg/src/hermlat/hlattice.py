"""Hermitian lattices over the ring of integers of Q(sqrt(d)).

Convention: <x, y> is linear in the first argument and conjugate-linear in
the second, so for coordinate vectors <x, y> = x^t G conj(y). The trace
lattice uses the Z-basis (e_1..e_m, w e_1..w e_m).
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from . import intmat
from .qfield import FieldData, FieldElem, is_in_scaled_ring, unit_group
from .qlattice import DEFAULT_LIMIT, QuadLattice, enumerate_norm_vectors


class TraceIntegralityError(ValueError):
    """Tr<x, x> is not integral on the lattice."""

    def __init__(self, pair, value):
        self.pair = pair
        self.value = value
        super().__init__(f"trace form not integral at basis pair {pair}: value {value}")


@dataclass(frozen=True)
class HermLattice:
    """Free O_F-lattice with a nondegenerate Hermitian Gram matrix."""

    field: FieldData
    gram: tuple[tuple[FieldElem, ...], ...]

    def __init__(self, field: FieldData, gram):
        g = tuple(tuple(x if isinstance(x, FieldElem) else FieldElem(field, x) for x in row)
                  for row in gram)
        m = len(g)
        if m == 0 or any(len(row) != m for row in g):
            raise ValueError("Gram matrix must be square and non-empty")
        for i in range(m):
            for j in range(i, m):
                if g[i][j].field.d != field.d:
                    raise ValueError(f"entry ({i}, {j}) lies in a different field")
                if g[i][j] != g[j][i].conjugate():
                    raise ValueError(f"Gram matrix not Hermitian at ({i}, {j})")
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "gram", g)
        # raises DegenerateFormError
        _ = self.diagonal

    @property
    def rank(self) -> int:
        return len(self.gram)

    def __repr__(self):
        return f"HermLattice(d={self.field.d}, rank={self.rank})"

    @functools.cached_property
    def diagonal(self) -> list[Fraction]:
        diag = intmat.diagonalize([list(r) for r in self.gram],
                                  conj=lambda x: x.conjugate(),
                                  shift=self.field.sqrt_d)
        return [x.a for x in diag]

    def inner(self, x, y) -> FieldElem:
        f = self.field
        total = f.zero
        for i, xi in enumerate(x):
            if not xi:
                continue
            for j, yj in enumerate(y):
                if yj:
                    total = total + xi * self.gram[i][j] * _fe(f, yj).conjugate()
        return total

    def norm(self, x) -> Fraction:
        return self.inner(x, x).a

    def integrality_violation(self):
        """First basis pair where Tr<x, x> fails to be integral, else None.

        Tr<x, x> is integral on L iff the trace Gram matrix has integral
        diagonal and 2*(b_i, b_j) is integral off the diagonal.
        """
        G = _trace_gram(self)
        n = len(G)
        for i in range(n):
            if G[i][i].denominator != 1:
                return (i, i), G[i][i]
            for j in range(i + 1, n):
                if (2 * G[i][j]).denominator != 1:
                    return (i, j), G[i][j]
        return None


def _fe(f: FieldData, x) -> FieldElem:
    return x if isinstance(x, FieldElem) else FieldElem(f, x)


def z_basis(H: HermLattice) -> list[list[FieldElem]]:
    """The Z-basis (e_1..e_m, w e_1..w e_m) as O_F coordinate vectors."""
    f, m = H.field, H.rank
    basis = []
    for scalar in (f.one, f.omega):
        for i in range(m):
            basis.append([scalar if k == i else f.zero for k in range(m)])
    return basis


def to_z_coords(H: HermLattice, x) -> list[int | Fraction]:
    f = H.field
    xs = [_fe(f, v) for v in x]
    return [v.a for v in xs] + [v.b for v in xs]


def from_z_coords(H: HermLattice, z) -> list[FieldElem]:
    m = H.rank
    return [FieldElem(H.field, z[i], z[m + i]) for i in range(m)]


def _trace_gram(H: HermLattice) -> list[list[Fraction]]:
    # <w^s e_i, w^t e_j> = w^s conj(w)^t g_ij
    f, m = H.field, H.rank
    w, wc = f.omega, f.omega.conjugate()
    n = 2 * m
    G = [[Fraction(0)] * n for _ in range(n)]
    for s, t in itertools.product((0, 1), repeat=2):
        scale = (w if s else f.one) * (wc if t else f.one)
        for i in range(m):
            for j in range(m):
                G[s * m + i][t * m + j] = (scale * H.gram[i][j]).trace()
    return G


@functools.lru_cache(maxsize=256)
def trace_lattice(H: HermLattice) -> QuadLattice:
    """(L_Q, Tr<,>) in the basis (e_1..e_m, w e_1..w e_m)."""
    bad = H.integrality_violation()
    if bad is not None:
        raise TraceIntegralityError(*bad)
    return QuadLattice(_trace_gram(H))


def herm_signature(H: HermLattice) -> tuple[int, int]:
    return intmat.signature_of_diagonal(H.diagonal)


def dual_membership(H: HermLattice, x, s: int = 1) -> bool:
    """True iff s*<b, x> lies in O_F for every basis vector b."""
    f = H.field
    for i in range(H.rank):
        e = [f.one if k == i else f.zero for k in range(H.rank)]
        if not is_in_scaled_ring(H.inner(e, x), s):
            return False
    return True


def tau_reflection(H: HermLattice, r) -> list[list[FieldElem]]:
    """Matrix (columns = images of e_j) of l -> l - 2<l,r>/<r,r> r."""
    f = H.field
    r = [_fe(f, v) for v in r]
    rr = H.norm(r)
    if rr == 0:
        raise ValueError("reflection in an isotropic vector")
    m = H.rank
    Grc = [sum((H.gram[j][k] * r[k].conjugate() for k in range(m)), f.zero) for j in range(m)]
    return [[(f.one if i == j else f.zero) - r[i] * Grc[j] * Fraction(2) / rr for j in range(m)]
            for i in range(m)]


def _preserves_gram(H: HermLattice, T) -> bool:
    # <T e_i, T e_j> = (T^t G conj(T))_ij
    m = H.rank
    f = H.field
    for i in range(m):
        for j in range(m):
            s = f.zero
            for k in range(m):
                if not T[k][i]:
                    continue
                for l in range(m):
                    if T[l][j]:
                        s = s + T[k][i] * H.gram[k][l] * _fe(f, T[l][j]).conjugate()
            if s != H.gram[i][j]:
                return False
    return True


def is_integral_unitary(H: HermLattice, T) -> bool:
    """All entries in O_F and T preserves the Hermitian form."""
    f = H.field
    T = [[_fe(f, x) for x in row] for row in T]
    if not all(x.is_integral() for row in T for x in row):
        return False
    return _preserves_gram(H, T)


def pairing_decomposition(H: HermLattice, lam, z) -> tuple[Fraction, Fraction]:
    """(Re<lam, z>, w-coordinate of <lam, z>).

    (lam, z) = Tr<lam, z> = 2 Re<lam, z>, and <lam, z> = 0 exactly when
    both returned numbers vanish.
    """
    v = H.inner(lam, z)
    return v.real, v.b


def herm_compose(parts: Sequence[tuple[HermLattice, int]]) -> HermLattice:
    """Orthogonal sum of the lattices with Gram matrices scaled by the integers."""
    if not parts:
        raise ValueError("nothing to compose")
    f = parts[0][0].field
    for H, scale in parts:
        if H.field.d != f.d:
            raise ValueError(f"field mismatch: d={H.field.d} vs d={f.d}")
        if scale == 0:
            raise ValueError("scale must be nonzero")
    m = sum(H.rank for H, _ in parts)
    g = [[f.zero] * m for _ in range(m)]
    off = 0
    for H, scale in parts:
        for i in range(H.rank):
            for j in range(H.rank):
                g[off + i][off + j] = H.gram[i][j] * scale
        off += H.rank
    return HermLattice(f, g)


def base_change(H: HermLattice, P) -> HermLattice:
    """Gram matrix in the basis f_i = sum_k P[k][i] e_k, i.e. P^t G conj(P)."""
    f = H.field
    m = H.rank
    P = [[_fe(f, x) for x in row] for row in P]
    g = [[sum((P[k][i] * H.gram[k][l] * P[l][j].conjugate()
               for k in range(m) for l in range(m) if P[k][i] and P[l][j]), f.zero)
          for j in range(m)] for i in range(m)]
    return HermLattice(f, g)


@dataclass(frozen=True)
class HermVectors:
    """Result of a Hermitian norm enumeration; ``bounded`` marks a box search."""

    vectors: tuple[tuple[FieldElem, ...], ...]
    bounded: bool
    bound: Optional[int]

    def __len__(self):
        return len(self.vectors)

    def __iter__(self):
        return iter(self.vectors)


def enumerate_herm_norm_vectors(H: HermLattice, t, bound: int = 3,
                                limit: int = DEFAULT_LIMIT) -> HermVectors:
    """Vectors with <v, v> = t.

    Definite lattices are enumerated completely through the trace lattice
    (trace norm 2t). Indefinite ones are searched over the box of O_F
    coordinates with both w-components in [-bound, bound].
    """
    if bound < 1:
        raise ValueError("bound must be >= 1")
    t = Fraction(t)
    p, q = herm_signature(H)
    if p == 0 or q == 0:
        LQ = trace_lattice(H)
        zs = enumerate_norm_vectors(LQ, 2 * t, limit=limit)
        vecs = tuple(tuple(from_z_coords(H, z)) for z in zs)
        return HermVectors(vecs, bounded=False, bound=None)
    from .conditions import box_vectors_with_norm
    zs = box_vectors_with_norm(H, t, bound, limit)
    vecs = tuple(tuple(from_z_coords(H, [int(c) for c in z])) for z in zs)
    return HermVectors(vecs, bounded=True, bound=bound)


def unit_orbits(H: HermLattice, vectors) -> list[tuple[FieldElem, ...]]:
    """One representative (lexicographically least) per orbit of O_F^x."""
    units = unit_group(H.field).elements
    seen = set()
    reps = []
    for v in vectors:
        key = tuple(to_z_coords(H, v))
        if key in seen:
            continue
        orbit = [tuple(to_z_coords(H, [u * x for x in v])) for u in units]
        seen.update(orbit)
        reps.append(v)
    return reps
