"""Integral quadratic lattices over Z: invariants, discriminant groups,
short vector enumeration and reflections."""

from __future__ import annotations

import enum
import functools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from . import intmat
from .intmat import DegenerateFormError

DEFAULT_LIMIT = 10000


class IndefiniteError(ValueError):
    """Operation needs a definite lattice."""


class EnumerationLimitError(RuntimeError):
    """More vectors than the caller allowed; never truncated silently."""


def _frac_matrix(rows) -> tuple[tuple[Fraction, ...], ...]:
    return tuple(tuple(Fraction(x) for x in row) for row in rows)


@dataclass(frozen=True)
class QuadLattice:
    """Z-lattice given by a symmetric nondegenerate rational Gram matrix."""

    gram: tuple[tuple[Fraction, ...], ...]

    def __init__(self, gram):
        g = _frac_matrix(gram)
        n = len(g)
        if n == 0 or any(len(row) != n for row in g):
            raise ValueError("Gram matrix must be square and non-empty")
        for i in range(n):
            for j in range(i + 1, n):
                if g[i][j] != g[j][i]:
                    raise ValueError(f"Gram matrix not symmetric at ({i}, {j})")
        object.__setattr__(self, "gram", g)
        if intmat.det(g) == 0:
            raise DegenerateFormError("degenerate Gram matrix")

    @property
    def rank(self) -> int:
        return len(self.gram)

    def __repr__(self):
        return f"QuadLattice(rank={self.rank})"

    @functools.cached_property
    def is_integral(self) -> bool:
        return all(x.denominator == 1 for row in self.gram for x in row)

    @functools.cached_property
    def is_even(self) -> bool:
        return self.is_integral and all(self.gram[i][i] % 2 == 0 for i in range(self.rank))

    def int_gram(self) -> list[list[int]]:
        if not self.is_integral:
            raise ValueError("lattice is not integral")
        return [[int(x) for x in row] for row in self.gram]

    @functools.cached_property
    def determinant(self) -> Fraction:
        return intmat.det(self.gram)

    def inner(self, u, v) -> Fraction:
        g = self.gram
        return sum((Fraction(u[i]) * g[i][j] * v[j]
                    for i in range(self.rank) for j in range(self.rank) if u[i] and v[j]),
                   Fraction(0))

    def norm(self, v) -> Fraction:
        return self.inner(v, v)

    @functools.cached_property
    def signature(self) -> tuple[int, int]:
        return intmat.signature_of_diagonal(intmat.diagonalize(self.gram))

    @property
    def is_definite(self) -> bool:
        p, q = self.signature
        return p == 0 or q == 0


def direct_sum(*lattices: QuadLattice) -> QuadLattice:
    n = sum(L.rank for L in lattices)
    g = [[Fraction(0)] * n for _ in range(n)]
    off = 0
    for L in lattices:
        for i in range(L.rank):
            for j in range(L.rank):
                g[off + i][off + j] = L.gram[i][j]
        off += L.rank
    return QuadLattice(g)


def rescale(L: QuadLattice, n) -> QuadLattice:
    if n == 0:
        raise ValueError("rescaling factor must be nonzero")
    return QuadLattice([[n * x for x in row] for row in L.gram])


def smith_normal_form(G):
    """(U, D, V) with U*G*V = D; see :func:`hermlat.intmat.smith_normal_form`."""
    return intmat.smith_normal_form(G)


def dual_generators(L: QuadLattice) -> list[tuple[tuple[Fraction, ...], int]]:
    """Generators of the discriminant group M^v/M with their orders.

    The dual lattice is G^-1 Z^n = V D^-1 Z^n when U G V = D, so the
    columns of V divided by the nontrivial elementary divisors generate
    M^v/M.
    """
    if not L.is_integral:
        raise ValueError("dual generators need an integral lattice")
    U, D, V = intmat.smith_normal_form(L.int_gram())
    gens = []
    for i in range(L.rank):
        d = D[i][i]
        if d > 1:
            gens.append((tuple(Fraction(V[k][i], d) for k in range(L.rank)), d))
    return gens


def in_dual(L: QuadLattice, v) -> bool:
    """True iff (v, e_i) is integral for every basis vector e_i."""
    g = L.gram
    n = L.rank
    return all(sum(Fraction(v[j]) * g[i][j] for j in range(n)).denominator == 1
               for i in range(n))


@dataclass(frozen=True)
class InvariantProfile:
    rank: int
    signature: tuple[int, int]
    determinant: Fraction
    integral: bool
    even: bool
    elementary_divisors: tuple[int, ...]
    two_elementary: bool
    ell: Optional[int] = None
    delta: Optional[int] = None

    @property
    def nikulin_triple(self):
        if self.ell is None or self.delta is None:
            return None
        return (self.signature, self.ell, self.delta)

    def to_json(self) -> dict:
        from .qfield import format_rational
        return {
            "rank": self.rank,
            "signature": list(self.signature),
            "determinant": format_rational(self.determinant),
            "integral": self.integral,
            "even": self.even,
            "elementary_divisors": list(self.elementary_divisors),
            "two_elementary": self.two_elementary,
            "ell": self.ell,
            "delta": self.delta,
            "nikulin_triple": None if self.nikulin_triple is None else
            [list(self.signature), self.ell, self.delta],
        }


def delta_from_generators(L: QuadLattice) -> int:
    """delta of an even 2-elementary lattice, tested on dual generators.

    Valid because 2(v, w) is integral for v, w in M^v, so the norm mod Z is
    additive on M^v/M.
    """
    for v, _ in dual_generators(L):
        if L.norm(v).denominator != 1:
            return 1
    return 0


@functools.lru_cache(maxsize=512)
def invariant_profile(L: QuadLattice) -> InvariantProfile:
    divisors: tuple[int, ...] = ()
    two_el = False
    ell = delta = None
    if L.is_integral:
        divisors = tuple(d for d in intmat.elementary_divisors(L.int_gram()) if d > 1)
        two_el = all(d == 2 for d in divisors)
        if two_el:
            ell = len(divisors)
            if L.is_even:
                delta = delta_from_generators(L)
    return InvariantProfile(
        rank=L.rank,
        signature=L.signature,
        determinant=L.determinant,
        integral=L.is_integral,
        even=L.is_even,
        elementary_divisors=divisors,
        two_elementary=two_el,
        ell=ell,
        delta=delta,
    )


# --- short vectors --------------------------------------------------------

def _ldl(gram):
    """Exact decomposition Q(x) = sum_i d_i (x_i + sum_{j>i} mu_ij x_j)^2."""
    n = len(gram)
    A = [[Fraction(x) for x in row] for row in gram]
    d = [Fraction(0)] * n
    mu = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        d[i] = A[i][i] - sum(mu[k][i] ** 2 * d[k] for k in range(i))
        if d[i] <= 0:
            raise IndefiniteError("Gram matrix is not positive definite")
        for j in range(i + 1, n):
            mu[i][j] = (A[i][j] - sum(mu[k][i] * mu[k][j] * d[k] for k in range(i))) / d[i]
    return d, mu


def _int_range(c: Fraction, q: Fraction) -> tuple[int, int]:
    """Integers x with (x - c)^2 <= q."""
    def ok(x):
        return (x - c) ** 2 <= q
    r = math.sqrt(float(q))
    hi = math.floor(float(c) + r) + 1
    while not ok(hi) and hi > c:
        hi -= 1
    while ok(hi + 1):
        hi += 1
    lo = math.ceil(float(c) - r) - 1
    while not ok(lo) and lo < c:
        lo += 1
    while ok(lo - 1):
        lo -= 1
    return lo, hi


def _short_vectors_posdef(gram, bound: Fraction):
    """All nonzero x with Q(x) <= bound (Fincke-Pohst, exact bounds)."""
    n = len(gram)
    d, mu = _ldl(gram)
    x = [0] * n
    out = []

    def rec(i, remaining):
        c = -sum((mu[i][j] * x[j] for j in range(i + 1, n) if x[j]), Fraction(0))
        lo, hi = _int_range(c, remaining / d[i])
        for v in range(lo, hi + 1):
            x[i] = v
            rest = remaining - d[i] * (v - c) ** 2
            if i == 0:
                out.append(tuple(x))
            else:
                rec(i - 1, rest)
        x[i] = 0

    rec(n - 1, Fraction(bound))
    return [v for v in out if any(v)]


def enumerate_norm_vectors(L: QuadLattice, t, limit: int = DEFAULT_LIMIT) -> list[tuple[int, ...]]:
    """All lattice vectors of norm exactly t, sorted lexicographically.

    L must be definite and t must have the sign of the form. The result
    is complete; EnumerationLimitError is raised if it has more than
    ``limit`` elements.
    """
    t = Fraction(t)
    p, q = L.signature
    if p and q:
        raise IndefiniteError(f"lattice of signature {L.signature} is indefinite")
    sign = 1 if q == 0 else -1
    if t == 0:
        return []
    if (t > 0) != (sign > 0):
        return []
    gram = [[sign * x for x in row] for row in L.gram]
    vecs = _short_vectors_posdef(gram, sign * t)
    g = L.gram
    n = L.rank
    found = [v for v in vecs
             if sum(g[i][j] * v[i] * v[j] for i in range(n) for j in range(n) if v[i] and v[j]) == t]
    if len(found) > limit:
        raise EnumerationLimitError(f"{len(found)} vectors of norm {t} exceed limit {limit}")
    return sorted(found)


# --- reflections ----------------------------------------------------------

def sigma_reflection(L: QuadLattice, r) -> list[list[Fraction]]:
    """Matrix (columns = images of basis vectors) of l -> l - 2(l,r)/(r,r) r."""
    rr = L.norm(r)
    if rr == 0:
        raise ValueError("reflection in an isotropic vector")
    n = L.rank
    Gr = [sum(L.gram[j][k] * r[k] for k in range(n)) for j in range(n)]
    return [[Fraction(int(i == j)) - 2 * Fraction(r[i]) * Gr[j] / rr for j in range(n)]
            for i in range(n)]


def is_automorphism(L: QuadLattice, T) -> bool:
    """True iff T is integral and T^t G T = G."""
    if any(Fraction(x).denominator != 1 for row in T for x in row):
        return False
    return intmat.congruent(T, [list(r) for r in L.gram]) == [list(r) for r in L.gram]


class RootKind(enum.Enum):
    DELTA_PRIME = "delta_prime"
    DELTA_DOUBLEPRIME = "delta_doubleprime"
    PHI124_DIVISOR = "phi124_divisor"
    NONE = "none"


def classify_root_vector(L: QuadLattice, r) -> RootKind:
    """Split (-2)-vectors by whether r/2 is in the dual; flag (-4)-vectors
    with r/2 in the dual (the divisor of the weight 124 form)."""
    if not L.is_integral:
        raise ValueError("classification needs an integral lattice")
    rr = L.norm(r)
    half = [Fraction(x, 2) for x in r]
    if rr == -2:
        return RootKind.DELTA_DOUBLEPRIME if in_dual(L, half) else RootKind.DELTA_PRIME
    if rr == -4 and in_dual(L, half):
        return RootKind.PHI124_DIVISOR
    return RootKind.NONE
