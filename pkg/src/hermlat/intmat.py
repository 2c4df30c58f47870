"""Exact matrix routines over Z, Q and imaginary quadratic fields.

Matrices are lists of lists (or tuples of tuples). Nothing here uses
floating point.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd


class DegenerateFormError(ValueError):
    """Raised when a Gram matrix is singular."""


def identity(n, one=1, zero=0):
    return [[one if i == j else zero for j in range(n)] for i in range(n)]


def transpose(A):
    return [list(r) for r in zip(*A)]


def matmul(A, B):
    Bt = list(zip(*B))
    return [[sum((a * b for a, b in zip(row, col)), start=0 * row[0]) for col in Bt]
            for row in A]


def congruent(T, G):
    """T^t G T."""
    return matmul(matmul(transpose(T), G), T)


def det(A) -> Fraction:
    """Determinant by fraction-exact Gaussian elimination."""
    n = len(A)
    M = [[Fraction(x) for x in row] for row in A]
    result = Fraction(1)
    for k in range(n):
        piv = next((i for i in range(k, n) if M[i][k] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != k:
            M[k], M[piv] = M[piv], M[k]
            result = -result
        p = M[k][k]
        result *= p
        for i in range(k + 1, n):
            f = M[i][k] / p
            if f:
                Mi, Mk = M[i], M[k]
                for j in range(k, n):
                    Mi[j] -= f * Mk[j]
    return result


def inverse(A):
    """Inverse of a rational matrix (Gauss-Jordan)."""
    n = len(A)
    M = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
         for i, row in enumerate(A)]
    for k in range(n):
        piv = next((i for i in range(k, n) if M[i][k] != 0), None)
        if piv is None:
            raise DegenerateFormError("singular matrix")
        M[k], M[piv] = M[piv], M[k]
        p = M[k][k]
        M[k] = [x / p for x in M[k]]
        for i in range(n):
            if i != k and M[i][k]:
                f = M[i][k]
                M[i] = [x - f * y for x, y in zip(M[i], M[k])]
    return [row[n:] for row in M]


def diagonalize(G, conj=None, shift=None):
    """Diagonal entries of a congruence diagonalization of a (Hermitian) form.

    ``conj`` is the involution (identity for symmetric forms). When every
    remaining diagonal entry vanishes but an off-diagonal one does not, the
    basis is changed by b_i <- b_i + c*b_j, with c = 1 or c = ``shift`` (a
    purely imaginary scalar) chosen so the new diagonal entry is nonzero.
    Raises DegenerateFormError for singular input.
    """
    if conj is None:
        conj = lambda x: x
    n = len(G)
    A = [list(row) for row in G]
    diag = []
    for k in range(n):
        piv = next((i for i in range(k, n) if A[i][i] != 0), None)
        if piv is None:
            pair = next(((i, j) for i in range(k, n) for j in range(k, n)
                         if i != j and A[i][j] != 0), None)
            if pair is None:
                raise DegenerateFormError(f"degenerate form (rank {k} < {n})")
            i, j = pair
            g = A[j][i]
            c = 1
            if (g + conj(g)) == 0:
                if shift is None:
                    raise DegenerateFormError("no admissible pivot shift")
                c = shift
            # row i += c * row j ; col i += conj(c) * col j
            A[i] = [x + c * y for x, y in zip(A[i], A[j])]
            cc = conj(c)
            for r in range(n):
                A[r][i] = A[r][i] + cc * A[r][j]
            piv = i
        if piv != k:
            A[k], A[piv] = A[piv], A[k]
            for r in range(n):
                A[r][k], A[r][piv] = A[r][piv], A[r][k]
        p = A[k][k]
        diag.append(p)
        for i in range(k + 1, n):
            if A[i][k] != 0:
                f = A[i][k] / p
                fc = conj(f)
                A[i] = [x - f * y for x, y in zip(A[i], A[k])]
                for r in range(n):
                    A[r][i] = A[r][i] - fc * A[r][k]
    return diag


def signature_of_diagonal(diag):
    pos = sum(1 for x in diag if x > 0)
    neg = sum(1 for x in diag if x < 0)
    return pos, neg


def smith_normal_form(G):
    """Smith normal form with transforms.

    Returns (U, D, V) with U*G*V = D, U and V unimodular, D diagonal with
    non-negative entries d_1 | d_2 | ... .
    """
    m = len(G)
    n = len(G[0]) if m else 0
    A = [[int(x) for x in row] for row in G]
    U = identity(m)
    V = identity(n)

    def swap_rows(i, j):
        A[i], A[j] = A[j], A[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for M in (A, V):
            for row in M:
                row[i], row[j] = row[j], row[i]

    def add_row(src, dst, q):  # row dst += q * row src
        A[dst] = [x + q * y for x, y in zip(A[dst], A[src])]
        U[dst] = [x + q * y for x, y in zip(U[dst], U[src])]

    def add_col(src, dst, q):  # col dst += q * col src
        for M in (A, V):
            for row in M:
                row[dst] += q * row[src]

    for t in range(min(m, n)):
        while True:
            nonzero = [(abs(A[i][j]), i, j) for i in range(t, m) for j in range(t, n) if A[i][j]]
            if not nonzero:
                break
            _, pi, pj = min(nonzero)
            swap_rows(t, pi)
            swap_cols(t, pj)
            p = A[t][t]
            clean = True
            for i in range(t + 1, m):
                if A[i][t]:
                    add_row(t, i, -(A[i][t] // p))
                    clean = clean and A[i][t] == 0
            for j in range(t + 1, n):
                if A[t][j]:
                    add_col(t, j, -(A[t][j] // p))
                    clean = clean and A[t][j] == 0
            if not clean:
                continue
            bad = next((i for i in range(t + 1, m) for j in range(t + 1, n)
                        if A[i][j] % p), None)
            if bad is None:
                break
            add_row(bad, t, 1)
        if t < m and t < n and A[t][t] < 0:
            A[t] = [-x for x in A[t]]
            U[t] = [-x for x in U[t]]
    return U, A, V


def elementary_divisors(G) -> list[int]:
    """Nonzero diagonal entries of the Smith form (including ones)."""
    _, D, _ = smith_normal_form(G)
    return [D[i][i] for i in range(min(len(D), len(D[0]) if D else 0)) if D[i][i]]


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """(g, s, t) with s*a + t*b = g = gcd(a, b) >= 0."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        return -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def hnf2(gens) -> tuple[int, int, int]:
    """Hermite normal form of the rank-<=2 lattice spanned by integer pairs.

    Returns (a, b, c) such that the lattice has basis (a, b), (0, c) with
    a >= 0, c >= 0 and 0 <= b < c when c > 0.
    """
    A = B = C = 0
    for p, q in gens:
        g, s, t = xgcd(A, p)
        if g == 0:
            C = gcd(C, q)
        else:
            newB = s * B + t * q
            # kernel vector of the first coordinate
            C = gcd(C, (p // g) * B - (A // g) * q)
            A, B = g, newB
        if C:
            B %= C
    return A, B, C
