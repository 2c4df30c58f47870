"""Independent reference computations used by the tests.

Everything here is deliberately naive: direct loops, sympy, or full coset
enumeration, with no code shared with the package beyond the data types.
"""

import itertools
from math import gcd

import numpy as np
import sympy
from sympy.matrices.normalforms import invariant_factors


def sympy_invariant_factors(G):
    """Nonzero invariant factors of an integer matrix, via sympy."""
    M = sympy.Matrix(G)
    return [abs(int(x)) for x in invariant_factors(M, domain=sympy.ZZ) if x != 0]


def determinantal_divisors(G):
    """Invariant factors from gcds of k x k minors (tiny matrices only)."""
    n = len(G)
    M = sympy.Matrix(G)
    dk = [1]
    for k in range(1, n + 1):
        g = 0
        for rows in itertools.combinations(range(n), k):
            for cols in itertools.combinations(range(n), k):
                g = gcd(g, int(M.extract(list(rows), list(cols)).det()))
        dk.append(g)
    return [dk[k] // dk[k - 1] for k in range(1, n + 1) if dk[k]]


def box_norm_count(G, t, box):
    """Number of integer vectors with entries in [-box, box] and x^t G x = t."""
    n = len(G)
    count = 0
    for x in itertools.product(range(-box, box + 1), repeat=n):
        if sum(G[i][j] * x[i] * x[j] for i in range(n) for j in range(n)) == t:
            count += 1
    return count


def box_norm_vectors(G, t, box):
    """Set of integer vectors in [-box, box]^n with x^t G x = t (numpy, n <= 8)."""
    n = len(G)
    vals = np.arange(-box, box + 1)
    X = np.stack(np.meshgrid(*([vals] * n), indexing="ij"), axis=-1).reshape(-1, n)
    norms = np.einsum("ij,jk,ik->i", X, np.array(G, dtype=np.int64), X)
    return {tuple(int(c) for c in x) for x in X[norms == t]}


def delta_brute_force(G):
    """delta of an even 2-elementary lattice from every class of M^v/M.

    M^v = G^{-1} Z^n and 2 M^v lies in M, so each class has a representative
    v = G^{-1} c with c in {0,1}^n, of norm c^t G^{-1} c. All 2^n vectors c
    are tried.
    """
    n = len(G)
    Q = sympy.Matrix(G).inv() * 2
    assert all(x.q == 1 for x in Q), "lattice is not 2-elementary"
    Q = np.array(Q.tolist(), dtype=np.int64)
    C = np.array(list(itertools.product((0, 1), repeat=n)), dtype=np.int64)
    twice_norms = np.einsum("ki,ij,kj->k", C, Q, C)
    return int(np.any(twice_norms % 2))


def herm_inner(H, x, y):
    f = H.field
    s = f.zero
    for i in range(H.rank):
        for j in range(H.rank):
            s = s + x[i] * H.gram[i][j] * y[j].conjugate()
    return s


def z_vectors(H, box):
    f = H.field
    m = H.rank
    for z in itertools.product(range(-box, box + 1), repeat=2 * m):
        yield [f(z[i], z[m + i]) for i in range(m)]


def _ring_den(H):
    N = 1
    while not all((x * N).is_integral() for row in H.gram for x in row):
        N += 1
    return N


def minus_one_violator(H, box):
    """Some r with <r,r> = -1 and 2<e_i, r> not integral, else None."""
    f = H.field
    for r in z_vectors(H, box):
        if herm_inner(H, r, r) != f(-1):
            continue
        for i in range(H.rank):
            e = [f.one if k == i else f.zero for k in range(H.rank)]
            if not (herm_inner(H, e, r) * 2).is_integral():
                return r
    return None


def real_integral_violation(H, r):
    """True if some l has Re<l,r> in Z but <l,r> not integral.

    Both properties are invariant under adding 2 O_F, so the values
    <l, r> are collected as a subgroup of F / 2 O_F by breadth-first
    closure over the generators <e_i, r> and w <e_i, r>.
    """
    f = H.field
    gens = []
    for i in range(H.rank):
        e = [f.one if k == i else f.zero for k in range(H.rank)]
        v = herm_inner(H, e, r)
        gens.extend([v, f.omega * v])

    def key(x):
        return (x.a % 2, x.b % 2)

    seen = {key(f.zero)}
    frontier = [f.zero]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = x + g
                k = key(y)
                if k not in seen:
                    seen.add(k)
                    nxt.append(f(k[0], k[1]))
        frontier = nxt
    for a, b in seen:
        v = f(a, b)
        if v.real.denominator == 1 and not v.is_integral():
            return True
    return False


def minus_two_violator(H, box):
    f = H.field
    for r in z_vectors(H, box):
        if herm_inner(H, r, r) == f(-2) and real_integral_violation(H, r):
            return r
    return None


def is_unimodular_int(T):
    return abs(sympy.Matrix(T).det()) == 1
