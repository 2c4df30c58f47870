from fractions import Fraction

import pytest
from hypothesis import given

from hermlat import intmat
from hermlat.intmat import DegenerateFormError
from hermlat.paperlab.catalog import make_named_quadratic, root_gram
from hermlat.qlattice import (EnumerationLimitError, IndefiniteError, QuadLattice, RootKind,
                              classify_root_vector, direct_sum, dual_generators,
                              enumerate_norm_vectors, in_dual, invariant_profile,
                              is_automorphism, rescale, sigma_reflection)
from oracles import (box_norm_count, delta_brute_force, determinantal_divisors,
                     sympy_invariant_factors)
from strategies import (congruent_pairs, int_matrices, reflection_cases,
                        two_elementary_lattices)

E8 = root_gram("E", 8)

# Frozen from the oracles (sympy invariant factors / coset enumeration).
FROZEN_PROFILES = {
    "E8": ((8, 0), 1, (), 0, 0),
    "D4": ((4, 0), 4, (2, 2), 2, 0),
    "D6": ((6, 0), 4, (2, 2), 2, 1),
    "D8": ((8, 0), 4, (2, 2), 2, 0),
    "A2": ((2, 0), 3, (3,), None, None),
    "U": ((1, 1), -1, (), 0, 0),
    "U(2)": ((1, 1), -4, (2, 2), 2, 0),
    "U+U(2)+E8(-2)": ((2, 10), 1024, (2,) * 10, 10, 0),
}


@pytest.mark.parametrize("name", sorted(FROZEN_PROFILES))
def test_named_profiles(name):
    sig, det, divs, ell, delta = FROZEN_PROFILES[name]
    p = invariant_profile(make_named_quadratic(name))
    assert (p.signature, p.determinant, p.elementary_divisors, p.ell, p.delta) == \
        (sig, det, divs, ell, delta)


@pytest.mark.parametrize("name", ["E8", "D4", "D6", "D8", "A2", "U(2)"])
def test_profiles_against_oracles(name):
    L = make_named_quadratic(name)
    G = L.int_gram()
    ours = [d for d in intmat.elementary_divisors(G) if d > 1]
    assert ours == [d for d in sympy_invariant_factors(G) if d > 1]
    if L.rank <= 4:
        assert ours == [d for d in determinantal_divisors(G) if d > 1]
    p = invariant_profile(L)
    if p.even and p.two_elementary:
        assert p.delta == delta_brute_force(G)


def test_root_gram_errors():
    with pytest.raises(KeyError):
        root_gram("D", 3)
    with pytest.raises(KeyError):
        make_named_quadratic("F4")
    with pytest.raises(KeyError):
        make_named_quadratic("E8(0)")


def test_construction_errors():
    with pytest.raises(ValueError):
        QuadLattice([[1, 2], [3, 1]])
    with pytest.raises(DegenerateFormError):
        QuadLattice([[1, 1], [1, 1]])
    with pytest.raises(ValueError):
        QuadLattice([[1, 0]])
    with pytest.raises(ValueError):
        rescale(QuadLattice([[2]]), 0)


def test_rational_profile():
    L = QuadLattice([[Fraction(1, 2), 0], [0, 1]])
    p = invariant_profile(L)
    assert not p.integral and p.ell is None and p.nikulin_triple is None


def test_e8_shells():
    L = QuadLattice(E8)
    assert len(enumerate_norm_vectors(L, 2)) == 240
    assert len(enumerate_norm_vectors(L, 4)) == 2160
    assert enumerate_norm_vectors(L, -2) == []
    assert enumerate_norm_vectors(L, 3) == []
    with pytest.raises(EnumerationLimitError):
        enumerate_norm_vectors(L, 2, limit=239)


def test_negative_definite_enumeration():
    L = rescale(make_named_quadratic("D4"), -1)
    vs = enumerate_norm_vectors(L, -2)
    assert len(vs) == 24
    assert enumerate_norm_vectors(L, 2) == []


def test_enumeration_matches_box_oracle():
    G = make_named_quadratic("D4").int_gram()
    ours = enumerate_norm_vectors(QuadLattice(G), 4)
    # every norm-4 vector of this basis has coordinates in [-2, 2]
    assert max(abs(c) for v in ours for c in v) <= 2
    assert len(ours) == box_norm_count(G, 4, 2) == 24
    A2 = make_named_quadratic("A2").int_gram()
    assert len(enumerate_norm_vectors(QuadLattice(A2), 2)) == box_norm_count(A2, 2, 2) == 6


def test_indefinite_enumeration_rejected():
    with pytest.raises(IndefiniteError):
        enumerate_norm_vectors(make_named_quadratic("U"), 2)


def test_dual_generators_orders():
    L = make_named_quadratic("D6")
    gens = dual_generators(L)
    assert [o for _, o in gens] == [2, 2]
    for v, _ in gens:
        assert in_dual(L, v)
        assert not all(x.denominator == 1 for x in v)


def test_classify_roots():
    L = make_named_quadratic("U+U(2)+E8(-2)")
    n = L.rank
    e = [[int(i == j) for j in range(n)] for i in range(n)]
    # U(2) vectors f1 - f2 and f1 + f2 have norm -4; half of them lies in the dual
    f1, f2 = e[2], e[3]
    r = [a - b for a, b in zip(f1, f2)]
    assert L.norm(r) == -4
    assert classify_root_vector(L, r) is RootKind.PHI124_DIVISOR
    # e - f in U has norm -2 and r/2 is not in the dual
    r2 = [a - b for a, b in zip(e[0], e[1])]
    assert classify_root_vector(L, r2) is RootKind.DELTA_PRIME
    D4m = rescale(make_named_quadratic("D4"), -1)
    assert classify_root_vector(D4m, [1, 0, 0, 0]) is RootKind.DELTA_PRIME
    # roots of E8(-2) have norm -4 and E8(-2)^v = E8(-2)/2
    assert classify_root_vector(L, e[4]) is RootKind.PHI124_DIVISOR
    # e - 2f in U: norm -4 but (r/2, f) = 1/2
    r3 = [a - 2 * b for a, b in zip(e[0], e[1])]
    assert L.norm(r3) == -4
    assert classify_root_vector(L, r3) is RootKind.NONE


def test_sigma_reflection_on_root():
    L = QuadLattice(E8)
    S = sigma_reflection(L, [1, 0, 0, 0, 0, 0, 0, 0])
    assert is_automorphism(L, S)
    with pytest.raises(ValueError):
        sigma_reflection(make_named_quadratic("U"), [1, 0])


# --- properties ---------------------------------------------------------------

@given(int_matrices())
def test_snf_identity(G):
    U, D, V = intmat.smith_normal_form(G)
    assert intmat.matmul(intmat.matmul(U, G), V) == D
    assert abs(intmat.det(U)) == 1 and abs(intmat.det(V)) == 1
    diag = [D[i][i] for i in range(len(G))]
    assert all(D[i][j] == 0 for i in range(len(G)) for j in range(len(G)) if i != j)
    nz = [x for x in diag if x]
    assert all(x > 0 for x in nz)
    assert all(nz[i + 1] % nz[i] == 0 for i in range(len(nz) - 1))
    assert nz == sympy_invariant_factors(G)


@given(congruent_pairs())
def test_signature_invariant_under_congruence(p):
    L, T = p
    M = QuadLattice(intmat.congruent(T, [list(r) for r in L.gram]))
    a, b = invariant_profile(L), invariant_profile(M)
    assert (a.signature, a.determinant, a.elementary_divisors, a.ell, a.delta) == \
        (b.signature, b.determinant, b.elementary_divisors, b.ell, b.delta)


@given(two_elementary_lattices())
def test_delta_generators_match_cosets(L):
    p = invariant_profile(L)
    if p.ell > 6:
        return
    assert p.delta == delta_brute_force(L.int_gram())


@given(reflection_cases())
def test_sigma_involution_and_isometry(p):
    L, r = p
    rr = L.norm(r)
    if rr == 0:
        return
    S = sigma_reflection(L, r)
    G = [list(row) for row in L.gram]
    assert intmat.congruent(S, G) == G
    assert intmat.matmul(S, S) == intmat.identity(L.rank)
    # integral exactly when every 2(e_j, r)/(r, r) * r_i is an integer
    Gr = [sum(L.gram[j][k] * r[k] for k in range(L.rank)) for j in range(L.rank)]
    integral = all((2 * x * ri / rr).denominator == 1 for x in Gr for ri in r)
    assert is_automorphism(L, S) == integral


def test_direct_sum_and_rescale():
    L = direct_sum(make_named_quadratic("U"), rescale(make_named_quadratic("A2"), -1))
    assert L.signature == (1, 3)
    assert L.determinant == -3
