from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from hermlat.hlattice import (HermLattice, TraceIntegralityError, base_change,
                              dual_membership, enumerate_herm_norm_vectors, from_z_coords,
                              herm_compose, herm_signature, is_integral_unitary,
                              pairing_decomposition, tau_reflection, to_z_coords,
                              trace_lattice, unit_orbits)
from hermlat.intmat import DegenerateFormError
from hermlat.paperlab.catalog import make_named_hermitian
from hermlat.qfield import field_data, unit_group
from hermlat.qlattice import EnumerationLimitError, invariant_profile
from oracles import herm_inner, z_vectors
from strategies import lattice_and_vectors, unimodular_of

h = Fraction(1, 2)


def test_construction_errors():
    f = field_data(-1)
    with pytest.raises(ValueError):
        HermLattice(f, [[f(1), f(0, 1)], [f(0, 1), f(1)]])     # i is not conj(i)
    with pytest.raises(DegenerateFormError):
        HermLattice(f, [[f(1), f(1)], [f(1), f(1)]])
    with pytest.raises(ValueError):
        HermLattice(f, [[f(1), f(0)]])
    with pytest.raises(ValueError):
        HermLattice(f, [[field_data(-2)(1)]])
    with pytest.raises(ValueError):
        HermLattice(f, [[f(0, 1)]])                             # diagonal not real


def test_isotropic_pivot_diagonalization():
    f = field_data(-1)
    # both diagonal entries vanish and the off-diagonal is purely imaginary
    H = HermLattice(f, [[f(0), f(0, h)], [f(0, -h), f(0)]])
    assert herm_signature(H) == (1, 1)
    g = field_data(-3)
    H2 = HermLattice(g, [[g(0), g(1)], [g(1), g(0)]])
    assert herm_signature(H2) == (1, 1)


def test_trace_integrality_error():
    f = field_data(-1)
    H = HermLattice(f, [[f(Fraction(1, 4))]])
    with pytest.raises(TraceIntegralityError) as e:
        trace_lattice(H)
    assert e.value.pair == (0, 0)
    H2 = HermLattice(f, [[f(1), f(Fraction(1, 8))], [f(Fraction(1, 8)), f(1)]])
    assert H2.integrality_violation()[0] == (0, 1)


def test_registry_signatures_and_trace():
    A = make_named_hermitian("A_-1")
    assert A.rank == 4 and herm_signature(A) == (4, 0)
    LQ = trace_lattice(A)
    p = invariant_profile(LQ)
    assert p.even and p.determinant == 1 and p.signature == (8, 0)
    assert herm_signature(make_named_hermitian("Ex1")) == (1, 5)
    L_A2 = make_named_hermitian("L_A2")
    assert L_A2.field.d == -3 and L_A2.rank == 1
    assert [list(r) for r in trace_lattice(L_A2).int_gram()] == [[2, 1], [1, 2]]


def test_a_minus1_norm_one_vectors():
    A = make_named_hermitian("A_-1")
    vs = enumerate_herm_norm_vectors(A, 1)
    assert not vs.bounded
    assert len(vs) == 240
    assert all(A.norm(v) == 1 for v in vs)
    assert len(unit_orbits(A, vs)) == 60


def test_indefinite_enumeration_matches_box():
    H = make_named_hermitian("L_UU2(d=-1)")
    vs = enumerate_herm_norm_vectors(H, -1, bound=2)
    assert vs.bounded and vs.bound == 2
    expected = [r for r in z_vectors(H, 2) if herm_inner(H, r, r) == H.field(-1)]
    assert sorted(tuple(to_z_coords(H, v)) for v in vs) == \
        sorted(tuple(to_z_coords(H, v)) for v in expected)
    with pytest.raises(EnumerationLimitError):
        enumerate_herm_norm_vectors(H, -1, bound=2, limit=1)
    with pytest.raises(ValueError):
        enumerate_herm_norm_vectors(H, -1, bound=0)


def test_dual_membership():
    H = make_named_hermitian("L_D4(d=-1)")
    f = H.field
    # <e_1, e_2> = (1 - i)/2, so neither basis vector is in the dual
    assert not dual_membership(H, [f(1), f(0)])
    assert not dual_membership(H, [f(0), f(1)])
    assert dual_membership(H, [f(0), f(1)], 2)
    assert dual_membership(H, [f(0), f(1, 1)])     # (1 + i) e_2
    assert not dual_membership(H, [f(h), f(0)], 2)


def test_compose_errors():
    a = make_named_hermitian("L_D4(d=-1)")
    b = make_named_hermitian("L_D4(d=-2)")
    with pytest.raises(ValueError):
        herm_compose([(a, 1), (b, 1)])
    with pytest.raises(ValueError):
        herm_compose([(a, 0)])
    with pytest.raises(ValueError):
        herm_compose([])


def test_tau_on_root_is_unitary():
    H = make_named_hermitian("L_D4(d=-1)")
    f = H.field
    r = [f(1), f(0)]
    T = tau_reflection(H, r)
    assert is_integral_unitary(H, T)
    with pytest.raises(ValueError):
        tau_reflection(make_named_hermitian("L_UU(d=-1)"), [f(1), f(0)])


# --- properties ---------------------------------------------------------------

def _matmul(A, B):
    n, m, p = len(A), len(B), len(B[0])
    return [[sum((A[i][k] * B[k][j] for k in range(m)), A[0][0].field.zero)
             for j in range(p)] for i in range(n)]


@given(lattice_and_vectors(count=1))
def test_tau_involution_and_gram_preservation(p):
    H, (r,) = p
    if H.norm(r) == 0:
        return
    T = tau_reflection(H, r)
    f = H.field
    I = [[f.one if i == j else f.zero for j in range(H.rank)] for i in range(H.rank)]
    assert _matmul(T, T) == I
    # T^t G conj(T) = G
    G = [list(row) for row in H.gram]
    Tt = [list(col) for col in zip(*T)]
    Tc = [[x.conjugate() for x in row] for row in T]
    assert _matmul(_matmul(Tt, G), Tc) == G
    # r is sent to -r
    img = [sum((T[i][j] * r[j] for j in range(H.rank)), f.zero) for i in range(H.rank)]
    assert img == [-x for x in r]


@given(lattice_and_vectors())
def test_pairing_identity(p):
    H, (lam, z) = p
    LQ = trace_lattice(H)
    re, w = pairing_decomposition(H, lam, z)
    assert LQ.inner(to_z_coords(H, lam), to_z_coords(H, z)) == 2 * re
    v = herm_inner(H, lam, z)
    assert (v == H.field.zero) == (re == 0 and w == 0)


@given(lattice_and_vectors(), st.data())
def test_unit_isometry_of_trace_pairing(p, data):
    H, (x, y) = p
    u = data.draw(st.sampled_from(unit_group(H.field).elements))
    LQ = trace_lattice(H)
    ux = [u * c for c in x]
    uy = [u * c for c in y]
    assert LQ.inner(to_z_coords(H, ux), to_z_coords(H, uy)) == \
        LQ.inner(to_z_coords(H, x), to_z_coords(H, y))


@given(lattice_and_vectors(count=1))
def test_z_coords_roundtrip(p):
    H, (x,) = p
    assert from_z_coords(H, to_z_coords(H, x)) == x


@given(st.sampled_from(["Ex8", "Ex9", "L_D6", "Ex7(d=-2)"]), st.data())
def test_base_change_invariants(name, data):
    H = make_named_hermitian(name)
    P = data.draw(unimodular_of(H.field, H.rank))
    K = base_change(H, P)
    assert herm_signature(K) == herm_signature(H)
    a = invariant_profile(trace_lattice(H))
    b = invariant_profile(trace_lattice(K))
    assert a.nikulin_triple == b.nikulin_triple and a.determinant == b.determinant
