from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from hermlat.conditions import (ConditionStatus, box_vectors_with_norm, condition_minus_one,
                                condition_minus_two, gram_blocks, pairing_module,
                                real_integral_pairing_all, recheck_counterexample)
from hermlat.hlattice import HermLattice, herm_compose, to_z_coords
from hermlat.paperlab.catalog import make_named_hermitian
from hermlat.qfield import field_data
from oracles import (herm_inner, minus_one_violator, minus_two_violator,
                     real_integral_violation, z_vectors)
from strategies import herm_lattices

q = Fraction(1, 4)


def _quarter_lattice():
    f = field_data(-1)
    return HermLattice(f, [[f(-1), f(q)], [f(q), f(1)]])


def test_quarter_entry_violates_minus_one():
    H = _quarter_lattice()
    v = condition_minus_one(H, 1)
    assert v.status is ConditionStatus.VIOLATED and not v.passed
    assert v.bound_used == 1
    r = list(v.counterexample)
    assert H.norm(r) == -1
    assert max(abs(c) for c in to_z_coords(H, r)) <= 1
    assert recheck_counterexample(H, v)
    assert not (2 * v.witness).is_integral()
    assert minus_one_violator(H, 1) is not None
    js = v.to_json()
    assert js["status"] == "VIOLATED" and js["counterexample"] is not None


def test_sufficient_paths():
    for name in ["Ex1", "L_D4(d=-1)", "L_UU(d=-1)"]:
        v = condition_minus_one(make_named_hermitian(name), 3)
        assert v.status is ConditionStatus.VERIFIED_SUFFICIENT
        assert v.counterexample is None and v.bound_used is None
    f = field_data(-2)
    one_dim = HermLattice(f, [[f(-2)]])
    assert condition_minus_two(one_dim, 1).status is ConditionStatus.VERIFIED_SUFFICIENT
    g = field_data(-1)
    H = HermLattice(g, [[g(2), g(1, 1)], [g(1, -1), g(-2)]])
    assert condition_minus_two(H, 1).status is ConditionStatus.VERIFIED_SUFFICIENT


@pytest.mark.parametrize("name", ["L_D4(d=-1)", "L_UU(d=-1)", "L_D4(d=-2)"])
def test_sufficient_agrees_with_bound_two_search(name):
    H = make_named_hermitian(name)
    assert condition_minus_one(H, 2).status is ConditionStatus.VERIFIED_SUFFICIENT
    assert minus_one_violator(H, 2) is None


def test_ex5_minus_two_up_to_bound():
    H = make_named_hermitian("Ex5")
    v = condition_minus_two(H, 3)
    assert v.status is ConditionStatus.VERIFIED_UP_TO_BOUND
    assert v.bound_used == 3 and v.checked_vectors > 0
    # the rank-2 block alone is decided exactly
    assert real_integral_pairing_all(make_named_hermitian("L_UU2(d=-1)")) == (True, None)


def test_bound_must_be_positive():
    H = _quarter_lattice()
    with pytest.raises(ValueError):
        condition_minus_one(H, 0)
    with pytest.raises(ValueError):
        condition_minus_two(H, -1)


def test_gram_blocks():
    H = make_named_hermitian("Ex5")
    blocks = gram_blocks(H)
    assert sorted(i for b in blocks for i in b) == list(range(H.rank))
    for a in blocks:
        for b in blocks:
            if a is not b:
                assert all(H.gram[i][j] == H.field.zero for i in a for j in b)


def test_recheck_without_counterexample():
    v = condition_minus_one(make_named_hermitian("L_D4(d=-1)"), 1)
    assert not recheck_counterexample(make_named_hermitian("L_D4(d=-1)"), v)


def test_box_vectors_match_oracle():
    H = herm_compose([(_quarter_lattice(), 1), (make_named_hermitian("L_D4(d=-1)"), -1)])
    ours = box_vectors_with_norm(H, -1, 1)
    assert len(ours) > 0
    expected = sorted(tuple(to_z_coords(H, r)) for r in z_vectors(H, 1)
                      if herm_inner(H, r, r) == H.field(-1))
    assert ours == expected


# --- properties ---------------------------------------------------------------

@st.composite
def small_lattices(draw):
    return draw(herm_lattices(rank=draw(st.integers(1, 3))))


@given(small_lattices())
def test_minus_one_matches_brute_force(H):
    v = condition_minus_one(H, 1)
    bad = minus_one_violator(H, 1)
    assert (v.status is ConditionStatus.VIOLATED) == (bad is not None)
    if v.counterexample is not None:
        assert recheck_counterexample(H, v)
        assert minus_one_violator(H, 1) is not None


@given(small_lattices())
def test_minus_two_matches_brute_force(H):
    v = condition_minus_two(H, 1)
    bad = minus_two_violator(H, 1)
    assert (v.status is ConditionStatus.VIOLATED) == (bad is not None)
    if v.counterexample is not None:
        r = list(v.counterexample)
        assert H.norm(r) == -2 and real_integral_violation(H, r)
        assert recheck_counterexample(H, v)


@given(herm_lattices(rank=2), st.data())
def test_pairing_module_membership(H, data):
    f = H.field
    r = [f(data.draw(st.integers(-2, 2)), data.draw(st.integers(-2, 2))) for _ in range(H.rank)]
    l = [f(data.draw(st.integers(-3, 3)), data.draw(st.integers(-3, 3))) for _ in range(H.rank)]
    (a, b, c), scale = pairing_module(H, r)
    v = herm_inner(H, l, r)
    X, Y = v.a * scale, v.b * scale
    # <l, r> lies in the module spanned by (a, b) and (0, c)
    assert X.denominator == 1 and Y.denominator == 1
    if a:
        assert X % a == 0
        Y = Y - (X // a) * b
    else:
        assert X == 0
    assert (Y == 0) if c == 0 else (Y % c == 0)


@given(herm_lattices(rank=2, d=-1) | herm_lattices(rank=2, d=-2)
       | herm_lattices(rank=1, d=-3))
def test_real_integral_all_against_oracle(H):
    ok, r = real_integral_pairing_all(H)
    if ok:
        assert all(not real_integral_violation(H, z) for z in z_vectors(H, 1))
    else:
        assert real_integral_violation(H, list(r))
