from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from hermlat.qfield import (OmegaKind, field_data, format_rational,
                            is_in_scaled_ring, multiplicity_a, parse_rational, unit_group)
from strategies import FIELDS, field_elems


def test_field_data_conventions():
    f = field_data(-1)
    assert f.omega_kind is OmegaKind.SQRT_D and f.disc == -4
    assert f.omega * f.omega == f(-1)
    g = field_data(-3)
    assert g.omega_kind is OmegaKind.HALF_PLUS and g.disc == -3
    # w = (1 + sqrt(-3))/2 satisfies w^2 = w - 1
    assert g.omega * g.omega == g.omega - 1
    assert g.omega.conjugate() == g.one - g.omega
    assert field_data(-2).disc == -8
    assert field_data(-7).omega_kind is OmegaKind.HALF_PLUS


@pytest.mark.parametrize("bad", [0, 1, 5, -4, -8, -12])
def test_field_data_rejects(bad):
    with pytest.raises(ValueError):
        field_data(bad)


def test_field_data_type():
    with pytest.raises(TypeError):
        field_data(-1.0)


def test_sqrt_coords_roundtrip():
    for d in FIELDS:
        f = field_data(d)
        x = f.from_sqrt_coords(Fraction(1, 2), Fraction(-3, 4))
        assert x.sqrt_coords() == (Fraction(1, 2), Fraction(-3, 4))
        assert f.sqrt_d * f.sqrt_d == f(d)


def test_parse_rational():
    assert parse_rational("3/6") == Fraction(1, 2)
    assert parse_rational(" -7 ") == -7
    for bad in ["1/0", "0.5", "a", "1/2/3", ""]:
        with pytest.raises(ValueError):
            parse_rational(bad)
    assert format_rational(Fraction(-3, 4)) == "-3/4"
    assert format_rational(Fraction(4, 2)) == "2"


def test_units():
    assert unit_group(field_data(-1)).order == 4
    assert unit_group(field_data(-3)).order == 6
    assert unit_group(field_data(-2)).order == 2
    assert unit_group(field_data(-7)).order == 2
    assert [multiplicity_a(field_data(d)) for d in (-1, -2, -3, -7)] == [2, 1, 3, 1]
    g = field_data(-3)
    assert g.omega ** 3 == g(-1)
    for u in unit_group(g).elements:
        assert u.norm() == 1 and u.is_integral()


def test_scaled_ring():
    f = field_data(-1)
    assert is_in_scaled_ring(f(Fraction(1, 2), Fraction(1, 2)), 2)
    assert not is_in_scaled_ring(f(Fraction(1, 4), 0), 2)
    with pytest.raises(ValueError):
        is_in_scaled_ring(f.one, 0)
    g = field_data(-3)
    # (1 + sqrt(-3))/2 = w is integral
    assert g.from_sqrt_coords(Fraction(1, 2), Fraction(1, 2)).is_integral()
    assert not g.from_sqrt_coords(Fraction(1, 2), 0).is_integral()


def test_division_and_mixed_arithmetic():
    f = field_data(-2)
    x = f(1, 1)
    assert x * x.inverse() == f.one
    assert 1 / x == x.inverse()
    assert (x + 1) - 1 == x
    assert 2 * x == x + x
    with pytest.raises(ZeroDivisionError):
        f.zero.inverse()


def test_mixed_fields_rejected():
    with pytest.raises(ValueError):
        field_data(-1).one + field_data(-2).one


@st.composite
def pairs(draw):
    f = field_data(draw(st.sampled_from(FIELDS)))
    return draw(field_elems(f, den=2)), draw(field_elems(f, den=3))


@given(pairs())
def test_norm_trace_conjugation(p):
    x, y = p
    assert (x * y).norm() == x.norm() * y.norm()
    assert (x + y).trace() == x.trace() + y.trace()
    assert (x * y).conjugate() == x.conjugate() * y.conjugate()
    assert x.conjugate().conjugate() == x
    assert x * x.conjugate() == x.field(x.norm())
    z = complex(x.to_complex()) * complex(y.to_complex())
    assert abs((x * y).to_complex() - z) < 1e-9
