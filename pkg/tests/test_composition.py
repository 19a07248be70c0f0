import pytest

from lietriples.composition import JordanAlgebraH3O, composition_algebra
from lietriples.errors import InvalidParameter


def test_quaternion_relations():
    h = composition_algebra(4)
    i, j, k = h.unit(1), h.unit(2), h.unit(3)
    assert h.mul(i, j) == k
    assert h.mul(j, i) == tuple(-a for a in k)
    assert h.mul(i, i) == tuple(-a for a in h.unit(0))


def test_octonion_imaginary_squares():
    o = composition_algebra(8)
    minus_one = tuple(-a for a in o.unit(0))
    for a in range(1, 8):
        assert o.mul(o.unit(a), o.unit(a)) == minus_one


def test_octonion_nonassociative():
    o = composition_algebra(8)
    assoc = o.associator(o.unit(1), o.unit(2), o.unit(4))
    assert any(c != 0 for c in assoc)


def test_octonion_norm_multiplicative_and_alternative():
    o = composition_algebra(8)
    for a in range(8):
        for b in range(8):
            x, y = o.unit(a), o.unit(b)
            assert o.norm(o.mul(x, y)) == o.norm(x) * o.norm(y)
            assert o.mul(x, o.mul(x, y)) == o.mul(o.mul(x, x), y)
            assert o.mul(o.mul(x, y), y) == o.mul(x, o.mul(y, y))


def test_invalid_dimension():
    with pytest.raises(InvalidParameter):
        composition_algebra(16)


def test_jordan_commutative_unital():
    j = JordanAlgebraH3O()
    one = j.unit_coords()
    for a in range(27):
        ua = tuple(1 if i == a else 0 for i in range(27))
        assert j.mul_coords(one, ua) == tuple(map(lambda x: x * 1, j.mul_coords(ua, one)))
        assert j.mul_coords(one, ua) == ua
    for a in range(27):
        for b in range(a + 1, 27):
            assert j.struct(a, b) == j.struct(b, a)


def test_jordan_identity_all_basis_pairs():
    # (x^2 o y) o x = x^2 o (y o x) for all basis x, y
    j = JordanAlgebraH3O()
    units = [tuple(1 if i == a else 0 for i in range(27)) for a in range(27)]
    for x in units:
        xx = j.mul_coords(x, x)
        for y in units:
            lhs = j.mul_coords(j.mul_coords(xx, y), x)
            rhs = j.mul_coords(xx, j.mul_coords(y, x))
            assert lhs == rhs
