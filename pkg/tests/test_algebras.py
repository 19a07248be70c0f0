from fractions import Fraction

import pytest

from lietriples.algebras import (build_classical, center, classical_dim,
                                 diagonal_embed, direct_sum, realify,
                                 matrix_mul_over, slope_embed_u1,
                                 span_subalgebra, stabilizer_subalgebra,
                                 summand_slices)
from lietriples.catalog import classical
from lietriples.derivations import g2
from lietriples.errors import InvalidParameter, NotClosed, ZeroSlope
from lietriples.linalg import Matrix, is_positive_definite, vec_is_zero
from lietriples.rng import RationalSampler

F = Fraction


def test_dimensions():
    assert build_classical("so", 3).dim == 3
    assert build_classical("sp", 2).dim == 10
    assert build_classical("sp", 2).matrix_size == 8
    assert build_classical("su", 3).dim == 8
    assert build_classical("u", 3).dim == 9


def test_su3_definiteness():
    su3 = build_classical("su", 3)
    for i in range(su3.dim):
        assert su3.gram.entries[i][i] > 0
    assert is_positive_definite(su3.gram)


def test_invalid_parameter():
    with pytest.raises(InvalidParameter):
        build_classical("so", 0)
    with pytest.raises(InvalidParameter):
        build_classical("sp", -1)
    with pytest.raises(InvalidParameter):
        build_classical("e8", 8)


def test_dependent_basis_rejected():
    m = Matrix([[0, 1], [-1, 0]])
    import lietriples.algebras as alg
    with pytest.raises(NotClosed):
        alg.LieAlgebra.from_basis("dep", [m, m.scale(F(2))])


def test_not_closed_rejected():
    # span{E12 - E21 in so(3), E13 - E31} is not bracket closed
    e12 = Matrix([[0, 1, 0], [-1, 0, 0], [0, 0, 0]])
    e13 = Matrix([[0, 0, 1], [0, 0, 0], [-1, 0, 0]])
    import lietriples.algebras as alg
    with pytest.raises(NotClosed):
        alg.LieAlgebra.from_basis("open", [e12, e13])


def test_realification_commutes_with_bracket():
    rng = RationalSampler(5)

    def rand_entries(n, d):
        return [[tuple(rng.rational() for _ in range(d)) for _ in range(n)]
                for _ in range(n)]

    for d in (2, 4):
        a = rand_entries(3, d)
        b = rand_entries(3, d)
        ab = matrix_mul_over(a, b, d)
        ba = matrix_mul_over(b, a, d)
        bracket_then_realify = realify(
            [[tuple(x - y for x, y in zip(ab[r][c], ba[r][c]))
              for c in range(3)] for r in range(3)], d)
        realify_then_bracket = realify(a, d).bracket(realify(b, d))
        assert bracket_then_realify == realify_then_bracket


def test_direct_sum_structure():
    so3 = build_classical("so", 3)
    su2 = build_classical("su", 2)
    s = direct_sum(so3, su2)
    assert s.dim == 6 and s.matrix_size == 7
    assert summand_slices(s) == [(0, 3, 0), (3, 6, 3)]
    # cross brackets vanish
    for i in range(3):
        for j in range(3, 6):
            assert vec_is_zero(s.bracket_coords(s._unit(i), s._unit(j)))
    # gram is block diagonal and positive definite
    assert is_positive_definite(s.gram)


def test_slope_embedding():
    u1 = build_classical("u", 1)
    t2 = direct_sum(u1, u1)
    e0 = t2._unit(0)
    e1 = t2._unit(1)
    sub = slope_embed_u1(t2, e0, e1, 1, 1)
    assert sub.dim == 1
    assert sub.space.contains(tuple(a + b for a, b in zip(e0, e1)))
    # slopes are reduced to coprime form
    sub2 = slope_embed_u1(t2, e0, e1, 2, 2)
    assert sub2.space == sub.space
    with pytest.raises(ZeroSlope):
        slope_embed_u1(t2, e0, e1, 0, 0)


def test_diagonal_embedding():
    so3 = build_classical("so", 3)
    s = direct_sum(so3, so3)
    d = diagonal_embed(s)
    assert d.dim == 3


def test_stabilizer_of_spanning_set_is_zero():
    alg = g2()
    fixed = [tuple(F(1) if i == j else F(0) for i in range(7)) for j in range(7)]
    stab = stabilizer_subalgebra(alg, fixed)
    assert stab.dim == 0


def test_center():
    u2 = build_classical("u", 2)
    z = center(u2)
    assert z.dim == 1
    su2 = build_classical("su", 2)
    assert center(su2).dim == 0


def test_coords_roundtrip():
    sp2 = classical("sp", 2)
    rng = RationalSampler(9)
    v = rng.vector(sp2.dim)
    m = sp2.element(v)
    assert sp2.coords_of(m) == tuple(v)
    assert sp2.coords_of(Matrix.identity(8)) is None  # identity is not in sp(2)
