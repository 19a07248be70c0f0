from fractions import Fraction

from lietriples.algebras import build_classical
from lietriples.composition import composition_algebra
from lietriples.derivations import (BUILD_SECONDS, f4, g2, g2_in_spin9_spinor,
                                    quaternion_derivations, so3max_in_so5,
                                    so3max_in_sp2, so3max_so5_matrices,
                                    so3max_sp2_matrices, spin7_twisted,
                                    spin8_in_f4, spin8_in_spin9_spinor,
                                    spin9_in_f4, spin9_spinor, su2_in_g2,
                                    su3_in_g2, u2_in_g2)
from lietriples.linalg import Matrix, rank_rows, is_positive_definite


def test_quaternion_derivations_dim3():
    d = quaternion_derivations()
    assert d.dim == 3 and d.matrix_size == 3


def test_g2_dim14_inside_so7():
    alg = g2()
    assert alg.dim == 14 and alg.matrix_size == 7
    for m in alg.basis:
        assert (m + m.transpose()).is_zero()   # contained in so(7)
    assert is_positive_definite(alg.gram)


def test_g2_leibniz_reverified():
    alg = g2()
    o = composition_algebra(8)
    # rebuild each derivation on the full octonions (zero on the real unit)
    for row in alg.basis[:4]:
        d = [[Fraction(0)] * 8 for _ in range(8)]
        for r in range(7):
            for c in range(7):
                d[r + 1][c + 1] = row.entries[r][c]
        for a in range(8):
            for b in range(8):
                xy = o.mul(o.unit(a), o.unit(b))
                lhs = tuple(sum(d[out][k] * xy[k] for k in range(8)) for out in range(8))
                dx = tuple(d[out][a] for out in range(8))
                dy = tuple(d[out][b] for out in range(8))
                rhs = tuple(x + y for x, y in zip(o.mul(dx, o.unit(b)),
                                                  o.mul(o.unit(a), dy)))
                assert lhs == rhs


def test_f4_dim52():
    alg = f4()
    assert alg.dim == 52 and alg.matrix_size == 27


def test_stabilizer_dims():
    assert su3_in_g2().dim == 8
    assert su2_in_g2().dim == 3
    assert u2_in_g2().dim == 4
    assert spin9_in_f4().dim == 36
    assert spin8_in_f4().dim == 28


def test_spinor_model():
    s9 = spin9_spinor()
    assert s9.dim == 36 and s9.matrix_size == 16
    assert spin7_twisted().dim == 21
    assert g2_in_spin9_spinor().dim == 14
    s8 = spin8_in_spin9_spinor()
    assert s8.dim == 28
    assert s8.space.contains_subspace(spin7_twisted().space)


def test_so3max_sp2_printed_basis():
    b1, b2, b3 = so3max_sp2_matrices()
    # the first two basis vectors bracket into the third exactly
    assert b1.bracket(b2) == b3
    # pairwise orthogonal for -tr(XY)
    for i, x in enumerate((b1, b2, b3)):
        for y in (b1, b2, b3)[i + 1:]:
            assert (x * y).trace() == 0
    sp2 = build_classical("sp", 2)
    sub = so3max_in_sp2(sp2)
    assert sub.dim == 3


def test_so3max_is_so3():
    # 3-dimensional, nonabelian, negative-definite Killing form
    sp2 = build_classical("sp", 2)
    sub = so3max_in_sp2(sp2)
    rows = sub.space.basis
    ads = [[sp2.bracket_coords(x, y) for y in rows] for x in rows]
    # express ad matrices in the subalgebra basis
    coords = [[sub.space.coordinates(v) for v in row] for row in ads]
    killing = []
    for i in range(3):
        for j in range(3):
            t = Fraction(0)
            for a in range(3):
                for b in range(3):
                    t += coords[i][a][b] * coords[j][b][a]
            killing.append(-t)
    k = Matrix([killing[0:3], killing[3:6], killing[6:9]])
    assert is_positive_definite(k)   # -Killing positive definite: compact so(3)


def test_so3max_so5_model():
    mats = so3max_so5_matrices()
    so5 = build_classical("so", 5)
    sub = so3max_in_so5(so5)
    assert sub.dim == 3
    for m in mats:
        assert (m + m.transpose()).is_zero()
    # irreducible 5-dimensional action: no invariant coordinate plane
    rows = [m.vec() for m in mats]
    assert rank_rows(rows, 25) == 3


def test_build_times_recorded():
    f4()
    assert "f4" in BUILD_SECONDS and BUILD_SECONDS["f4"] > 0
