from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from lietriples.errors import DegenerateForm, DimensionMismatch
from lietriples.linalg import (Matrix, SparseEchelon, Subspace,
                               is_positive_definite, nullspace_rows,
                               orthocomplement, project, rank_rows, rref,
                               rref_rows, solve, subspace_intersect,
                               subspace_sum)
from lietriples.rng import RationalSampler

F = Fraction


def test_rref_identity():
    m, rank, piv = rref(Matrix.identity(3))
    assert m == Matrix.identity(3) and rank == 3 and piv == [0, 1, 2]


def test_rref_zero():
    m, rank, piv = rref(Matrix.zero(2, 4))
    assert m == Matrix.zero(2, 4) and rank == 0 and piv == []


def test_rref_proportional_rows():
    m, rank, piv = rref(Matrix([[1, 2], [2, 4]]))
    assert rank == 1
    assert m.entries[0] == (F(1), F(2)) and m.entries[1] == (F(0), F(0))


def test_rref_idempotent_on_samples():
    rng = RationalSampler(3)
    for _ in range(25):
        rows = [rng.vector(5, nonzero=False) for _ in range(4)]
        r1, rank1, piv1 = rref_rows(rows, 5)
        r2, rank2, piv2 = rref_rows(r1, 5)
        assert r1 == r2 and rank1 == rank2 and piv1 == piv2


def test_nullspace_identity_and_zero():
    assert nullspace_rows(Matrix.identity(4).entries, 4) == []
    full = nullspace_rows(Matrix.zero(3, 5).entries, 5)
    assert Subspace.from_rows(full, 5) == Subspace.full(5)


def test_nullspace_single_constraint():
    ns = Subspace.from_rows(nullspace_rows([(1, 1, 0)], 3), 3)
    assert ns.dim == 2
    assert ns.contains((F(1), F(-1), F(0))) and ns.contains((F(0), F(0), F(1)))


def test_solve_inconsistent():
    assert solve([(1, 0), (1, 0)], 2, (1, 2)) is None
    assert solve([(1, 0), (0, 1)], 2, (5, 7)) == (F(5), F(7))


def test_orthocomplement_euclidean():
    got = orthocomplement(Subspace.from_rows([(1, 0, 0)], 3),
                          Subspace.full(3), Matrix.identity(3))
    assert got == Subspace.from_rows([(0, 1, 0), (0, 0, 1)], 3)


def test_intersect_planes():
    u = Subspace.from_rows([(1, 0, 0), (0, 1, 0)], 3)
    v = Subspace.from_rows([(0, 1, 0), (0, 0, 1)], 3)
    got = subspace_intersect(u, v)
    assert got == Subspace.from_rows([(0, 1, 0)], 3)


def test_dimension_formula_on_random_subspaces():
    # dim(U+V) + dim(U cap V) = dim U + dim V, ambient dim <= 12
    rng = RationalSampler(11)
    for trial in range(30):
        n = 3 + trial % 10
        u = Subspace.from_rows([rng.vector(n, nonzero=False) for _ in range(3)], n)
        v = Subspace.from_rows([rng.vector(n, nonzero=False) for _ in range(3)], n)
        s = subspace_sum(u, v)
        i = subspace_intersect(u, v)
        assert s.dim + i.dim == u.dim + v.dim


def test_projection_split_exact():
    rng = RationalSampler(17)
    n = 6
    gram = Matrix.identity(n)
    u = Subspace.from_rows([rng.vector(n) for _ in range(2)], n)
    w = Subspace.full(n)
    uperp = orthocomplement(u, w, gram)
    for _ in range(10):
        v = rng.vector(n, nonzero=False)
        a = project(v, u, gram)
        b = project(v, uperp, gram)
        assert tuple(x + y for x, y in zip(a, b)) == tuple(map(F, v))
        assert sum(x * y for x, y in zip(a, b)) == 0
        assert project(a, u, gram) == a  # idempotent


def test_degenerate_form_rejected():
    gram = Matrix([[1, 0], [0, 0]])
    with pytest.raises(DegenerateForm):
        orthocomplement(Subspace.from_rows([(1, 0)], 2), Subspace.full(2), gram)


def test_dimension_mismatch():
    with pytest.raises(DimensionMismatch):
        subspace_sum(Subspace.full(2), Subspace.full(3))


@given(st.lists(st.lists(st.integers(-6, 6), min_size=4, max_size=4),
                min_size=1, max_size=5))
@settings(max_examples=60, deadline=None)
def test_rref_canonical_and_kernel(rows):
    rr, rank, piv = rref_rows(rows, 4)
    assert len(rr) == rank == len(piv)
    # pivots are 1 with zeros above and below
    for r, pc in zip(rr, piv):
        assert r[pc] == 1
        for other in rr:
            if other is not r:
                assert other[pc] == 0
    # rank-nullity
    assert rank + len(nullspace_rows(rows, 4)) == 4


def test_positive_definite():
    assert is_positive_definite(Matrix([[2, 1], [1, 2]]))
    assert not is_positive_definite(Matrix([[1, 2], [2, 1]]))
    assert not is_positive_definite(Matrix([[0, 0], [0, 1]]))


def test_sparse_echelon_matches_dense():
    rng = RationalSampler(23)
    for _ in range(10):
        rows = [[int(rng.rational() * 6) for _ in range(7)] for _ in range(5)]
        ech = SparseEchelon(7)
        for r in rows:
            ech.add_row({c: v for c, v in enumerate(r) if v})
        assert ech.rank == rank_rows(rows, 7)
        ns = ech.nullspace()
        assert len(ns) == 7 - ech.rank
        for v in ns:
            for r in rows:
                assert sum(a * b for a, b in zip(r, v)) == 0
