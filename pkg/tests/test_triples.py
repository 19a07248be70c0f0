from fractions import Fraction

import pytest

from lietriples.algebras import span_subalgebra, subalgebra_from_coords
from lietriples.catalog import build_triple, classical, diag_unit, family_block
from lietriples.errors import NotInP, NotNested, NotStrict
from lietriples.linalg import (Subspace, orthocomplement, subspace_intersect,
                               vec_add, vec_is_zero)
from lietriples.rng import RationalSampler
from lietriples.triples import (centralizer_in, commuting_pair_probe,
                                decompose_isotropy, dim_filters, is_fat,
                                is_strongly_fat, make_triple, search_fat,
                                transitivity_evidence, trivial_factor)

F = Fraction


def _so_chain():
    so4 = classical("so", 4)
    k = span_subalgebra(so4, family_block("so", 3, [0, 1, 2], 4), "so3")
    h = span_subalgebra(so4, family_block("so", 2, [0, 1], 4), "so2")
    return make_triple(so4, k, h)


def test_make_triple_so_chain_dims():
    t = _so_chain()
    assert t.m.dim == 2 and t.p.dim == 3


def test_make_triple_e1_dims():
    t = build_triple("E1")
    assert t.m.dim == 6 and t.p.dim == 7


def test_not_strict():
    so4 = classical("so", 4)
    k = span_subalgebra(so4, family_block("so", 3, [0, 1, 2], 4), "so3")
    k2 = span_subalgebra(so4, family_block("so", 3, [0, 1, 2], 4), "so3")
    with pytest.raises(NotStrict):
        make_triple(so4, k, k2)


def test_not_nested():
    so4 = classical("so", 4)
    k = span_subalgebra(so4, family_block("so", 2, [0, 1], 4), "so2")
    h = span_subalgebra(so4, family_block("so", 2, [2, 3], 4), "other")
    with pytest.raises(NotNested):
        make_triple(so4, k, h)


def test_projection_identity():
    t = build_triple("E2")
    rng = RationalSampler(31)
    for _ in range(8):
        v = rng.vector(t.g.dim, nonzero=False)
        parts = [t.proj(w, v) for w in ("h", "m", "p")]
        assert tuple(vec_add(vec_add(parts[0], parts[1]), parts[2])) == tuple(v)
        for i in range(3):
            for j in range(i + 1, 3):
                assert t.g.inner(parts[i], parts[j]) == 0


def test_generic_fat_in_so_chain():
    t = _so_chain()
    rng = RationalSampler(13)
    hits = 0
    for _ in range(12):
        a = rng.combination(t.p.basis)
        fat, kernel = is_fat(t, a)
        hits += fat
        # oracle: exhaustive kernel and direct intersection with m
        assert (subspace_intersect(kernel, t.m).dim == 0) == fat
    assert hits >= 6  # generic directions are fat


def test_not_in_p():
    t = _so_chain()
    with pytest.raises(NotInP):
        is_fat(t, t.k.space.basis[0])
    with pytest.raises(NotInP):
        is_fat(t, tuple([F(0)] * t.g.dim))


def test_strongly_fat_implies_fat_on_catalog_vectors():
    for entry in ("E1", "E2", "E3", "E5"):
        t = build_triple(entry)
        a = t.labels["fat_candidates"][0]
        strong, _ = is_strongly_fat(t, a)
        fat, _ = is_fat(t, a)
        assert strong and fat


def test_e1_e2_kernel_equals_h():
    for entry in ("E1", "E2"):
        t = build_triple(entry)
        a = t.labels["fat_candidates"][0]
        fat, kernel = is_fat(t, a)
        assert fat and kernel == t.h.space


def test_fat_bracket_mechanism():
    # for a certified fat A, [X, [X, A]] is nonzero for 50 seeded X in m
    t = build_triple("E2")
    a = t.labels["fat_candidates"][0]
    rng = RationalSampler(47)
    for _ in range(50):
        x = rng.combination(t.m.basis)
        assert not vec_is_zero(t.bracket(x, t.bracket(x, a)))


def test_m_p_invariance_exact():
    t = build_triple("T3-C-n2")
    for y in t.h.space.basis:
        for x in t.m.basis:
            assert t.m.coordinates(t.bracket(y, x)) is not None
    for y in t.k.space.basis:
        for w in t.p.basis:
            assert t.p.coordinates(t.bracket(y, w)) is not None


def test_search_fat_on_trivial_factor_fixture():
    # a trivial factor does not exclude fat vectors; the trivial vector
    # itself, however, commutes with all of m and is never fat
    t = build_triple("XTF-B2")
    factor = trivial_factor(t)
    assert factor is not None and factor.dim == 1
    fat, _ = is_fat(t, factor.basis[0])
    assert not fat
    w = search_fat(t, RationalSampler(1))
    assert w is not None  # directions off the factor are fat here


def test_trivial_factor_cases():
    assert trivial_factor(build_triple("E2")) is None      # base su(3) < g2
    assert trivial_factor(build_triple("E3")) is None
    t3 = build_triple("XTF-B3")
    f3 = trivial_factor(t3)
    assert f3 is not None and f3.dim == 3


def test_trivial_factor_central_k():
    # k spanned by the center of u(2): everything in p is fixed
    u2 = classical("u", 2)
    center = diag_unit("u", 2, 0) + diag_unit("u", 2, 1)
    k = span_subalgebra(u2, [center], "center")
    h = subalgebra_from_coords(u2, [], "0")
    t = make_triple(u2, k, h)
    f = trivial_factor(t)
    assert f is not None and f == t.p


def test_decompose_isotropy_components():
    smp = RationalSampler(1)
    comps = decompose_isotropy(build_triple("XB4"), smp)
    assert sorted(c.dim for c in comps) == [7, 8]
    comps = decompose_isotropy(build_triple("XB13"), smp)
    assert sorted(c.dim for c in comps) == [3, 4]
    comps = decompose_isotropy(build_triple("E2"), smp)
    assert [c.dim for c in comps] == [6]
    assert comps[0].certified_irreducible
    comps = decompose_isotropy(build_triple("B12"), smp)
    assert sorted(c.dim for c in comps) == [5, 8]


def test_dim_filters_arithmetic():
    smp = RationalSampler(1)
    # the 5+8 split of the B12 base gives the bound dim(m) < 3, not violated
    t = build_triple("B12")
    res = dim_filters(t, decompose_isotropy(t, smp))
    split = [b for b in res.bounds if b["kind"] == "split"]
    assert any(b["dim_p1"] == 5 and b["dim_p2"] == 8 for b in split)
    assert not res.refuted
    # plain arithmetic never fires on a thin sphere chain
    t2 = _so_chain()
    res2 = dim_filters(t2, decompose_isotropy(t2, smp))
    assert not res2.refuted


def test_dim_filters_refutes_fixtures():
    smp = RationalSampler(1)
    t4 = build_triple("XB4")
    res = dim_filters(t4, decompose_isotropy(t4, smp))
    assert res.refuted
    assert any(v["kind"] == "split" and v["dim_p2"] - v["dim_p1"] == 1
               for v in res.violations)
    t13 = build_triple("XB13")
    res13 = dim_filters(t13, decompose_isotropy(t13, smp))
    assert any(v["kind"] == "split" and (v["dim_p1"], v["dim_p2"]) == (3, 4)
               for v in res13.violations)


def test_transitivity_evidence():
    smp = RationalSampler(1)
    ev = transitivity_evidence(build_triple("T1-H-n2"), smp)
    assert ev.passed and ev.expected_rank == 7
    assert all(r["rank"] == 7 for r in ev.samples)
    ev2 = transitivity_evidence(build_triple("T8-n2"), smp)
    assert ev2.passed
    # a pair with a trivial factor: fixed directions are missing from images
    ev3 = transitivity_evidence(build_triple("XTF-B3"), smp)
    assert not ev3.passed
    assert any(r["rank"] < ev3.expected_rank for r in ev3.samples)


def test_commuting_pair_probe():
    smp = RationalSampler(1)
    t = build_triple("E2")
    assert commuting_pair_probe(t, t.p, smp).passed
    assert commuting_pair_probe(t, t.m, smp).passed
    # inside a trivial-factor p the probe finds an exact commuting pair
    t3 = build_triple("XTF-B3")
    pr = commuting_pair_probe(t3, t3.p, smp)
    assert not pr.passed and pr.found_pair is not None
    z, w = pr.found_pair
    assert vec_is_zero(t3.bracket(z, w))


def test_centralizer_in():
    t = _so_chain()
    a = t.p.basis[0]
    cent = centralizer_in(t, a, t.g.full_space())
    for row in cent.basis:
        assert vec_is_zero(t.bracket(row, a))
