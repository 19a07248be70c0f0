"""The built-in catalog of nested triples and fixtures.

Each entry rebuilds the identical triple on every run (canonical bases,
deterministic constructions), carries the expected verdict, and attaches:

  * base/fiber pair tags consumed by the certificate,
  * precomputed fat-vector candidates where a distinguished one exists,
  * scripted witness constructions for the per-A refutation fixtures.

Entry id conventions: T1/T3/T4/T5 families follow the classical bundle
constructions over R, C, H (T5 circles carry their slope, T5P is the
trace-zero variant, T8 the flag variant); E1..E5 are the five exceptional
positive triples (aliases ThmE-1..5 accepted); B11/B12/B16 are the named
negative cases; XB*/XTF* are synthetic fixtures exercising the dimension
filters and the trivial-factor test; X-CH-* are product extensions.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Callable

from .algebras import (LieAlgebra, Subalgebra, build_classical,
                       centralizer_space, complex_block, direct_sum,
                       pad_coords, quat_block, span_subalgebra,
                       subalgebra_from_coords, summand_slices,
                       transport_space)
from .composition import composition_algebra
from .derivations import (f4, g2, g2_in_spin9_spinor, jordan_h3o,
                          so3max_in_so5, so3max_in_sp2, so3max_so5_matrices,
                          so3max_sp2_matrices, spin7_twisted, spin8_in_f4,
                          spin8_in_spin9_spinor, spin9_in_f4, spin9_spinor,
                          su2_in_g2, su3_in_g2, u2_in_g2)
from .errors import InvalidParameter, UnknownEntry
from .linalg import (Matrix, Subspace, nullspace_rows, solve,
                     subspace_intersect, vec_is_zero, vec_sub)
from .reduction import cheeger_extend
from .refuters import a_kernel_in_p
from .triples import NestedTriple, centralizer_in, lin_indep, make_triple
from .triples import _projector_matrix

ZERO = Fraction(0)
ONE = Fraction(1)

POSITIVE = "positive"
NOT_POSITIVE = "not_positive"


@dataclass(frozen=True)
class CatalogEntry:
    id: str
    label: str
    expected: str
    build: Callable[[], NestedTriple]


# ---------------------------------------------------------------------------
# embedding helpers
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def classical(family: str, n: int) -> LieAlgebra:
    return build_classical(family, n)


def _embed_realified(mat: Matrix, unit_dim: int, positions, n_total: int) -> Matrix:
    m = mat.rows // unit_dim
    size = n_total * unit_dim
    out = [[ZERO] * size for _ in range(size)]
    for br in range(m):
        for bc in range(m):
            for i in range(unit_dim):
                for j in range(unit_dim):
                    v = mat.entries[br * unit_dim + i][bc * unit_dim + j]
                    if v:
                        out[positions[br] * unit_dim + i][positions[bc] * unit_dim + j] = v
    return Matrix(out)


def family_block(family: str, m: int, positions, n_total: int):
    """Matrices of family(m) embedded at the given diagonal positions."""
    if family == "so" and m < 2:
        return []
    if family == "su" and m < 2:
        return []
    sub = classical(family, m)
    d = sub.meta["unit_dim"]
    return [_embed_realified(b, d, tuple(positions), n_total) for b in sub.basis]


_UNIT_DIM = {"so": 1, "u": 2, "su": 2, "sp": 4}


def diag_unit(family: str, n_total: int, pos: int, unit: int = 1) -> Matrix:
    """Realified matrix with imaginary unit `unit` at diagonal position pos."""
    d = _UNIT_DIM[family]
    size = n_total * d
    out = [[ZERO] * size for _ in range(size)]
    uvec = [ZERO] * d
    uvec[unit] = ONE
    block = complex_block(tuple(uvec)) if d == 2 else quat_block(tuple(uvec))
    for i in range(d):
        for j in range(d):
            out[pos * d + i][pos * d + j] = block[i][j]
    return Matrix(out)


def offdiag_unit(family: str, n_total: int, r: int, c: int, unit: int = 0) -> Matrix:
    """Skew-Hermitian generator with unit u at (r, c) and -conj(u) at (c, r)."""
    d = _UNIT_DIM[family]
    size = n_total * d
    out = [[ZERO] * size for _ in range(size)]
    if d == 1:
        out[r][c] = ONE
        out[c][r] = -ONE
        return Matrix(out)
    uvec = [ZERO] * d
    uvec[unit] = ONE
    cvec = [uvec[0]] + [-x for x in uvec[1:]]
    blk = complex_block(tuple(uvec)) if d == 2 else quat_block(tuple(uvec))
    nblk = complex_block(tuple(-x for x in cvec)) if d == 2 \
        else quat_block(tuple(-x for x in cvec))
    for i in range(d):
        for j in range(d):
            out[r * d + i][c * d + j] = blk[i][j]
            out[c * d + i][r * d + j] = nblk[i][j]
    return Matrix(out)


def _mat_sum(mats):
    out = mats[0]
    for m in mats[1:]:
        out = out + m
    return out


def _pad_matrix(mat: Matrix, offset: int, total: int) -> Matrix:
    out = [[ZERO] * total for _ in range(total)]
    for r, row in enumerate(mat.entries):
        for c, v in enumerate(row):
            if v:
                out[offset + r][offset + c] = v
    return Matrix(out)


def _zero_sub(g: LieAlgebra, name: str) -> Subalgebra:
    return subalgebra_from_coords(g, [], name)


def _tags(base_row=None, base_n=None, fiber_row=None, fiber_n=None,
          modulo_ideal=False):
    labels = {}
    if base_row is not None:
        labels["base_tag"] = {"row": base_row, "n": base_n,
                              "modulo_ideal": modulo_ideal}
    if fiber_row is not None:
        labels["fiber_tag"] = {"row": fiber_row, "n": fiber_n}
    return labels


# recipe helpers for distinguished fat vectors --------------------------------

def _p_killing(T: NestedTriple, v):
    """Basis of {A in p : (matrix of A) v = 0}."""
    mats = [T.g.element(r) for r in T.p.basis]
    imgs = [m.matvec(v) for m in mats]
    rows = [[imgs[i][out] for i in range(T.p.dim)]
            for out in range(T.g.matrix_size)]
    sols = nullspace_rows(rows, T.p.dim)
    return [T.p.lincomb(s) for s in sols]


def _p_moving(T: NestedTriple, v, target):
    """One A in p with (matrix of A) v = target, or None."""
    mats = [T.g.element(r) for r in T.p.basis]
    imgs = [m.matvec(v) for m in mats]
    rows = [[imgs[i][out] for i in range(T.p.dim)]
            for out in range(T.g.matrix_size)]
    coeffs = solve(rows, T.p.dim, target)
    return None if coeffs is None else T.p.lincomb(coeffs)


def _unit_col(n, i):
    return tuple(ONE if j == i else ZERO for j in range(n))


# ---------------------------------------------------------------------------
# classical-family recipes
# ---------------------------------------------------------------------------

def _t1_real(n):
    g = classical("so", n + 1)
    k = span_subalgebra(g, family_block("so", n, range(1, n + 1), n + 1), "so")
    h_mats = family_block("so", n - 1, range(2, n + 1), n + 1)
    h = (span_subalgebra(g, h_mats, "so") if h_mats else _zero_sub(g, "so(1)"))
    labels = _tags(base_row=1, base_n=n, fiber_row=1, fiber_n=n - 1)
    labels["id"] = f"T1-R-n{n}"
    return make_triple(g, k, h, labels)


def _t1_complex(n):
    g = classical("u", n + 1)
    k = span_subalgebra(
        g, [diag_unit("u", n + 1, 0)] + family_block("u", n, range(1, n + 1), n + 1), "k")
    h_mats = [diag_unit("u", n + 1, 0) + diag_unit("u", n + 1, 1)]
    h_mats += family_block("u", n - 1, range(2, n + 1), n + 1)
    h = span_subalgebra(g, h_mats, "h")
    labels = _tags(base_row=7, base_n=n, fiber_row=14, fiber_n=n - 1,
                   modulo_ideal=True)
    labels["id"] = f"T1-C-n{n}"
    return make_triple(g, k, h, labels)


def _t1_quat(n):
    g = classical("sp", n + 1)
    k = span_subalgebra(
        g, family_block("sp", 1, [0], n + 1) + family_block("sp", n, range(1, n + 1), n + 1), "k")
    h_mats = [diag_unit("sp", n + 1, 0, u) + diag_unit("sp", n + 1, 1, u)
              for u in (1, 2, 3)]
    h_mats += family_block("sp", n - 1, range(2, n + 1), n + 1)
    h = span_subalgebra(g, h_mats, "h")
    labels = _tags(base_row=9, base_n=n, fiber_row=16, fiber_n=n - 1)
    labels["id"] = f"T1-H-n{n}"
    return make_triple(g, k, h, labels)


def _t3(family, n=2):
    g = classical(family, n + 1)
    k = span_subalgebra(
        g, family_block(family, 1, [0], n + 1) + family_block(family, n, range(1, n + 1), n + 1), "k")
    h_mats = (family_block(family, 1, [0], n + 1)
              + family_block(family, 1, [1], n + 1)
              + family_block(family, n - 1, range(2, n + 1), n + 1))
    h = span_subalgebra(g, h_mats, "h")
    if family == "u":
        labels = _tags(base_row=7, base_n=n, fiber_row=1, fiber_n=2,
                       modulo_ideal=True)
    else:
        labels = _tags(base_row=9, base_n=n, fiber_row=9, fiber_n=1)
    labels["id"] = f"T3-{'C' if family == 'u' else 'H'}-n{n}"
    return make_triple(g, k, h, labels)


def _t4(n):
    g = classical("sp", n + 1)
    k = span_subalgebra(
        g, family_block("sp", 1, [0], n + 1) + family_block("sp", n, range(1, n + 1), n + 1), "k")
    h_mats = family_block("sp", 1, [0], n + 1) + family_block("sp", n - 1, range(2, n + 1), n + 1)
    h = span_subalgebra(g, h_mats, "h")
    labels = _tags(base_row=9, base_n=n, fiber_row=3, fiber_n=n - 1)
    labels["id"] = f"T4-n{n}"
    return make_triple(g, k, h, labels)


def _e4(n=2):
    g = classical("sp", n + 1)
    k = span_subalgebra(
        g, family_block("sp", 1, [0], n + 1) + family_block("sp", n, range(1, n + 1), n + 1), "k")
    h_mats = (family_block("sp", 1, [0], n + 1) + [diag_unit("sp", n + 1, 1)]
              + family_block("sp", n - 1, range(2, n + 1), n + 1))
    h = span_subalgebra(g, h_mats, "h")
    labels = _tags(base_row=9, base_n=n, fiber_row=8, fiber_n=n - 1)
    labels["id"] = "E4"
    return make_triple(g, k, h, labels)


def _t5(n, ks, ls, trace_zero=False):
    if ks == 0 and ls == 0:
        raise InvalidParameter("slope (0,0) excluded")
    if not trace_zero:
        g = classical("u", n + 1)
        k = span_subalgebra(
            g, [diag_unit("u", n + 1, 0)] + family_block("u", n, range(1, n + 1), n + 1), "k")
        circle = diag_unit("u", n + 1, 0).scale(Fraction(ks)) \
            + diag_unit("u", n + 1, 1).scale(Fraction(ls))
        h_mats = [circle] + family_block("u", n - 1, range(2, n + 1), n + 1)
    else:
        g = classical("su", n + 1)
        center_k = _mat_sum([diag_unit("u", n + 1, 0).scale(Fraction(n))]
                            + [diag_unit("u", n + 1, p).scale(Fraction(-1))
                               for p in range(1, n + 1)])
        k = span_subalgebra(
            g, [center_k] + family_block("su", n, range(1, n + 1), n + 1), "k")
        c = Fraction(-(ks + ls), n - 1) if n > 1 else None
        circle = _mat_sum([diag_unit("u", n + 1, 0).scale(Fraction(ks)),
                           diag_unit("u", n + 1, 1).scale(Fraction(ls))]
                          + [diag_unit("u", n + 1, p).scale(c)
                             for p in range(2, n + 1)])
        h_mats = [circle] + family_block("su", n - 1, range(2, n + 1), n + 1)
    h = span_subalgebra(g, h_mats, "h")
    labels = _tags(base_row=7, base_n=n, fiber_row=14, fiber_n=n - 1,
                   modulo_ideal=not trace_zero)
    tag = f"k{ks}l{ls}".replace("-", "m")
    labels["id"] = f"{'T5P' if trace_zero else 'T5'}-n{n}-{tag}"
    labels["slope"] = [ks, ls]
    return make_triple(g, k, h, labels)


def _t8(n=2):
    g = classical("su", n + 1)
    center_k = _mat_sum([diag_unit("u", n + 1, 0).scale(Fraction(n))]
                        + [diag_unit("u", n + 1, p).scale(Fraction(-1))
                           for p in range(1, n + 1)])
    k = span_subalgebra(
        g, [center_k] + family_block("su", n, range(1, n + 1), n + 1), "k")
    h_mats = [diag_unit("u", n + 1, p) - diag_unit("u", n + 1, p + 1)
              for p in range(n)]
    h = span_subalgebra(g, h_mats, "torus")
    labels = _tags(base_row=7, base_n=n, fiber_row=1, fiber_n=2)
    labels["id"] = f"T8-n{n}"
    return make_triple(g, k, h, labels)


# ---------------------------------------------------------------------------
# exceptional recipes
# ---------------------------------------------------------------------------

def _e1():
    so7 = classical("so", 7)
    G2 = g2()
    k = span_subalgebra(so7, G2.basis, "g2")
    h_space = transport_space(su3_in_g2().space, G2, so7)
    h = subalgebra_from_coords(so7, h_space.basis, "su3")
    labels = _tags(base_row=5, base_n=None, fiber_row=6, fiber_n=None)
    labels["id"] = "E1"
    T = make_triple(so7, k, h, labels)
    cands = _p_killing(T, _unit_col(7, 0))
    assert len(cands) == 1
    T.labels["fat_candidates"] = (tuple(cands[0]),)
    return T


def _g2_triple(h_sub: Subalgebra, ident, fiber_row, fiber_n):
    G2 = g2()
    k = subalgebra_from_coords(G2, su3_in_g2().space.basis, "su3")
    h = subalgebra_from_coords(G2, h_sub.space.basis, h_sub.name)
    labels = _tags(base_row=6, base_n=None, fiber_row=fiber_row, fiber_n=fiber_n)
    labels["id"] = ident
    T = make_triple(G2, k, h, labels)
    a = _p_moving(T, _unit_col(7, 0), _unit_col(7, 1))
    assert a is not None
    T.labels["fat_candidates"] = (tuple(a),)
    return T


def _e2():
    return _g2_triple(su2_in_g2(), "E2", fiber_row=2, fiber_n=2)


def _e3():
    return _g2_triple(u2_in_g2(), "E3", fiber_row=7, fiber_n=2)


def _e5():
    g = classical("sp", 3)
    k = span_subalgebra(
        g, family_block("sp", 2, [0, 1], 3) + family_block("sp", 1, [2], 3), "k")
    h_mats = [_pad_matrix(m, 0, 12) for m in so3max_sp2_matrices()]
    h = span_subalgebra(g, h_mats + family_block("sp", 1, [2], 3), "so3max+sp1")
    labels = _tags(base_row=9, base_n=2, fiber_row=11, fiber_n=None)
    labels["id"] = "E5"
    T = make_triple(g, k, h, labels)
    a = g.coords_of(offdiag_unit("sp", 3, 0, 2, 0))
    assert a is not None and T.p.coordinates(a) is not None
    T.labels["fat_candidates"] = (tuple(a),)
    return T


def _t2p():
    F4 = f4()
    k = subalgebra_from_coords(F4, spin9_in_f4().space.basis, "spin9")
    h = subalgebra_from_coords(F4, spin8_in_f4().space.basis, "spin8")
    labels = _tags(base_row=10, base_n=None, fiber_row=1, fiber_n=8)
    labels["id"] = "T2P"
    return make_triple(F4, k, h, labels)


def _cheeger_g2(slope):
    base = build_triple("E2")
    G2 = base.g
    su2_space = base.h.space
    circle = subspace_intersect(centralizer_space(G2, su2_space), base.k.space)
    assert circle.dim == 1
    ext, a_new = cheeger_extend(base, "u1", slope, [circle.basis[0]],
                                fat_vector=base.labels["fat_candidates"][0])
    ext.labels["id"] = f"X-CH-G2-{slope[0]}{slope[1]}"
    ext.labels["fat_candidates"] = (a_new,)
    return ext


def _cheeger_t4_sp1():
    base = build_triple("T4-n2")
    g = base.g
    iota_rows = []
    for u in (1, 2, 3):
        c = g.coords_of(diag_unit("sp", 3, 1, u))
        assert c is not None
        iota_rows.append(c)
    ext, _ = cheeger_extend(base, "sp1", (1, 1), iota_rows)
    ext.labels["id"] = "X-CH-T4-SP1"
    return ext


# ---------------------------------------------------------------------------
# negative fixtures
# ---------------------------------------------------------------------------

def _b11():
    so5 = classical("so", 5)
    mats = so3max_so5_matrices()
    k = span_subalgebra(so5, mats, "so3max")
    h = span_subalgebra(so5, [mats[0]], "so2")
    labels = _tags(base_row=11, base_n=None, fiber_row=1, fiber_n=2)
    labels["id"] = "B11"
    labels["family_replay"] = True
    T = make_triple(so5, k, h, labels)

    # intermediate so(2)+so(3) containing a torus through h: the generator
    # rotates the (u1, u4) plane at speed 2 and (u2, u3) at speed 1
    inter_mats = [offdiag_unit("so", 5, 0, 3),
                  offdiag_unit("so", 5, 1, 2),
                  offdiag_unit("so", 5, 1, 4),
                  offdiag_unit("so", 5, 2, 4)]
    inter_rows = [so5.coords_of(m) for m in inter_mats]
    inter = Subspace.from_rows(inter_rows, so5.dim)
    assert inter.coordinates(so5.coords_of(mats[0])) is not None, \
        "the circle must lie in the intermediate subalgebra"
    from .linalg import orthocomplement
    l_space = orthocomplement(inter, so5.full_space(), so5.gram)
    wspace = subspace_intersect(l_space, T.p)
    assert wspace.dim >= 4

    def b11_refuter(Tr, a, rng):
        fspace = a_kernel_in_p(Tr, a)
        cap = subspace_intersect(fspace, wspace)
        cands = list(cap.basis)
        if cap.dim:
            cands += [rng.combination(cap.basis) for _ in range(4)]
        for w in cands:
            if vec_is_zero(w):
                continue
            cent = centralizer_in(Tr, w, Tr.mp)
            for z in cent.basis:
                if lin_indep(z, w):
                    yield z, w, "kernel-meets-symmetric-space-slice"
                    break

    T.extras["family_refuter"] = b11_refuter
    T.extras["b11_wspace"] = wspace
    return T


@lru_cache(maxsize=None)
def _sp_in_su_matrices(n):
    """sp(n) embedded in su(2n): q = z + w j -> [[z, w], [-conj w, conj z]]."""
    sp = classical("sp", n)
    quat = composition_algebra(4)
    out = []
    for b in sp.basis:
        cx = [[(ZERO, ZERO)] * (2 * n) for _ in range(2 * n)]
        for r in range(n):
            for c in range(n):
                # read the quaternion back off the realified 4x4 block
                q = tuple(b.entries[4 * r + i][4 * c] for i in range(4))
                z = (q[0], q[1])
                w = (q[2], q[3])
                cx[r][c] = z
                cx[r][n + c] = w
                cx[n + r][c] = (-w[0], w[1])
                cx[n + r][n + c] = (z[0], -z[1])
        out.append(cx)
    return out


def _b12():
    su5 = classical("su", 5)
    sp2_cx = _sp_in_su_matrices(2)
    sp2_mats = [_pad_complex_into(cx, 5) for cx in sp2_cx]
    u1 = _mat_sum([diag_unit("u", 5, p) for p in range(4)]
                  + [diag_unit("u", 5, 4).scale(Fraction(-4))])
    k = span_subalgebra(su5, sp2_mats + [u1], "sp2+u1")
    h = span_subalgebra(su5, sp2_mats, "sp2")
    labels = _tags(base_row=12, base_n=None, fiber_row=1, fiber_n=1)
    labels["id"] = "B12"
    return make_triple(su5, k, h, labels)


def _pad_complex_into(cx, n_total):
    from .algebras import realify
    m = len(cx)
    zero = (ZERO, ZERO)
    full = [[zero] * n_total for _ in range(n_total)]
    for r in range(m):
        for c in range(m):
            full[r][c] = cx[r][c]
    return realify(full, 2)


def _b16(n=2):
    sp_big = classical("sp", n + 1)
    sp1 = classical("sp", 1)
    g = direct_sum(sp_big, sp1, name=f"sp({n + 1})+sp(1)")
    size = g.matrix_size
    off2 = sp_big.matrix_size

    def into_big(m):
        return _pad_matrix(m, 0, size)

    def into_sp1(u):
        return _pad_matrix(diag_unit("sp", 1, 0, u), off2, size)

    sp_n_mats = [into_big(m) for m in family_block("sp", n, range(n), n + 1)]
    diag_mats = [into_big(diag_unit("sp", n + 1, n, u)) + into_sp1(u)
                 for u in (1, 2, 3)]
    k = span_subalgebra(g, sp_n_mats + diag_mats, "sp(n)+diag sp1")
    h = span_subalgebra(g, sp_n_mats + [diag_mats[0]], "sp(n)+u1")
    labels = _tags(base_row=16, base_n=n, fiber_row=1, fiber_n=2)
    labels["id"] = "B16"
    labels["family_replay"] = True
    T = make_triple(g, k, h, labels)

    p1_rows = []
    for r in range(n):
        for u in range(4):
            c = g.coords_of(into_big(offdiag_unit("sp", n + 1, r, n, u)))
            assert c is not None
            p1_rows.append(c)
    p1_space = Subspace.from_rows(p1_rows, g.dim)
    sep_rows = [g.coords_of(into_sp1(u)) for u in (1, 2, 3)]
    sep_space = Subspace.from_rows(sep_rows, g.dim)
    lastdiag_rows = [g.coords_of(into_big(diag_unit("sp", n + 1, n, u)))
                     for u in (1, 2, 3)]
    circle = g.coords_of(into_big(diag_unit("sp", n + 1, n, 1)) + into_sp1(1))
    p1_proj = _projector_matrix(p1_space, g.gram, g.dim)

    def b16_refuter(Tr, a, rng):
        w_part = p1_proj.matvec(a)
        iw = Tr.bracket(circle, w_part)  # the circle action on the fiber slot
        row = [[Tr.g.inner(prow, iw) for prow in p1_rows]]
        sols = nullspace_rows(row, len(p1_rows))
        vrows = []
        for s in sols:
            v = [ZERO] * Tr.g.dim
            for ci, prow in zip(s, p1_rows):
                if ci:
                    v = [x + ci * y for x, y in zip(v, prow)]
            vrows.append(tuple(v))
        vspace = Subspace.from_rows(vrows, Tr.g.dim)
        cands = list(vspace.basis) + [rng.combination(vspace.basis)
                                      for _ in range(6)]
        for v in cands:
            if vec_is_zero(v):
                continue
            d = Tr.bracket(w_part, v)
            coeffs = []
            for ld in lastdiag_rows:
                coeffs.append(Tr.g.inner(d, ld) / Tr.g.inner(ld, ld))
            p_quat = [ZERO, coeffs[1], coeffs[2]]  # drop any i component
            z_sep = [ZERO] * Tr.g.dim
            for cf, srow in zip(p_quat, sep_rows):
                if cf != 0:
                    z_sep = [x + cf * y for x, y in zip(z_sep, srow)]
            if all(x == 0 for x in z_sep):
                z_sep = list(sep_rows[1])  # c vanished: any j/k direction works
            z = tuple(x + y for x, y in zip(z_sep, v))
            yield z, v, "scripted-fiber-slot"

    T.extras["family_refuter"] = b16_refuter
    T.extras["b16"] = {"p1_space": p1_space, "sep_space": sep_space,
                       "circle": circle, "lastdiag_rows": lastdiag_rows,
                       "p1_projector": p1_proj}
    return T


def _xb4():
    g = spin9_spinor()
    k = subalgebra_from_coords(g, spin7_twisted().space.basis, "spin7+")
    h = subalgebra_from_coords(g, g2_in_spin9_spinor().space.basis, "g2")
    labels = _tags(base_row=4, base_n=None, fiber_row=5, fiber_n=None)
    labels["id"] = "XB4"
    return make_triple(g, k, h, labels)


def _emb_su3_of_u2():
    """u(2) inside su(3) by X -> diag(X, -tr X); the su(2) generators come
    first and satisfy the quaternion-type relations [x1, x2] = 2 x3 etc."""
    x1 = diag_unit("u", 3, 0) - diag_unit("u", 3, 1)
    x2 = offdiag_unit("u", 3, 0, 1, 0)
    x3 = offdiag_unit("u", 3, 0, 1, 1)
    x4 = diag_unit("u", 3, 0) + diag_unit("u", 3, 1) - diag_unit("u", 3, 2).scale(Fraction(2))
    return [x1, x2, x3, x4]


def _so3_images():
    """Images of the su(2) part of u(2) in so(3): the rotation action on
    imaginary quaternions (a Lie algebra isomorphism); the center maps to 0."""
    quat = composition_algebra(4)
    mats = []
    for u in (1, 2, 3):
        cols = []
        for c in (1, 2, 3):
            prod_l = quat.mul(quat.unit(u), quat.unit(c))
            prod_r = quat.mul(quat.unit(c), quat.unit(u))
            cols.append(tuple(a - b for a, b in zip(prod_l, prod_r)))
        m = [[cols[c][r + 1] for c in range(3)] for r in range(3)]
        mats.append(Matrix(m))
    return mats


def _xb13():
    su3 = classical("su", 3)
    so3 = classical("so", 3)
    g = direct_sum(su3, so3, name="su(3)+so(3)")
    size = g.matrix_size
    emb = [_pad_matrix(m, 0, size) for m in _emb_su3_of_u2()]
    phi = [_pad_matrix(m, su3.matrix_size, size) for m in _so3_images()]
    k_mats = [emb[t] + phi[t] for t in range(3)] + [emb[3]]
    k = span_subalgebra(g, k_mats, "diag u2")
    h = span_subalgebra(g, k_mats[:3], "diag su2")
    labels = _tags(base_row=13, base_n=None, fiber_row=1, fiber_n=1)
    labels["id"] = "XB13"
    return make_triple(g, k, h, labels)


def _xb9():
    su3 = classical("su", 3)
    sp2 = classical("sp", 2)
    g = direct_sum(su3, sp2, name="su(3)+sp(2)")
    size = g.matrix_size
    off = su3.matrix_size
    emb = [_pad_matrix(m, 0, size) for m in _emb_su3_of_u2()]
    psi = [_pad_matrix(diag_unit("sp", 2, 0, u), off, size) for u in (1, 2, 3)]
    sp1_second = [_pad_matrix(diag_unit("sp", 2, 1, u), off, size)
                  for u in (1, 2, 3)]
    su3_full = [_pad_matrix(m, 0, size) for m in su3.basis]
    k = span_subalgebra(g, su3_full + psi + sp1_second, "su3+sp1+sp1")
    h_mats = [emb[t] + psi[t] for t in range(3)] + [emb[3]] + sp1_second
    h = span_subalgebra(g, h_mats, "diag u2 + sp1")
    labels = _tags(base_row=9, base_n=1, fiber_row=13, fiber_n=None,
                   modulo_ideal=True)
    labels["id"] = "XB9"
    return make_triple(g, k, h, labels)


def _xtf_b2():
    su3 = classical("su", 3)
    k = span_subalgebra(su3, family_block("su", 2, [0, 1], 3), "su2")
    h = span_subalgebra(su3, [diag_unit("u", 3, 0) - diag_unit("u", 3, 1)], "u1")
    labels = _tags(base_row=2, base_n=2, fiber_row=1, fiber_n=2)
    labels["id"] = "XTF-B2"
    return make_triple(su3, k, h, labels)


def _xtf_b3():
    sp2 = classical("sp", 2)
    k = span_subalgebra(sp2, family_block("sp", 1, [0], 2), "sp1")
    h = span_subalgebra(sp2, [diag_unit("sp", 2, 0, 1)], "u1")
    labels = _tags(base_row=3, base_n=1, fiber_row=1, fiber_n=2)
    labels["id"] = "XTF-B3"
    return make_triple(sp2, k, h, labels)


def _xtf_b14():
    u2 = classical("u", 2)
    k = span_subalgebra(u2, [diag_unit("u", 2, 1)], "u1")
    h = _zero_sub(u2, "0")
    labels = _tags(base_row=14, base_n=1, fiber_row=1, fiber_n=1)
    labels["id"] = "XTF-B14"
    return make_triple(u2, k, h, labels)


# ---------------------------------------------------------------------------
# the catalog table
# ---------------------------------------------------------------------------

def _entries():
    rows = [
        ("T1-R-n2", "unit tangent bundle of RP^2 (sphere chain over R)",
         POSITIVE, lambda: _t1_real(2)),
        ("T1-R-n3", "unit tangent bundle of RP^3", POSITIVE, lambda: _t1_real(3)),
        ("T1-C-n2", "unit tangent bundle of CP^2", POSITIVE, lambda: _t1_complex(2)),
        ("T1-C-n3", "unit tangent bundle of CP^3", POSITIVE, lambda: _t1_complex(3)),
        ("T1-H-n2", "unit tangent bundle of HP^2", POSITIVE, lambda: _t1_quat(2)),
        ("T1-H-n3", "unit tangent bundle of HP^3", POSITIVE, lambda: _t1_quat(3)),
        ("T3-C-n2", "projective tangent bundle of CP^2 (6-dim flag)",
         POSITIVE, lambda: _t3("u", 2)),
        ("T3-H-n2", "projective tangent bundle of HP^2 (12-dim flag)",
         POSITIVE, lambda: _t3("sp", 2)),
        ("T4-n2", "sphere bundle over HP^2, twisted fiber embedding",
         POSITIVE, lambda: _t4(2)),
        ("T4-n3", "sphere bundle over HP^3, twisted fiber embedding",
         POSITIVE, lambda: _t4(3)),
        ("E4", "CP^3 bundle over HP^2", POSITIVE, _e4),
        ("T5-n2-k1l1", "circle slope (1,1) over CP^2", POSITIVE,
         lambda: _t5(2, 1, 1)),
        ("T5-n2-km2l1", "circle slope (-2,1) over CP^2", POSITIVE,
         lambda: _t5(2, -2, 1)),
        ("T5-n2-k1l0", "circle slope (1,0) over CP^2", POSITIVE,
         lambda: _t5(2, 1, 0)),
        ("T5P-n2-k1l1", "trace-zero circle slope (1,1)", POSITIVE,
         lambda: _t5(2, 1, 1, trace_zero=True)),
        ("T5P-n2-km2l1", "trace-zero circle slope (-2,1)", POSITIVE,
         lambda: _t5(2, -2, 1, trace_zero=True)),
        ("T5P-n2-k1l0", "trace-zero circle slope (1,0)", POSITIVE,
         lambda: _t5(2, 1, 0, trace_zero=True)),
        ("T8-n2", "full flag in the trace-zero model", POSITIVE, _t8),
        ("E1", "su(3) < g2 < so(7): unit tangent bundle of S^7",
         POSITIVE, _e1),
        ("E2", "su(2) < su(3) < g2: unit tangent bundle of S^6",
         POSITIVE, _e2),
        ("E3", "u(2) < su(3) < g2: CP^2 bundle over S^6", POSITIVE, _e3),
        ("E5", "maximal so(3) chain in sp(3): 7-dim fiber over HP^2",
         POSITIVE, _e5),
        ("T2P", "spin(8) < spin(9) < f4: projective tangent bundle of the"
         " octonionic projective plane", POSITIVE, _t2p),
        ("X-CH-G2-21", "product extension of E2 by a slope (2,1) circle",
         POSITIVE, lambda: _cheeger_g2((2, 1))),
        ("X-CH-T4-SP1", "product extension of T4 by a commuting sp(1)",
         POSITIVE, _cheeger_t4_sp1),
        ("B11", "circle in the maximal so(3) of so(5): refuted per sampled"
         " direction", NOT_POSITIVE, _b11),
        ("B12", "sp(2) < sp(2)+u(1) < su(5): central circle kills the"
         " obstruction map", NOT_POSITIVE, _b12),
        ("B16", "diagonal sp(1) chain in sp(3)+sp(1): refuted per sampled"
         " direction", NOT_POSITIVE, _b16),
        ("XB4", "spinor-stabilizer chain in spin(9): split 7+8 violates the"
         " dimension bound", NOT_POSITIVE, _xb4),
        ("XB13", "diagonal u(2) in su(3)+so(3): split 3+4 violates the"
         " dimension bound", NOT_POSITIVE, _xb13),
        ("XB9", "cross-ideal twist over su(3)+sp(2): fiber meets the wrong"
         " ideal", NOT_POSITIVE, _xb9),
        ("XTF-B2", "circle in su(2) < su(3): trivial isotropy factor",
         NOT_POSITIVE, _xtf_b2),
        ("XTF-B3", "circle in sp(1) < sp(2): trivial isotropy factor",
         NOT_POSITIVE, _xtf_b3),
        ("XTF-B14", "zero < u(1) < u(2): trivial isotropy factor",
         NOT_POSITIVE, _xtf_b14),
    ]
    return [CatalogEntry(*row) for row in rows]


_ALIASES = {f"ThmE-{i}": f"E{i}" for i in range(1, 6)}
_ALIASES["ThmE-4"] = "E4"


@lru_cache(maxsize=None)
def catalog_entries():
    return tuple(_entries())


def catalog_list(filter_kind=None):
    """Entries, optionally filtered by "positive", "negative" or id prefix."""
    entries = list(catalog_entries())
    if filter_kind in (None, "", "all"):
        return entries
    if filter_kind == "positive":
        return [e for e in entries if e.expected == POSITIVE]
    if filter_kind in ("negative", "not_positive"):
        return [e for e in entries if e.expected == NOT_POSITIVE]
    return [e for e in entries if e.id.startswith(filter_kind)]


def get_entry(entry_id: str) -> CatalogEntry:
    entry_id = _ALIASES.get(entry_id, entry_id)
    for e in catalog_entries():
        if e.id == entry_id:
            return e
    raise UnknownEntry(f"no catalog entry {entry_id!r}")


@lru_cache(maxsize=None)
def build_triple(entry_id: str) -> NestedTriple:
    """Construct (and cache) the triple for a catalog entry."""
    return get_entry(entry_id).build()


# ---------------------------------------------------------------------------
# named algebra registry (export-algebra)
# ---------------------------------------------------------------------------

def named_algebra(name: str) -> LieAlgebra:
    import re
    clean = name.strip().lower().replace(" ", "")
    m = re.fullmatch(r"(so|su|sp|u)\(?(\d+)\)?", clean)
    if m:
        return classical(m.group(1), int(m.group(2)))
    special = {"g2": g2, "f4": f4, "spin9_spinor": spin9_spinor,
               "spin9-spinor": spin9_spinor}
    if clean in special:
        return special[clean]()
    raise UnknownEntry(f"no algebra named {name!r}")
