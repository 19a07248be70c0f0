"""Derivation algebras, stabilizers, and the special subalgebra models.

The derivation solver computes {D : D(xy) = (Dx)y + x(Dy)} for any algebra
given by exact structure constants.  The constraint matrix is assembled pair
by pair into an incremental sparse integer echelon; once the rank stops
moving, the candidate nullspace is checked against the full Leibniz law on
every basis pair, and solving resumes if any pair fails.  The final basis is
always re-verified, so early stopping never weakens the result.

Built on top of it:

  * g2  = derivations of the octonions, restricted to the imaginary part
          (7x7 matrices, dimension 14),
  * f4  = derivations of the 3x3 octonionic Hermitian Jordan algebra
          (27x27 matrices, dimension 52),
  * spin(9) inside f4 as the stabilizer of a primitive idempotent, spin(8)
    as the stabilizer of all three diagonal idempotents,
  * a 16-dimensional spinor model of spin(9) from octonionic Clifford
    multiplication, whose spinor stabilizers give the twisted spin(7),
  * the maximal so(3) in sp(2) from its printed sqrt(3) basis, and the same
    algebra inside so(5) via the spin-2 action on harmonic quadratics.

Construction times are recorded in BUILD_SECONDS keyed by name.
"""

from __future__ import annotations

import time
from fractions import Fraction
from functools import lru_cache
from math import gcd

from .algebras import LieAlgebra, Subalgebra, realify, span_subalgebra
from .composition import CompositionAlgebra, JordanAlgebraH3O, composition_algebra
from .errors import InvalidParameter
from .linalg import Matrix, SparseEchelon, Subspace, rref_rows
from .scalars import Sqrt3

ZERO = Fraction(0)
ONE = Fraction(1)
HALF = Fraction(1, 2)

BUILD_SECONDS = {}


def _timed(name, fn):
    t0 = time.perf_counter()
    out = fn()
    BUILD_SECONDS[name] = time.perf_counter() - t0
    return out


# ---------------------------------------------------------------------------
# The derivation solver
# ---------------------------------------------------------------------------

def _pair_equations(prod, i, j):
    """Integer equations of D(e_i e_j) = (De_i)e_j + e_i(De_j).

    Unknown u(r, c) = r*n + c for the operator entry D[r][c]; one equation
    per output coordinate.  Rows are scaled to integers.
    """
    n = prod.dim
    sij = prod.struct(i, j)
    rows = {}

    def add(out, col, coeff):
        row = rows.setdefault(out, {})
        row[col] = row.get(col, ZERO) + coeff

    # LHS: sum_k S[i][j]_k D[out][k]
    for out in range(n):
        for k, c in sij:
            add(out, out * n + k, c)
    # RHS part 1: sum_r D[r][i] S[r][j]_out
    for r in range(n):
        for out, c in prod.struct(r, j):
            add(out, r * n + i, -c)
    # RHS part 2: sum_r D[r][j] S[i][r]_out
    for r in range(n):
        for out, c in prod.struct(i, r):
            add(out, r * n + j, -c)
    int_rows = []
    for out, row in sorted(rows.items()):
        den = 1
        for v in row.values():
            den = den * v.denominator // gcd(den, v.denominator)
        irow = {col: int(v * den) for col, v in row.items() if v != 0}
        if irow:
            int_rows.append(irow)
    return int_rows


def _leibniz_ok(prod, dint, i, j):
    n = prod.dim
    lhs = [ZERO] * n
    for k, c in prod.struct(i, j):
        col = k
        for out in range(n):
            v = dint[out][col]
            if v:
                lhs[out] += v * c
    rhs = [ZERO] * n
    for r in range(n):
        v = dint[r][i]
        if v:
            for out, c in prod.struct(r, j):
                rhs[out] += v * c
        w = dint[r][j]
        if w:
            for out, c in prod.struct(i, r):
                rhs[out] += w * c
    return lhs == rhs


def derivation_algebra(prod, name, restrict_to=None, patience=6):
    """All derivations of a structure-constant algebra, as a LieAlgebra.

    restrict_to: optional list of coordinate indices spanning an invariant
    subspace; the operator matrices are cut down to it after an exact
    invariance check (used to present der(O) on the imaginary octonions).
    """
    n = prod.dim
    ech = SparseEchelon(n * n)
    pairs = [(i, j) for i in range(n) for j in range(i, n)]
    inserted = set()
    stall = 0
    pos = 0
    while True:
        progressed = False
        while pos < len(pairs) and (stall < patience or ech.rank == 0):
            i, j = pairs[pos]
            pos += 1
            if (i, j) in inserted:
                continue
            inserted.add((i, j))
            grew = False
            for row in _pair_equations(prod, i, j):
                if ech.add_row(row):
                    grew = True
            stall = 0 if grew else stall + 1
            progressed = True
        basis_vecs = ech.nullspace()
        d_ints = [_to_int_matrix(v, n) for v in basis_vecs]
        bad = []
        for (i, j) in pairs:
            for dint in d_ints:
                if not _leibniz_ok(prod, dint, i, j):
                    bad.append((i, j))
                    break
        if not bad:
            break
        if pos >= len(pairs) and all(p in inserted for p in bad):
            raise AssertionError("derivation solve inconsistent")  # unreachable
        for p in bad:
            if p in inserted:
                continue
            inserted.add(p)
            for row in _pair_equations(prod, *p):
                ech.add_row(row)
        stall = 0
        if not progressed and pos >= len(pairs):
            break

    mats = []
    for v in ech.nullspace():
        m = [[v[r * n + c] for c in range(n)] for r in range(n)]
        mats.append(m)
    if restrict_to is not None:
        keep = list(restrict_to)
        drop = [c for c in range(n) if c not in keep]
        cut = []
        for m in mats:
            for r in keep:
                for c in drop:
                    if m[r][c] != 0:
                        raise InvalidParameter("restriction subspace not invariant")
            for r in drop:
                for c in keep:
                    if m[r][c] != 0:
                        raise InvalidParameter("restriction subspace not invariant")
            cut.append([[m[r][c] for c in keep] for r in keep])
        mats = cut
    return LieAlgebra.from_basis(name, [Matrix(m) for m in mats],
                                 meta={"kind": "derivations", "of": getattr(prod, "name", name)})


def _to_int_matrix(vec, n):
    den = 1
    for v in vec:
        den = den * v.denominator // gcd(den, v.denominator)
    return [[int(vec[r * n + c] * den) for c in range(n)] for r in range(n)]


# ---------------------------------------------------------------------------
# Cached builders for the exceptional models
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def octonions() -> CompositionAlgebra:
    return composition_algebra(8)


@lru_cache(maxsize=None)
def jordan_h3o() -> JordanAlgebraH3O:
    return _timed("jordan", JordanAlgebraH3O)


@lru_cache(maxsize=None)
def g2() -> LieAlgebra:
    """der(O) on the imaginary octonions: 7x7 matrices, dimension 14."""
    return _timed("g2", lambda: derivation_algebra(
        octonions(), "g2", restrict_to=range(1, 8)))


@lru_cache(maxsize=None)
def f4() -> LieAlgebra:
    """der(h3(O)): 27x27 matrices, dimension 52."""
    return _timed("f4", lambda: derivation_algebra(jordan_h3o(), "f4"))


@lru_cache(maxsize=None)
def quaternion_derivations() -> LieAlgebra:
    return derivation_algebra(composition_algebra(4), "der(H)", restrict_to=range(1, 4))


def _unit_vec(n, i):
    v = [ZERO] * n
    v[i] = ONE
    return tuple(v)


@lru_cache(maxsize=None)
def su3_in_g2() -> Subalgebra:
    """Stabilizer of the first imaginary unit: su(3), dimension 8."""
    from .algebras import stabilizer_subalgebra
    return stabilizer_subalgebra(g2(), [_unit_vec(7, 0)], name="su3")


@lru_cache(maxsize=None)
def su2_in_g2() -> Subalgebra:
    """Stabilizer of the first two imaginary units: su(2), dimension 3."""
    from .algebras import stabilizer_subalgebra
    return stabilizer_subalgebra(g2(), [_unit_vec(7, 0), _unit_vec(7, 1)], name="su2")


@lru_cache(maxsize=None)
def u2_in_g2() -> Subalgebra:
    """su(2) plus its centralizer circle inside su(3): u(2), dimension 4."""
    from .algebras import centralizer_space, subalgebra_from_coords
    from .linalg import subspace_intersect, subspace_sum
    alg = g2()
    su3 = su3_in_g2()
    su2 = su2_in_g2()
    cent = centralizer_space(alg, su2.space)
    circle = subspace_intersect(cent, su3.space)
    return subalgebra_from_coords(alg, list(su2.space.basis) + list(circle.basis),
                                  name="u2")


@lru_cache(maxsize=None)
def spin9_in_f4() -> Subalgebra:
    """Stabilizer of the primitive idempotent E1: spin(9), dimension 36."""
    from .algebras import stabilizer_subalgebra
    return _timed("spin9_in_f4", lambda: stabilizer_subalgebra(
        f4(), [_unit_vec(27, 0)], name="spin9"))


@lru_cache(maxsize=None)
def spin8_in_f4() -> Subalgebra:
    """Stabilizer of all three diagonal idempotents: spin(8), dimension 28."""
    from .algebras import stabilizer_subalgebra
    return stabilizer_subalgebra(
        f4(), [_unit_vec(27, 0), _unit_vec(27, 1), _unit_vec(27, 2)], name="spin8")


# ---------------------------------------------------------------------------
# spin(9) on its 16-dimensional spinor space
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def spinor_gammas():
    """Nine anticommuting symmetric involutions on R^16 = O + O."""
    o = octonions()
    gammas = []
    for a in range(8):
        l = o.left_mult_matrix(o.unit(a))
        lc = o.left_mult_matrix(o.conj(o.unit(a)))
        m = [[ZERO] * 16 for _ in range(16)]
        for r in range(8):
            for c in range(8):
                m[r][8 + c] = l[r][c]
                m[8 + r][c] = lc[r][c]
        gammas.append(Matrix(m))
    prod = gammas[0]
    for gmat in gammas[1:]:
        prod = prod * gmat
    gammas.append(prod)
    ident = Matrix.identity(16)
    for i, gi in enumerate(gammas):
        assert gi.transpose() == gi, "gamma must be symmetric"
        assert gi * gi == ident
        for gj in gammas[i + 1:]:
            assert (gi * gj + gj * gi).is_zero(), "gammas must anticommute"
    return tuple(gammas)


@lru_cache(maxsize=None)
def spin9_spinor() -> LieAlgebra:
    """spin(9) acting on R^16, spanned by products of two gammas."""
    gam = spinor_gammas()
    mats = [gam[a] * gam[b] for a in range(9) for b in range(a + 1, 9)]
    return _timed("spin9_spinor",
                  lambda: LieAlgebra.from_basis("spin9_spinor", mats,
                                                meta={"kind": "spinor"}))


@lru_cache(maxsize=None)
def spin8_in_spin9_spinor() -> Subalgebra:
    """The subalgebra generated by the first eight gammas (spin(8))."""
    gam = spinor_gammas()
    mats = [gam[a] * gam[b] for a in range(8) for b in range(a + 1, 8)]
    return span_subalgebra(spin9_spinor(), mats, name="spin8")


@lru_cache(maxsize=None)
def spin7_twisted() -> Subalgebra:
    """Stabilizer of a unit spinor: the twisted spin(7), dimension 21."""
    from .algebras import stabilizer_subalgebra
    return stabilizer_subalgebra(spin9_spinor(), [_unit_vec(16, 0)], name="spin7+")


@lru_cache(maxsize=None)
def g2_in_spin9_spinor() -> Subalgebra:
    """Stabilizer of two independent spinors (a g2 copy, dimension 14)."""
    from .algebras import stabilizer_subalgebra
    return stabilizer_subalgebra(spin9_spinor(),
                                 [_unit_vec(16, 0), _unit_vec(16, 8)], name="g2spin")


# ---------------------------------------------------------------------------
# The maximal so(3): printed basis in sp(2), spin-2 model in so(5)
# ---------------------------------------------------------------------------

def _sq3(b=1):
    return Sqrt3(0, Fraction(b, 2))


@lru_cache(maxsize=None)
def so3max_sp2_matrices():
    """The three printed basis matrices of the maximal so(3) in sp(2).

    Quaternion entries live in Q(sqrt3); the matrices are realified to 8x8.
    """
    z = (ZERO, ZERO, ZERO, ZERO)

    def q(a=0, b=0, c=0, d=0):
        return (a, b, c, d)

    b1 = [[q(0, Fraction(3, 2)), z], [z, q(0, HALF)]]
    b2 = [[z, q(_sq3())], [q(-_sq3()), q(0, 0, 1, 0)]]
    b3 = [[z, q(0, _sq3())], [q(0, _sq3()), q(0, 0, 0, 1)]]
    return tuple(realify(m, 4) for m in (b1, b2, b3))


def so3max_in_sp2(sp2: LieAlgebra) -> Subalgebra:
    """The maximal so(3) as a subalgebra of a given sp(2) model."""
    return span_subalgebra(sp2, so3max_sp2_matrices(), name="so3max")


def _poly_so3_action():
    """so(3) generators acting on quadratic polynomials in x, y, z.

    Monomial order: x^2, y^2, z^2, xy, xz, yz.  Returns three 6x6 rational
    matrices for the rotation generators about z, x, y (as derivations with
    Lz: x -> -y, y -> x, etc.).
    """
    # generator action on linear monomials: g[(v)] = image vector over (x,y,z)
    gens = {
        "z": {0: (0, -1, 0), 1: (1, 0, 0), 2: (0, 0, 0)},
        "x": {0: (0, 0, 0), 1: (0, 0, -1), 2: (0, 1, 0)},
        "y": {0: (0, 0, 1), 1: (0, 0, 0), 2: (-1, 0, 0)},
    }
    mono = [(0, 0), (1, 1), (2, 2), (0, 1), (0, 2), (1, 2)]
    index = {m: i for i, m in enumerate(mono)}

    def act(g, a, b):
        out = [ZERO] * 6
        for (var, other) in ((a, b), (b, a)):
            img = gens[g][var]
            for w, c in enumerate(img):
                if c:
                    key = tuple(sorted((w, other)))
                    out[index[key]] += Fraction(c)
        return out

    mats = {}
    for gname in ("z", "x", "y"):
        cols = [act(gname, a, b) for (a, b) in mono]
        mats[gname] = [[cols[c][r] for c in range(6)] for r in range(6)]
    return mono, mats


@lru_cache(maxsize=None)
def so3max_so5_matrices():
    """Images of the so(3) generators in so(5) via harmonic quadratics.

    The basis xy, yz, zx, (x^2-y^2)/2, (x^2+y^2-2z^2)/(2 sqrt3) is orthogonal
    with equal norms for the sphere integral, so the action matrices are
    honestly skew 5x5; sqrt(3) enters only through the last vector.
    """
    mono, gmats = _poly_so3_action()
    s3inv = Sqrt3(0, Fraction(1, 3))  # 1/(sqrt3) = sqrt3/3
    basis = [
        [ZERO, ZERO, ZERO, ONE, ZERO, ZERO],                     # xy
        [ZERO, ZERO, ZERO, ZERO, ZERO, ONE],                     # yz
        [ZERO, ZERO, ZERO, ZERO, ONE, ZERO],                     # zx
        [HALF, -HALF, ZERO, ZERO, ZERO, ZERO],                   # (x^2-y^2)/2
        [HALF * s3inv, HALF * s3inv, -ONE * s3inv, ZERO, ZERO, ZERO],
    ]
    out = []
    for gname in ("z", "x", "y"):
        gm = gmats[gname]
        cols = []
        for b in basis:
            img = [sum((gm[r][c] * b[c] for c in range(6)), start=Sqrt3())
                   for r in range(6)]
            # solve img = sum_k coeff_k basis_k  (basis has full rank 5)
            rows = [[basis[k][c] for k in range(5)] + [img[c]] for c in range(6)]
            from .linalg import rref_rows as _rr
            rr, rank, piv = _rr(rows, 6)
            assert rank == 5 and piv == [0, 1, 2, 3, 4]
            cols.append([rr[k][5] for k in range(5)])
        m = Matrix([[cols[c][r] for c in range(5)] for r in range(5)])
        assert (m.transpose() + m).is_zero(), "spin-2 image must be skew"
        out.append(m)
    return tuple(out)


def so3max_in_so5(so5: LieAlgebra) -> Subalgebra:
    return span_subalgebra(so5, so3max_so5_matrices(), name="so3max")
