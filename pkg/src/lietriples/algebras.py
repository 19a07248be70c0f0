"""Matrix models of compact Lie algebras, verified exactly.

A ``LieAlgebra`` is an ordered basis of square rational matrices together
with the bracket [X, Y] = XY - YX and the inner product <X, Y> = -tr(XY).
Construction verifies, with exact arithmetic:

  * linear independence of the basis,
  * closure under the bracket (membership re-checked by recomposition),
  * positive definiteness of the Gram matrix,
  * the Jacobi identity and ad-invariance of the form (on all basis triples
    up to a size cutoff, on seeded samples above it; matrix models satisfy
    both identically, so these guard the structure-constant extraction).

Everything downstream (triples, kernels, refuters) works in basis
coordinates through the structure constants, which keeps the heavy
matrix-size arithmetic confined to construction time.

Basis order for the classical families is lexicographic in matrix position
(row, column, unit), so constructions are reproducible.

Complex and quaternionic matrices are realified: z = a+bi becomes a 2x2
block, q = a+bi+cj+dk the 4x4 left-multiplication block, so a single trace
form serves every family.
"""

from __future__ import annotations

import random
from fractions import Fraction
from math import gcd

from .composition import composition_algebra
from .errors import (ActionMissing, DimensionMismatch, InvalidParameter,
                     NotClosed, NotSubalgebra, ZeroSlope)
from .linalg import (Matrix, Subspace, is_positive_definite, nullspace_rows,
                     rref_rows, solve, vec_is_zero)
from .scalars import EXT_RATIONAL, EXT_SQRT3, Sqrt3, encode_scalar, decode_scalar

ZERO = Fraction(0)
ONE = Fraction(1)

JACOBI_FULL_LIMIT = 24  # full basis-triple verification up to this dimension
SAMPLED_TRIPLES = 200


class DegenerateGram(Exception):
    def __init__(self, name):
        super().__init__(f"{name}: trace form is not positive definite")


def _int_scale(mat: Matrix):
    """(sparse integer rows, dense integer rows, denominator) of a matrix."""
    den = 1
    for row in mat.entries:
        for a in row:
            f = Fraction(a)
            den = den * f.denominator // gcd(den, f.denominator)
    dense = []
    sparse = []
    for row in mat.entries:
        irow = [Fraction(a).numerator * (den // Fraction(a).denominator) for a in row]
        dense.append(irow)
        sparse.append([(c, v) for c, v in enumerate(irow) if v])
    return sparse, dense, den


def _sparse_product(a_sparse, b_dense, n):
    """Integer matrix product using the sparse rows of the left factor."""
    out = [[0] * n for _ in range(n)]
    for r, arow in enumerate(a_sparse):
        orow = out[r]
        for k, av in arow:
            brow = b_dense[k]
            for c in range(n):
                bv = brow[c]
                if bv:
                    orow[c] += av * bv
    return out


class LieAlgebra:
    """A compact Lie algebra given by an ordered matrix basis."""

    def __init__(self, name, basis, gram, structure, scalar_ext=EXT_RATIONAL,
                 meta=None, verification="full"):
        self.name = name
        self.basis = tuple(basis)
        self.dim = len(self.basis)
        self.matrix_size = self.basis[0].rows if self.basis else 0
        self.gram = gram
        self.structure = structure  # dict (i, j) i < j -> tuple of (k, coeff)
        self.scalar_ext = scalar_ext
        self.meta = dict(meta or {})
        self.verification = verification
        self._coord_cache = None
        self._ad_cache = {}

    # -- construction -------------------------------------------------------

    @classmethod
    def from_basis(cls, name, mats, meta=None, jacobi_limit=JACOBI_FULL_LIMIT,
                   seed=7):
        mats = [m if isinstance(m, Matrix) else Matrix(m) for m in mats]
        if not mats:
            raise InvalidParameter("empty basis")
        n = mats[0].rows
        for m in mats:
            if m.rows != n or m.cols != n:
                raise DimensionMismatch("basis matrices must be square, same size")
        dim = len(mats)
        vecs = [m.vec() for m in mats]
        rrows, rank, pivots = rref_rows(vecs, n * n)
        if rank != dim:
            raise NotClosed(f"{name}: basis is linearly dependent")

        scaled = [_int_scale(m) for m in mats]
        gram_rows = []
        for i in range(dim):
            _, di_dense, di = scaled[i]
            row = []
            for j in range(dim):
                _, dj_dense, dj = scaled[j]
                t = 0
                for r in range(n):
                    ir = di_dense[r]
                    for c in range(n):
                        v = ir[c]
                        if v:
                            t += v * dj_dense[c][r]
                row.append(Fraction(-t, di * dj))
            gram_rows.append(row)
        gram = Matrix(gram_rows)
        if not is_positive_definite(gram):
            raise DegenerateGram(name)

        coord = _CoordSolver(vecs, pivots, n * n)
        structure = {}
        for i in range(dim):
            si, di_dense, di = scaled[i]
            for j in range(i + 1, dim):
                sj, dj_dense, dj = scaled[j]
                prod = _sparse_product(si, dj_dense, n)
                prod2 = _sparse_product(sj, di_dense, n)
                den = di * dj
                kvec = [prod[r][c] - prod2[r][c] for r in range(n) for c in range(n)]
                coords = coord.coords_scaled(kvec, den)
                if coords is None:
                    raise NotClosed(f"{name}: [b{i}, b{j}] leaves the span")
                # integer recomposition check: sum c_k B_k == bracket exactly
                lden = den
                for c in coords:
                    lden = lden * c.denominator // gcd(lden, c.denominator)
                acc = {}
                for k, c in enumerate(coords):
                    if c == 0:
                        continue
                    sk, _, dk = scaled[k]
                    mul = c * lden / dk
                    assert mul.denominator == 1
                    mul = mul.numerator
                    for r, row in enumerate(sk):
                        base = r * n
                        for col, v in row:
                            key = base + col
                            acc[key] = acc.get(key, 0) + mul * v
                scale = lden // den
                for pos in range(n * n):
                    if acc.get(pos, 0) != kvec[pos] * scale:
                        raise NotClosed(f"{name}: recomposition mismatch at [b{i}, b{j}]")
                row = tuple((k, c) for k, c in enumerate(coords) if c != 0)
                if row:
                    structure[(i, j)] = row

        alg = cls(name, mats, gram, structure, meta=meta)
        alg._coord_cache = coord
        alg._verify_identities(jacobi_limit, seed)
        return alg

    def _verify_identities(self, jacobi_limit, seed):
        dim = self.dim
        if dim <= jacobi_limit:
            triples = [(i, j, k) for i in range(dim)
                       for j in range(i + 1, dim) for k in range(j + 1, dim)]
            self.verification = "full"
        else:
            rng = random.Random(seed)
            triples = [tuple(sorted(rng.sample(range(dim), 3)))
                       for _ in range(SAMPLED_TRIPLES)]
            self.verification = f"sampled({SAMPLED_TRIPLES}, seed={seed})"
        for (i, j, k) in triples:
            if not vec_is_zero(self._jacobi(i, j, k)):
                raise NotClosed(f"{self.name}: Jacobi fails on ({i},{j},{k})")
            # ad-invariance of the form on the same triples
            t1 = self._form_of_bracket(i, j, k)
            t2 = self._form_of_bracket(i, k, j)
            if t1 + t2 != 0:
                raise NotClosed(f"{self.name}: form not ad-invariant on ({i},{j},{k})")

    def _jacobi(self, i, j, k):
        a = self.bracket_coords(self.struct_row(j, k), self._unit(i), sparse_y=False)
        b = self.bracket_coords(self.struct_row(k, i), self._unit(j), sparse_y=False)
        c = self.bracket_coords(self.struct_row(i, j), self._unit(k), sparse_y=False)
        # [e_i,[e_j,e_k]] + [e_j,[e_k,e_i]] + [e_k,[e_i,e_j]] with sign fixed:
        # bracket_coords(x, e_m) = [x, e_m] = -[e_m, x]
        return tuple(-(x + y + z) for x, y, z in zip(a, b, c))

    def _form_of_bracket(self, i, j, k):
        # <[e_i, e_j], e_k>
        s = ZERO
        for m, c in self._struct_sparse(i, j):
            s += c * self.gram.entries[m][k]
        return s

    def _unit(self, i):
        v = [ZERO] * self.dim
        v[i] = ONE
        return tuple(v)

    # -- structure-constant access ------------------------------------------

    def _struct_sparse(self, i, j):
        if i == j:
            return ()
        if i < j:
            return self.structure.get((i, j), ())
        return tuple((k, -c) for k, c in self.structure.get((j, i), ()))

    def struct_row(self, i, j):
        v = [ZERO] * self.dim
        for k, c in self._struct_sparse(i, j):
            v[k] = c
        return tuple(v)

    def bracket_coords(self, x, y, sparse_y=True):
        """[x, y] in basis coordinates."""
        out = [ZERO] * self.dim
        for i, xi in enumerate(x):
            if xi == 0:
                continue
            for j, yj in enumerate(y):
                if yj == 0 or i == j:
                    continue
                c = xi * yj
                for k, s in self._struct_sparse(i, j):
                    out[k] = out[k] + c * s
        return tuple(out)

    def ad_matrix(self, x):
        """Matrix of y -> [x, y] in basis coordinates."""
        cols = [self.bracket_coords(x, self._unit(j)) for j in range(self.dim)]
        return Matrix([[cols[j][i] for j in range(self.dim)] for i in range(self.dim)])

    def ad_basis(self, i):
        m = self._ad_cache.get(i)
        if m is None:
            m = self.ad_matrix(self._unit(i))
            self._ad_cache[i] = m
        return m

    def inner(self, x, y):
        gx = self.gram.matvec(x)
        s = ZERO
        for a, b in zip(y, gx):
            if a and b:
                s = s + a * b
        return s

    # -- matrix/coordinate conversion -----------------------------------------

    def _coords(self):
        if self._coord_cache is None:
            vecs = [m.vec() for m in self.basis]
            _, _, pivots = rref_rows(vecs, self.matrix_size ** 2)
            self._coord_cache = _CoordSolver(vecs, pivots, self.matrix_size ** 2)
        return self._coord_cache

    def coords_of(self, mat: Matrix):
        """Coordinates of a matrix in this basis, or None if outside the span."""
        return self._coords().coords_exact(mat.vec())

    def element(self, coords) -> Matrix:
        n = self.matrix_size
        acc = [[ZERO] * n for _ in range(n)]
        for c, b in zip(coords, self.basis):
            if c == 0:
                continue
            for r in range(n):
                brow = b.entries[r]
                arow = acc[r]
                for col in range(n):
                    v = brow[col]
                    if v:
                        arow[col] = arow[col] + c * v
        return Matrix(acc)

    def act_on_vector(self, coords, v):
        """Action of an element (by its matrix) on a column vector."""
        return self.element(coords).matvec(v)

    def full_space(self):
        return Subspace.full(self.dim)

    # -- serialization ---------------------------------------------------------

    def to_json(self):
        struct = [[i, j, [[k, encode_scalar(c)] for k, c in row]]
                  for (i, j), row in sorted(self.structure.items()) if row]
        return {
            "schema": "lietriples-algebra/1",
            "name": self.name,
            "matrix_size": self.matrix_size,
            "scalar_ext": self.scalar_ext,
            "basis": [[[encode_scalar(a) for a in row] for row in m.entries]
                      for m in self.basis],
            "structure_constants": struct,
        }

    @classmethod
    def from_json(cls, doc):
        if doc.get("schema") != "lietriples-algebra/1":
            raise InvalidParameter("unknown algebra schema")
        mats = [Matrix([[decode_scalar(a) for a in row] for row in m])
                for m in doc["basis"]]
        alg = cls.from_basis(doc["name"], mats)
        alg.scalar_ext = doc.get("scalar_ext", EXT_RATIONAL)
        declared = {(i, j): tuple((k, decode_scalar(c)) for k, c in row)
                    for i, j, row in doc["structure_constants"]}
        if declared != alg.structure:
            raise NotClosed("imported structure constants disagree with basis")
        return alg


class _CoordSolver:
    """Coordinates against a fixed independent family of vectors."""

    def __init__(self, vecs, pivots, ncols):
        self.vecs = vecs
        self.pivots = list(pivots)
        self.ncols = ncols
        dim = len(vecs)
        t = [[vecs[i][p] for i in range(dim)] for p in self.pivots]
        self.tinv = _invert(t)

    def coords_scaled(self, int_vec, den):
        """Coords of int_vec/den; verification is the caller's duty."""
        rhs = [Fraction(int_vec[p], den) for p in self.pivots]
        return tuple(_matvec(self.tinv, rhs))

    def coords_exact(self, vec):
        rhs = [vec[p] for p in self.pivots]
        coords = tuple(_matvec(self.tinv, rhs))
        # full residual check
        res = list(vec)
        for c, bv in zip(coords, self.vecs):
            if c != 0:
                res = [r - c * b for r, b in zip(res, bv)]
        if any(r != 0 for r in res):
            return None
        return coords


def _invert(rows):
    n = len(rows)
    aug = [list(r) + [ONE if i == j else ZERO for j in range(n)]
           for i, r in enumerate(rows)]
    rr, rank, piv = rref_rows(aug, 2 * n)
    if rank != n or piv != list(range(n)):
        raise DimensionMismatch("singular coordinate matrix")
    return [list(r[n:]) for r in rr]


def _matvec(rows, v):
    out = []
    for r in rows:
        s = ZERO
        for a, b in zip(r, v):
            if a and b:
                s = s + a * b
        out.append(s)
    return out


# ---------------------------------------------------------------------------
# Subalgebras
# ---------------------------------------------------------------------------

class Subalgebra:
    """A bracket-closed subspace of a LieAlgebra, in parent coordinates."""

    def __init__(self, algebra: LieAlgebra, space: Subspace, name=""):
        if space.ambient_dim != algebra.dim:
            raise DimensionMismatch("subalgebra coordinates/parent mismatch")
        self.algebra = algebra
        self.space = space
        self.name = name
        self._verify_closed()

    @property
    def dim(self):
        return self.space.dim

    def _verify_closed(self):
        rows = self.space.basis
        for i, x in enumerate(rows):
            for y in rows[i + 1:]:
                b = self.algebra.bracket_coords(x, y)
                if self.space.coordinates(b) is None:
                    raise NotSubalgebra(
                        f"{self.name or 'subalgebra'} of {self.algebra.name}: "
                        "not closed under bracket")

    def matrices(self):
        return [self.algebra.element(row) for row in self.space.basis]

    def __repr__(self):
        return f"Subalgebra({self.name or '?'}, dim={self.dim}, of={self.algebra.name})"


def span_subalgebra(algebra: LieAlgebra, mats, name="") -> Subalgebra:
    """Subalgebra spanned by ambient matrices (must lie in the algebra)."""
    rows = []
    for m in mats:
        c = algebra.coords_of(m if isinstance(m, Matrix) else Matrix(m))
        if c is None:
            raise NotSubalgebra(f"{name}: generator outside {algebra.name}")
        rows.append(c)
    return Subalgebra(algebra, Subspace.from_rows(rows, algebra.dim), name)


def subalgebra_from_coords(algebra: LieAlgebra, rows, name="") -> Subalgebra:
    return Subalgebra(algebra, Subspace.from_rows(rows, algebra.dim), name)


def transport_space(space: Subspace, src: LieAlgebra, dst: LieAlgebra) -> Subspace:
    """Re-coordinate a subspace of src (matrix-size compatible) inside dst."""
    if src.matrix_size != dst.matrix_size:
        raise DimensionMismatch("transport needs matching matrix size")
    rows = []
    for r in space.basis:
        c = dst.coords_of(src.element(r))
        if c is None:
            raise NotSubalgebra(f"space does not lie in {dst.name}")
        rows.append(c)
    return Subspace.from_rows(rows, dst.dim)


def centralizer_space(algebra: LieAlgebra, space: Subspace) -> Subspace:
    """{x : [x, s] = 0 for all s in the space}."""
    rows = []
    for s in space.basis:
        ad_cols = [algebra.bracket_coords(algebra._unit(i), s) for i in range(algebra.dim)]
        for out in range(algebra.dim):
            rows.append([ad_cols[i][out] for i in range(algebra.dim)])
    if not rows:
        return algebra.full_space()
    return Subspace.from_rows(nullspace_rows(rows, algebra.dim), algebra.dim)


def center(algebra: LieAlgebra) -> Subspace:
    return centralizer_space(algebra, algebra.full_space())


# ---------------------------------------------------------------------------
# Realification of complex / quaternionic matrices
# ---------------------------------------------------------------------------

_QUAT = composition_algebra(4)


def complex_block(z):
    a, b = z
    return ((a, -b), (b, a))


def quat_block(q):
    """Left-multiplication matrix of a quaternion on basis (1, i, j, k)."""
    cols = [_QUAT.mul(q, _QUAT.unit(c)) for c in range(4)]
    return tuple(tuple(cols[c][r] for c in range(4)) for r in range(4))


def realify(entries, unit_dim):
    """Realify a matrix over C (unit_dim 2) or H (unit_dim 4)."""
    n = len(entries)
    size = n * unit_dim
    out = [[ZERO] * size for _ in range(size)]
    for r in range(n):
        for c in range(n):
            val = entries[r][c]
            if all(a == 0 for a in val):
                continue
            block = complex_block(val) if unit_dim == 2 else quat_block(val)
            for br in range(unit_dim):
                for bc in range(unit_dim):
                    out[r * unit_dim + br][c * unit_dim + bc] = block[br][bc]
    return Matrix(out)


def matrix_mul_over(entries_a, entries_b, unit_dim):
    """Product of two matrices over C or H (entries are coefficient tuples)."""
    n = len(entries_a)
    mul = (lambda x, y: _cmul(x, y)) if unit_dim == 2 else _QUAT.mul
    zero = tuple([ZERO] * unit_dim)
    out = [[zero] * n for _ in range(n)]
    for r in range(n):
        for c in range(n):
            acc = [ZERO] * unit_dim
            for k in range(n):
                p = mul(entries_a[r][k], entries_b[k][c])
                acc = [x + y for x, y in zip(acc, p)]
            out[r][c] = tuple(acc)
    return out


def _cmul(x, y):
    return (x[0] * y[0] - x[1] * y[1], x[0] * y[1] + x[1] * y[0])


# ---------------------------------------------------------------------------
# Classical families
# ---------------------------------------------------------------------------

def _so_basis(n):
    mats = []
    for a in range(n):
        for b in range(a + 1, n):
            m = [[ZERO] * n for _ in range(n)]
            m[a][b] = ONE
            m[b][a] = -ONE
            mats.append(Matrix(m))
    return mats


def _unitary_family_basis(n, unit_dim, diag_units, include_traceless_only=False):
    """Skew-Hermitian bases over C or H, realified.

    Iterates positions (a, b) with a <= b lexicographically; at a diagonal
    position emits the imaginary diagonal units (or traceless differences
    for su), at an off-diagonal position the units u E_ab - conj(u) E_ba.
    """
    zero = tuple([ZERO] * unit_dim)

    def unit(k):
        v = [ZERO] * unit_dim
        v[k] = ONE
        return tuple(v)

    def conj(u):
        return (u[0],) + tuple(-a for a in u[1:])

    mats = []
    for a in range(n):
        for b in range(a, n):
            if a == b:
                if include_traceless_only:
                    if a < n - 1:
                        for k in diag_units:
                            e = [[zero] * n for _ in range(n)]
                            e[a][a] = unit(k)
                            e[a + 1][a + 1] = tuple(-x for x in unit(k))
                            mats.append(realify(e, unit_dim))
                else:
                    for k in diag_units:
                        e = [[zero] * n for _ in range(n)]
                        e[a][a] = unit(k)
                        mats.append(realify(e, unit_dim))
            else:
                for k in range(unit_dim):
                    e = [[zero] * n for _ in range(n)]
                    e[a][b] = unit(k)
                    e[b][a] = tuple(-x for x in conj(unit(k)))
                    mats.append(realify(e, unit_dim))
    return mats


def build_classical(family: str, n: int) -> LieAlgebra:
    """so(n), u(n), su(n) or sp(n) as a verified real matrix algebra.

    u/su are realified to 2n x 2n, sp to 4n x 4n real matrices.
    """
    if n < 1:
        raise InvalidParameter(f"{family}({n}): n must be >= 1")
    if family == "so":
        if n == 1:
            raise InvalidParameter("so(1) is zero-dimensional; use a zero subspace")
        mats = _so_basis(n)
        meta = {"family": "so", "n": n, "unit_dim": 1}
    elif family == "u":
        mats = _unitary_family_basis(n, 2, diag_units=(1,))
        meta = {"family": "u", "n": n, "unit_dim": 2}
    elif family == "su":
        if n < 2:
            raise InvalidParameter("su(1) is zero-dimensional")
        mats = _unitary_family_basis(n, 2, diag_units=(1,), include_traceless_only=True)
        meta = {"family": "su", "n": n, "unit_dim": 2}
    elif family == "sp":
        mats = _unitary_family_basis(n, 4, diag_units=(1, 2, 3))
        meta = {"family": "sp", "n": n, "unit_dim": 4}
    else:
        raise InvalidParameter(f"unknown family {family!r}")
    return LieAlgebra.from_basis(f"{family}({n})", mats, meta=meta)


def classical_dim(family, n):
    return {"so": n * (n - 1) // 2, "u": n * n, "su": n * n - 1,
            "sp": n * (2 * n + 1)}[family]


# ---------------------------------------------------------------------------
# Sums and standard embeddings
# ---------------------------------------------------------------------------

def direct_sum(l1: LieAlgebra, l2: LieAlgebra, name=None) -> LieAlgebra:
    """Block-diagonal sum; structure constants are assembled, not re-solved."""
    n1, n2 = l1.matrix_size, l2.matrix_size
    d1 = l1.dim
    size = n1 + n2

    def pad(m, off):
        out = [[ZERO] * size for _ in range(size)]
        for r, row in enumerate(m.entries):
            for c, v in enumerate(row):
                if v:
                    out[off + r][off + c] = v
        return Matrix(out)

    basis = [pad(m, 0) for m in l1.basis] + [pad(m, n1) for m in l2.basis]
    gram = [[ZERO] * (d1 + l2.dim) for _ in range(d1 + l2.dim)]
    for i in range(d1):
        for j in range(d1):
            gram[i][j] = l1.gram.entries[i][j]
    for i in range(l2.dim):
        for j in range(l2.dim):
            gram[d1 + i][d1 + j] = l2.gram.entries[i][j]
    structure = {key: row for key, row in l1.structure.items() if row}
    for (i, j), row in l2.structure.items():
        if row:
            structure[(d1 + i, d1 + j)] = tuple((d1 + k, c) for k, c in row)
    name = name or f"{l1.name}+{l2.name}"
    summands = ([(s, e, o) for (s, e, o) in l1.meta.get("summands", [(0, d1, 0)])]
                + [(s + d1, e + d1, o + n1)
                   for (s, e, o) in l2.meta.get("summands", [(0, l2.dim, 0)])])
    meta = {"summands": summands, "parts": [l1.name, l2.name]}
    alg = LieAlgebra(name, basis, Matrix(gram), structure, meta=meta,
                     verification=f"assembled({l1.verification},{l2.verification})")
    return alg


def _sum_slices(l):
    return l.meta.get("summands", [(0, l.dim, 0)])


def summand_slices(l: LieAlgebra):
    """Coordinate ranges [(start, stop, matrix offset)] of direct summands."""
    return list(_sum_slices(l))


def pad_coords(coords, dim_total, offset):
    v = [ZERO] * dim_total
    for i, c in enumerate(coords):
        v[offset + i] = c
    return tuple(v)


def slope_embed_u1(algebra: LieAlgebra, t1, t2, k: int, l: int, name="u1") -> Subalgebra:
    """u(1) embedded with direction (k, l) in the torus spanned by t1, t2.

    The slope is reduced to coprime form; (0, 0) is rejected.
    """
    if k == 0 and l == 0:
        raise ZeroSlope("slope (0,0) spans nothing")
    g = gcd(abs(k), abs(l))
    k, l = k // g, l // g
    if not vec_is_zero(algebra.bracket_coords(t1, t2)):
        raise InvalidParameter("torus generators do not commute")
    v = tuple(k * a + l * b for a, b in zip(t1, t2))
    return Subalgebra(algebra, Subspace.from_rows([v], algebra.dim),
                      name=f"{name}({k},{l})")


def diagonal_span(algebra: LieAlgebra, rows1, rows2, name="diag") -> Subalgebra:
    """Span of pairwise sums {r1_i + r2_i}; closure is verified."""
    if len(rows1) != len(rows2):
        raise DimensionMismatch("diagonal needs equally long generator lists")
    rows = [tuple(a + b for a, b in zip(r1, r2)) for r1, r2 in zip(rows1, rows2)]
    return Subalgebra(algebra, Subspace.from_rows(rows, algebra.dim), name)


def diagonal_embed(sum_algebra: LieAlgebra, name="diag") -> Subalgebra:
    """The diagonal copy {(X, X)} inside a sum L + L of identical parts."""
    slices = summand_slices(sum_algebra)
    if len(slices) != 2 or (slices[0][1] - slices[0][0]) != (slices[1][1] - slices[1][0]):
        raise InvalidParameter("diagonal_embed expects a sum of two equal parts")
    d = slices[0][1] - slices[0][0]
    rows1 = [pad_coords(_e(d, i), sum_algebra.dim, slices[0][0]) for i in range(d)]
    rows2 = [pad_coords(_e(d, i), sum_algebra.dim, slices[1][0]) for i in range(d)]
    return diagonal_span(sum_algebra, rows1, rows2, name)


def _e(n, i):
    v = [ZERO] * n
    v[i] = ONE
    return tuple(v)


# ---------------------------------------------------------------------------
# Stabilizers (the basis matrices act on column vectors)
# ---------------------------------------------------------------------------

def stabilizer_subalgebra(algebra, fixed, name="stab", within: Subspace = None):
    """{X : X v = 0 for all v in fixed}, verified closed under bracket.

    `algebra` must carry a matrix action (every LieAlgebra here does); the
    optional `within` restricts to a subspace of the algebra first.
    """
    if isinstance(algebra, Subalgebra):
        within = algebra.space if within is None else within
        algebra = algebra.algebra
    if not isinstance(algebra, LieAlgebra) or algebra.matrix_size == 0:
        raise ActionMissing("stabilizer needs a matrix action")
    carrier = within if within is not None else algebra.full_space()
    acts = [algebra.element(row) for row in carrier.basis]
    rows = []
    for v in fixed:
        if len(v) != algebra.matrix_size:
            raise DimensionMismatch("fixed vector has wrong length")
        images = [a.matvec(v) for a in acts]
        for out in range(algebra.matrix_size):
            rows.append([im[out] for im in images])
    if not rows:
        space = carrier
    else:
        sols = nullspace_rows(rows, carrier.dim)
        space = Subspace.from_rows([carrier.lincomb(s) for s in sols], algebra.dim)
    return Subalgebra(algebra, space, name)
