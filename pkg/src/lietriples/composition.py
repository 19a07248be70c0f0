"""Quaternions, octonions, and 3x3 octonionic Hermitian matrices.

The octonion table is fixed once and for all by Cayley-Dickson doubling of
the standard quaternions:

    (a, b) (c, d) = (a c - conj(d) b,  d a + b conj(c)),

with basis e0 = 1, e1 = i, e2 = j, e3 = k, e4 = l, e5 = i l, e6 = j l,
e7 = k l.  All downstream dimensions (derivation algebras, stabilizers) are
independent of this convention; it is recorded here so reports are
reproducible.

Elements are coefficient tuples of Fractions.  The Jordan algebra of 3x3
octonionic Hermitian matrices under x o y = (xy + yx)/2 is exposed with the
same structure-constant interface, which is all the derivation solver needs.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import InvalidParameter

ZERO = Fraction(0)
ONE = Fraction(1)

_QUAT_TABLE = {
    # (a, b) -> (index, sign) for basis 1, i, j, k
    (0, 0): (0, 1), (0, 1): (1, 1), (0, 2): (2, 1), (0, 3): (3, 1),
    (1, 0): (1, 1), (1, 1): (0, -1), (1, 2): (3, 1), (1, 3): (2, -1),
    (2, 0): (2, 1), (2, 1): (3, -1), (2, 2): (0, -1), (2, 3): (1, 1),
    (3, 0): (3, 1), (3, 1): (2, 1), (3, 2): (1, -1), (3, 3): (0, -1),
}


class CompositionAlgebra:
    """A real composition algebra of dimension 4 or 8 with exact table."""

    def __init__(self, dim, table, name):
        self.dim = dim
        self.name = name
        # table[a][b] = coefficient vector of e_a * e_b
        self.table = table
        self._check()

    def mul(self, x, y):
        out = [ZERO] * self.dim
        for a, xa in enumerate(x):
            if xa == 0:
                continue
            for b, yb in enumerate(y):
                if yb == 0:
                    continue
                for k, c in self.table[a][b]:
                    out[k] += xa * yb * c
        return tuple(out)

    def conj(self, x):
        return (x[0],) + tuple(-a for a in x[1:])

    def norm(self, x):
        return sum(a * a for a in x)

    def unit(self, a):
        v = [ZERO] * self.dim
        v[a] = ONE
        return tuple(v)

    def struct(self, a, b):
        """Sparse product of basis units: list of (index, coeff)."""
        return self.table[a][b]

    def left_mult_matrix(self, x):
        """8x8 (or 4x4) matrix of v -> x*v in the unit basis."""
        cols = [self.mul(x, self.unit(c)) for c in range(self.dim)]
        return [[cols[c][r] for c in range(self.dim)] for r in range(self.dim)]

    def associator(self, x, y, z):
        return tuple(a - b for a, b in zip(self.mul(self.mul(x, y), z),
                                           self.mul(x, self.mul(y, z))))

    def _check(self):
        # unital
        one = self.unit(0)
        for a in range(self.dim):
            u = self.unit(a)
            assert self.mul(one, u) == u and self.mul(u, one) == u
        # norm multiplicative on basis products and alternative law
        for a in range(self.dim):
            ua = self.unit(a)
            for b in range(self.dim):
                ub = self.unit(b)
                prod = self.mul(ua, ub)
                assert self.norm(prod) == self.norm(ua) * self.norm(ub)
                lhs = self.mul(ua, self.mul(ua, ub))
                rhs = self.mul(self.mul(ua, ua), ub)
                assert lhs == rhs, "alternative law x(xy) = (xx)y failed"


def _quaternion_table():
    table = []
    for a in range(4):
        row = []
        for b in range(4):
            k, s = _QUAT_TABLE[(a, b)]
            row.append(((k, Fraction(s)),))
        table.append(row)
    return table


def _double(table, dim):
    """Cayley-Dickson doubling: (a,b)(c,d) = (ac - conj(d)b, da + b conj(c))."""
    def scaled(entries, sign, shift):
        return tuple((k + shift, sign * c) for k, c in entries)

    big = [[None] * (2 * dim) for _ in range(2 * dim)]
    for x in range(2 * dim):
        x0, xhi = x % dim, x >= dim
        for y in range(2 * dim):
            y0, yhi = y % dim, y >= dim
            if not xhi and not yhi:                       # (a,0)(c,0) = (ac, 0)
                big[x][y] = scaled(table[x0][y0], 1, 0)
            elif not xhi and yhi:                         # (a,0)(0,d) = (0, da)
                big[x][y] = scaled(table[y0][x0], 1, dim)
            elif xhi and not yhi:                         # (0,b)(c,0) = (0, b conj(c))
                sign = 1 if y0 == 0 else -1
                big[x][y] = scaled(table[x0][y0], sign, dim)
            else:                                         # (0,b)(0,d) = (-conj(d)b, 0)
                sign = -1 if y0 == 0 else 1
                big[x][y] = scaled(table[y0][x0], sign, 0)
    return big


def composition_algebra(dim: int) -> CompositionAlgebra:
    """The quaternions (dim 4) or octonions (dim 8)."""
    if dim == 4:
        return CompositionAlgebra(4, _quaternion_table(), "quaternions")
    if dim == 8:
        return CompositionAlgebra(8, _double(_quaternion_table(), 4), "octonions")
    raise InvalidParameter(f"composition algebra dimension must be 4 or 8, got {dim}")


# ---------------------------------------------------------------------------
# The 27-dimensional Jordan algebra of 3x3 octonionic Hermitian matrices
# ---------------------------------------------------------------------------

class JordanAlgebraH3O:
    """h3(O) with product x o y = (xy + yx)/2, as exact structure constants.

    Basis layout (27 elements):
      0..2            diagonal idempotents E1, E2, E3
      3..10           off-diagonal octonion x in slots (2,3)/(3,2)
      11..18          off-diagonal octonion y in slots (3,1)/(1,3)
      19..26          off-diagonal octonion z in slots (1,2)/(2,1)
    """

    dim = 27

    def __init__(self):
        self.oct = composition_algebra(8)
        self._struct = {}
        self._build()

    # -- element representation: 3x3 array of octonion 8-tuples ------------

    def basis_matrix(self, idx):
        o = self.oct
        zero = tuple([ZERO] * 8)
        m = [[zero] * 3 for _ in range(3)]
        if idx < 3:
            m[idx][idx] = o.unit(0)
            return m
        slot, a = divmod(idx - 3, 8)
        u = o.unit(a)
        pos = [(1, 2), (2, 0), (0, 1)][slot]
        i, j = pos
        m[i][j] = u
        m[j][i] = o.conj(u)
        return m

    def matrix_coords(self, m):
        """Coordinates of a Hermitian octonionic matrix in the basis."""
        o = self.oct
        coords = [ZERO] * 27
        for d in range(3):
            diag = m[d][d]
            assert all(c == 0 for c in diag[1:]), "diagonal must be real"
            coords[d] = diag[0]
        for slot, (i, j) in enumerate([(1, 2), (2, 0), (0, 1)]):
            entry = m[i][j]
            assert m[j][i] == o.conj(entry), "matrix must be Hermitian"
            for a in range(8):
                coords[3 + 8 * slot + a] = entry[a]
        return tuple(coords)

    def _matmul(self, x, y):
        o = self.oct
        zero = tuple([ZERO] * 8)
        out = [[zero] * 3 for _ in range(3)]
        for i in range(3):
            for j in range(3):
                acc = [ZERO] * 8
                for k in range(3):
                    p = o.mul(x[i][k], y[k][j])
                    acc = [a + b for a, b in zip(acc, p)]
                out[i][j] = tuple(acc)
        return out

    def jordan_mul_matrices(self, x, y):
        xy = self._matmul(x, y)
        yx = self._matmul(y, x)
        half = Fraction(1, 2)
        return [[tuple(half * (a + b) for a, b in zip(xy[i][j], yx[i][j]))
                 for j in range(3)] for i in range(3)]

    def _build(self):
        mats = [self.basis_matrix(i) for i in range(27)]
        for i in range(27):
            for j in range(i, 27):
                prod = self.jordan_mul_matrices(mats[i], mats[j])
                coords = self.matrix_coords(prod)
                sparse = tuple((k, c) for k, c in enumerate(coords) if c != 0)
                self._struct[(i, j)] = sparse
                self._struct[(j, i)] = sparse  # commutative
        unit = self.mul_coords(self.unit_coords(), self.unit_coords())
        assert unit == self.unit_coords(), "E1+E2+E3 must be the identity"

    def struct(self, i, j):
        return self._struct[(i, j)]

    def unit_coords(self):
        return tuple([ONE, ONE, ONE] + [ZERO] * 24)

    def mul_coords(self, x, y):
        out = [ZERO] * 27
        for i, xi in enumerate(x):
            if xi == 0:
                continue
            for j, yj in enumerate(y):
                if yj == 0:
                    continue
                for k, c in self._struct[(i, j)]:
                    out[k] += xi * yj * c
        return tuple(out)
