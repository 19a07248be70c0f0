"""Deterministic exact linear algebra over Q and Q(sqrt 3).

Matrices are dense tuples of tuples of exact scalars.  Row reduction over the
rationals runs fraction-free: each row is cleared to integers, elimination
uses integer cross-multiples with gcd normalization, and only the final
normalization of pivots to 1 divides.  Over Q(sqrt 3) the classic
divide-by-pivot reduction is used (those systems are small).

Subspaces are stored by their reduced row echelon basis, which is a canonical
form: two subspaces are equal iff their stored bases are identical.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

from .errors import DegenerateForm, DimensionMismatch
from .scalars import Sqrt3, scalar_is_positive

ZERO = Fraction(0)
ONE = Fraction(1)


class Matrix:
    """Immutable dense matrix of exact scalars."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, entries):
        entries = tuple(tuple(row) for row in entries)
        self.entries = entries
        self.rows = len(entries)
        self.cols = len(entries[0]) if entries else 0
        for row in entries:
            if len(row) != self.cols:
                raise DimensionMismatch("ragged rows")

    @staticmethod
    def zero(rows, cols):
        return Matrix([[ZERO] * cols for _ in range(rows)])

    @staticmethod
    def identity(n):
        return Matrix([[ONE if i == j else ZERO for j in range(n)] for i in range(n)])

    def __eq__(self, other):
        return (isinstance(other, Matrix) and self.rows == other.rows
                and self.cols == other.cols and self.entries == other.entries)

    def __hash__(self):
        return hash(self.entries)

    def __repr__(self):
        return f"Matrix({self.rows}x{self.cols})"

    def __add__(self, other):
        self._check_shape(other)
        return Matrix([[a + b for a, b in zip(r1, r2)]
                       for r1, r2 in zip(self.entries, other.entries)])

    def __sub__(self, other):
        self._check_shape(other)
        return Matrix([[a - b for a, b in zip(r1, r2)]
                       for r1, r2 in zip(self.entries, other.entries)])

    def __neg__(self):
        return Matrix([[-a for a in row] for row in self.entries])

    def scale(self, c):
        return Matrix([[c * a for a in row] for row in self.entries])

    def __mul__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        if self.cols != other.rows:
            raise DimensionMismatch(f"{self.rows}x{self.cols} * {other.rows}x{other.cols}")
        bt = list(zip(*other.entries))
        out = []
        for row in self.entries:
            out.append([_dot(row, col) for col in bt])
        return Matrix(out)

    def matvec(self, v):
        if self.cols != len(v):
            raise DimensionMismatch("matvec size")
        return tuple(_dot(row, v) for row in self.entries)

    def transpose(self):
        return Matrix(list(zip(*self.entries))) if self.rows else Matrix([])

    def trace(self):
        if self.rows != self.cols:
            raise DimensionMismatch("trace of non-square matrix")
        t = ZERO
        for i in range(self.rows):
            t = t + self.entries[i][i]
        return t

    def bracket(self, other):
        """Commutator self*other - other*self."""
        return self * other - other * self

    def is_zero(self):
        return all(a == 0 for row in self.entries for a in row)

    def vec(self):
        """Row-major flattening."""
        return tuple(a for row in self.entries for a in row)

    def _check_shape(self, other):
        if self.rows != other.rows or self.cols != other.cols:
            raise DimensionMismatch("shape mismatch")


def _dot(u, v):
    s = ZERO
    for a, b in zip(u, v):
        if a and b:
            s = s + a * b
    return s


def vec_add(u, v):
    return tuple(a + b for a, b in zip(u, v))


def vec_sub(u, v):
    return tuple(a - b for a, b in zip(u, v))


def vec_scale(c, u):
    return tuple(c * a for a in u)


def vec_is_zero(u):
    return all(a == 0 for a in u)


def vec_dot(u, v):
    return _dot(u, v)


# ---------------------------------------------------------------------------
# Row reduction
# ---------------------------------------------------------------------------

def _rows_are_rational(rows) -> bool:
    for row in rows:
        for a in row:
            if isinstance(a, Sqrt3):
                if a.b != 0:
                    return False
            elif not isinstance(a, (int, Fraction)):
                return False
    return True


def _int_rows(rows):
    """Clear denominators rowwise; returns integer rows (list of lists)."""
    out = []
    for row in rows:
        den = 1
        for a in row:
            f = a.a if isinstance(a, Sqrt3) else Fraction(a)
            den = den * f.denominator // gcd(den, f.denominator)
        irow = []
        for a in row:
            f = a.a if isinstance(a, Sqrt3) else Fraction(a)
            irow.append(f.numerator * (den // f.denominator))
        out.append(irow)
    return out


def _normalize_int_row(row):
    g = 0
    for a in row:
        if a:
            g = gcd(g, abs(a))
            if g == 1:
                break
    if g > 1:
        for j, a in enumerate(row):
            if a:
                row[j] = a // g
    return row


def _rref_int(rows, ncols):
    """Fraction-free RREF of integer rows.

    Elimination uses integer cross-multiples only; division happens once at
    the end when pivots are normalized to 1.  Returns (fraction rows, rank,
    pivot columns).
    """
    work = [list(r) for r in rows]
    pivots = []
    piv_rows = []
    for col in range(ncols):
        sel = None
        for i, r in enumerate(work):
            if r[col]:
                sel = i
                break
        if sel is None:
            continue
        prow = work.pop(sel)
        _normalize_int_row(prow)
        pv = prow[col]
        nxt = []
        for r in work:
            rv = r[col]
            if rv:
                r = [a * pv - b * rv for a, b in zip(r, prow)]
                _normalize_int_row(r)
            if any(r):
                nxt.append(r if isinstance(r, list) else list(r))
        work = nxt
        # eliminate upwards into the already-fixed pivot rows
        for k, (pc, old) in enumerate(zip(pivots, piv_rows)):
            ov = old[col]
            if ov:
                new = [a * pv - b * ov for a, b in zip(old, prow)]
                _normalize_int_row(new)
                piv_rows[k] = new
        pivots.append(col)
        piv_rows.append(prow)
        if not work:
            break
    frac_rows = []
    for pc, r in zip(pivots, piv_rows):
        pv = Fraction(r[pc])
        frac_rows.append(tuple(Fraction(a) / pv for a in r))
    order = sorted(range(len(pivots)), key=lambda i: pivots[i])
    frac_rows = [frac_rows[i] for i in order]
    pivots = sorted(pivots)
    return frac_rows, len(pivots), pivots


def _rref_generic(rows, ncols):
    """Divide-by-pivot RREF for Q(sqrt3) (or mixed) rows."""
    work = [list(r) for r in rows]
    pivots = []
    piv_rows = []
    for col in range(ncols):
        sel = None
        for i, r in enumerate(work):
            if r[col] != 0:
                sel = i
                break
        if sel is None:
            continue
        prow = work.pop(sel)
        pv = prow[col]
        prow = [a / pv for a in prow]
        nxt = []
        for r in work:
            rv = r[col]
            if rv != 0:
                r = [a - rv * b for a, b in zip(r, prow)]
            if any(a != 0 for a in r):
                nxt.append(list(r))
        work = nxt
        for k, old in enumerate(piv_rows):
            ov = old[col]
            if ov != 0:
                piv_rows[k] = [a - ov * b for a, b in zip(old, prow)]
        pivots.append(col)
        piv_rows.append(prow)
        if not work:
            break
    order = sorted(range(len(pivots)), key=lambda i: pivots[i])
    frac_rows = [tuple(piv_rows[i]) for i in order]
    pivots = sorted(pivots)
    return frac_rows, len(pivots), pivots


def rref_rows(rows, ncols):
    """RREF of a list of row vectors; returns (rows, rank, pivots)."""
    rows = [r for r in rows if any(a != 0 for a in r)]
    if not rows:
        return [], 0, []
    if _rows_are_rational(rows):
        return _rref_int(_int_rows(rows), ncols)
    return _rref_generic(rows, ncols)


def rref(m: Matrix):
    """Reduced row echelon form of a matrix.

    Returns (rref matrix, rank, pivot column list); zero rows are kept so the
    result has the same shape as the input.
    """
    rrows, rank, pivots = rref_rows(m.entries, m.cols)
    padded = list(rrows) + [tuple([ZERO] * m.cols) for _ in range(m.rows - len(rrows))]
    return Matrix(padded), rank, pivots


def rank_rows(rows, ncols) -> int:
    return rref_rows(rows, ncols)[1]


def nullspace_rows(rows, ncols):
    """Basis (list of vectors) of {v : A v = 0} for A given by rows."""
    rrows, rank, pivots = rref_rows(rows, ncols)
    pivset = set(pivots)
    free = [c for c in range(ncols) if c not in pivset]
    basis = []
    for f in free:
        v = [ZERO] * ncols
        v[f] = ONE
        for prow, pc in zip(rrows, pivots):
            if prow[f] != 0:
                v[pc] = -prow[f]
        basis.append(tuple(v))
    # sanity: each basis vector really lies in the kernel
    for v in basis:
        for row in rows:
            assert _dot(row, v) == 0, "nullspace residual"
    return basis


def solve(rows, ncols, rhs):
    """One exact solution of A x = b, or None if inconsistent."""
    aug = [list(r) + [b] for r, b in zip(rows, rhs)]
    rrows, rank, pivots = rref_rows(aug, ncols + 1)
    if ncols in pivots:
        return None
    x = [ZERO] * ncols
    for prow, pc in zip(rrows, pivots):
        x[pc] = prow[ncols]
    return tuple(x)


# ---------------------------------------------------------------------------
# Subspaces
# ---------------------------------------------------------------------------

class Subspace:
    """A linear subspace of coordinate space, canonicalized by its RREF basis.

    Equality of subspaces is literal equality of the canonical bases.
    """

    __slots__ = ("ambient_dim", "basis")

    def __init__(self, ambient_dim, basis_rows):
        self.ambient_dim = ambient_dim
        self.basis = tuple(tuple(r) for r in basis_rows)

    @staticmethod
    def from_rows(rows, ambient_dim):
        rrows, rank, _ = rref_rows(rows, ambient_dim)
        return Subspace(ambient_dim, rrows)

    @staticmethod
    def zero(ambient_dim):
        return Subspace(ambient_dim, [])

    @staticmethod
    def full(ambient_dim):
        return Subspace(ambient_dim, Matrix.identity(ambient_dim).entries)

    @property
    def dim(self):
        return len(self.basis)

    def __eq__(self, other):
        return (isinstance(other, Subspace) and self.ambient_dim == other.ambient_dim
                and self.basis == other.basis)

    def __hash__(self):
        return hash((self.ambient_dim, self.basis))

    def __repr__(self):
        return f"Subspace(dim={self.dim}, ambient={self.ambient_dim})"

    def contains(self, v) -> bool:
        if len(v) != self.ambient_dim:
            raise DimensionMismatch("vector/ambient mismatch")
        return self.coordinates(v) is not None

    def coordinates(self, v):
        """Coefficients of v against the canonical basis, or None."""
        r = list(v)
        coeffs = []
        for row in self.basis:
            pc = next(j for j, a in enumerate(row) if a != 0)
            c = r[pc]
            coeffs.append(c)
            if c != 0:
                r = [x - c * y for x, y in zip(r, row)]
        if any(x != 0 for x in r):
            return None
        return tuple(coeffs)

    def contains_subspace(self, other) -> bool:
        return all(self.contains(row) for row in other.basis)

    def lincomb(self, coeffs):
        v = [ZERO] * self.ambient_dim
        for c, row in zip(coeffs, self.basis):
            if c != 0:
                v = [x + c * y for x, y in zip(v, row)]
        return tuple(v)


def subspace_sum(u: Subspace, v: Subspace) -> Subspace:
    _same_ambient(u, v)
    return Subspace.from_rows(list(u.basis) + list(v.basis), u.ambient_dim)


def subspace_intersect(u: Subspace, v: Subspace) -> Subspace:
    """U cap V via the kernel of the stacked coordinate map."""
    _same_ambient(u, v)
    if u.dim == 0 or v.dim == 0:
        return Subspace.zero(u.ambient_dim)
    # columns: coefficients on u-basis then v-basis; rows: ambient coords
    rows = []
    for i in range(u.ambient_dim):
        rows.append([b[i] for b in u.basis] + [-b[i] for b in v.basis])
    sols = nullspace_rows(rows, u.dim + v.dim)
    vecs = [u.lincomb(s[:u.dim]) for s in sols]
    return Subspace.from_rows(vecs, u.ambient_dim)


def orthocomplement(u: Subspace, within: Subspace, gram: Matrix) -> Subspace:
    """{w in `within` : <w, u> = 0}, for the inner product given by `gram`.

    The form restricted to `within` must be positive definite; a singular
    restricted Gram matrix raises DegenerateForm.
    """
    _same_ambient(u, within)
    if gram.rows != u.ambient_dim:
        raise DimensionMismatch("gram/ambient mismatch")
    wdim = within.dim
    if wdim == 0:
        return Subspace.zero(u.ambient_dim)
    wg = [gram.matvec(row) for row in within.basis]  # rows: G * w_i
    restricted = [[_dot(wi, wj_row) for wj_row in wg] for wi in within.basis]
    if not is_positive_definite(Matrix(restricted)):
        raise DegenerateForm("form not positive definite on the carrier subspace")
    if u.dim == 0:
        return within
    # constraints on coefficients c with w = sum c_i within_i: u_j . G w = 0
    rows = [[_dot(urow, wg_i) for wg_i in wg] for urow in u.basis]
    sols = nullspace_rows(rows, wdim)
    vecs = [within.lincomb(s) for s in sols]
    return Subspace.from_rows(vecs, u.ambient_dim)


def project(v, onto: Subspace, gram: Matrix):
    """Orthogonal projection of v onto the subspace, wrt the gram form."""
    if len(v) != onto.ambient_dim:
        raise DimensionMismatch("vector/ambient mismatch")
    if onto.dim == 0:
        return tuple([ZERO] * onto.ambient_dim)
    bg = [gram.matvec(row) for row in onto.basis]
    gmat = [[_dot(bi, bg_j) for bg_j in bg] for bi in onto.basis]
    rhs = [_dot(bg_i, v) for bg_i in bg]
    if rank_rows(gmat, onto.dim) != onto.dim:
        raise DegenerateForm("form degenerate on projection target")
    coeffs = solve(gmat, onto.dim, rhs)
    return onto.lincomb(coeffs)


def is_positive_definite(g: Matrix) -> bool:
    """Exact positive-definiteness via pivoted symmetric elimination."""
    if g.rows != g.cols:
        raise DimensionMismatch("gram must be square")
    n = g.rows
    a = [list(row) for row in g.entries]
    for k in range(n):
        piv = a[k][k]
        if not scalar_is_positive(piv):
            return False
        for i in range(k + 1, n):
            f = a[i][k] / piv
            if f != 0:
                for j in range(k, n):
                    a[i][j] = a[i][j] - f * a[k][j]
    return True


def _same_ambient(u, v):
    if u.ambient_dim != v.ambient_dim:
        raise DimensionMismatch("ambient dimensions differ")


# ---------------------------------------------------------------------------
# Incremental sparse integer echelon (for the big derivation solves)
# ---------------------------------------------------------------------------

class SparseEchelon:
    """Row echelon over Z with sparse rows, built incrementally.

    Rows are dicts column -> nonzero int, gcd-normalized.  Used by the
    derivation solver where the constraint matrix is large but sparse; the
    exactness contract is the same as the dense path (integer cross-multiples
    only, division deferred to back substitution).
    """

    def __init__(self, ncols):
        self.ncols = ncols
        self.pivot_rows = {}  # pivot col -> row dict

    @property
    def rank(self):
        return len(self.pivot_rows)

    def reduce(self, row):
        """Reduce a row against the current pivots (row: dict, consumed)."""
        while row:
            c = min(row)
            pr = self.pivot_rows.get(c)
            if pr is None:
                return c, row
            pv = pr[c]
            rv = row[c]
            g = gcd(pv, abs(rv))
            mul_r, mul_p = pv // g, rv // g
            new = {}
            for col, val in row.items():
                val = val * mul_r - pr.get(col, 0) * mul_p
                if val:
                    new[col] = val
            for col, val in pr.items():
                if col not in row:
                    v = -val * mul_p
                    if v:
                        new[col] = v
            row = new
        return None, row

    def add_row(self, row) -> bool:
        """Insert a row; returns True if it increased the rank."""
        row = {c: v for c, v in row.items() if v}
        c, row = self.reduce(row)
        if c is None:
            return False
        g = 0
        for v in row.values():
            g = gcd(g, abs(v))
            if g == 1:
                break
        if g > 1:
            row = {col: v // g for col, v in row.items()}
        self.pivot_rows[c] = row
        return True

    def nullspace(self):
        """Fraction basis of the kernel, one vector per free column."""
        pivots = sorted(self.pivot_rows)
        pivset = set(pivots)
        free = [c for c in range(self.ncols) if c not in pivset]
        basis = []
        for f in free:
            x = {f: ONE}
            for pc in reversed(pivots):
                row = self.pivot_rows[pc]
                s = ZERO
                for col, val in row.items():
                    if col == pc:
                        continue
                    xv = x.get(col)
                    if xv is not None:
                        s += val * xv
                if s:
                    x[pc] = -s / row[pc]
            basis.append(tuple(x.get(c, ZERO) for c in range(self.ncols)))
        return basis
