"""Nested triples h < k < g and all positivity machinery.

Everything here works in basis coordinates of the ambient algebra: vectors
are coordinate tuples, brackets go through the structure constants, and all
verdicts come from exact kernels and ranks.

Vocabulary (for a triple with complements m = k minus h, p = g minus k,
orthogonal for the trace form):

  * A vector A in p is *fat* if no nonzero vector of m commutes with it,
    and *strongly fat* if its centralizer inside m + p is exactly its own
    line.
  * The positivity certificate needs: no commuting pairs in p, none in m,
    isotropy of k transitive on the unit sphere of p, and a fat vector.
    The first three are certified by catalog tags for the base and fiber
    pairs (plus exact sampling probes as corroboration); the fat vector is
    found and checked exactly.
  * Refutations are always exact witnesses: a trivial isotropy factor, a
    violated dimension bound, a universal commuting pair (Z, W) whose
    obstruction map vanishes identically, or per-A commuting pairs for a
    seeded family of A.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd

from .algebras import (LieAlgebra, Subalgebra, build_classical,
                       centralizer_space, direct_sum, pad_coords,
                       subalgebra_from_coords, summand_slices)
from .errors import (EmbeddingNotCommuting, NotInP, NotNested, NotStrict,
                     NotSubalgebra, SlopeNotAllowed)
from .linalg import (Matrix, Subspace, nullspace_rows, rank_rows, rref_rows,
                     subspace_intersect, subspace_sum, orthocomplement,
                     vec_add, vec_is_zero, vec_scale, vec_sub)
from .rng import RationalSampler
from .scalars import EXT_RATIONAL, EXT_SQRT3, Sqrt3

ZERO = Fraction(0)
ONE = Fraction(1)

# Table rows (base-pair types) whose isotropy action is transitive on the
# unit sphere of p; only these can support a positivity certificate.
SPHERE_TRANSITIVE_ROWS = {1, 5, 6, 7, 9, 10}


# ---------------------------------------------------------------------------
# The triple
# ---------------------------------------------------------------------------

class NestedTriple:
    """h < k < g with cached orthogonal complements m and p."""

    def __init__(self, g: LieAlgebra, k: Subalgebra, h: Subalgebra, labels=None):
        self.g = g
        self.k = k
        self.h = h
        self.labels = dict(labels or {})
        self.extras = {}  # non-serializable helpers (fixture closures etc.)
        full = g.full_space()
        if not k.space.contains_subspace(h.space):
            raise NotNested("h is not contained in k")
        if not (h.dim < k.dim < g.dim):
            raise NotStrict("need dim h < dim k < dim g")
        self.m = orthocomplement(h.space, k.space, g.gram)
        self.p = orthocomplement(k.space, full, g.gram)
        if self.m.dim < 1 or self.p.dim < 1:
            raise NotStrict("m and p must be nonzero")
        self.mp = subspace_sum(self.m, self.p)
        self._projectors = {}
        self._verify_invariance()

    def _verify_invariance(self):
        # [h, m] stays in m inside k, and [k, p] stays in p (exact).
        for y in self.h.space.basis:
            for x in self.m.basis:
                b = self.g.bracket_coords(y, x)
                if self.m.coordinates(b) is None:
                    raise NotSubalgebra("m is not ad(h)-invariant")
        for y in self.k.space.basis:
            for w in self.p.basis:
                b = self.g.bracket_coords(y, w)
                if self.p.coordinates(b) is None:
                    raise NotSubalgebra("p is not ad(k)-invariant")

    @property
    def scalar_ext(self):
        spaces = (self.h.space, self.k.space, self.m, self.p)
        for s in spaces:
            for row in s.basis:
                for a in row:
                    if isinstance(a, Sqrt3) and a.b != 0:
                        return EXT_SQRT3
        return EXT_RATIONAL

    def dims(self):
        return {"g": self.g.dim, "k": self.k.dim, "h": self.h.dim,
                "m": self.m.dim, "p": self.p.dim}

    def projector(self, which):
        """Orthogonal projector matrix onto h, m, p or k (g-coordinates)."""
        pmat = self._projectors.get(which)
        if pmat is None:
            space = {"h": self.h.space, "m": self.m, "p": self.p,
                     "k": self.k.space}[which]
            pmat = _projector_matrix(space, self.g.gram, self.g.dim)
            self._projectors[which] = pmat
        return pmat

    def proj(self, which, v):
        return self.projector(which).matvec(v)

    def bracket(self, x, y):
        return self.g.bracket_coords(x, y)

    def require_in_p(self, a):
        if vec_is_zero(a):
            raise NotInP("zero vector")
        if self.p.coordinates(a) is None:
            raise NotInP("vector does not lie in p")


def _projector_matrix(space: Subspace, gram: Matrix, n: int) -> Matrix:
    if space.dim == 0:
        return Matrix.zero(n, n)
    bg = [gram.matvec(row) for row in space.basis]
    grest = [[_dot(bi, bgj) for bgj in bg] for bi in space.basis]
    inv = _solve_matrix(grest, bg)  # rows: G_rest^{-1} * (B G)
    entries = [[ZERO] * n for _ in range(n)]
    for u, row in enumerate(space.basis):
        for r in range(n):
            br = row[r]
            if br == 0:
                continue
            mrow = inv[u]
            er = entries[r]
            for c in range(n):
                mc = mrow[c]
                if mc != 0:
                    er[c] = er[c] + br * mc
    return Matrix(entries)


def _solve_matrix(a_rows, b_rows):
    """Solve A X = B rowwise (A square nonsingular); returns X rows."""
    n = len(a_rows)
    ncols = len(b_rows[0])
    aug = [list(a_rows[i]) + list(b_rows[i]) for i in range(n)]
    rr, rank, piv = rref_rows(aug, n + ncols)
    assert rank == n and piv == list(range(n)), "singular restricted Gram"
    return [list(r[n:]) for r in rr]


def _dot(u, v):
    s = ZERO
    for a, b in zip(u, v):
        if a and b:
            s = s + a * b
    return s


def lin_indep(u, v) -> bool:
    return rank_rows([u, v], len(u)) == 2


def make_triple(g: LieAlgebra, k: Subalgebra, h: Subalgebra, labels=None) -> NestedTriple:
    """Build and verify a nested triple (see NestedTriple for the checks)."""
    return NestedTriple(g, k, h, labels=labels)


# ---------------------------------------------------------------------------
# Fatness
# ---------------------------------------------------------------------------

@dataclass
class FatWitness:
    A: tuple
    kernel_k: Subspace       # centralizer of A inside k (= ker ad_A : k -> p)
    kernel_mp: Subspace      # centralizer of A inside m + p
    strongly: bool
    source: str = ""


def centralizer_in(T: NestedTriple, v, space: Subspace) -> Subspace:
    """{z in space : [z, v] = 0} as a subspace of g-coordinates."""
    cols = [T.bracket(row, v) for row in space.basis]
    rows = [[cols[i][out] for i in range(space.dim)] for out in range(T.g.dim)]
    sols = nullspace_rows(rows, space.dim)
    return Subspace.from_rows([space.lincomb(s) for s in sols], T.g.dim)


def is_fat(T: NestedTriple, a):
    """(fat?, centralizer of A in k).  Fat means that kernel misses m."""
    T.require_in_p(a)
    ker_k = centralizer_in(T, a, T.k.space)
    meet = subspace_intersect(ker_k, T.m)
    return meet.dim == 0, ker_k


def is_strongly_fat(T: NestedTriple, a):
    """(strongly fat?, centralizer of A in m + p)."""
    T.require_in_p(a)
    ker_mp = centralizer_in(T, a, T.mp)
    line = Subspace.from_rows([a], T.g.dim)
    return ker_mp == line, ker_mp


def fat_witness(T: NestedTriple, a, source="") -> FatWitness | None:
    fat, ker_k = is_fat(T, a)
    if not fat:
        return None
    strongly, ker_mp = is_strongly_fat(T, a)
    return FatWitness(tuple(a), ker_k, ker_mp, strongly, source)


def search_fat(T: NestedTriple, sampler: RationalSampler, samples=12,
               require_strong=False, extra_candidates=()):
    """First fat (or strongly fat) vector among candidates, basis, samples.

    Candidate order is deterministic: recipe-supplied candidates, then the
    canonical basis of p, then seeded random combinations.  Absence of a
    result is not a refutation.
    """
    cands = [(tuple(c), f"candidate[{i}]") for i, c in enumerate(extra_candidates)]
    cands += [(row, f"p-basis[{i}]") for i, row in enumerate(T.p.basis)]
    rng = sampler.spawn(101)
    for i in range(samples):
        cands.append((rng.combination(T.p.basis), f"sampled[{i}]"))
    for a, src in cands:
        if vec_is_zero(a):
            continue
        w = fat_witness(T, a, src)
        if w is None:
            continue
        if require_strong and not w.strongly:
            continue
        return w
    return None


# ---------------------------------------------------------------------------
# Trivial isotropy factor
# ---------------------------------------------------------------------------

def trivial_factor(T: NestedTriple) -> Subspace | None:
    """The fixed space {W in p : [k, W] = 0}; nonzero refutes positivity.

    Any Z in m together with such a W commutes and makes the obstruction
    map A -> [Z^m, [A, W]^k] vanish identically, so this is a universal
    refutation.
    """
    rows = []
    for y in T.k.space.basis:
        cols = [T.bracket(y, w) for w in T.p.basis]
        for out in range(T.g.dim):
            rows.append([cols[i][out] for i in range(T.p.dim)])
    sols = nullspace_rows(rows, T.p.dim)
    if not sols:
        return None
    space = Subspace.from_rows([T.p.lincomb(s) for s in sols], T.g.dim)
    return space if space.dim > 0 else None


# ---------------------------------------------------------------------------
# Isotropy decomposition of p
# ---------------------------------------------------------------------------

@dataclass
class Component:
    space: Subspace          # in g-coordinates
    coords: Subspace         # in p-coordinates
    certified_irreducible: bool

    @property
    def dim(self):
        return self.space.dim


def _rep_matrices(T: NestedTriple):
    """Action of the k-basis on p, written in p-coordinates."""
    mats = []
    for y in T.k.space.basis:
        cols = []
        for w in T.p.basis:
            b = T.bracket(y, w)
            c = T.p.coordinates(b)
            assert c is not None, "p is ad(k)-invariant"
            cols.append(c)
        mats.append(Matrix([[cols[j][i] for j in range(T.p.dim)]
                            for i in range(T.p.dim)]))
    return mats


def _orbit_span(reps, v, dim):
    space = Subspace.from_rows([v], dim)
    while True:
        new_rows = list(space.basis)
        grew = False
        for r in reps:
            for row in space.basis:
                img = r.matvec(row)
                if space.coordinates(img) is None:
                    new_rows.append(img)
                    grew = True
        if not grew:
            return space
        space = Subspace.from_rows(new_rows, dim)


def _restricted_gram(T: NestedTriple):
    return Matrix([[T.g.inner(a, b) for b in T.p.basis] for a in T.p.basis])


def _commutant(reps, comp: Subspace):
    """Commutant of the action restricted to a component (matrix list)."""
    d = comp.dim
    if d == 0:
        return []
    restr = []
    for r in reps:
        cols = [comp.coordinates(r.matvec(row)) for row in comp.basis]
        restr.append([[cols[j][i] for j in range(d)] for i in range(d)])
    rows = []
    # unknowns T[a][b]; equations T R - R T = 0 per rep
    for rm in restr:
        for a in range(d):
            for b in range(d):
                row = [ZERO] * (d * d)
                for c in range(d):
                    row[a * d + c] += rm[c][b]
                    row[c * d + b] -= rm[a][c]
                rows.append(row)
    sols = nullspace_rows(rows, d * d)
    return [Matrix([[s[a * d + b] for b in range(d)] for a in range(d)])
            for s in sols], restr


def _matrix_min_poly(tm: Matrix):
    """Minimal polynomial of a small matrix, via powers in vectorized form."""
    from .linalg import solve as _solve
    d = tm.rows
    powers = [Matrix.identity(d)]
    for _ in range(d):
        powers.append(powers[-1] * tm)
    vecs = [m.vec() for m in powers]
    for deg in range(1, d + 1):
        aug = [[vecs[i][j] for i in range(deg)] for j in range(d * d)]
        sol = _solve(aug, deg, [vecs[deg][j] for j in range(d * d)])
        if sol is not None:
            return [-c for c in sol] + [ONE]  # monic: x^deg - sum sol_i x^i
    return None


def _rational_eigenvalues(tm: Matrix):
    poly = _matrix_min_poly(tm)
    return _rational_roots(poly) if poly else []


def _min_poly_irreducible(tm: Matrix) -> bool:
    """Quadratic minimal polynomial with negative discriminant.

    Such an element generates a field that stays a field over R, so the
    commutant contains no idempotents and the component is irreducible.
    """
    poly = _matrix_min_poly(tm)
    if poly is None or len(poly) != 3:
        return False
    if any(isinstance(c, Sqrt3) and c.b != 0 for c in poly):
        return False
    c0, c1, c2 = (Fraction(c.a) if isinstance(c, Sqrt3) else Fraction(c)
                  for c in poly)
    return c1 * c1 - 4 * c2 * c0 < 0


def _rational_roots(coeffs):
    if any(isinstance(c, Sqrt3) and c.b != 0 for c in coeffs):
        return []
    coeffs = [Fraction(c.a) if isinstance(c, Sqrt3) else Fraction(c) for c in coeffs]
    den = 1
    for c in coeffs:
        den = den * c.denominator // gcd(den, c.denominator)
    ints = [int(c * den) for c in coeffs]
    while ints and ints[-1] == 0:
        ints.pop()
    if len(ints) <= 1:
        return []
    roots = set()
    if ints[0] == 0:
        roots.add(Fraction(0))
        while ints and ints[0] == 0:
            ints.pop(0)
    if len(ints) <= 1:
        return sorted(roots)
    lead, const = ints[-1], ints[0]
    for pnum in _divisors(abs(const)):
        for pden in _divisors(abs(lead)):
            for sign in (1, -1):
                cand = Fraction(sign * pnum, pden)
                if _poly_eval(coeffs, cand) == 0:
                    roots.add(cand)
    return sorted(roots)


def _divisors(n):
    if n == 0:
        return [1]
    out = []
    d = 1
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            if d * d != n:
                out.append(n // d)
        d += 1
    return sorted(out)


def _poly_eval(coeffs, x):
    acc = ZERO
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def decompose_isotropy(T: NestedTriple, sampler: RationalSampler):
    """Split p into ad(k)-invariant components, refining with the commutant.

    Components the refinement cannot certify irreducible are flagged; the
    dimension filters remain sound on them (their bounds only weaken).
    """
    reps = _rep_matrices(T)
    gram_p = _restricted_gram(T)
    dim = T.p.dim
    rng = sampler.spawn(202)
    queue = [Subspace.full(dim)]
    done = []
    while queue:
        comp = queue.pop(0)
        if comp.dim <= 1:
            done.append((comp, True))
            continue
        # try orbit spans of basis vectors and a few samples
        split = None
        seeds = list(comp.basis) + [rng.combination(comp.basis) for _ in range(3)]
        for v in seeds:
            orb = _orbit_span(reps, v, dim)  # orbit of v in comp stays in comp
            if 0 < orb.dim < comp.dim:
                split = orb
                break
        if split is not None:
            rest = _complement_within(split, comp, gram_p)
            queue.extend([split, rest])
            continue
        # orbit spans fill the component: refine through the commutant
        comms, _ = _commutant(reps, comp)
        if len(comms) <= 1:
            done.append((comp, True))
            continue
        refined = False
        for tm in comms:
            if _is_scalar(tm):
                continue
            for lam in _rational_eigenvalues(tm):
                shifted = [[tm.entries[i][j] - (lam if i == j else 0)
                            for j in range(tm.cols)] for i in range(tm.rows)]
                ker = nullspace_rows(shifted, tm.cols)
                if 0 < len(ker) < comp.dim:
                    eig = Subspace.from_rows(
                        [comp.lincomb(s) for s in ker], dim)
                    rest = _complement_within(eig, comp, gram_p)
                    queue.extend([eig, rest])
                    refined = True
                    break
            if refined:
                break
        if refined:
            continue
        # a commutant basis element whose minimal polynomial is irreducible
        # generates a field, so no invariant splitting exists at all
        if len(comms) == 2 and any(
                not _is_scalar(tm) and _min_poly_irreducible(tm)
                for tm in comms):
            done.append((comp, True))
        else:
            done.append((comp, False))  # not certified irreducible
    comps = []
    for coords, certified in done:
        g_rows = [T.p.lincomb(row) for row in coords.basis]
        comps.append(Component(Subspace.from_rows(g_rows, T.g.dim), coords, certified))
    comps.sort(key=lambda c: (c.dim, c.space.basis and _sort_key(c.space.basis)))
    return comps


def _sort_key(basis):
    return tuple(tuple(str(a) for a in row) for row in basis)


def _is_scalar(tm: Matrix):
    d = tm.rows
    lam = tm.entries[0][0]
    for i in range(d):
        for j in range(d):
            if tm.entries[i][j] != (lam if i == j else 0):
                return False
    return True


def _complement_within(u: Subspace, within: Subspace, gram: Matrix) -> Subspace:
    return orthocomplement(u, within, gram)


# ---------------------------------------------------------------------------
# Dimension filters
# ---------------------------------------------------------------------------

@dataclass
class DimFilterResult:
    bounds: list = field(default_factory=list)      # evaluated bounds (dicts)
    violations: list = field(default_factory=list)  # violated ones

    @property
    def refuted(self):
        return bool(self.violations)


def dim_filters(T: NestedTriple, components) -> DimFilterResult:
    """Apply both dimension bounds; violations carry their arithmetic.

    Component bound: a positive triple needs dim m < dim p_i for every
    isotropy component p_i.  Split bound: if k + p1 closes under the
    bracket for a component p1, a positive triple needs
    dim m < dim p2 - dim p1 where p2 is the rest of p.
    """
    res = DimFilterResult()
    dm = T.m.dim
    for comp in components:
        bound = {"kind": "component", "dim_m": dm, "dim_component": comp.dim,
                 "certified_irreducible": comp.certified_irreducible,
                 "requires": f"dim(m) < {comp.dim}"}
        res.bounds.append(bound)
        if dm >= comp.dim:
            res.violations.append(bound)
    for comp in components:
        d1 = comp.dim
        d2 = T.p.dim - d1
        if d2 <= 0:
            continue
        if not _closes_with_k(T, comp.space):
            continue
        bound = {"kind": "split", "dim_m": dm, "dim_p1": d1, "dim_p2": d2,
                 "requires": f"dim(m) < {d2} - {d1} = {d2 - d1}"}
        res.bounds.append(bound)
        if dm >= d2 - d1:
            res.violations.append(bound)
    return res


def _closes_with_k(T: NestedTriple, comp_space: Subspace) -> bool:
    l = subspace_sum(T.k.space, comp_space)
    rows = l.basis
    for i, x in enumerate(rows):
        for y in rows[i + 1:]:
            if l.coordinates(T.bracket(x, y)) is None:
                return False
    return True


# ---------------------------------------------------------------------------
# Transitivity evidence
# ---------------------------------------------------------------------------

@dataclass
class TransitivityEvidence:
    passed: bool
    expected_rank: int
    samples: list  # (source, rank)
    seed: int


def transitivity_evidence(T: NestedTriple, sampler: RationalSampler, samples=4):
    """Rank of W -> image of ad(k) at seeded W; PASS needs dim p - 1 always.

    Evidence only: certification additionally requires a catalog tag whose
    sphere-transitivity is classical.
    """
    rng = sampler.spawn(303)
    expected = T.p.dim - 1
    records = []
    ok = True
    cands = [(row, f"p-basis[{i}]") for i, row in enumerate(T.p.basis)]
    cands += [(rng.combination(T.p.basis), f"sampled[{i}]") for i in range(samples)]
    for w, src in cands:
        rows = [T.bracket(y, w) for y in T.k.space.basis]
        r = rank_rows(rows, T.g.dim)
        records.append({"source": src, "rank": r})
        if r != expected:
            ok = False
    return TransitivityEvidence(ok, expected, records, rng.seed)


# ---------------------------------------------------------------------------
# Commuting-pair probes (corroboration for the no-commuting-pairs tags)
# ---------------------------------------------------------------------------

@dataclass
class ProbeResult:
    passed: bool
    found_pair: tuple | None  # (Z, W) exact commuting pair if discovered
    records: list
    seed: int


def commuting_pair_probe(T: NestedTriple, space: Subspace,
                         sampler: RationalSampler, samples=4) -> ProbeResult:
    """Sampled centralizer dimensions inside one isotropy block.

    Generic centralizer dimension 1 corroborates "no linearly independent
    commuting pairs"; any sample with a bigger centralizer yields an exact
    commuting pair, which is a refutation-grade finding.
    """
    rng = sampler.spawn(404)
    records = []
    found = None
    if space.dim <= 1:
        return ProbeResult(True, None, [{"note": "dim <= 1, nothing to probe"}],
                           rng.seed)
    cands = [(row, f"basis[{i}]") for i, row in enumerate(space.basis)]
    cands += [(rng.combination(space.basis), f"sampled[{i}]") for i in range(samples)]
    ok = True
    for w, src in cands:
        if vec_is_zero(w):
            continue
        cent = subspace_intersect(centralizer_in(T, w, space), space)
        records.append({"source": src, "centralizer_dim": cent.dim})
        if cent.dim > 1:
            ok = False
            if found is None:
                z = next(row for row in cent.basis if lin_indep(row, w))
                found = (tuple(z), tuple(w))
    return ProbeResult(ok, found, records, rng.seed)
