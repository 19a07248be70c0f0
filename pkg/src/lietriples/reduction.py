"""Common ideals, reduction, and the product-extension construction.

``reduce_triple`` strips the largest ideal of g contained in h: the triple
h+a < k+a < g+a carries the same m, p and bracket data as h < k < g, so the
checks only ever need the reduced form.

``cheeger_extend`` is the opposite move at the algebra level: given a
positive triple and an embedding of a = u(1) or sp(1) into k commuting with
h, it forms

    h + diag_a  <  k + a  <  g + a

(with a slope (k, l) on the diagonal circle when a = u(1)) and transports
the certificate: p is literally unchanged, the fiber complement projects
bijectively onto the old one, and the old fat vector stays fat, which is
re-checked exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .algebras import (LieAlgebra, Subalgebra, build_classical, direct_sum,
                       pad_coords, subalgebra_from_coords)
from .errors import EmbeddingNotCommuting, SlopeNotAllowed
from .linalg import Subspace, orthocomplement, rank_rows, vec_is_zero
from .triples import NestedTriple, make_triple

ZERO = Fraction(0)
ONE = Fraction(1)


def common_ideal(T: NestedTriple) -> Subspace:
    """Largest ad(g)-invariant subspace of h, by the descending fixpoint.

    a_0 = h, a_{i+1} = {x in a_i : [g, x] in a_i}; the result is re-verified
    to be an ideal contained in h.
    """
    g = T.g
    space = T.h.space
    while space.dim > 0:
        rows = []
        # membership residuals of [e_b, a_i] against the current space
        residuals = []
        for arow in space.basis:
            res_b = []
            for b in range(g.dim):
                v = g.bracket_coords(g._unit(b), arow)
                res_b.append(_residual(space, v))
            residuals.append(res_b)
        for b in range(g.dim):
            for out in range(g.dim):
                row = [residuals[i][b][out] for i in range(space.dim)]
                if any(x != 0 for x in row):
                    rows.append(row)
        if not rows:
            break
        from .linalg import nullspace_rows
        sols = nullspace_rows(rows, space.dim)
        new = Subspace.from_rows([space.lincomb(s) for s in sols], g.dim)
        if new.dim == space.dim:
            break
        space = new
    # exact ideal re-check
    for arow in space.basis:
        for b in range(g.dim):
            v = g.bracket_coords(g._unit(b), arow)
            if space.coordinates(v) is None:
                raise AssertionError("fixpoint result is not an ideal")
    assert T.h.space.contains_subspace(space)
    return space


def _residual(space: Subspace, v):
    r = list(v)
    for row in space.basis:
        pc = next(j for j, a in enumerate(row) if a != 0)
        c = r[pc]
        if c != 0:
            r = [x - c * y for x, y in zip(r, row)]
    return r


@dataclass
class ReductionInfo:
    common_ideal_dim: int
    reduced: bool


def reduce_triple(T: NestedTriple):
    """Quotient all three algebras by the common ideal's complement split.

    Returns (triple, ReductionInfo); the input is returned unchanged when
    the common ideal is zero.
    """
    ideal = common_ideal(T)
    if ideal.dim == 0:
        return T, ReductionInfo(0, False)
    g = T.g
    comp = orthocomplement(ideal, g.full_space(), g.gram)
    # the orthogonal complement of an ideal is an ideal; verify exactly
    for b in range(g.dim):
        for row in comp.basis:
            if comp.coordinates(g.bracket_coords(g._unit(b), row)) is None:
                raise AssertionError("ideal complement is not an ideal")
    new_g = LieAlgebra.from_basis(f"{g.name}/ideal{ideal.dim}",
                                  [g.element(r) for r in comp.basis],
                                  meta={"reduced_from": g.name})

    def transport(space: Subspace, label):
        rows = []
        for r in space.basis:
            c = new_g.coords_of(g.element(r))
            assert c is not None, f"{label} does not descend to the complement"
            rows.append(c)
        return Subspace.from_rows(rows, new_g.dim)

    k_red = orthocomplement(ideal, T.k.space, g.gram)
    h_red = orthocomplement(ideal, T.h.space, g.gram)
    k_new = subalgebra_from_coords(new_g, transport(k_red, "k").basis,
                                   name=T.k.name)
    h_new = subalgebra_from_coords(new_g, transport(h_red, "h").basis,
                                   name=T.h.name)
    labels = dict(T.labels)
    labels["reduced_from"] = g.name
    out = make_triple(new_g, k_new, h_new, labels=labels)
    out.extras = dict(T.extras)
    assert out.m.dim == T.m.dim and out.p.dim == T.p.dim
    return out, ReductionInfo(ideal.dim, True)


# ---------------------------------------------------------------------------
# Extension by a torus or sp(1) factor
# ---------------------------------------------------------------------------

SP1_RELATIONS = [((0, 1), 2, 2), ((1, 2), 0, 2), ((2, 0), 1, 2)]
# [i, j] = 2k and cyclic, matching the sp(1) basis order (i, j, k)


def cheeger_extend(T: NestedTriple, a_kind: str, slope, iota_rows,
                   fat_vector=None):
    """Extend a positive triple by a commuting u(1) or sp(1) factor.

    iota_rows: coordinates (in g) of the embedding of the factor into k; one
    row for u(1), three rows with quaternion relations for sp(1).  slope is
    the pair (k, l) on the diagonal circle; sp(1) only allows (1, 1).

    Returns (extended triple, transported fat vector); the caller re-runs
    the certificate.  The construction refuses anything it cannot verify:
    the embedding must land in k, commute with h, and satisfy the factor's
    relations; the fiber complement must project bijectively onto the old
    one; the old fat vector (when supplied) must transport.
    """
    k_s, l_s = slope
    if k_s == 0 and l_s == 0:
        raise SlopeNotAllowed("slope (0, 0) is not a circle")
    if a_kind == "u1":
        if len(iota_rows) != 1:
            raise EmbeddingNotCommuting("u(1) embedding needs one generator")
        g_slope = gcd(abs(k_s), abs(l_s))
        k_s, l_s = k_s // g_slope, l_s // g_slope
        a_alg = build_classical("u", 1)
    elif a_kind == "sp1":
        if (k_s, l_s) != (1, 1):
            raise SlopeNotAllowed("sp(1) extensions require slope (1, 1)")
        if len(iota_rows) != 3:
            raise EmbeddingNotCommuting("sp(1) embedding needs three generators")
        a_alg = build_classical("sp", 1)
    else:
        raise SlopeNotAllowed(f"unsupported factor {a_kind!r}")

    g = T.g
    for row in iota_rows:
        if T.k.space.coordinates(row) is None:
            raise EmbeddingNotCommuting("embedding does not land in k")
        for hrow in T.h.space.basis:
            if not vec_is_zero(g.bracket_coords(row, hrow)):
                raise EmbeddingNotCommuting("embedding does not commute with h")
    if a_kind == "u1":
        if vec_is_zero(iota_rows[0]):
            raise EmbeddingNotCommuting("zero embedding")
    else:
        r = list(iota_rows)
        for (i, j), k_idx, coeff in SP1_RELATIONS:
            got = g.bracket_coords(r[i], r[j])
            want = tuple(coeff * x for x in r[k_idx])
            if got != want:
                raise EmbeddingNotCommuting("generators do not satisfy sp(1) relations")

    big = direct_sum(g, a_alg, name=f"{g.name}+{a_kind}")
    d_old = g.dim

    def pad(v):
        return pad_coords(v, big.dim, 0)

    a_units = [pad_coords(a_alg._unit(i), big.dim, d_old)
               for i in range(a_alg.dim)]
    k_rows = [pad(r) for r in T.k.space.basis] + a_units
    if a_kind == "u1":
        diag_rows = [_mix(pad(iota_rows[0]), a_units[0], l_s, k_s)]
    else:
        diag_rows = [_mix(pad(iota_rows[t]), a_units[t], 1, 1) for t in range(3)]
    h_rows = [pad(r) for r in T.h.space.basis] + diag_rows

    k_new = subalgebra_from_coords(big, k_rows, name=f"{T.k.name}+{a_kind}")
    h_new = subalgebra_from_coords(big, h_rows, name=f"{T.h.name}+diag")
    labels = dict(T.labels)
    labels["extended_by"] = {"factor": a_kind, "slope": [k_s, l_s]}
    fiber_tag = labels.get("fiber_tag")
    labels["fiber_tag"] = {"cheeger": fiber_tag, "factor": a_kind,
                           "slope": [k_s, l_s]}
    out = make_triple(big, k_new, h_new, labels=labels)
    out.extras = dict(T.extras)

    # invariants of the construction, checked exactly
    assert out.p.dim == T.p.dim, "p must be preserved"
    assert out.m.dim == T.m.dim, "dim m must be unchanged"
    old_p_padded = Subspace.from_rows([pad(r) for r in T.p.basis], big.dim)
    assert out.p == old_p_padded, "p must literally coincide"
    projected = Subspace.from_rows([r[:d_old] for r in out.m.basis], g.dim)
    assert rank_rows([r[:d_old] for r in out.m.basis], g.dim) == out.m.dim, \
        "fiber complement must project injectively"
    assert projected == T.m, "fiber complement must project onto the old m"

    a_new = pad(fat_vector) if fat_vector is not None else None
    return out, a_new


def _mix(gpart, apart, l_s, k_s):
    return tuple(l_s * x + k_s * y for x, y in zip(gpart, apart))
