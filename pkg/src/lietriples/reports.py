"""Check reports: assembly, JSON serialization, and independent re-checking.

A report embeds everything needed to re-verify its witnesses with plain
exact linear algebra: the ambient basis matrices, the coordinate spaces of
k, h, m, p, and full coordinate vectors for every witness.  ``verify_report``
rebuilds the algebra from the dump, recomputes brackets and ranks, and
confirms each claim; it never consults the catalog or the engine.

Serialization is deterministic: keys are sorted, lists are emitted in the
order the pipeline produced them, and timings are only included on request
(they are the one non-reproducible field, so the default replay output is
byte-identical across runs with the same seed).
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction

from .algebras import LieAlgebra
from .linalg import Matrix, Subspace, rank_rows, subspace_intersect, vec_is_zero
from .scalars import decode_scalar, encode_scalar

SCHEMA = "lietriples-report/1"

CERTIFIED = "certified_positive"
REFUTED = "refuted"
INCONCLUSIVE = "inconclusive"


def enc_vec(v):
    return [encode_scalar(a) for a in v]


def enc_rows(rows):
    return [enc_vec(r) for r in rows]


def dec_vec(v):
    return tuple(decode_scalar(a) for a in v)


def dec_rows(rows):
    return [dec_vec(r) for r in rows]


@dataclass
class CheckReport:
    triple_id: str
    verdict: str = INCONCLUSIVE
    refutation_kind: str | None = None
    expected: str | None = None
    label: str = ""
    seed: int = 0
    config: dict = field(default_factory=dict)
    dims: dict = field(default_factory=dict)
    scalar_ext: str = "Q"
    ambient: dict = field(default_factory=dict)
    spaces: dict = field(default_factory=dict)
    stages: list = field(default_factory=list)
    witnesses: list = field(default_factory=list)
    notes: list = field(default_factory=list)
    timings: dict | None = None

    @property
    def matches_expected(self):
        if self.expected is None:
            return None
        if self.expected == "positive":
            return self.verdict == CERTIFIED
        return self.verdict == REFUTED

    def to_doc(self):
        doc = {
            "schema": SCHEMA,
            "triple_id": self.triple_id,
            "label": self.label,
            "verdict": self.verdict,
            "refutation_kind": self.refutation_kind,
            "expected": self.expected,
            "matches_expected": self.matches_expected,
            "seed": self.seed,
            "config": self.config,
            "dims": self.dims,
            "scalar_ext": self.scalar_ext,
            "ambient": self.ambient,
            "spaces": self.spaces,
            "stages": self.stages,
            "witnesses": self.witnesses,
            "notes": self.notes,
        }
        if self.timings is not None:
            doc["timings"] = self.timings
        return doc

    def to_json(self) -> str:
        return json.dumps(self.to_doc(), sort_keys=True,
                          separators=(",", ":")) + "\n"


def attach_triple(report: CheckReport, T):
    report.dims = T.dims()
    report.scalar_ext = T.scalar_ext
    report.ambient = T.g.to_json()
    report.spaces = {
        "k": enc_rows(T.k.space.basis),
        "h": enc_rows(T.h.space.basis),
        "m": enc_rows(T.m.basis),
        "p": enc_rows(T.p.basis),
    }


# -- witness encoders -------------------------------------------------------

def fat_witness_doc(T, w):
    return {
        "type": "fat_vector",
        "A": enc_vec(w.A),
        "A_matrix": _mat_doc(T.g.element(w.A)),
        "kernel_k": enc_rows(w.kernel_k.basis),
        "kernel_mp": enc_rows(w.kernel_mp.basis),
        "strongly_fat": w.strongly,
        "source": w.source,
    }


def universal_pair_doc(T, pair):
    return {
        "type": "universal_pair",
        "Z": enc_vec(pair.Z),
        "W": enc_vec(pair.W),
        "zm": enc_vec(pair.zm),
        "Z_matrix": _mat_doc(T.g.element(pair.Z)),
        "W_matrix": _mat_doc(T.g.element(pair.W)),
        "provenance": pair.provenance,
    }


def pair_for_a_doc(T, w):
    return {
        "type": "pair_for_A",
        "A": enc_vec(w.A),
        "Z": enc_vec(w.Z),
        "W": enc_vec(w.W),
        "zm": enc_vec(w.zm),
        "k_component": enc_vec(w.k_component),
        "provenance": w.provenance,
    }


def trivial_factor_doc(T, space):
    return {
        "type": "trivial_factor",
        "basis": enc_rows(space.basis),
        "matrices": [_mat_doc(T.g.element(r)) for r in space.basis],
    }


def dimension_bound_doc(bound):
    return {"type": "dimension_bound", **bound}


def components_doc(T, comps):
    return {
        "type": "isotropy_components",
        "dims": [c.dim for c in comps],
        "certified_irreducible": [c.certified_irreducible for c in comps],
        "bases": [enc_rows(c.space.basis) for c in comps],
    }


def commuting_pair_doc(space_name, z, w):
    return {
        "type": "commuting_pair",
        "space": space_name,
        "Z": enc_vec(z),
        "W": enc_vec(w),
    }


def _mat_doc(m: Matrix):
    return [[encode_scalar(a) for a in row] for row in m.entries]


# ---------------------------------------------------------------------------
# independent re-verification
# ---------------------------------------------------------------------------

class VerifyFailure(Exception):
    pass


def verify_report(doc) -> list[str]:
    """Re-check every witness in a report document; returns log lines.

    Raises VerifyFailure on the first claim that does not re-verify.
    """
    if doc.get("schema") != SCHEMA:
        raise VerifyFailure(f"unknown schema {doc.get('schema')!r}")
    lines = []
    alg = LieAlgebra.from_json(doc["ambient"])
    lines.append(f"ambient {alg.name}: dim {alg.dim}, rebuilt and re-verified")
    spaces = {name: Subspace.from_rows(dec_rows(rows), alg.dim)
              for name, rows in doc["spaces"].items()}
    k, h, m, p = spaces["k"], spaces["h"], spaces["m"], spaces["p"]
    dims = doc["dims"]
    for name, space, want in (("k", k, dims["k"]), ("h", h, dims["h"]),
                              ("m", m, dims["m"]), ("p", p, dims["p"])):
        if space.dim != want:
            raise VerifyFailure(f"space {name}: dim {space.dim} != {want}")
    if not k.contains_subspace(h):
        raise VerifyFailure("h not inside k")
    _check_orthogonal(alg, m, h, "m | h")
    _check_orthogonal(alg, p, k, "p | k")
    for name, space in (("k", k), ("h", h)):
        rows = space.basis
        for i, x in enumerate(rows):
            for y in rows[i + 1:]:
                if space.coordinates(alg.bracket_coords(x, y)) is None:
                    raise VerifyFailure(f"{name} is not bracket-closed")
    lines.append("spaces: dims, nesting, orthogonality, closure verified")

    mp = Subspace.from_rows(list(m.basis) + list(p.basis), alg.dim)
    for i, w in enumerate(doc.get("witnesses", [])):
        kind = w.get("type")
        if kind == "fat_vector":
            _verify_fat(alg, k, m, mp, p, w)
        elif kind == "universal_pair":
            _verify_universal(alg, k, m, mp, p, w)
        elif kind == "pair_for_A":
            _verify_pair_for_a(alg, k, m, mp, p, w)
        elif kind == "trivial_factor":
            _verify_trivial(alg, k, p, w)
        elif kind == "dimension_bound":
            _verify_bound(w)
        elif kind in ("isotropy_components", "commuting_pair"):
            _verify_aux(alg, k, m, p, w)
        else:
            raise VerifyFailure(f"unknown witness type {kind!r}")
        lines.append(f"witness[{i}] {kind}: verified")
    return lines


def _gram_inner(alg, x, y):
    return alg.inner(x, y)


def _check_orthogonal(alg, a: Subspace, b: Subspace, label):
    for x in a.basis:
        for y in b.basis:
            if _gram_inner(alg, x, y) != 0:
                raise VerifyFailure(f"orthogonality {label} fails")


def _verify_fat(alg, k, m, mp, p, w):
    a = dec_vec(w["A"])
    if p.coordinates(a) is None or vec_is_zero(a):
        raise VerifyFailure("fat vector not a nonzero element of p")
    if tuple(dec_rows(w["A_matrix"])) != alg.element(a).entries:
        raise VerifyFailure("embedded A matrix mismatch")
    kernel = dec_rows(w["kernel_k"])
    for x in kernel:
        if k.coordinates(x) is None or not vec_is_zero(alg.bracket_coords(x, a)):
            raise VerifyFailure("kernel_k row fails to commute")
    # completeness: rank of ad_A on k must equal dim k - dim kernel
    bracket_rows = [alg.bracket_coords(y, a) for y in k.basis]
    if rank_rows(bracket_rows, alg.dim) != k.dim - len(kernel):
        raise VerifyFailure("kernel_k is not the full centralizer in k")
    kspace = Subspace.from_rows(kernel, alg.dim)
    if subspace_intersect(kspace, m).dim != 0:
        raise VerifyFailure("claimed fat vector has kernel meeting m")
    if w["strongly_fat"]:
        kmp = dec_rows(w["kernel_mp"])
        for x in kmp:
            if mp.coordinates(x) is None or not vec_is_zero(alg.bracket_coords(x, a)):
                raise VerifyFailure("kernel_mp row fails to commute")
        rows = [alg.bracket_coords(y, a) for y in mp.basis]
        if rank_rows(rows, alg.dim) != mp.dim - len(kmp):
            raise VerifyFailure("kernel_mp is not the full centralizer")
        if Subspace.from_rows(kmp, alg.dim) != Subspace.from_rows([a], alg.dim):
            raise VerifyFailure("strong fatness: centralizer is not span{A}")


def _proj(alg, space: Subspace, v):
    from .linalg import project
    return project(v, space, alg.gram)


def _verify_universal(alg, k, m, mp, p, w):
    z, wv, zm = dec_vec(w["Z"]), dec_vec(w["W"]), dec_vec(w["zm"])
    if mp.coordinates(z) is None or p.coordinates(wv) is None:
        raise VerifyFailure("universal pair not in m+p / p")
    if not vec_is_zero(alg.bracket_coords(z, wv)):
        raise VerifyFailure("universal pair does not commute")
    if rank_rows([z, wv], alg.dim) != 2:
        raise VerifyFailure("universal pair not linearly independent")
    if tuple(_proj(alg, m, z)) != tuple(zm):
        raise VerifyFailure("zm is not the m-projection of Z")
    for i in range(alg.dim):
        e = alg._unit(i)
        val = alg.bracket_coords(zm, _proj(alg, k, alg.bracket_coords(e, wv)))
        if not vec_is_zero(val):
            raise VerifyFailure("obstruction map is not identically zero")


def _verify_pair_for_a(alg, k, m, mp, p, w):
    a, z, wv = dec_vec(w["A"]), dec_vec(w["Z"]), dec_vec(w["W"])
    zm = dec_vec(w["zm"])
    if p.coordinates(a) is None:
        raise VerifyFailure("A not in p")
    if mp.coordinates(z) is None or p.coordinates(wv) is None:
        raise VerifyFailure("pair not in m+p / p")
    if not vec_is_zero(alg.bracket_coords(z, wv)):
        raise VerifyFailure("pair does not commute")
    if rank_rows([z, wv], alg.dim) != 2:
        raise VerifyFailure("pair not linearly independent")
    if tuple(_proj(alg, m, z)) != tuple(zm):
        raise VerifyFailure("zm mismatch")
    kc = _proj(alg, k, alg.bracket_coords(a, wv))
    if tuple(kc) != dec_vec(w["k_component"]):
        raise VerifyFailure("[A, W]^k mismatch")
    if not vec_is_zero(alg.bracket_coords(zm, kc)):
        raise VerifyFailure("obstruction value is nonzero")


def _verify_trivial(alg, k, p, w):
    rows = dec_rows(w["basis"])
    if not rows:
        raise VerifyFailure("empty trivial factor")
    for x in rows:
        if p.coordinates(x) is None:
            raise VerifyFailure("trivial factor not inside p")
        for y in k.basis:
            if not vec_is_zero(alg.bracket_coords(y, x)):
                raise VerifyFailure("trivial factor is moved by k")


def _verify_bound(w):
    if w["kind"] == "component":
        if not w["dim_m"] >= w["dim_component"]:
            raise VerifyFailure("component bound witness arithmetic is wrong")
    elif w["kind"] == "split":
        if not w["dim_m"] >= w["dim_p2"] - w["dim_p1"]:
            raise VerifyFailure("split bound witness arithmetic is wrong")
    else:
        raise VerifyFailure(f"unknown bound kind {w['kind']!r}")


def _verify_aux(alg, k, m, p, w):
    if w["type"] == "isotropy_components":
        total = 0
        for rows_enc in w["bases"]:
            rows = dec_rows(rows_enc)
            comp = Subspace.from_rows(rows, alg.dim)
            total += comp.dim
            for x in comp.basis:
                if p.coordinates(x) is None:
                    raise VerifyFailure("component not inside p")
                for y in k.basis:
                    if comp.coordinates(alg.bracket_coords(y, x)) is None:
                        raise VerifyFailure("component not ad(k)-invariant")
        if total != p.dim:
            raise VerifyFailure("components do not fill p")
    else:  # commuting_pair
        z, wv = dec_vec(w["Z"]), dec_vec(w["W"])
        space = {"p": p, "m": m}[w["space"]]
        if space.coordinates(z) is None or space.coordinates(wv) is None:
            raise VerifyFailure("commuting pair outside its space")
        if not vec_is_zero(alg.bracket_coords(z, wv)):
            raise VerifyFailure("claimed commuting pair does not commute")
        if rank_rows([z, wv], alg.dim) != 2:
            raise VerifyFailure("commuting pair not independent")
