"""Inline triple specifications.

A spec file is a small declarative text document: one `key: value` line per
field, `#` comments allowed.  Required keys: g, k, h.  Optional: id,
expected (positive | not_positive), base_row/base_n and fiber_row/fiber_n
(catalog pair tags consumed by the certificate).

Ambient (g) is a sum of atoms joined with `+`:

    so(N) | su(N) | u(N) | sp(N) | g2 | f4 | spin9s

Subalgebras (k, h) are sums of terms joined with `+`.  Positions select the
diagonal blocks of a classical summand (0-based); `S.P` prefixes the
summand number for sums (summand 1 is the default):

    sp(2)@0,1          quaternionic block on diagonal positions 0, 1
    u(1)@2             imaginary unit circle at position 2
    slope(K,L)@0,1     circle with direction (K, L) in the positions' torus
    diag(sp(1))@2.0,1.2   diagonal sp(1) between summand 2 pos 0 and
                          summand 1 pos 2
    diag(u(1))@0,1     slope (1, 1) circle
    so3max@0,1         the maximal so(3) of the sp(2) block (sqrt3 entries)
    su3 | su2 | u2     stabilizer chain inside a g2 ambient
    spin9 | spin8      idempotent stabilizers inside an f4 ambient
    spin7 | g2spin | spin8s   spinor stabilizers inside spin9s
    zero               the zero subalgebra (h only)

Example:

    id: thin-sphere-chain
    expected: positive
    base_row: 1
    base_n: 3
    fiber_row: 1
    fiber_n: 2
    g: so(4)
    k: so(3)@1,2,3
    h: so(2)@2,3
"""

from __future__ import annotations

import re
from fractions import Fraction

from .algebras import LieAlgebra, direct_sum, span_subalgebra, subalgebra_from_coords
from .catalog import classical, diag_unit, family_block, offdiag_unit, _pad_matrix
from .derivations import (f4, g2, g2_in_spin9_spinor, so3max_sp2_matrices,
                          spin7_twisted, spin8_in_f4, spin8_in_spin9_spinor,
                          spin9_in_f4, spin9_spinor)
from .errors import SpecParse
from .linalg import Matrix
from .triples import NestedTriple, make_triple

_ATOMS = {"g2": g2, "f4": f4, "spin9s": spin9_spinor}


def _special_matrices(which):
    from .derivations import su2_in_g2, su3_in_g2, u2_in_g2
    table = {"su3": su3_in_g2, "su2": su2_in_g2, "u2": u2_in_g2,
             "spin9": spin9_in_f4, "spin8": spin8_in_f4,
             "spin7": spin7_twisted, "g2spin": g2_in_spin9_spinor,
             "spin8s": spin8_in_spin9_spinor}
    sub = table[which]()
    return [sub.algebra.element(r) for r in sub.space.basis]


_SPECIAL_AMBIENT = {"su3": "g2", "su2": "g2", "u2": "g2",
                    "spin9": "f4", "spin8": "f4",
                    "spin7": "spin9s", "g2spin": "spin9s", "spin8s": "spin9s"}


def parse_spec(text: str) -> dict:
    fields = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if ":" not in line:
            raise SpecParse(f"line {lineno}: expected 'key: value'")
        key, value = line.split(":", 1)
        key = key.strip().lower()
        if key in fields:
            raise SpecParse(f"line {lineno}: duplicate key {key!r}")
        fields[key] = value.strip()
    for needed in ("g", "k", "h"):
        if needed not in fields:
            raise SpecParse(f"missing required key {needed!r}")
    if "expected" in fields and fields["expected"] not in ("positive", "not_positive"):
        raise SpecParse("expected must be 'positive' or 'not_positive'")
    return fields


_CLASSICAL_RE = re.compile(r"^(so|su|sp|u)\((\d+)\)$")


def _parse_ambient(expr: str, max_n: int):
    parts = [p.strip() for p in expr.split("+")]
    atoms = []
    for p in parts:
        m = _CLASSICAL_RE.match(p)
        if m:
            fam, n = m.group(1), int(m.group(2))
            if n > max_n + 1:
                raise SpecParse(f"{p}: size exceeds the cap (max-n {max_n})")
            atoms.append(("classical", fam, n))
        elif p in _ATOMS:
            atoms.append(("special", p, None))
        else:
            raise SpecParse(f"unknown ambient atom {p!r}")
    return atoms


def _build_ambient(atoms) -> tuple[LieAlgebra, list]:
    algs = []
    for kind, name, n in atoms:
        algs.append(classical(name, n) if kind == "classical" else _ATOMS[name]())
    total = algs[0]
    for a in algs[1:]:
        total = direct_sum(total, a)
    offsets = []
    off = 0
    for a in algs:
        offsets.append(off)
        off += a.matrix_size
    return total, list(zip(atoms, algs, offsets))


def _positions(spec: str, default_summand=1):
    """Parse '@' position list entries 'P' or 'S.P' into (summand, pos)."""
    out = []
    for tok in spec.split(","):
        tok = tok.strip()
        if "." in tok:
            s, p = tok.split(".", 1)
            out.append((int(s), int(p)))
        else:
            out.append((default_summand, int(tok)))
    return out


def _term_matrices(term: str, layout, total_size: int):
    term = term.strip()
    if term == "zero":
        return []
    if "@" in term:
        head, pos_spec = term.split("@", 1)
        head = head.strip()
    else:
        head, pos_spec = term, None

    def summand(idx):
        if not 1 <= idx <= len(layout):
            raise SpecParse(f"summand {idx} out of range")
        return layout[idx - 1]

    dm = re.match(r"^diag\((sp|u)\(1\)\)$", head)
    if dm:
        fam = dm.group(1)
        if pos_spec is None:
            raise SpecParse(f"{term}: diag needs two positions")
        refs = _positions(pos_spec)
        if len(refs) != 2:
            raise SpecParse(f"{term}: diag needs exactly two positions")
        units = (1,) if fam == "u" else (1, 2, 3)
        mats = []
        for u in units:
            acc = None
            for (sidx, pos) in refs:
                (kind, name, n), alg, off = summand(sidx)
                if kind != "classical":
                    raise SpecParse("diag positions must be classical summands")
                m = _pad_matrix(diag_unit(name, n, pos, u), off, total_size)
                acc = m if acc is None else acc + m
            mats.append(acc)
        return mats

    sm = re.match(r"^slope\((-?\d+),(-?\d+)\)$", head)
    if sm:
        ks, ls = int(sm.group(1)), int(sm.group(2))
        if ks == 0 and ls == 0:
            raise SpecParse("slope (0,0) spans nothing")
        refs = _positions(pos_spec or "")
        if len(refs) != 2:
            raise SpecParse(f"{term}: slope needs exactly two positions")
        acc = None
        for coeff, (sidx, pos) in zip((ks, ls), refs):
            (kind, name, n), alg, off = summand(sidx)
            m = _pad_matrix(diag_unit(name, n, pos, 1), off, total_size)
            m = m.scale(Fraction(coeff))
            acc = m if acc is None else acc + m
        return [acc]

    if head == "so3max":
        refs = _positions(pos_spec or "0,1")
        (kind, name, n), alg, off = summand(refs[0][0])
        if kind != "classical" or name != "sp":
            raise SpecParse("so3max lives in an sp ambient")
        from .catalog import _embed_realified
        mats = [_embed_realified(m, 4, tuple(p for _, p in refs), n)
                for m in so3max_sp2_matrices()]
        return [_pad_matrix(m, off, total_size) for m in mats]

    if head in _SPECIAL_AMBIENT:
        need = _SPECIAL_AMBIENT[head]
        hit = [entry for entry in layout if entry[0][1] == need]
        if not hit:
            raise SpecParse(f"{head} needs a {need} summand in the ambient")
        (kind, name, n), alg, off = hit[0]
        return [_pad_matrix(m, off, total_size) for m in _special_matrices(head)]

    m = _CLASSICAL_RE.match(head)
    if m:
        fam, sz = m.group(1), int(m.group(2))
        if pos_spec is None:
            refs = [(1, p) for p in range(sz)]
        else:
            refs = _positions(pos_spec)
        if len(refs) != sz:
            raise SpecParse(f"{term}: {head} needs {sz} positions")
        sidxs = {s for s, _ in refs}
        if len(sidxs) != 1:
            raise SpecParse(f"{term}: a block must stay inside one summand")
        (kind, name, n), alg, off = summand(next(iter(sidxs)))
        if kind != "classical":
            raise SpecParse(f"{term}: block inside a non-classical summand")
        positions = [p for _, p in refs]
        if fam == "u" and sz == 1 and name in ("u", "sp", "su"):
            mats = [diag_unit(name, n, positions[0], 1)]
        elif fam == name or (fam == "su" and name == "u"):
            mats = family_block(fam, sz, positions, n)
        else:
            raise SpecParse(f"{term}: {fam} block inside {name} ambient unsupported")
        return [_pad_matrix(mm, off, total_size) for mm in mats]

    raise SpecParse(f"unknown term {term!r}")


def build_from_spec(text: str, max_n: int = 3) -> NestedTriple:
    fields = parse_spec(text)
    atoms = _parse_ambient(fields["g"], max_n)
    total, layout = _build_ambient(atoms)
    size = total.matrix_size

    def side(which):
        mats = []
        for term in fields[which].split("+"):
            mats.extend(_term_matrices(term, layout, size))
        name = f"{which}-spec"
        if not mats:
            return subalgebra_from_coords(total, [], name)
        return span_subalgebra(total, mats, name)

    k = side("k")
    h = side("h")
    labels = {"id": fields.get("id", "inline")}
    if "base_row" in fields:
        labels["base_tag"] = {"row": int(fields["base_row"]),
                              "n": int(fields["base_n"]) if "base_n" in fields else None,
                              "modulo_ideal": False}
    if "fiber_row" in fields:
        labels["fiber_tag"] = {"row": int(fields["fiber_row"]),
                               "n": int(fields["fiber_n"]) if "fiber_n" in fields else None}
    triple = make_triple(total, k, h, labels)
    return triple, fields.get("expected")
