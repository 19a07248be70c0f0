"""Exact refutation witnesses: universal commuting pairs and per-A families.

A pair (Z, W) with Z in m + p, W in p, [Z, W] = 0 and Z, W linearly
independent refutes positivity

  * for every A at once, when the assembled linear map
    A -> [Z^m, [A, W]^k] is identically zero (universal pair), or
  * for one given A, when [Z^m, [A, W]^k] = 0 for that A (per-A witness).

Every returned pair is re-verified from scratch by exact arithmetic before
it is reported, whatever heuristic produced it.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .algebras import centralizer_space, summand_slices
from .linalg import (Subspace, nullspace_rows, subspace_intersect,
                     subspace_sum, vec_is_zero)
from .rng import RationalSampler
from .triples import NestedTriple, centralizer_in, lin_indep

ZERO = Fraction(0)


@dataclass
class UniversalPair:
    Z: tuple
    W: tuple
    zm: tuple
    provenance: str


@dataclass
class PairWitness:
    A: tuple
    Z: tuple
    W: tuple
    zm: tuple
    k_component: tuple   # [A, W]^k, for the record
    provenance: str


def obstruction_value(T: NestedTriple, zm, a, w):
    """[Z^m, [A, W]^k] for explicit vectors."""
    return T.bracket(zm, T.proj("k", T.bracket(a, w)))


def check_universal_pair(T: NestedTriple, z, w):
    """Exact verification; returns the projected Z^m on success, else None.

    Checks: Z in m+p, W in p, [Z, W] = 0, linear independence, and the map
    A -> [Z^m, [A, W]^k] zero on every basis vector of g (entrywise).
    """
    if T.mp.coordinates(z) is None or T.p.coordinates(w) is None:
        return None
    if not vec_is_zero(T.bracket(z, w)):
        return None
    if not lin_indep(z, w):
        return None
    zm = T.proj("m", z)
    for i in range(T.g.dim):
        e = T.g._unit(i)
        if not vec_is_zero(obstruction_value(T, zm, e, w)):
            return None
    return tuple(zm)


def universal_refuter(T: NestedTriple, sampler: RationalSampler,
                      attempts: int = 6) -> UniversalPair | None:
    """Search structured candidates for a universal commuting pair.

    Candidate order (deterministic): center of k inside m, cross-ideal
    pairs, commuting pairs found inside p itself, then seeded samples.
    """
    rng = sampler.spawn(505)
    candidates = []

    zk = subspace_intersect(centralizer_space(T.g, T.k.space), T.k.space)
    zk_m = subspace_intersect(zk, T.m)
    for z in zk_m.basis:
        wspace = centralizer_in(T, z, T.p)
        for w in wspace.basis:
            candidates.append((z, w, "center-of-k"))

    slices = summand_slices(T.g)
    if len(slices) > 1:
        ideal_spaces = []
        for (start, stop, _off) in slices:
            rows = [T.g._unit(i) for i in range(start, stop)]
            ideal_spaces.append(Subspace.from_rows(rows, T.g.dim))
        for i, si in enumerate(ideal_spaces):
            mz = subspace_intersect(T.m, si)
            for j, sj in enumerate(ideal_spaces):
                if i == j:
                    continue
                pw = subspace_intersect(T.p, sj)
                for z in mz.basis:
                    for w in pw.basis:
                        candidates.append((z, w, f"cross-ideal[{i},{j}]"))

    # commuting pairs inside p (these violate the base condition directly)
    for w in list(T.p.basis)[:4]:
        cent = subspace_intersect(centralizer_in(T, w, T.p), T.p)
        if cent.dim > 1:
            for z in cent.basis:
                if lin_indep(z, w):
                    candidates.append((z, w, "commuting-in-p"))
                    break

    for i in range(attempts):
        z = rng.combination(T.mp.basis)
        wspace = centralizer_in(T, z, T.p)
        for w in wspace.basis:
            candidates.append((z, w, f"sampled[{i}]"))

    for z, w, prov in candidates:
        zm = check_universal_pair(T, z, w)
        if zm is not None:
            return UniversalPair(tuple(z), tuple(w), zm, prov)
    return None


def check_pair_for_a(T: NestedTriple, a, z, w):
    """Exact per-A verification; returns (zm, [A,W]^k) or None."""
    if T.mp.coordinates(z) is None or T.p.coordinates(w) is None:
        return None
    if not vec_is_zero(T.bracket(z, w)):
        return None
    if not lin_indep(z, w):
        return None
    zm = T.proj("m", z)
    kcomp = T.proj("k", T.bracket(a, w))
    if not vec_is_zero(T.bracket(zm, kcomp)):
        return None
    return tuple(zm), tuple(kcomp)


def a_kernel_in_p(T: NestedTriple, a) -> Subspace:
    """{W in p : [A, W]^k = 0}, the kernel the per-A strategies probe."""
    cols = [T.proj("k", T.bracket(a, w)) for w in T.p.basis]
    rows = [[cols[i][out] for i in range(T.p.dim)] for out in range(T.g.dim)]
    sols = nullspace_rows(rows, T.p.dim)
    return Subspace.from_rows([T.p.lincomb(s) for s in sols], T.g.dim)


def refute_for_A(T: NestedTriple, a, sampler: RationalSampler,
                 attempts: int = 8) -> PairWitness | None:
    """A witness pair proving the given A fails the bracket condition.

    Strategies, in order: a recipe-supplied family construction (scripted
    fixtures), vectors in the kernel of W -> [A, W]^k with a centralizer
    bigger than their own line, then seeded Z with the full linear system
    solved for W.  All constraints are linear in W for fixed Z.
    """
    T.require_in_p(a)
    rng = sampler.spawn(606)

    def emit(z, w, prov):
        got = check_pair_for_a(T, a, z, w)
        if got is None:
            return None
        zm, kcomp = got
        return PairWitness(tuple(a), tuple(z), tuple(w), zm, kcomp, prov)

    family = T.extras.get("family_refuter")
    if family is not None:
        for z, w, prov in family(T, a, rng):
            found = emit(z, w, f"family:{prov}")
            if found:
                return found

    # kernel of W -> [A, W]^k intersected with "not strongly fat" vectors
    fspace = a_kernel_in_p(T, a)
    wcands = [(w, f"kernel-basis[{i}]") for i, w in enumerate(fspace.basis)]
    if fspace.dim > 1:
        wcands += [(rng.combination(fspace.basis), f"kernel-sampled[{i}]")
                   for i in range(min(attempts, 4))]
    for w, prov in wcands:
        if vec_is_zero(w):
            continue
        cent = centralizer_in(T, w, T.mp)
        if cent.dim < 2:
            continue
        for z in cent.basis:
            if lin_indep(z, w):
                found = emit(z, w, prov)
                if found:
                    return found
                break

    # seeded Z: all constraints on W are linear
    for i in range(attempts):
        z = rng.combination(T.mp.basis)
        zm = T.proj("m", z)
        rows = []
        bz = [T.bracket(z, w) for w in T.p.basis]
        obs = [T.bracket(zm, T.proj("k", T.bracket(a, w))) for w in T.p.basis]
        for out in range(T.g.dim):
            rows.append([bz[i2][out] for i2 in range(T.p.dim)])
            rows.append([obs[i2][out] for i2 in range(T.p.dim)])
        for s in nullspace_rows(rows, T.p.dim):
            w = T.p.lincomb(s)
            if not vec_is_zero(w) and lin_indep(z, w):
                found = emit(z, w, f"z-sampled[{i}]")
                if found:
                    return found
    return None


@dataclass
class FamilyRefutation:
    samples: list          # list of PairWitness
    failures: int
    seed: int

    @property
    def complete(self):
        return self.failures == 0 and bool(self.samples)


def sampled_family_refutation(T: NestedTriple, sampler: RationalSampler,
                              count: int = 20, attempts: int = 8) -> FamilyRefutation:
    """Per-A witnesses for `count` seeded A in p (the family replay)."""
    rng = sampler.spawn(707)
    witnesses = []
    failures = 0
    seen = set()
    while len(witnesses) + failures < count:
        a = rng.combination(T.p.basis)
        if a in seen:
            continue
        seen.add(a)
        w = refute_for_A(T, a, rng, attempts=attempts)
        if w is None:
            failures += 1
        else:
            witnesses.append(w)
    return FamilyRefutation(witnesses, failures, rng.seed)
