"""The positivity certificate.

A triple is certified positive only through the four-hypothesis route:

  (1) the base pair k < g carries a catalog tag identifying it (up to a
      shared abelian or simple ideal) with a positively curved pair, and
      seeded centralizer probes in p corroborate it;
  (2) the fiber pair h < k carries such a tag (or is a verified product
      extension of one), with probes in m;
  (3) the base tag is one of the sphere-transitive rows and the rank
      evidence confirms every sampled isotropy orbit has full sphere
      dimension;
  (4) a fat vector is found and its kernel verified exactly.

Anything less falls through to "inconclusive": the raw bracket condition
over all commuting pairs is never claimed verified directly.  A probe that
stumbles on an exact commuting pair reports it, which downgrades the
verdict and hands the pair to the refutation stages.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .rng import RationalSampler
from .triples import (SPHERE_TRANSITIVE_ROWS, FatWitness, NestedTriple,
                      ProbeResult, TransitivityEvidence, commuting_pair_probe,
                      search_fat, transitivity_evidence)

CERTIFIED = "certified_positive"
INCONCLUSIVE = "inconclusive"


@dataclass
class CertificateResult:
    verdict: str
    hypotheses: dict
    fat: FatWitness | None
    transitivity: TransitivityEvidence | None
    probe_p: ProbeResult | None
    probe_m: ProbeResult | None
    commuting_pair: tuple | None = None   # exact pair found by a probe
    notes: list = field(default_factory=list)


def _tag_row(tag):
    if isinstance(tag, dict):
        row = tag.get("row")
        return row if isinstance(row, int) and 1 <= row <= 16 else None
    return None


def _fiber_tag_ok(tag):
    if _tag_row(tag) is not None:
        return True, f"catalog pair type {tag['row']}"
    if isinstance(tag, dict) and "cheeger" in tag:
        inner_ok, _ = _fiber_tag_ok(tag["cheeger"])
        if inner_ok:
            return True, "product extension of a tagged fiber pair"
    return False, "no usable fiber tag"


def prop_certificate(T: NestedTriple, sampler: RationalSampler,
                     probe_samples: int = 4, transitivity_samples: int = 4,
                     fat_samples: int = 12) -> CertificateResult:
    hypotheses = {}
    base_tag = T.labels.get("base_tag")
    fiber_tag = T.labels.get("fiber_tag")
    base_row = _tag_row(base_tag)

    probe_p = commuting_pair_probe(T, T.p, sampler.spawn(1), probe_samples)
    hypotheses["base_positive_pair"] = {
        "ok": base_row is not None and probe_p.passed,
        "tag": base_tag,
        "probes_passed": probe_p.passed,
    }

    probe_m = commuting_pair_probe(T, T.m, sampler.spawn(2), probe_samples)
    fiber_ok, fiber_note = _fiber_tag_ok(fiber_tag)
    hypotheses["fiber_positive_pair"] = {
        "ok": fiber_ok and probe_m.passed,
        "tag": fiber_tag,
        "note": fiber_note,
        "probes_passed": probe_m.passed,
    }

    evidence = transitivity_evidence(T, sampler.spawn(3), transitivity_samples)
    transitive_tag = base_row in SPHERE_TRANSITIVE_ROWS
    hypotheses["sphere_transitive"] = {
        "ok": transitive_tag and evidence.passed,
        "tag_transitive": transitive_tag,
        "rank_evidence_passed": evidence.passed,
    }

    fat = None
    if all(h["ok"] for h in hypotheses.values()):
        fat = search_fat(T, sampler.spawn(4), samples=fat_samples,
                         extra_candidates=T.labels.get("fat_candidates", ()))
    hypotheses["fat_vector"] = {
        "ok": fat is not None,
        "source": fat.source if fat else None,
        "strongly_fat": fat.strongly if fat else None,
    }

    pair = probe_p.found_pair or probe_m.found_pair
    verdict = CERTIFIED if (fat is not None
                            and all(h["ok"] for h in hypotheses.values())
                            and pair is None) else INCONCLUSIVE
    notes = []
    if pair is not None:
        notes.append("a sampling probe found an exact commuting pair")
    return CertificateResult(verdict, hypotheses, fat, evidence,
                             probe_p, probe_m, pair, notes)
