"""The check pipeline and the full catalog replay.

Stage order: construct, reduce, trivial factor, isotropy decomposition,
dimension filters, positivity certificate, universal refuter, sampled per-A
family.  The first decisive stage sets the verdict; every stage's outcome
is recorded in the report either way.  No triple can collect both a
certificate and a refutation: the pipeline stops at the first decisive
stage, and an assertion guards the invariant at assembly time.
"""

from __future__ import annotations

import time
from dataclasses import asdict, dataclass

from .catalog import CatalogEntry, build_triple, catalog_entries, get_entry
from .certificates import prop_certificate
from .errors import InvalidParameter
from .reduction import reduce_triple
from .refuters import (check_universal_pair, sampled_family_refutation,
                       universal_refuter, UniversalPair)
from .reports import (CERTIFIED, INCONCLUSIVE, REFUTED, CheckReport,
                      attach_triple, commuting_pair_doc, components_doc,
                      dimension_bound_doc, fat_witness_doc, pair_for_a_doc,
                      trivial_factor_doc, universal_pair_doc)
from .rng import RationalSampler
from .triples import NestedTriple, decompose_isotropy, dim_filters, trivial_factor

REPLAY_SCHEMA = "lietriples-replay/1"


@dataclass(frozen=True)
class RunConfig:
    """Sampling and search budgets; every count must be positive."""
    seed: int = 1
    probe_samples: int = 4
    transitivity_samples: int = 4
    fat_samples: int = 12
    family_samples: int = 20
    refuter_attempts: int = 6
    per_a_attempts: int = 8
    max_n: int = 3
    include_timings: bool = False

    def __post_init__(self):
        for name in ("probe_samples", "transitivity_samples", "fat_samples",
                     "family_samples", "refuter_attempts", "per_a_attempts",
                     "max_n"):
            if getattr(self, name) < 1:
                raise InvalidParameter(f"{name} must be positive")

    def doc(self):
        d = asdict(self)
        d.pop("include_timings")
        return d


def run_check(target, config: RunConfig = RunConfig(),
              expected: str | None = None, label: str = "") -> CheckReport:
    """Run the full pipeline on a catalog entry, entry id, or triple."""
    if isinstance(target, str):
        target = get_entry(target)
    if isinstance(target, CatalogEntry):
        entry = target
        triple = build_triple(entry.id)
        expected = entry.expected if expected is None else expected
        label = label or entry.label
    else:
        triple = target

    report = CheckReport(
        triple_id=triple.labels.get("id", "inline"),
        expected=expected, label=label,
        seed=config.seed, config=config.doc(),
    )
    sampler = RationalSampler(config.seed)
    timings = {}

    def stage(name, fn):
        t0 = time.perf_counter()
        out = fn()
        timings[name] = time.perf_counter() - t0
        return out

    report.stages.append({"stage": "construct", "outcome": "ok",
                          "dims": triple.dims()})

    reduced, info = stage("reduce", lambda: reduce_triple(triple))
    report.stages.append({"stage": "reduce",
                          "outcome": "reduced" if info.reduced else "already-reduced",
                          "common_ideal_dim": info.common_ideal_dim})
    T = reduced
    attach_triple(report, T)

    factor = stage("trivial_factor", lambda: trivial_factor(T))
    if factor is not None:
        report.stages.append({"stage": "trivial_factor", "outcome": "refuted",
                              "factor_dim": factor.dim})
        report.verdict = REFUTED
        report.refutation_kind = "trivial_factor"
        report.witnesses.append(trivial_factor_doc(T, factor))
        pair = UniversalPair(T.m.basis[0], factor.basis[0],
                             check_universal_pair(T, T.m.basis[0], factor.basis[0]),
                             "trivial-factor")
        assert pair.zm is not None, "trivial factor must give a universal pair"
        report.witnesses.append(universal_pair_doc(T, pair))
        return _finish(report, config, timings)
    report.stages.append({"stage": "trivial_factor", "outcome": "none"})

    comps = stage("decompose", lambda: decompose_isotropy(T, sampler))
    report.stages.append({"stage": "decompose_isotropy", "outcome": "ok",
                          "component_dims": [c.dim for c in comps]})
    report.witnesses.append(components_doc(T, comps))

    filters = stage("dim_filters", lambda: dim_filters(T, comps))
    report.stages.append({"stage": "dim_filters",
                          "outcome": "refuted" if filters.refuted else "pass",
                          "bounds": filters.bounds})
    if filters.refuted:
        report.verdict = REFUTED
        report.refutation_kind = "dimension_filter"
        for v in filters.violations:
            report.witnesses.append(dimension_bound_doc(v))
        return _finish(report, config, timings)

    cert = stage("certificate", lambda: prop_certificate(
        T, sampler, config.probe_samples, config.transitivity_samples,
        config.fat_samples))
    report.stages.append({"stage": "prop_certificate", "outcome": cert.verdict,
                          "hypotheses": cert.hypotheses})
    if cert.commuting_pair is not None:
        space_name = "p" if cert.probe_p.found_pair else "m"
        z, w = cert.commuting_pair
        report.verdict = REFUTED
        report.refutation_kind = "commuting_pair"
        report.witnesses.append(commuting_pair_doc(space_name, z, w))
        return _finish(report, config, timings)
    if cert.verdict == CERTIFIED:
        report.verdict = CERTIFIED
        report.witnesses.append(fat_witness_doc(T, cert.fat))
        report.notes.extend(cert.notes)
        return _finish(report, config, timings)

    pair = stage("universal_refuter", lambda: universal_refuter(
        T, sampler, config.refuter_attempts))
    report.stages.append({"stage": "universal_refuter",
                          "outcome": "refuted" if pair else "none"})
    if pair is not None:
        report.verdict = REFUTED
        report.refutation_kind = "universal_pair"
        report.witnesses.append(universal_pair_doc(T, pair))
        return _finish(report, config, timings)

    fam = stage("sampled_family", lambda: sampled_family_refutation(
        T, sampler, config.family_samples, config.per_a_attempts))
    scripted = bool(T.labels.get("family_replay"))
    report.stages.append({
        "stage": "sampled_family",
        "outcome": ("refuted" if fam.complete and scripted else
                    "complete-but-unscripted" if fam.complete else "incomplete"),
        "samples": len(fam.samples), "failures": fam.failures,
    })
    if fam.complete and scripted:
        report.verdict = REFUTED
        report.refutation_kind = "sampled_family"
        for w in fam.samples:
            report.witnesses.append(pair_for_a_doc(T, w))
        return _finish(report, config, timings)
    if fam.complete:
        report.notes.append(
            "every sampled direction was refuted, but the entry carries no "
            "scripted family argument; verdict stays inconclusive")
    report.verdict = INCONCLUSIVE
    return _finish(report, config, timings)


def _finish(report: CheckReport, config: RunConfig, timings):
    if config.include_timings:
        report.timings = {k: round(v, 6) for k, v in timings.items()}
    kinds = {w["type"] for w in report.witnesses}
    if report.verdict == CERTIFIED:
        assert not kinds & {"universal_pair", "pair_for_A", "trivial_factor",
                            "commuting_pair"}, \
            "a certificate and a refutation witness may never coexist"
    return report


def exit_code(report: CheckReport) -> int:
    if report.matches_expected is None:
        return 0
    return 0 if report.matches_expected else 1


# ---------------------------------------------------------------------------
# replay
# ---------------------------------------------------------------------------

def _witness_summary(report: CheckReport) -> str:
    if report.verdict == CERTIFIED:
        fat = next(w for w in report.witnesses if w["type"] == "fat_vector")
        strength = "strongly fat" if fat["strongly_fat"] else "fat"
        return f"{strength} vector from {fat['source']}"
    if report.refutation_kind == "trivial_factor":
        tf = next(w for w in report.witnesses if w["type"] == "trivial_factor")
        return f"trivial factor of dim {len(tf['basis'])}"
    if report.refutation_kind == "dimension_filter":
        b = next(w for w in report.witnesses if w["type"] == "dimension_bound")
        return b["requires"]
    if report.refutation_kind == "universal_pair":
        up = next(w for w in report.witnesses if w["type"] == "universal_pair")
        return f"universal pair ({up['provenance']})"
    if report.refutation_kind == "sampled_family":
        n = sum(1 for w in report.witnesses if w["type"] == "pair_for_A")
        return f"witness pairs for {n} sampled directions"
    if report.refutation_kind == "commuting_pair":
        return "exact commuting pair"
    return "-"


def replay(config: RunConfig = RunConfig(), entry_ids=None):
    """Run every catalog entry; returns (table document, reports, all_match)."""
    entries = list(catalog_entries())
    if entry_ids:
        wanted = set(entry_ids)
        entries = [e for e in entries if e.id in wanted]
    rows = []
    reports = []
    all_match = True
    for entry in entries:
        rep = run_check(entry, config)
        reports.append(rep)
        ok = bool(rep.matches_expected)
        all_match = all_match and ok
        rows.append({
            "id": entry.id,
            "label": entry.label,
            "expected": entry.expected,
            "verdict": rep.verdict,
            "refutation_kind": rep.refutation_kind,
            "matches": ok,
            "witness_summary": _witness_summary(rep),
        })
    doc = {
        "schema": REPLAY_SCHEMA,
        "seed": config.seed,
        "config": config.doc(),
        "entries": rows,
        "all_match": all_match,
    }
    return doc, reports, all_match


def replay_markdown(doc) -> str:
    lines = [
        "| id | expected | verdict | matches | witness |",
        "| --- | --- | --- | --- | --- |",
    ]
    for row in doc["entries"]:
        lines.append("| {id} | {expected} | {verdict} | {m} | {w} |".format(
            id=row["id"], expected=row["expected"], verdict=row["verdict"],
            m="yes" if row["matches"] else "NO",
            w=row["witness_summary"]))
    lines.append("")
    lines.append(f"all entries match: {'yes' if doc['all_match'] else 'NO'}")
    return "\n".join(lines) + "\n"
