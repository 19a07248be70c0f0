"""Command-line interface.

Subcommands:

    list            show catalog entries (optionally filtered)
    check           run the pipeline on a catalog id or an inline spec file
    replay          run every catalog entry and compare with expectations
    export-algebra  dump a named algebra as JSON
    verify-report   re-check a report file with plain exact arithmetic

Exit codes: 0 verdict matches the expectation (or nothing to compare),
1 mismatch or failed verification, 2 usage / construction error.
"""

from __future__ import annotations

import argparse
import json
import sys

from .catalog import catalog_list, get_entry, named_algebra
from .errors import LieTriplesError
from .pipeline import RunConfig, exit_code, replay, replay_markdown, run_check
from .reports import VerifyFailure, verify_report
from .specfile import build_from_spec


def _write(text: str, out: str | None):
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _config(args) -> RunConfig:
    kw = {"seed": args.seed}
    if getattr(args, "samples", None):
        kw["family_samples"] = args.samples
        kw["fat_samples"] = max(4, args.samples // 2)
    if getattr(args, "max_n", None):
        kw["max_n"] = args.max_n
    if getattr(args, "timings", False):
        kw["include_timings"] = True
    return RunConfig(**kw)


def cmd_list(args) -> int:
    entries = catalog_list(args.filter)
    if args.json:
        doc = [{"id": e.id, "label": e.label, "expected": e.expected}
               for e in entries]
        _write(json.dumps(doc, indent=2, sort_keys=True) + "\n", args.out)
    else:
        lines = [f"{e.id:<14} {e.expected:<13} {e.label}" for e in entries]
        _write("\n".join(lines) + "\n", args.out)
    return 0


def cmd_check(args) -> int:
    config = _config(args)
    if args.spec:
        with open(args.spec) as fh:
            triple, expected = build_from_spec(fh.read(), max_n=config.max_n)
        report = run_check(triple, config, expected=expected)
    else:
        report = run_check(get_entry(args.id), config)
    if args.json:
        _write(report.to_json(), args.out)
    else:
        lines = [f"triple:  {report.triple_id}",
                 f"dims:    {report.dims}",
                 f"verdict: {report.verdict}"
                 + (f" ({report.refutation_kind})" if report.refutation_kind else "")]
        if report.expected is not None:
            lines.append(f"expected {report.expected}: "
                         + ("match" if report.matches_expected else "MISMATCH"))
        for s in report.stages:
            lines.append(f"  stage {s['stage']}: {s['outcome']}")
        for n in report.notes:
            lines.append(f"  note: {n}")
        _write("\n".join(lines) + "\n", args.out)
    return exit_code(report)


def cmd_replay(args) -> int:
    config = _config(args)
    ids = args.entries.split(",") if args.entries else None
    doc, _reports, all_match = replay(config, ids)
    if args.md:
        _write(replay_markdown(doc), args.out)
    else:
        _write(json.dumps(doc, sort_keys=True, separators=(",", ":")) + "\n",
               args.out)
    return 0 if all_match else 1


def cmd_export_algebra(args) -> int:
    alg = named_algebra(args.name)
    _write(json.dumps(alg.to_json(), sort_keys=True, separators=(",", ":")) + "\n",
           args.out)
    return 0


def cmd_verify_report(args) -> int:
    with open(args.file) as fh:
        doc = json.load(fh)
    try:
        lines = verify_report(doc)
    except VerifyFailure as exc:
        sys.stdout.write(f"FAIL: {exc}\n")
        return 1
    _write("\n".join(lines) + "\nall witnesses verified\n", args.out)
    return 0


def make_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="lietriples",
        description="exact certificates and refutations for nested compact "
                    "Lie algebra triples")
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p, samples=True):
        p.add_argument("--seed", type=int, default=1)
        if samples:
            p.add_argument("--samples", type=int, default=None,
                           help="per-A family sample count (default 20)")
        p.add_argument("--max-n", dest="max_n", type=int, default=None)
        p.add_argument("--json", action="store_true")
        p.add_argument("--md", action="store_true")
        p.add_argument("--out", default=None)

    p = sub.add_parser("list", help="list catalog entries")
    p.add_argument("--filter", default=None,
                   help="positive | negative | id prefix")
    p.add_argument("--json", action="store_true")
    p.add_argument("--out", default=None)
    p.set_defaults(fn=cmd_list)

    p = sub.add_parser("check", help="check one triple")
    p.add_argument("id", nargs="?", default=None, help="catalog entry id")
    p.add_argument("--spec", default=None, help="inline triple spec file")
    p.add_argument("--timings", action="store_true",
                   help="include stage timings (breaks byte-reproducibility)")
    common(p)
    p.set_defaults(fn=cmd_check)

    p = sub.add_parser("replay", help="re-run the whole catalog")
    p.add_argument("--entries", default=None, help="comma-separated id subset")
    common(p)
    p.set_defaults(fn=cmd_replay)

    p = sub.add_parser("export-algebra", help="dump a named algebra as JSON")
    p.add_argument("name", help="so(3), su(4), sp(2), u(3), g2, f4, spin9s")
    p.add_argument("--out", default=None)
    p.set_defaults(fn=cmd_export_algebra)

    p = sub.add_parser("verify-report", help="re-verify a report file")
    p.add_argument("file")
    p.add_argument("--out", default=None)
    p.set_defaults(fn=cmd_verify_report)
    return ap


def main(argv=None) -> int:
    ap = make_parser()
    args = ap.parse_args(argv)
    if args.command == "check" and not args.id and not args.spec:
        ap.error("check needs a catalog id or --spec FILE")
    try:
        return args.fn(args)
    except LieTriplesError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2
    except FileNotFoundError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
