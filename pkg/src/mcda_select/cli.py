"""Command-line interface.

Subcommands:

* ``select``   match methods to descriptor assignments (``c1=1 c3.1=? ...``);
* ``rules``    print the derived rule base of a hierarchy level;
* ``analyze``  enumerate the uncertainty space and export statistics;
* ``validate`` run the 40-case literature corpus (nonzero exit on deviation);
* ``methods``  list or look up knowledge-base records;
* ``serve``    start the HTTP API.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import analyzer
from .descriptors import (
    Level,
    infer_structural_zeros,
    is_fully_specified,
    parse_descriptor_vector,
)
from .engine import activated_rule, derive_rule_base, explain_query, select_methods
from .errors import McdaSelectError
from .kb import M_SLOT_NAMES, KnowledgeBase, load_default_kb, load_kb_from_path
from .validation import load_cases, run_cases


def _load(args) -> KnowledgeBase:
    if getattr(args, "kb", None):
        return load_kb_from_path(args.kb)
    return load_default_kb()


def _add_kb_flag(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--kb", help="path to a knowledge-base file (default: packaged)")


def cmd_select(args) -> int:
    kb = _load(args)
    vector = infer_structural_zeros(parse_descriptor_vector(" ".join(args.assignments)))
    methods = select_methods(kb, vector)
    rule = activated_rule(kb, vector) if is_fully_specified(vector) else None
    explanation = str(explain_query(vector)) if args.explain else None
    if args.json:
        payload = {
            "descriptors": vector.to_mapping(),
            "methods": [
                {"id": m.id, "name": m.name, "abbreviation": m.abbreviation}
                for m in methods
            ],
            "activated_rule": rule.label if rule else None,
            "method_count": len(methods),
        }
        if explanation is not None:
            payload["explanation"] = explanation
        print(json.dumps(payload, indent=2))
    else:
        print(f"query: {vector}")
        if explanation is not None:
            print(f"sets:  {explanation}")
        if rule is not None:
            print(f"rule:  {rule.label}")
        print(f"matching methods: {len(methods)}")
        for m in methods:
            print(f"  M{m.id:<3} {m.abbreviation:<10} {m.name}")
    return 0


def cmd_rules(args) -> int:
    kb = _load(args)
    rules = derive_rule_base(kb, Level(args.level))
    if args.json:
        payload = [
            {
                "label": r.label,
                "pattern": {k: v for k, v in r.pattern.to_mapping().items() if v is not None},
                "methods": [kb.get_method(i).abbreviation for i in r.method_ids],
            }
            for r in rules
        ]
        print(json.dumps(payload, indent=2))
    else:
        print(f"{len(rules)} rules at level {args.level}")
        for r in rules:
            abbrs = ", ".join(kb.get_method(i).abbreviation for i in r.method_ids)
            print(f"  {r.label:<6} {r.pattern}  ->  {{{abbrs}}}")
    return 0


def cmd_analyze(args) -> int:
    kb = _load(args)
    rows = analyzer.compute_stats(kb, Level(args.level), include_empty=args.include_empty)
    if args.out:
        analyzer.export_stats(rows, args.out, format=args.format)
    else:
        analyzer.export_stats(rows, sys.stdout, format=args.format)
    return 0


def cmd_validate(args) -> int:
    kb = _load(args)
    cases = load_cases(args.cases) if args.cases else None
    report = run_cases(kb, cases)
    if args.json:
        payload = [
            {
                "case": r.case.case_no,
                "rule": r.rule_label,
                "methods": list(r.method_abbrs),
                "status": r.status.value,
                "as_expected": r.as_expected,
            }
            for r in report.results
        ]
        print(json.dumps(payload, indent=2))
    else:
        for r in report.results:
            flag = "ok" if r.as_expected else "DEVIATES"
            rule = r.rule_label or "-"
            methods = ",".join(r.method_abbrs) or "-"
            print(
                f"case {r.case.case_no:>2}: {r.status.value:<8} rule={rule:<5} "
                f"methods={methods:<40} [{flag}]"
            )
        counts = {s.value: report.count(s) for s in set(r.status for r in report.results)}
        print(f"summary: {counts}")
    return 0 if report.all_as_expected else 1


def cmd_methods(args) -> int:
    kb = _load(args)
    records = kb.methods
    if args.abbr:
        records = (kb.get_method(args.abbr),)
    elif args.id:
        records = (kb.get_method(args.id),)
    if args.json:
        payload = [
            {
                "id": m.id,
                "name": m.name,
                "abbreviation": m.abbreviation,
                "characteristics": dict(zip(M_SLOT_NAMES, m.characteristics)),
                "description": m.description,
                "citation_key": m.citation_key,
            }
            for m in records
        ]
        print(json.dumps(payload, indent=2))
    else:
        for m in records:
            vec = ",".join(str(x) for x in m.characteristics)
            print(f"M{m.id:<3} {m.abbreviation:<10} ({vec})  {m.name}")
    return 0


def cmd_serve(args) -> int:
    from . import api

    api.run(addr=args.addr, kb=_load(args) if args.kb else None)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mcda-select",
        description="Recommend MCDA methods for a (possibly incomplete) problem description.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("select", help="match methods to descriptor assignments")
    _add_kb_flag(p)
    p.add_argument("assignments", nargs="*", metavar="cX=V", help="e.g. c1=1 c1.1=2 c2=?")
    p.add_argument("--explain", action="store_true", help="include the set-algebra view")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_select)

    p = sub.add_parser("rules", help="print the rule base of a level")
    _add_kb_flag(p)
    p.add_argument("--level", type=int, choices=(1, 2, 3), required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_rules)

    p = sub.add_parser("analyze", help="uncertainty-space statistics")
    _add_kb_flag(p)
    p.add_argument("--level", type=int, choices=(1, 2, 3), required=True)
    p.add_argument("--include-empty", action="store_true")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--out", help="output path (default: stdout)")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("validate", help="run the literature validation corpus")
    _add_kb_flag(p)
    p.add_argument("--cases", help="path to a corpus file (default: packaged)")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("methods", help="list or look up methods")
    _add_kb_flag(p)
    p.add_argument("--abbr")
    p.add_argument("--id", type=int)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_methods)

    p = sub.add_parser("serve", help="start the HTTP API")
    _add_kb_flag(p)
    p.add_argument("--addr", help="host:port (default: MCDA_ADDR or 127.0.0.1:8571)")
    p.set_defaults(func=cmd_serve)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except McdaSelectError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
