#!/usr/bin/env python3
"""Run the 40-case literature corpus and print a readable verdict table."""

import sys

from mcda_select import CaseStatus, load_default_kb, run_cases


def main() -> int:
    kb = load_default_kb()
    report = run_cases(kb)
    for r in report.results:
        methods = ", ".join(r.method_abbrs) if r.method_abbrs else "(none)"
        rule = r.rule_label or "-"
        print(f"case {r.case.case_no:>2} [{r.status.value:<8}] rule {rule:<5} -> {methods}")
        print(f"        source used {r.case.used_method}: {r.case.description}")
        if r.case.note:
            print(f"        note: {r.case.note}")
    print()
    print(
        f"match: {report.count(CaseStatus.MATCH)}  "
        f"empty: {report.count(CaseStatus.EMPTY_SET)}  "
        f"mismatch: {report.count(CaseStatus.MISMATCH)}"
    )
    if not report.all_as_expected:
        print(f"DEVIATING CASES: {report.deviations}")
        return 1
    print("all cases behave as recorded")
    return 0


if __name__ == "__main__":
    sys.exit(main())
