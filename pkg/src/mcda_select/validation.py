"""Runs the 40-case literature corpus against the selection engine.

Each reference case records how a documented application was encoded as
descriptors, which method its authors actually used, and what the engine is
expected to answer (a matching rule, an empty set, or a documented
mismatch).  Cases whose sources never compare decision variants carry the
no-comparison zero in c2/c4 and are expected to yield the empty set through
that path.
"""

from __future__ import annotations

import io
from dataclasses import dataclass
from enum import Enum
from importlib import resources
from pathlib import Path

from .descriptors import DescriptorVector
from .engine import activated_rule, select_methods
from .errors import CorpusError
from .kb import KnowledgeBase


class CaseStatus(str, Enum):
    MATCH = "match"
    EMPTY_SET = "empty"
    MISMATCH = "mismatch"


@dataclass(frozen=True)
class ReferenceCase:
    case_no: int
    descriptors: DescriptorVector
    description: str
    used_method: str
    expected_rule: str | None
    expected_set: tuple[str, ...]
    expected_status: CaseStatus
    citation_key: str
    note: str = ""


@dataclass(frozen=True)
class CaseResult:
    case: ReferenceCase
    rule_label: str | None
    method_abbrs: tuple[str, ...]
    status: CaseStatus

    @property
    def as_expected(self) -> bool:
        return (
            self.status is self.case.expected_status
            and self.rule_label == self.case.expected_rule
            and self.method_abbrs == self.case.expected_set
        )


@dataclass(frozen=True)
class ValidationReport:
    results: tuple[CaseResult, ...]

    def count(self, status: CaseStatus) -> int:
        return sum(1 for r in self.results if r.status is status)

    @property
    def deviations(self) -> tuple[int, ...]:
        return tuple(r.case.case_no for r in self.results if not r.as_expected)

    @property
    def all_as_expected(self) -> bool:
        return not self.deviations


def load_cases(source) -> tuple[ReferenceCase, ...]:
    """Parse and cross-check the corpus file."""
    if isinstance(source, (str, Path)):
        text = Path(source).read_text(encoding="utf-8")
    else:
        data = source.read()
        text = data.decode("utf-8") if isinstance(data, bytes) else data

    cases: list[ReferenceCase] = []
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        cols = line.split("|")
        if len(cols) != 17:
            raise CorpusError(f"line {line_no}: expected 17 columns, found {len(cols)}")
        try:
            case_no = int(cols[0])
            descriptors = DescriptorVector(*(int(x) for x in cols[1:10]))
        except ValueError as exc:
            raise CorpusError(f"line {line_no}: {exc}") from None
        expected_rule = None if cols[11] == "-" else cols[11]
        expected_set = () if cols[12] == "-" else tuple(cols[12].split(","))
        try:
            status = CaseStatus(cols[13])
        except ValueError:
            raise CorpusError(f"line {line_no}: unknown status {cols[13]!r}") from None
        case = ReferenceCase(
            case_no=case_no,
            descriptors=descriptors,
            used_method=cols[10],
            expected_rule=expected_rule,
            expected_set=expected_set,
            expected_status=status,
            citation_key=cols[14],
            description=cols[15],
            note=cols[16],
        )
        _check_case(case, line_no)
        cases.append(case)

    if sorted(c.case_no for c in cases) != list(range(1, 41)):
        raise CorpusError("corpus must contain exactly the case numbers 1..40")
    return tuple(cases)


def _check_case(case: ReferenceCase, line_no: int) -> None:
    empty = not case.expected_set
    if (case.expected_status is CaseStatus.EMPTY_SET) != empty:
        raise CorpusError(f"line {line_no}: empty status inconsistent with expected set")
    if empty != (case.expected_rule is None):
        raise CorpusError(f"line {line_no}: expected rule inconsistent with expected set")
    if case.expected_status is CaseStatus.MATCH and case.used_method not in case.expected_set:
        raise CorpusError(
            f"line {line_no}: match status but used method not in expected set"
        )


def load_default_cases() -> tuple[ReferenceCase, ...]:
    data = resources.files("mcda_select").joinpath("data", "reference_cases.psv").read_bytes()
    return load_cases(io.BytesIO(data))


def run_case(kb: KnowledgeBase, case: ReferenceCase) -> CaseResult:
    methods = select_methods(kb, case.descriptors)
    rule = activated_rule(kb, case.descriptors)
    abbrs = tuple(m.abbreviation for m in methods)
    if not methods:
        status = CaseStatus.EMPTY_SET
    elif case.used_method in abbrs:
        status = CaseStatus.MATCH
    else:
        status = CaseStatus.MISMATCH
    return CaseResult(
        case=case,
        rule_label=rule.label if rule else None,
        method_abbrs=abbrs,
        status=status,
    )


def run_cases(kb: KnowledgeBase, cases=None) -> ValidationReport:
    """Evaluate every case; cases default to the packaged corpus."""
    if cases is None:
        cases = load_default_cases()
    return ValidationReport(tuple(run_case(kb, c) for c in cases))
