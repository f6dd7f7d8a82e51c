import io

import pytest

from mcda_select import CaseStatus, CorpusError, run_cases
from mcda_select.validation import load_cases, load_default_cases

EXPECTED_EMPTY_CASES = (5, 12, 16, 29, 32, 33, 36)
EXPECTED_MISMATCH_CASES = (1, 40)


def test_corpus_has_40_cases():
    cases = load_default_cases()
    assert len(cases) == 40
    assert [c.case_no for c in cases] == list(range(1, 41))


def test_status_counts(kb):
    report = run_cases(kb)
    assert report.count(CaseStatus.MATCH) == 31
    assert report.count(CaseStatus.EMPTY_SET) == 7
    assert report.count(CaseStatus.MISMATCH) == 2


def test_empty_and_mismatch_case_numbers(kb):
    report = run_cases(kb)
    empty = tuple(r.case.case_no for r in report.results if r.status is CaseStatus.EMPTY_SET)
    mismatch = tuple(r.case.case_no for r in report.results if r.status is CaseStatus.MISMATCH)
    assert empty == EXPECTED_EMPTY_CASES
    assert mismatch == EXPECTED_MISMATCH_CASES


def test_every_case_as_expected(kb):
    report = run_cases(kb)
    assert report.deviations == ()
    assert report.all_as_expected


def test_case_14(kb):
    result = run_cases(kb).results[13]
    assert result.case.case_no == 14
    assert result.rule_label == "R16"
    assert result.method_abbrs == ("S_F", "T_F", "V_F")
    assert result.status is CaseStatus.MATCH
    assert result.case.used_method == "T_F"


def test_case_5_no_comparison(kb):
    result = run_cases(kb).results[4]
    assert result.case.case_no == 5
    assert result.case.descriptors.c2 == 0  # variants never compared
    assert result.rule_label is None
    assert result.method_abbrs == ()
    assert result.status is CaseStatus.EMPTY_SET


def test_case_40_documented_mismatch(kb):
    result = run_cases(kb).results[39]
    assert result.case.case_no == 40
    assert result.rule_label == "R21"
    assert result.method_abbrs == ("P_2",)
    assert result.status is CaseStatus.MISMATCH
    assert result.case.used_method == "E_3"
    assert result.case.note  # the documented explanation travels with the case


def test_matches_contain_used_method(kb):
    for result in run_cases(kb).results:
        if result.status is CaseStatus.MATCH:
            assert result.case.used_method in result.method_abbrs


def test_malformed_corpus_rejected():
    with pytest.raises(CorpusError, match="columns"):
        load_cases(io.StringIO("1|2|3"))


def test_inconsistent_corpus_rejected():
    # match status but the used method is missing from the expected set
    row = "1|1|3|3|0|0|0|0|3|2|T_F|R30|A_H,A_N|match|key|desc|"
    with pytest.raises(CorpusError, match="used method"):
        load_cases(io.StringIO(row))


def test_corpus_must_cover_1_to_40(kb):
    rows = "\n".join(
        f"{n}|1|3|3|0|0|0|0|3|2|A_H|R30|A_H,A_N,M_B,D_M,R_M|match|key|desc|" for n in (1, 2)
    )
    with pytest.raises(CorpusError, match="1..40"):
        load_cases(io.StringIO(rows))
