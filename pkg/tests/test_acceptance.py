"""Acceptance suite: one test per shipped criterion, one printed line each.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the PASS lines;
any failure fails the corresponding test.
"""

import math
import time

from mcda_select import CaseStatus, DescriptorVector, Level, load_default_kb, run_cases
from mcda_select.analyzer import compute_stats, enumerate_combinations, nonempty_count, valid_count
from mcda_select.classify import (
    ExpectedOrder,
    PerformanceScale,
    Problematic,
    ProblemDescription,
    WeightsSpec,
    classify,
)
from mcda_select.descriptors import count_unknowns, is_valid
from mcda_select.engine import derive_rule_base, select_methods
from mcda_select.kb import M_SLOT_DOMAINS, M_SLOT_NAMES


def _ok(name: str) -> None:
    print(f"[ACCEPTANCE] {name}: PASS", flush=True)


# Full level-3 rule table: label -> (pattern, method abbreviations in KB order).
RULE_TABLE = {
    "R1": ((0, 0, 1, 0, 0, 0, 0, 1, 0), ("M_X", "M_N", "E_M")),
    "R2": ((0, 0, 1, 1, 1, 2, 0, 4, 0), ("E_F",)),
    "R3": ((0, 0, 1, 1, 2, 0, 3, 3, 1), ("E_4",)),
    "R4": ((0, 0, 2, 0, 0, 0, 0, 1, 0), ("G_P",)),
    "R5": ((0, 0, 2, 1, 1, 2, 0, 3, 1), ("N_1",)),
    "R6": ((0, 0, 2, 1, 1, 2, 0, 3, 2), ("C_T", "N_2")),
    "R7": ((1, 1, 1, 0, 0, 0, 0, 1, 0), ("A_G", "L_M")),
    "R8": ((1, 1, 1, 0, 0, 0, 0, 3, 1), ("Q_F", "R_G")),
    "R9": ((1, 1, 2, 1, 2, 0, 1, 3, 1), ("O_R",)),
    "R10": ((1, 1, 2, 1, 2, 0, 3, 3, 1), ("M_C",)),
    "R11": ((1, 2, 1, 0, 0, 0, 0, 1, 0), ("E_1",)),
    "R12": ((1, 2, 1, 0, 0, 0, 0, 3, 1), ("E_2",)),
    "R13": ((1, 2, 2, 0, 0, 0, 0, 3, 1), ("I_D", "M_P", "P_C", "P_G")),
    "R14": (
        (1, 2, 2, 0, 0, 0, 0, 3, 2),
        ("E_V", "M_U", "M_V", "S_A", "S_M", "T_P", "U_T", "V_K"),
    ),
    "R15": ((1, 2, 2, 1, 1, 2, 0, 1, 0), ("M_F",)),
    "R16": ((1, 2, 2, 1, 1, 3, 0, 3, 2), ("S_F", "T_F", "V_F")),
    "R17": ((1, 2, 2, 1, 2, 0, 1, 1, 0), ("T_C",)),
    "R18": ((1, 2, 2, 1, 2, 0, 3, 1, 0), ("E_S",)),
    "R19": ((1, 2, 2, 1, 2, 0, 3, 2, 0), ("E_T",)),
    "R20": ((1, 2, 2, 1, 2, 0, 3, 3, 1), ("E_3", "P_1")),
    "R21": ((1, 2, 2, 1, 2, 0, 3, 3, 2), ("P_2",)),
    "R22": ((1, 2, 2, 1, 3, 2, 3, 3, 1), ("P_A1",)),
    "R23": ((1, 2, 2, 1, 3, 2, 3, 3, 2), ("P_A2",)),
    "R24": ((1, 2, 2, 1, 3, 3, 3, 3, 1), ("P_1F",)),
    "R25": ((1, 2, 2, 1, 3, 3, 3, 3, 2), ("P_2F",)),
    "R26": ((1, 3, 2, 0, 0, 0, 0, 3, 2), ("A_H+T_P", "A_H+V_K")),
    "R27": ((1, 3, 2, 1, 1, 1, 0, 3, 2), ("A_F+T_P",)),
    "R28": ((1, 3, 2, 1, 1, 2, 0, 3, 2), ("A_H+T_F",)),
    "R29": ((1, 3, 2, 1, 1, 3, 0, 3, 2), ("A_F+T_F", "A_NF+T_F")),
    "R30": ((1, 3, 3, 0, 0, 0, 0, 3, 2), ("A_H", "A_N", "M_B", "D_M", "R_M")),
    "R31": ((1, 3, 3, 1, 1, 3, 0, 3, 2), ("A_F", "A_NF")),
}

# (unknowns, min, mean, max) per level over nonempty vectors.
STATS_TABLE = {
    Level.L1: [
        (0, 1, 4.3077, 16),
        (1, 1, 5.7436, 30),
        (2, 1, 9.8824, 40),
        (3, 1, 20.3636, 47),
        (4, 56, 56.0000, 56),
    ],
    Level.L2: [
        (0, 1, 2.2400, 8),
        (1, 1, 2.9492, 12),
        (2, 1, 3.7374, 15),
        (3, 1, 5.5000, 22),
        (4, 1, 8.5763, 30),
        (5, 1, 14.8000, 40),
        (6, 7, 29.0000, 47),
        (7, 56, 56.0000, 56),
    ],
    Level.L3: [
        (0, 1, 1.8065, 8),
        (1, 1, 2.1446, 12),
        (2, 1, 2.5191, 15),
        (3, 1, 3.0511, 22),
        (4, 1, 3.7719, 25),
        (5, 1, 5.2099, 29),
        (6, 1, 8.0400, 30),
        (7, 1, 14.4545, 40),
        (8, 7, 29.0000, 47),
        (9, 56, 56.0000, 56),
    ],
}

L3_WITH_EMPTY_MEANS = [0.1445, 0.3113, 0.6193, 1.2147, 2.6709, 5.9118, 14.4545, 29.0]


def test_criterion_kb_integrity():
    start = time.perf_counter()
    fresh = load_default_kb()
    elapsed = time.perf_counter() - start
    assert elapsed < 1.0, f"KB load took {elapsed:.3f}s"
    assert len(fresh) == 56
    assert len(fresh.distinct_vectors()) == 31
    for m in fresh.methods:  # re-check the hierarchy invariants explicitly
        c = m.characteristics
        for slot, value in zip(M_SLOT_NAMES, c):
            assert value in M_SLOT_DOMAINS[slot]
        assert (c.m1 == 0) == (c.m1_1 == 0)
        assert (c.m3 == 0) == ((c.m3_1, c.m3_1_1, c.m3_1_2) == (0, 0, 0))
        if c.m3 == 1:
            assert (c.m3_1 in (1, 3)) == (c.m3_1_1 in (1, 2, 3))
            assert (c.m3_1 in (2, 3)) == (c.m3_1_2 in (1, 2, 3))
        assert (c.m4 == 3) == (c.m4_1 in (1, 2))
    _ok("KB integrity (56 methods, 31 vectors, invariants)")


def test_criterion_rule_bases(kb):
    assert len(derive_rule_base(kb, Level.L1)) == 13
    assert len(derive_rule_base(kb, Level.L2)) == 25
    rules = derive_rule_base(kb, Level.L3)
    assert len(rules) == 31
    seen = {}
    for rule in rules:
        pattern = tuple(rule.pattern)
        abbrs = tuple(kb.get_method(i).abbreviation for i in rule.method_ids)
        seen[rule.label] = (pattern, abbrs)
    assert seen == RULE_TABLE
    assert len(seen["R14"][1]) == 8
    names_r30 = tuple(kb.get_method(a).name for a in seen["R30"][1])
    assert names_r30 == ("AHP", "ANP", "MACBETH", "DEMATEL", "REMBRANDT")
    _ok("rule bases (13 / 25 / 31, full level-3 table)")


def test_criterion_enumeration_counts(kb, valid_l3_vectors):
    start = time.perf_counter()
    assert sum(1 for _ in enumerate_combinations(Level.L3)) == 450_000
    assert len(valid_l3_vectors) == 4536
    assert valid_count(kb, Level.L3) == 4536
    assert nonempty_count(kb, Level.L3) == 656

    def fully_specified(level):
        return [
            v
            for v in enumerate_combinations(level)
            if is_valid(v, level) and count_unknowns(v, level) == 0
        ]

    l2 = fully_specified(Level.L2)
    assert len(l2) == 240
    assert sum(1 for v in l2 if select_methods(kb, v, Level.L2)) == 25
    l1 = fully_specified(Level.L1)
    assert len(l1) == 48
    assert sum(1 for v in l1 if select_methods(kb, v, Level.L1)) == 13

    def single_unknown(level):
        return sum(
            1
            for v in enumerate_combinations(level)
            if is_valid(v, level) and count_unknowns(v, level) == 1
        )

    assert single_unknown(Level.L1) == 76
    assert single_unknown(Level.L3) == 1232
    elapsed = time.perf_counter() - start
    assert elapsed < 60, f"enumeration took {elapsed:.1f}s"
    _ok(f"enumeration counts (450,000 / 4,536 / 656 ... in {elapsed:.1f}s)")


def test_criterion_statistics(kb):
    for level, expected in STATS_TABLE.items():
        rows = compute_stats(kb, level, include_empty=False)
        assert [r.unknowns for r in rows] == [e[0] for e in expected]
        for row, (k, mn, mean, mx) in zip(rows, expected):
            assert row.min_methods == mn, f"level {int(level)} k={k} min"
            assert row.max_methods == mx, f"level {int(level)} k={k} max"
            assert math.isclose(row.mean_methods, mean, abs_tol=1e-4), (
                f"level {int(level)} k={k} mean {row.mean_methods}"
            )
    with_empty = {r.unknowns: r for r in compute_stats(kb, Level.L3, include_empty=True)}
    for k, mean in enumerate(L3_WITH_EMPTY_MEANS, start=1):
        assert math.isclose(with_empty[k].mean_methods, mean, abs_tol=1e-4), f"k={k}"
    nonempty = {r.unknowns: r.rule_count for r in compute_stats(kb, Level.L3)}
    assert nonempty[2] == 131
    _ok("statistics (every published cell, means within 1e-4)")


def test_criterion_oracle_equivalence_and_monotonicity(kb, valid_l3_vectors):
    # independent oracle: per-slot inverted index intersected over known slots
    index = [
        {
            value: frozenset(m.id for m in kb.methods if m.characteristics[i] == value)
            for value in set(m.characteristics[i] for m in kb.methods)
        }
        for i in range(9)
    ]
    universe = frozenset(m.id for m in kb.methods)

    def oracle(v):
        ids = universe
        for i in range(9):
            if v[i] is not None:
                ids &= index[i].get(v[i], frozenset())
        return ids

    memo = {}

    def engine_ids(v):
        if v not in memo:
            memo[v] = frozenset(m.id for m in select_methods(kb, v))
        return memo[v]

    checked_pairs = 0
    for v in valid_l3_vectors:
        ids = engine_ids(v)
        assert ids == oracle(v)
        assert [m.id for m in select_methods(kb, v)] == sorted(ids)  # KB order
        for i in range(9):
            if v[i] is None:
                continue
            erased = DescriptorVector(*(None if j == i else v[j] for j in range(9)))
            if is_valid(erased):
                assert ids <= engine_ids(erased)
                checked_pairs += 1
    assert checked_pairs > 10_000
    _ok(
        "oracle equivalence on 4,536 vectors; "
        f"monotone on {checked_pairs} erasure pairs"
    )


def test_criterion_validation_corpus(kb):
    report = run_cases(kb)
    assert report.count(CaseStatus.MATCH) == 31
    assert report.count(CaseStatus.EMPTY_SET) == 7
    assert report.count(CaseStatus.MISMATCH) == 2
    empty = tuple(r.case.case_no for r in report.results if r.status is CaseStatus.EMPTY_SET)
    assert empty == (5, 12, 16, 29, 32, 33, 36)
    mismatch = tuple(r.case.case_no for r in report.results if r.status is CaseStatus.MISMATCH)
    assert mismatch == (1, 40)
    for result in report.results:  # engine output equals the recorded columns
        assert result.rule_label == result.case.expected_rule, result.case.case_no
        assert result.method_abbrs == result.case.expected_set, result.case.case_no
    _ok("validation corpus (31 match / 7 empty / 2 mismatch, outputs exact)")


def test_criterion_classifier():
    urban = ProblemDescription(
        weights_spec=WeightsSpec.QUANTITATIVE,
        performance_scale=PerformanceScale.QUANTITATIVE,
        fuzzy_weights=True,
        fuzzy_performance=True,
        problematic=Problematic.RANKING,
        expected_order=ExpectedOrder.COMPLETE,
    )
    assert classify(urban) == DescriptorVector(1, 2, 2, 1, 1, 3, 0, 3, 2)

    case3 = ProblemDescription(
        weights_spec=WeightsSpec.PAIRWISE_RATIO,
        performance_scale=PerformanceScale.PAIRWISE_RATIO,
        problematic=Problematic.RANKING,
        expected_order=ExpectedOrder.COMPLETE,
    )
    assert classify(case3) == DescriptorVector(1, 3, 3, 0, 0, 0, 0, 3, 2)

    case23 = ProblemDescription(
        weights_spec=WeightsSpec.NONE,
        performance_scale=PerformanceScale.QUANTITATIVE,
        problematic=Problematic.SELECTION,
    )
    assert classify(case23) == DescriptorVector(0, 0, 2, 0, 0, 0, 0, 1, 0)
    _ok("classifier (three reference classifications)")
