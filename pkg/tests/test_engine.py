import pytest
from hypothesis import given, settings, strategies as st

from mcda_select import (
    DescriptorVector,
    InvalidDescriptorError,
    Level,
    activated_rule,
    derive_rule_base,
    evaluate_expression,
    explain_query,
    select_methods,
)
from mcda_select.descriptors import ALL_UNKNOWN, LEVEL_SLOTS, parse_descriptor_vector


def oracle_select_ids(kb, v, level=Level.L3):
    """Slot-indexed reference matcher, structurally unlike the engine's scan:
    per-slot value->id sets intersected over the known slots."""
    universe = {m.id for m in kb.methods}
    result = set(universe)
    for i in LEVEL_SLOTS[level]:
        if v[i] is None:
            continue
        result &= {m.id for m in kb.methods if m.characteristics[i] == v[i]}
    return sorted(result)


def test_select_fuzzy_ranking_triple(kb):
    v = DescriptorVector(1, 2, 2, 1, 1, 3, 0, 3, 2)
    assert [m.name for m in select_methods(kb, v)] == [
        "Fuzzy SAW",
        "Fuzzy TOPSIS",
        "Fuzzy VIKOR",
    ]


def test_select_all_unknown_returns_everything(kb):
    assert len(select_methods(kb, ALL_UNKNOWN)) == 56


def test_select_can_be_empty(kb):
    v = DescriptorVector(1, 2, 3, 0, 0, 0, 0, 3, 2)
    assert select_methods(kb, v) == ()


def test_select_rejects_invalid_vector(kb):
    with pytest.raises(InvalidDescriptorError) as err:
        select_methods(kb, DescriptorVector(0, 3, 1, 0, 0, 0, 0, 1, 0))
    assert err.value.step == 1


def test_select_keeps_kb_order(kb):
    v = parse_descriptor_vector("c1=1 c1.1=2 c2=2 c3=0 c3.1=0 c3.1.1=0 c3.1.2=0 c4=3 c4.1=2")
    ids = [m.id for m in select_methods(kb, v)]
    assert ids == sorted(ids) == [12, 28, 29, 46, 47, 49, 50, 51]


def test_activated_rule_r30(kb):
    rule = activated_rule(kb, DescriptorVector(1, 3, 3, 0, 0, 0, 0, 3, 2))
    assert rule.label == "R30"
    abbrs = [kb.get_method(i).abbreviation for i in rule.method_ids]
    assert abbrs == ["A_H", "A_N", "M_B", "D_M", "R_M"]


def test_activated_rule_r21(kb):
    rule = activated_rule(kb, DescriptorVector(1, 2, 2, 1, 2, 0, 3, 3, 2))
    assert rule.label == "R21"
    assert [kb.get_method(i).abbreviation for i in rule.method_ids] == ["P_2"]


def test_activated_rule_none_for_no_comparison_row(kb):
    assert activated_rule(kb, DescriptorVector(1, 3, 0, 0, 0, 0, 0, 0, 0)) is None


def test_activated_rule_requires_full_vector(kb):
    with pytest.raises(ValueError):
        activated_rule(kb, parse_descriptor_vector("c1=1"))


def test_rule_base_sizes(kb):
    assert len(derive_rule_base(kb, Level.L3)) == 31
    assert len(derive_rule_base(kb, Level.L2)) == 25
    assert len(derive_rule_base(kb, Level.L1)) == 13


def test_rule_bases_partition_kb(kb):
    for level in Level:
        rules = derive_rule_base(kb, level)
        ids = [i for r in rules for i in r.method_ids]
        assert sorted(ids) == list(range(1, 57))
        patterns = {r.pattern for r in rules}
        assert len(patterns) == len(rules)


def test_r14_is_the_largest_rule(kb):
    by_label = {r.label: r for r in derive_rule_base(kb, Level.L3)}
    r14 = by_label["R14"]
    names = {kb.get_method(i).name for i in r14.method_ids}
    assert names == {"EVAMIX", "MAUT", "MAVT", "SAW", "SMART", "TOPSIS", "UTA", "VIKOR"}
    assert max(len(r.method_ids) for r in by_label.values()) == 8 == len(r14.method_ids)


def test_generated_labels_for_shallow_levels(kb):
    labels = [r.label for r in derive_rule_base(kb, Level.L1)]
    assert labels == [f"L1-{i:02d}" for i in range(1, 14)]


def test_level1_rule_for_unweighted_qualitative_choice(kb):
    # same grouping that level 3 labels R1, visible at every level
    rules = derive_rule_base(kb, Level.L1)
    match = [r for r in rules if r.pattern.c1 == 0 and r.pattern.c2 == 1 and r.pattern.c4 == 1]
    assert len(match) == 1
    assert [kb.get_method(i).abbreviation for i in match[0].method_ids] == ["M_X", "M_N", "E_M"]


def test_select_agrees_with_oracle_on_all_valid_vectors(kb, valid_l3_vectors):
    for v in valid_l3_vectors:
        engine_ids = [m.id for m in select_methods(kb, v)]
        assert engine_ids == oracle_select_ids(kb, v)


def test_monotonicity_under_slot_erasure_sampled(kb, valid_l3_vectors):
    for v in valid_l3_vectors[::7]:
        base = {m.id for m in select_methods(kb, v)}
        for i in range(9):
            if v[i] is None:
                continue
            erased = DescriptorVector(*(None if j == i else v[j] for j in range(9)))
            from mcda_select.descriptors import is_valid

            if is_valid(erased):
                assert base <= {m.id for m in select_methods(kb, erased)}


def test_explain_mixed_known_unknown(kb):
    v = parse_descriptor_vector("c1=1 c1.1=2 c3=1 c3.1=1 c3.1.1=3 c3.1.2=0 c4=3 c4.1=2")
    assert explain_query(v).text == "S1c ∩ S3b ∩ S3c ∩ S4d ∩ (S2a ∪ S2b ∪ S2c)"


def test_explain_all_unknown_is_universe(kb):
    expr = explain_query(ALL_UNKNOWN)
    assert expr.text == "U"
    assert len(evaluate_expression(kb, expr)) == 56


def test_explain_fully_specified_choice_query(kb):
    v = DescriptorVector(0, 0, 1, 0, 0, 0, 0, 1, 0)
    expr = explain_query(v)
    assert expr.text == "S1a ∩ S2a ∩ S3a ∩ S4a"
    assert [m.abbreviation for m in evaluate_expression(kb, expr)] == ["M_X", "M_N", "E_M"]
    assert evaluate_expression(kb, expr) == select_methods(kb, v)


def test_explain_rejects_invalid(kb):
    with pytest.raises(InvalidDescriptorError):
        explain_query(DescriptorVector(0, 3, 1, 0, 0, 0, 0, 1, 0))


def test_explain_never_narrower_than_selection(kb, valid_l3_vectors):
    # the capability view may widen a query (both-coded methods belong to
    # each constituent subset) but must never lose a selected method
    for v in valid_l3_vectors[::11]:
        if v.c2 == 0 or v.c4 == 0:
            continue
        selected = {m.id for m in select_methods(kb, v)}
        evaluated = {m.id for m in evaluate_expression(kb, explain_query(v))}
        assert selected <= evaluated


def test_explain_matches_selection_off_both_codings(kb, valid_l3_vectors):
    # where no slot pins a both-capable axis to a single capability, the two
    # views coincide exactly
    for v in valid_l3_vectors:
        if any(v[i] is None for i in range(9)):
            continue
        if v.c3_1 in (1, 2) or v.c3_1_1 in (1, 2) or v.c3_1_2 in (1, 2):
            continue
        selected = [m.id for m in select_methods(kb, v)]
        evaluated = [m.id for m in evaluate_expression(kb, explain_query(v))]
        assert selected == evaluated


@st.composite
def valid_vector_strategy(draw):
    from mcda_select.descriptors import STEP1_ROWS, STEP3_ROWS, STEP4_ROWS

    step1 = draw(st.sampled_from(sorted(STEP1_ROWS, key=str)))
    step2 = draw(st.sampled_from([1, 2, 3, None]))
    step3 = draw(st.sampled_from(sorted(STEP3_ROWS, key=str)))
    step4 = draw(st.sampled_from(sorted(STEP4_ROWS, key=str)))
    return DescriptorVector(*step1, step2, *step3, *step4)


@settings(max_examples=150, deadline=None)
@given(v=valid_vector_strategy())
def test_selection_subset_of_any_erasure(kb, v):
    from mcda_select.descriptors import is_valid

    base = {m.id for m in select_methods(kb, v)}
    for i in range(9):
        if v[i] is None:
            continue
        erased = DescriptorVector(*(None if j == i else v[j] for j in range(9)))
        if is_valid(erased):
            assert base <= {m.id for m in select_methods(kb, erased)}
