"""Derive a descriptor vector from a structured problem description.

The classifier works from declared structural features of a decision problem
(what kind of weights exist, on what scale variants are compared, which
uncertainty devices appear, which problematic is posed) rather than from raw
matrices.  Semantically each field stands for a property of the underlying
data: ``weights_spec`` for the existence and scale of a criteria-weight
vector or pairwise weight matrix, ``performance_scale`` for the scale of the
variant-performance table, the fuzzy flags for weights/performances given as
fuzzy numbers, and the threshold flags for indifference/preference margins on
pairwise performance differences.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .descriptors import DescriptorVector
from .errors import NoComparisonError


class WeightsSpec(Enum):
    NONE = "none"  # no weights, including explicitly equal weights
    ORDINAL = "ordinal"
    QUANTITATIVE = "quantitative"
    PAIRWISE_RATIO = "pairwise-ratio"


class PerformanceScale(Enum):
    NOT_COMPARED = "not-compared"  # variants never compared at all
    ORDINAL = "ordinal"
    QUANTITATIVE = "quantitative"
    PAIRWISE_RATIO = "pairwise-ratio"


class Problematic(Enum):
    SELECTION = "selection"
    SORTING = "sorting"
    RANKING = "ranking"  # ranking methods also settle the selection question
    SORTING_PLUS_SELECTION = "sorting+selection"


class ExpectedOrder(Enum):
    NONE = "none"
    PARTIAL = "partial"
    COMPLETE = "complete"


_SCALE_CODE = {
    WeightsSpec.ORDINAL: 1,
    WeightsSpec.QUANTITATIVE: 2,
    WeightsSpec.PAIRWISE_RATIO: 3,
    PerformanceScale.ORDINAL: 1,
    PerformanceScale.QUANTITATIVE: 2,
    PerformanceScale.PAIRWISE_RATIO: 3,
}

_PROBLEMATIC_CODE = {
    Problematic.SELECTION: 1,
    Problematic.SORTING: 2,
    Problematic.RANKING: 3,
    Problematic.SORTING_PLUS_SELECTION: 4,
}


@dataclass(frozen=True)
class ProblemDescription:
    """Structural features of one decision problem.

    Declaring explicitly equal weights counts as not using weights at all
    (``weights_spec=NONE``).
    """

    weights_spec: WeightsSpec
    performance_scale: PerformanceScale
    problematic: Problematic
    fuzzy_weights: bool = False
    fuzzy_performance: bool = False
    uses_indifference_threshold: bool = False
    uses_preference_threshold: bool = False
    expected_order: ExpectedOrder = ExpectedOrder.NONE

    def __post_init__(self):
        if self.fuzzy_weights and self.weights_spec is WeightsSpec.NONE:
            raise ValueError("fuzzy weights declared but no weights are used")
        if self.fuzzy_performance and self.performance_scale is PerformanceScale.NOT_COMPARED:
            raise ValueError("fuzzy performances declared but variants are not compared")
        ranking = self.problematic is Problematic.RANKING
        if ranking != (self.expected_order is not ExpectedOrder.NONE):
            raise ValueError(
                "expected_order must be set exactly when the problematic is ranking"
            )


def classify(p: ProblemDescription) -> DescriptorVector:
    """Map a problem description onto its nine-slot descriptor vector.

    Total and deterministic over valid descriptions; the output is always a
    fully specified, validity-passing vector.  A problem whose variants are
    never compared has no applicable method and raises
    :class:`NoComparisonError` instead of producing a vector.
    """
    if p.performance_scale is PerformanceScale.NOT_COMPARED:
        raise NoComparisonError(
            "no variant comparison: no MCDA method applies to this problem"
        )

    c1 = 0 if p.weights_spec is WeightsSpec.NONE else 1
    c1_1 = 0 if c1 == 0 else _SCALE_CODE[p.weights_spec]
    c2 = _SCALE_CODE[p.performance_scale]

    fuzzy = p.fuzzy_weights or p.fuzzy_performance
    thresholds = p.uses_indifference_threshold or p.uses_preference_threshold
    c3 = 1 if (fuzzy or thresholds) else 0
    if not c3:
        c3_1 = c3_1_1 = c3_1_2 = 0
    else:
        c3_1 = 3 if (fuzzy and thresholds) else (1 if fuzzy else 2)
        if fuzzy:
            c3_1_1 = (
                3
                if (p.fuzzy_weights and p.fuzzy_performance)
                else (1 if p.fuzzy_weights else 2)
            )
        else:
            c3_1_1 = 0
        if thresholds:
            c3_1_2 = (
                3
                if (p.uses_indifference_threshold and p.uses_preference_threshold)
                else (1 if p.uses_indifference_threshold else 2)
            )
        else:
            c3_1_2 = 0

    c4 = _PROBLEMATIC_CODE[p.problematic]
    c4_1 = {ExpectedOrder.NONE: 0, ExpectedOrder.PARTIAL: 1, ExpectedOrder.COMPLETE: 2}[
        p.expected_order
    ]
    return DescriptorVector(c1, c1_1, c2, c3, c3_1, c3_1_1, c3_1_2, c4, c4_1)


def description_from_json(payload: dict) -> ProblemDescription:
    """Build a ProblemDescription from its JSON questionnaire form."""

    def pick(enum_cls, key, default=None):
        raw = payload.get(key, default)
        if raw is None:
            raise ValueError(f"missing field {key!r}")
        try:
            return enum_cls(raw)
        except ValueError:
            valid = ", ".join(e.value for e in enum_cls)
            raise ValueError(f"{key} must be one of: {valid}") from None

    return ProblemDescription(
        weights_spec=pick(WeightsSpec, "weights_spec"),
        performance_scale=pick(PerformanceScale, "performance_scale"),
        problematic=pick(Problematic, "problematic"),
        fuzzy_weights=bool(payload.get("fuzzy_weights", False)),
        fuzzy_performance=bool(payload.get("fuzzy_performance", False)),
        uses_indifference_threshold=bool(payload.get("uses_indifference_threshold", False)),
        uses_preference_threshold=bool(payload.get("uses_preference_threshold", False)),
        expected_order=pick(ExpectedOrder, "expected_order", "none"),
    )
