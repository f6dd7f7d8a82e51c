"""Rule-based recommendation of multi-criteria decision-analysis methods.

The package selects suitable MCDA methods for a decision problem described by
up to nine hierarchical descriptors, any of which may be left unknown.  It
ships the 56-method knowledge base, the derived rule bases, an exhaustive
uncertainty-space analyzer, a 40-case literature validation corpus, a CLI and
a small HTTP API.
"""

from .classify import (
    ExpectedOrder,
    PerformanceScale,
    Problematic,
    ProblemDescription,
    WeightsSpec,
    classify,
)
from .descriptors import (
    ALL_UNKNOWN,
    DescriptorVector,
    Level,
    count_unknowns,
    is_valid,
    parse_descriptor_vector,
    project_to_level,
)
from .engine import (
    Rule,
    SetExpression,
    activated_rule,
    derive_rule_base,
    evaluate_expression,
    explain_query,
    select_methods,
)
from .errors import (
    CorpusError,
    DescriptorParseError,
    DuplicateEntryError,
    InvalidDescriptorError,
    KBParseError,
    KBValidationError,
    McdaSelectError,
    MethodNotFoundError,
    NoComparisonError,
)
from .kb import CharacteristicVector, KnowledgeBase, MethodRecord, load_default_kb, load_kb
from .analyzer import StatsRow, compute_stats, enumerate_combinations, export_stats, filter_valid
from .validation import CaseStatus, ReferenceCase, ValidationReport, load_default_cases, run_cases

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
