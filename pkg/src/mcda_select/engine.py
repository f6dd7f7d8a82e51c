"""Selection engine: exact matching, rule-base derivation, set-algebra view.

Matching semantics is exact equality on known slots: a known descriptor
matches only methods whose characteristic carries the same code.  A method
coded 3 ("both") on a both-capable slot therefore does *not* answer a query
asking for one of its two constituent capabilities; the "both" possibilities
are separate rules.  The tree/set-algebra rendering produced by
:func:`explain_query` is a different, capability-oriented view in which a
"both"-coded method belongs to each constituent subset; on queries that pin a
both-capable slot to a single capability it can therefore be a strict
superset of the rule match (see ``SUBSETS``).
"""

from __future__ import annotations

import weakref
from dataclasses import dataclass
from importlib import resources
from typing import Callable

from .descriptors import (
    LEVEL_SLOTS,
    DescriptorVector,
    Level,
    infer_structural_zeros,
    is_fully_specified,
    level_values,
    violated_step,
)
from .errors import InvalidDescriptorError, KBParseError
from .kb import CharacteristicVector, KnowledgeBase, MethodRecord

MethodSet = tuple[MethodRecord, ...]


@dataclass(frozen=True)
class Rule:
    """A fully specified descriptor pattern and the methods sharing it."""

    label: str
    level: Level
    pattern: DescriptorVector
    method_ids: tuple[int, ...]

    def methods(self, kb: KnowledgeBase) -> MethodSet:
        return tuple(kb.get_method(i) for i in self.method_ids)


def _lacks_variant_comparison(v: DescriptorVector) -> bool:
    # A zero in c2 or c4 encodes a problem whose decision variants are never
    # compared (the classifier's error path); every method compares variants,
    # so such a query matches nothing rather than being malformed input.
    return v.c2 == 0 or v.c4 == 0


def _check_query(v: DescriptorVector, level: Level) -> None:
    step = violated_step(v, level)
    if step is not None:
        raise InvalidDescriptorError(
            step, f"descriptor combination violates validity step {step}: {v}"
        )


def select_methods(
    kb: KnowledgeBase, v: DescriptorVector, level: Level = Level.L3
) -> MethodSet:
    """Methods whose characteristics equal ``v`` on every known slot.

    Unknown slots impose no constraint; slots outside ``level`` are ignored.
    Unknown child slots pinned by a known parent are first resolved to their
    structural zero.  The result keeps knowledge-base order and may be empty.
    Invalid slot combinations raise :class:`InvalidDescriptorError` naming
    the violated validity step.
    """
    if _lacks_variant_comparison(v):
        return ()
    v = infer_structural_zeros(v)
    _check_query(v, level)
    slots = LEVEL_SLOTS[level]
    return tuple(
        m
        for m in kb.methods
        if all(v[i] is None or v[i] == m.characteristics[i] for i in slots)
    )


def activated_rule(
    kb: KnowledgeBase, v: DescriptorVector, level: Level = Level.L3
) -> Rule | None:
    """The unique rule whose pattern equals the fully specified ``v``.

    Returns None when no method (hence no rule) carries the pattern.
    """
    if _lacks_variant_comparison(v):
        return None
    v = infer_structural_zeros(v)
    _check_query(v, level)
    if not is_fully_specified(v, level):
        raise ValueError(f"activated rule requires a fully specified vector, got: {v}")
    index = _rule_index(kb, level)
    return index.get(level_values(v, level))


_rule_cache: "weakref.WeakKeyDictionary[KnowledgeBase, dict]" = weakref.WeakKeyDictionary()


def derive_rule_base(kb: KnowledgeBase, level: Level) -> tuple[Rule, ...]:
    """Group the methods by their characteristic vector at ``level``.

    One rule per nonempty group; patterns are pairwise distinct and their
    method sets partition the knowledge base.  Level-3 rules carry the
    canonical R-labels; level-1/2 rules get generated labels in pattern
    order.  Results are memoized per knowledge base (idempotent, so a
    benign race at worst recomputes the same value).
    """
    per_kb = _rule_cache.setdefault(kb, {})
    if level not in per_kb:
        per_kb[level] = _build_rules(kb, level)
    return per_kb[level]


def _build_rules(kb: KnowledgeBase, level: Level) -> tuple[Rule, ...]:
    slots = LEVEL_SLOTS[level]
    groups: dict[tuple, list[int]] = {}
    for m in kb.methods:
        key = tuple(m.characteristics[i] for i in slots)
        groups.setdefault(key, []).append(m.id)
    labels = _canonical_labels() if level == Level.L3 else None
    rules = []
    for n, key in enumerate(sorted(groups), start=1):
        pattern_values = [None] * 9
        for slot, value in zip(slots, key):
            pattern_values[slot] = value
        pattern = DescriptorVector(*pattern_values)
        if labels is not None:
            label = labels.get(key)
            if label is None:
                raise KBParseError(f"no canonical label recorded for pattern {pattern}")
        else:
            label = f"L{int(level)}-{n:02d}"
        rules.append(Rule(label, level, pattern, tuple(groups[key])))
    return tuple(rules)


def _rule_index(kb: KnowledgeBase, level: Level) -> dict[tuple, Rule]:
    per_kb = _rule_cache.setdefault(kb, {})
    key = ("index", level)
    if key not in per_kb:
        per_kb[key] = {
            level_values(rule.pattern, level): rule
            for rule in derive_rule_base(kb, level)
        }
    return per_kb[key]


def _canonical_labels() -> dict[tuple, str]:
    labels: dict[tuple, str] = {}
    text = resources.files("mcda_select").joinpath("data", "rule_labels.psv").read_text("utf-8")
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        cols = line.split("|")
        if len(cols) != 10:
            raise KBParseError(f"rule label row malformed: {line!r}")
        labels[tuple(int(x) for x in cols[1:])] = cols[0]
    return labels


# --- decision-tree subsets -------------------------------------------------
#
# Named method subsets of the selection tree.  Capability view: a method
# coded 3 on a both-capable slot belongs to each constituent subset, so the
# "both" query is the intersection of the two.

SUBSETS: dict[str, tuple[str, Callable[[CharacteristicVector], bool]]] = {
    "S1a": ("works without criteria weights", lambda m: m.m1 == 0),
    "S1b": ("qualitative criteria weights", lambda m: m.m1_1 == 1),
    "S1c": ("quantitative criteria weights", lambda m: m.m1_1 == 2),
    "S1d": ("relative (pairwise) criteria weights", lambda m: m.m1_1 == 3),
    "S2a": ("qualitative comparison scale", lambda m: m.m2 == 1),
    "S2b": ("quantitative comparison scale", lambda m: m.m2 == 2),
    "S2c": ("relative comparison scale", lambda m: m.m2 == 3),
    "S3a": ("no uncertainty handling", lambda m: m.m3 == 0),
    "S3b": ("fuzzy criteria weights", lambda m: m.m3_1_1 in (1, 3)),
    "S3c": ("fuzzy variant performances", lambda m: m.m3_1_1 in (2, 3)),
    "S3d": ("indifference threshold", lambda m: m.m3_1_2 in (1, 3)),
    "S3e": ("preference threshold", lambda m: m.m3_1_2 in (2, 3)),
    "S4a": ("selection problematic", lambda m: m.m4 in (1, 4)),
    "S4b": ("sorting problematic", lambda m: m.m4 in (2, 4)),
    "S4c": ("ranking with partial order", lambda m: m.m4 == 3 and m.m4_1 == 1),
    "S4d": ("ranking with complete order", lambda m: m.m4 == 3 and m.m4_1 == 2),
}


@dataclass(frozen=True)
class SetExpression:
    """Intersection of named subsets and parenthesized unions of them."""

    names: tuple[str, ...]
    unions: tuple[tuple[str, ...], ...]

    @property
    def text(self) -> str:
        parts = list(self.names)
        parts += ["(" + " ∪ ".join(u) + ")" for u in self.unions]
        return " ∩ ".join(parts) if parts else "U"

    def __str__(self) -> str:
        return self.text


def explain_query(v: DescriptorVector) -> SetExpression:
    """Render ``v`` as the set-algebra walk of the selection tree.

    Each known slot contributes its named subset ("both" values contribute
    the intersection of the two constituent subsets); an unknown slot inside
    an active branch contributes the union of its subsets.  The all-unknown
    query renders as the universe ``U``.
    """
    v = infer_structural_zeros(v)
    _check_query(v, Level.L3)
    if all(value is None for value in v):
        return SetExpression((), ())  # renders as the universe U
    names: list[str] = []
    unions: list[tuple[str, ...]] = []

    def emit(contribution: tuple[str, ...] | str | None) -> None:
        if contribution is None:
            return
        if isinstance(contribution, str):
            names.append(contribution)
        elif len(contribution) == 1:
            names.append(contribution[0])
        else:
            unions.append(contribution)

    def pick(value, single: dict[int, str], all_of: tuple[str, ...]) -> None:
        # value 3 means "both": intersect the two constituent subsets.
        if value is None:
            emit(all_of)
        elif value == 3 and len(all_of) == 2:
            names.extend(all_of)
        else:
            emit(single[value])

    # weights branch
    if v.c1 == 0:
        emit("S1a")
    elif v.c1 == 1:
        pick(v.c1_1, {1: "S1b", 2: "S1c", 3: "S1d"}, ("S1b", "S1c", "S1d"))
    else:
        emit(("S1a", "S1b", "S1c", "S1d"))

    # comparison-scale branch
    if v.c2 is None:
        emit(("S2a", "S2b", "S2c"))
    else:
        emit({1: "S2a", 2: "S2b", 3: "S2c"}[v.c2])

    # uncertainty branch
    if v.c3 == 0:
        emit("S3a")
    elif v.c3 == 1:
        if v.c3_1 in (1, 3):
            pick(v.c3_1_1, {1: "S3b", 2: "S3c"}, ("S3b", "S3c"))
        if v.c3_1 in (2, 3):
            pick(v.c3_1_2, {1: "S3d", 2: "S3e"}, ("S3d", "S3e"))
        if v.c3_1 is None:
            emit(("S3b", "S3c", "S3d", "S3e"))
    else:
        emit(("S3a", "S3b", "S3c", "S3d", "S3e"))

    # problematic branch
    if v.c4 == 1:
        emit("S4a")
    elif v.c4 == 2:
        emit("S4b")
    elif v.c4 == 4:
        names.extend(("S4a", "S4b"))
    elif v.c4 == 3:
        if v.c4_1 == 1:
            emit("S4c")
        elif v.c4_1 == 2:
            emit("S4d")
        else:
            emit(("S4c", "S4d"))
    else:
        emit(("S4a", "S4b", "S4c", "S4d"))

    return SetExpression(tuple(names), tuple(unions))


def evaluate_expression(kb: KnowledgeBase, expr: SetExpression) -> MethodSet:
    """Evaluate a rendered expression over the knowledge base (teaching aid)."""

    def member(m: MethodRecord) -> bool:
        chars = m.characteristics
        if not all(SUBSETS[name][1](chars) for name in expr.names):
            return False
        return all(any(SUBSETS[n][1](chars) for n in union) for union in expr.unions)

    return tuple(m for m in kb.methods if member(m))
