"""Problem-side descriptor vectors with explicit unknown slots.

A decision problem is described by up to nine small integer slots arranged in
three hierarchy levels:

* level 1: c1 (weights used?), c2 (comparison scale), c3 (uncertainty?),
  c4 (problematic);
* level 2 adds c1.1 (weight scale), c3.1 (uncertainty kind), c4.1 (ranking
  order);
* level 3 adds c3.1.1 (fuzzy data target) and c3.1.2 (threshold kind).

Every slot may also be *unknown*, written ``?`` in text form and ``None`` in
Python / ``null`` in JSON.  A child slot (c1.1, c3.1, c3.1.1, c3.1.2, c4.1)
is meaningful only when its parent enables it; a structural ``0`` marks "not
applicable".  Which slot combinations are coherent is defined purely by the
explicit row tables below (``STEP1_ROWS`` .. ``STEP4_ROWS``), one table per
slot group, so validity can be audited row by row rather than hidden in
conditionals.  Sub-slots may be known only when their parent is known; looser
combinations are rejected even though a query engine could technically serve
some of them.
"""

from __future__ import annotations

import itertools
from enum import IntEnum
from typing import Iterator, Mapping, NamedTuple

from .errors import DescriptorParseError

Value = int | None  # None encodes an unknown slot ("?")

SLOT_NAMES = ("c1", "c1.1", "c2", "c3", "c3.1", "c3.1.1", "c3.1.2", "c4", "c4.1")

#: Known-value domain per slot.  ``0`` is the structural "not applicable"
#: value where a slot has one; the enumeration space additionally allows
#: ``None`` in every slot.
SLOT_DOMAINS: dict[str, tuple[int, ...]] = {
    "c1": (0, 1),
    "c1.1": (0, 1, 2, 3),
    "c2": (1, 2, 3),
    "c3": (0, 1),
    "c3.1": (0, 1, 2, 3),
    "c3.1.1": (0, 1, 2, 3),
    "c3.1.2": (0, 1, 2, 3),
    "c4": (1, 2, 3, 4),
    "c4.1": (0, 1, 2),
}


class DescriptorVector(NamedTuple):
    """The nine problem descriptors; ``None`` marks an unknown slot."""

    c1: Value = None
    c1_1: Value = None
    c2: Value = None
    c3: Value = None
    c3_1: Value = None
    c3_1_1: Value = None
    c3_1_2: Value = None
    c4: Value = None
    c4_1: Value = None

    def to_mapping(self) -> dict[str, Value]:
        return dict(zip(SLOT_NAMES, self))

    def __str__(self) -> str:
        return " ".join(
            f"{name}={'?' if value is None else value}"
            for name, value in zip(SLOT_NAMES, self)
        )


ALL_UNKNOWN = DescriptorVector()


class Level(IntEnum):
    """Hierarchy depth of a problem description."""

    L1 = 1
    L2 = 2
    L3 = 3


LEVEL_SLOTS: dict[Level, tuple[int, ...]] = {
    Level.L1: (0, 2, 3, 7),
    Level.L2: (0, 1, 2, 3, 4, 7, 8),
    Level.L3: tuple(range(9)),
}

# Validity is checked in four steps over four disjoint slot groups.
_STEP_SLOTS: tuple[tuple[int, ...], ...] = ((0, 1), (2,), (3, 4, 5, 6), (7, 8))

STEP1_ROWS = frozenset(
    {(0, 0), (1, 1), (1, 2), (1, 3), (1, None), (None, None)}
)

STEP2_ROWS = frozenset({(1,), (2,), (3,), (None,)})

STEP3_ROWS = frozenset(
    {
        (0, 0, 0, 0),
        (1, 1, 1, 0),
        (1, 1, 2, 0),
        (1, 1, 3, 0),
        (1, 2, 0, 1),
        (1, 2, 0, 2),
        (1, 2, 0, 3),
        (1, 3, 1, 1),
        (1, 3, 1, 2),
        (1, 3, 1, 3),
        (1, 3, 2, 1),
        (1, 3, 2, 2),
        (1, 3, 2, 3),
        (1, 3, 3, 1),
        (1, 3, 3, 2),
        (1, 3, 3, 3),
        (1, 1, None, 0),
        (1, 2, 0, None),
        (1, 3, None, None),
        (1, 3, None, 1),
        (1, 3, None, 2),
        (1, 3, None, 3),
        (1, 3, 1, None),
        (1, 3, 2, None),
        (1, 3, 3, None),
        (1, None, None, None),
        (None, None, None, None),
    }
)

STEP4_ROWS = frozenset(
    {(1, 0), (2, 0), (4, 0), (3, 1), (3, 2), (3, None), (None, None)}
)

_STEP_ROWS_L3: tuple[frozenset, ...] = (STEP1_ROWS, STEP2_ROWS, STEP3_ROWS, STEP4_ROWS)


def _restrict_steps(level: Level) -> tuple[tuple[tuple[int, ...], frozenset], ...]:
    """Project each step's slot group and row set onto the level's slots."""
    keep = set(LEVEL_SLOTS[level])
    restricted = []
    for slots, rows in zip(_STEP_SLOTS, _STEP_ROWS_L3):
        positions = tuple(i for i, slot in enumerate(slots) if slot in keep)
        kept_slots = tuple(slot for slot in slots if slot in keep)
        kept_rows = frozenset(tuple(row[i] for i in positions) for row in rows)
        restricted.append((kept_slots, kept_rows))
    return tuple(restricted)


_STEPS_BY_LEVEL: dict[Level, tuple[tuple[tuple[int, ...], frozenset], ...]] = {
    level: _restrict_steps(level) for level in Level
}


def violated_step(v: DescriptorVector, level: Level = Level.L3) -> int | None:
    """Return the first validity step (1-4) that ``v`` fails, or None."""
    for number, (slots, rows) in enumerate(_STEPS_BY_LEVEL[level], start=1):
        if tuple(v[i] for i in slots) not in rows:
            return number
    return None


def is_valid(v: DescriptorVector, level: Level = Level.L3) -> bool:
    """True iff every slot group of ``v`` matches a validity row at ``level``."""
    return violated_step(v, level) is None


def count_unknowns(v: DescriptorVector, level: Level = Level.L3) -> int:
    """Number of unknown slots among the level's slot set.

    Structural zeros count as known; only literal unknowns are counted.
    """
    return sum(v[i] is None for i in LEVEL_SLOTS[level])


def is_fully_specified(v: DescriptorVector, level: Level = Level.L3) -> bool:
    return count_unknowns(v, level) == 0


def project_to_level(v: DescriptorVector, level: Level) -> DescriptorVector:
    """Keep the level's slots; mark every other slot absent (unknown)."""
    keep = set(LEVEL_SLOTS[level])
    return DescriptorVector(*(v[i] if i in keep else None for i in range(9)))


def level_values(v: DescriptorVector, level: Level) -> tuple[Value, ...]:
    """The sub-tuple of ``v`` restricted to the level's slots, in slot order."""
    return tuple(v[i] for i in LEVEL_SLOTS[level])


def infer_structural_zeros(v: DescriptorVector) -> DescriptorVector:
    """Fill unknown child slots that a known parent pins to "not applicable".

    A questionnaire answering c3.1=1 never asks for the threshold kind, so an
    unknown c3.1.2 there means 0, not "any value".  Known values are never
    touched (contradictions are left for the validity check), and every valid
    vector is a fixed point of this function.
    """
    values = list(v)
    pins = (
        (v.c1 == 0, (1,)),
        (v.c3 == 0, (4, 5, 6)),
        (v.c3 == 1 and v.c3_1 == 1, (6,)),
        (v.c3 == 1 and v.c3_1 == 2, (5,)),
        (v.c4 in (1, 2, 4), (8,)),
    )
    for applies, slots in pins:
        if applies:
            for slot in slots:
                if values[slot] is None:
                    values[slot] = 0
    return DescriptorVector(*values)


def parse_descriptor_vector(text: str) -> DescriptorVector:
    """Parse a ``c1=1 c1.1=2 c2=? ...`` assignment list.

    Missing slots default to unknown.  Validity is not checked here; use
    :func:`is_valid` separately.
    """
    tokens = text.replace(",", " ").split()
    return vector_from_mapping(_pairs_to_mapping(tokens))


def _pairs_to_mapping(tokens: list[str]) -> dict[str, object]:
    mapping: dict[str, object] = {}
    for token in tokens:
        name, sep, raw = token.partition("=")
        if not sep:
            raise DescriptorParseError(f"expected name=value, got {token!r}")
        if name in mapping:
            raise DescriptorParseError(f"duplicate descriptor {name!r}")
        mapping[name] = raw
    return mapping


def vector_from_mapping(mapping: Mapping[str, object]) -> DescriptorVector:
    """Build a vector from ``{slot name: value}``.

    Values may be ints, numeric strings, ``None`` or ``"?"`` (both unknown).
    Unknown slot names and out-of-domain values raise
    :class:`DescriptorParseError` naming the offender.
    """
    values: list[Value] = [None] * 9
    index = {name: i for i, name in enumerate(SLOT_NAMES)}
    for name, raw in mapping.items():
        if name not in index:
            raise DescriptorParseError(f"unknown descriptor name {name!r}")
        if raw is None or raw == "?":
            continue
        try:
            value = int(raw)  # type: ignore[arg-type]
        except (TypeError, ValueError):
            raise DescriptorParseError(
                f"descriptor {name} has non-integer value {raw!r}"
            ) from None
        if value not in SLOT_DOMAINS[name]:
            raise DescriptorParseError(
                f"descriptor {name}={value} outside domain {SLOT_DOMAINS[name]}"
            )
        values[index[name]] = value
    return DescriptorVector(*values)


def enumeration_domains(level: Level) -> tuple[tuple[Value, ...], ...]:
    """Per-slot iteration domains (known values first, unknown last).

    Slots outside the level are pinned to a single ``None`` so the product
    over all nine positions enumerates exactly the level's combination space.
    """
    keep = set(LEVEL_SLOTS[level])
    return tuple(
        SLOT_DOMAINS[name] + (None,) if i in keep else (None,)
        for i, name in enumerate(SLOT_NAMES)
    )


def iter_combinations(level: Level) -> Iterator[DescriptorVector]:
    """All descriptor combinations at ``level``, unknowns included.

    Deterministic lexicographic order; 180 vectors at level 1, 18,000 at
    level 2, 450,000 at level 3.
    """
    for values in itertools.product(*enumeration_domains(level)):
        yield DescriptorVector(*values)
