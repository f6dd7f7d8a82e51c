"""Immutable knowledge base of 56 MCDA methods and their characteristics.

The canonical data ships as a pipe-delimited text file so that every value is
diffable and auditable; a recorded SHA-256 digest guards against silent edits.
Each method carries a nine-value characteristic vector mirroring the problem
descriptors (m1 .. m4.1), an optional display description and an optional
relational taxonomy profile that the selection rules never consult.
"""

from __future__ import annotations

import hashlib
import io
from dataclasses import dataclass
from importlib import resources
from pathlib import Path
from typing import BinaryIO, NamedTuple

from .errors import DuplicateEntryError, KBParseError, KBValidationError, MethodNotFoundError

M_SLOT_NAMES = ("m1", "m1.1", "m2", "m3", "m3.1", "m3.1.1", "m3.1.2", "m4", "m4.1")

M_SLOT_DOMAINS: dict[str, tuple[int, ...]] = {
    "m1": (0, 1),
    "m1.1": (0, 1, 2, 3),
    "m2": (1, 2, 3),
    "m3": (0, 1),
    "m3.1": (0, 1, 2, 3),
    "m3.1.1": (0, 1, 2, 3),
    "m3.1.2": (0, 1, 2, 3),
    "m4": (1, 2, 3, 4),
    "m4.1": (0, 1, 2),
}


class CharacteristicVector(NamedTuple):
    """Method-side mirror of the nine problem descriptors."""

    m1: int
    m1_1: int
    m2: int
    m3: int
    m3_1: int
    m3_1_1: int
    m3_1_2: int
    m4: int
    m4_1: int


@dataclass(frozen=True)
class RelationalProfile:
    """Display-only taxonomy row: binary relations, compensation, aggregation,
    preferential-information flags."""

    relations: frozenset[str]  # subset of {"I", "P", "Q", "R", "S"}
    compensation: str  # "none" | "total" | "partial"
    aggregation: str  # "single-criterion" | "outranking" | "mixed"
    information: frozenset[str]


@dataclass(frozen=True)
class MethodRecord:
    id: int
    name: str
    abbreviation: str
    characteristics: CharacteristicVector
    citation_key: str
    description: str | None = None
    relational_metadata: RelationalProfile | None = None


def _check_hierarchy(record_id: int, name: str, m: CharacteristicVector) -> None:
    """Raise KBValidationError on the first violated structural constraint."""

    def fail(constraint: str) -> None:
        raise KBValidationError(f"method {record_id} ({name}): {constraint}")

    for slot_name, value in zip(M_SLOT_NAMES, m):
        if value not in M_SLOT_DOMAINS[slot_name]:
            fail(f"{slot_name}={value} outside domain {M_SLOT_DOMAINS[slot_name]}")
    if m.m1 == 0 and m.m1_1 != 0:
        fail("m1=0 requires m1.1=0")
    if m.m1 == 1 and m.m1_1 not in (1, 2, 3):
        fail("m1=1 requires m1.1 in {1,2,3}")
    if m.m3 == 0 and (m.m3_1, m.m3_1_1, m.m3_1_2) != (0, 0, 0):
        fail("m3=0 requires m3.1=m3.1.1=m3.1.2=0")
    if m.m3 == 1:
        if m.m3_1 not in (1, 2, 3):
            fail("m3=1 requires m3.1 in {1,2,3}")
        if m.m3_1 == 1 and (m.m3_1_1 not in (1, 2, 3) or m.m3_1_2 != 0):
            fail("m3.1=1 requires m3.1.1 in {1,2,3} and m3.1.2=0")
        if m.m3_1 == 2 and (m.m3_1_1 != 0 or m.m3_1_2 not in (1, 2, 3)):
            fail("m3.1=2 requires m3.1.1=0 and m3.1.2 in {1,2,3}")
        if m.m3_1 == 3 and (m.m3_1_1 not in (1, 2, 3) or m.m3_1_2 not in (1, 2, 3)):
            fail("m3.1=3 requires m3.1.1 and m3.1.2 in {1,2,3}")
    if m.m4 in (1, 2, 4) and m.m4_1 != 0:
        fail("m4 in {1,2,4} requires m4.1=0")
    if m.m4 == 3 and m.m4_1 not in (1, 2):
        fail("m4=3 requires m4.1 in {1,2}")


class KnowledgeBase:
    """Ordered, immutable collection of the 56 method records.

    Instances never mutate after construction and are safe to share across
    threads.
    """

    EXPECTED_METHOD_COUNT = 56
    EXPECTED_DISTINCT_VECTORS = 31

    def __init__(
        self,
        methods: tuple[MethodRecord, ...],
        schema_version: str,
        content_digest: str,
    ):
        self.methods = methods
        self.schema_version = schema_version
        self.content_digest = content_digest
        self._by_id = {m.id: m for m in methods}
        self._by_abbr = {m.abbreviation: m for m in methods}

    def __len__(self) -> int:
        return len(self.methods)

    def __iter__(self):
        return iter(self.methods)

    def get_method(self, key: int | str) -> MethodRecord:
        """Look a method up by numeric id or abbreviation."""
        table = self._by_id if isinstance(key, int) else self._by_abbr
        try:
            return table[key]
        except KeyError:
            raise MethodNotFoundError(f"no method with key {key!r}") from None

    def distinct_vectors(self) -> set[CharacteristicVector]:
        return {m.characteristics for m in self.methods}


def _read_bytes(source) -> bytes:
    if isinstance(source, (str, Path)):
        return Path(source).read_bytes()
    data = source.read()
    if isinstance(data, str):
        return data.encode("utf-8")
    return data


def _data_lines(text: str):
    """Yield (line_no, columns) for data rows; collect header metadata."""
    schema = None
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            body = line.lstrip("#").strip()
            if body.startswith("schema:"):
                schema = body.split(":", 1)[1].strip()
            continue
        yield line_no, line.split("|"), schema


def load_kb(
    source,
    *,
    descriptions=None,
    taxonomy=None,
    expected_digest: str | None = None,
) -> KnowledgeBase:
    """Load and validate the knowledge base from a path or readable stream.

    ``descriptions`` and ``taxonomy`` are optional sidecar sources keyed by
    abbreviation.  Loading is deterministic and order-preserving; any row
    failing a structural constraint is reported, never silently fixed.
    """
    data = _read_bytes(source)
    digest = hashlib.sha256(data).hexdigest()
    if expected_digest is not None and digest != expected_digest:
        raise KBValidationError(
            f"knowledge-base digest {digest} does not match recorded {expected_digest}"
        )

    description_map = _load_descriptions(descriptions) if descriptions is not None else {}
    taxonomy_map = _load_taxonomy(taxonomy) if taxonomy is not None else {}

    schema_version = "mcda-kb/1"
    records: list[MethodRecord] = []
    seen_ids: set[int] = set()
    seen_abbrs: set[str] = set()
    for line_no, cols, schema in _data_lines(data.decode("utf-8")):
        if schema:
            schema_version = schema
        if len(cols) != 13:
            raise KBParseError(f"line {line_no}: expected 13 columns, found {len(cols)}")
        try:
            record_id = int(cols[0])
            values = tuple(int(x) for x in cols[3:12])
        except ValueError as exc:
            raise KBParseError(f"line {line_no}: {exc}") from None
        name, abbr, citation = cols[1], cols[2], cols[12]
        if record_id in seen_ids:
            raise DuplicateEntryError(f"line {line_no}: duplicate method id {record_id}")
        if abbr in seen_abbrs:
            raise DuplicateEntryError(f"line {line_no}: duplicate abbreviation {abbr!r}")
        vector = CharacteristicVector(*values)
        _check_hierarchy(record_id, name, vector)
        seen_ids.add(record_id)
        seen_abbrs.add(abbr)
        records.append(
            MethodRecord(
                id=record_id,
                name=name,
                abbreviation=abbr,
                characteristics=vector,
                citation_key=citation,
                description=description_map.get(abbr),
                relational_metadata=taxonomy_map.get(abbr),
            )
        )

    if len(records) != KnowledgeBase.EXPECTED_METHOD_COUNT:
        raise KBValidationError(
            f"expected {KnowledgeBase.EXPECTED_METHOD_COUNT} methods, found {len(records)}"
        )
    distinct = {r.characteristics for r in records}
    if len(distinct) != KnowledgeBase.EXPECTED_DISTINCT_VECTORS:
        raise KBValidationError(
            f"expected {KnowledgeBase.EXPECTED_DISTINCT_VECTORS} distinct characteristic "
            f"vectors, found {len(distinct)}"
        )
    return KnowledgeBase(tuple(records), schema_version, digest)


def _load_descriptions(source) -> dict[str, str]:
    text = _read_bytes(source).decode("utf-8")
    out: dict[str, str] = {}
    for line_no, cols, _ in _data_lines(text):
        if len(cols) != 2:
            raise KBParseError(f"descriptions line {line_no}: expected 2 columns")
        out[cols[0]] = cols[1]
    return out


def _load_taxonomy(source) -> dict[str, RelationalProfile]:
    text = _read_bytes(source).decode("utf-8")
    out: dict[str, RelationalProfile] = {}
    for line_no, cols, _ in _data_lines(text):
        if len(cols) != 5:
            raise KBParseError(f"taxonomy line {line_no}: expected 5 columns")
        abbr, relations, compensation, aggregation, information = cols
        out[abbr] = RelationalProfile(
            relations=frozenset(relations.split(",")) if relations else frozenset(),
            compensation=compensation,
            aggregation=aggregation,
            information=frozenset(information.split(",")) if information else frozenset(),
        )
    return out


def _data_path(name: str):
    return resources.files("mcda_select").joinpath("data", name)


def recorded_digest() -> str:
    """The checked-in SHA-256 of the canonical KB file."""
    text = _data_path("kb_methods.sha256").read_text(encoding="utf-8")
    return text.split()[0]


def load_default_kb() -> KnowledgeBase:
    """Load the packaged canonical knowledge base, verifying its digest."""
    kb_bytes = _data_path("kb_methods.psv").read_bytes()
    return load_kb(
        io.BytesIO(kb_bytes),
        descriptions=io.BytesIO(_data_path("method_descriptions.psv").read_bytes()),
        taxonomy=io.BytesIO(_data_path("method_taxonomy.psv").read_bytes()),
        expected_digest=recorded_digest(),
    )


def load_kb_from_path(path: str | Path) -> KnowledgeBase:
    """Load a KB file, picking up sidecar files from the same directory."""
    path = Path(path)
    descriptions = path.with_name("method_descriptions.psv")
    taxonomy = path.with_name("method_taxonomy.psv")
    return load_kb(
        path,
        descriptions=descriptions if descriptions.exists() else None,
        taxonomy=taxonomy if taxonomy.exists() else None,
    )
