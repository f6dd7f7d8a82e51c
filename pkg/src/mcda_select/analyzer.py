"""Exhaustive analysis of the descriptor combination space.

Enumerates every slot combination per hierarchy level (450,000 at level 3),
filters it through the four validity steps, sizes the matching method set of
each surviving vector and aggregates per-unknown-count statistics.  The
whole space is small enough that nothing is sampled; a single sweep per
level is cached and reused by both the include-empty and exclude-empty
views, which therefore conserve the total matched-method count by
construction.
"""

from __future__ import annotations

import json
import statistics
import weakref
from dataclasses import asdict, dataclass
from pathlib import Path
from typing import Iterable, Iterator

from .descriptors import (
    LEVEL_SLOTS,
    DescriptorVector,
    Level,
    count_unknowns,
    is_valid,
    iter_combinations,
)
from .engine import select_methods
from .kb import KnowledgeBase


@dataclass(frozen=True)
class StatsRow:
    """Aggregate over all valid vectors with a given number of unknown slots."""

    unknowns: int
    rule_count: int
    min_methods: int
    mean_methods: float
    max_methods: int
    include_empty: bool


def enumerate_combinations(level: Level) -> Iterator[DescriptorVector]:
    """Every slot combination at ``level``, unknowns included, in
    deterministic lexicographic order."""
    return iter_combinations(level)


def filter_valid(
    stream: Iterable[DescriptorVector], level: Level
) -> Iterator[DescriptorVector]:
    """Drop vectors failing any of the four validity steps."""
    return (v for v in stream if is_valid(v, level))


@dataclass
class _Bucket:
    count: int = 0
    nonempty: int = 0
    total: int = 0
    min_all: int | None = None
    max_all: int = 0
    min_nonempty: int | None = None
    max_nonempty: int = 0

    def add(self, n: int) -> None:
        self.count += 1
        self.total += n
        self.min_all = n if self.min_all is None else min(self.min_all, n)
        self.max_all = max(self.max_all, n)
        if n > 0:
            self.nonempty += 1
            self.min_nonempty = (
                n if self.min_nonempty is None else min(self.min_nonempty, n)
            )
            self.max_nonempty = max(self.max_nonempty, n)


_sweep_cache: "weakref.WeakKeyDictionary[KnowledgeBase, dict]" = weakref.WeakKeyDictionary()


def _sweep(kb: KnowledgeBase, level: Level) -> dict[int, _Bucket]:
    per_kb = _sweep_cache.setdefault(kb, {})
    if level not in per_kb:
        buckets: dict[int, _Bucket] = {}
        for v in filter_valid(enumerate_combinations(level), level):
            k = count_unknowns(v, level)
            buckets.setdefault(k, _Bucket()).add(len(select_methods(kb, v, level)))
        per_kb[level] = buckets
    return per_kb[level]


def compute_stats(
    kb: KnowledgeBase, level: Level, include_empty: bool = False
) -> list[StatsRow]:
    """Per-unknown-count statistics of valid vectors at ``level``.

    With ``include_empty`` false, vectors matching no method are dropped
    before aggregating (their count still shows through ``rule_count``
    differences between the two views).
    """
    rows = []
    for k in sorted(_sweep(kb, level)):
        bucket = _sweep(kb, level)[k]
        if include_empty:
            rows.append(
                StatsRow(
                    unknowns=k,
                    rule_count=bucket.count,
                    min_methods=bucket.min_all or 0,
                    mean_methods=bucket.total / bucket.count,
                    max_methods=bucket.max_all,
                    include_empty=True,
                )
            )
        elif bucket.nonempty:
            rows.append(
                StatsRow(
                    unknowns=k,
                    rule_count=bucket.nonempty,
                    min_methods=bucket.min_nonempty or 0,
                    mean_methods=bucket.total / bucket.nonempty,
                    max_methods=bucket.max_nonempty,
                    include_empty=False,
                )
            )
    return rows


def valid_count(kb: KnowledgeBase, level: Level) -> int:
    """Number of valid vectors at ``level`` (unknowns included)."""
    return sum(b.count for b in _sweep(kb, level).values())


def nonempty_count(kb: KnowledgeBase, level: Level) -> int:
    """Number of valid vectors whose method set is nonempty."""
    return sum(b.nonempty for b in _sweep(kb, level).values())


CSV_HEADER = "unknowns,rule_count,min,mean,max"


def render_stats_csv(rows: Iterable[StatsRow]) -> str:
    """Bit-stable CSV rendering, means printed with four decimals."""
    lines = [CSV_HEADER]
    for row in sorted(rows, key=lambda r: r.unknowns):
        lines.append(
            f"{row.unknowns},{row.rule_count},{row.min_methods},"
            f"{row.mean_methods:.4f},{row.max_methods}"
        )
    return "\n".join(lines) + "\n"


def render_stats_json(rows: Iterable[StatsRow]) -> str:
    payload = []
    for row in sorted(rows, key=lambda r: r.unknowns):
        record = asdict(row)
        record["mean_methods"] = round(row.mean_methods, 4)
        payload.append(record)
    return json.dumps(payload, indent=2) + "\n"


def export_stats(rows: Iterable[StatsRow], destination, format: str = "csv") -> None:
    """Write rows to a path or text stream as CSV or JSON, sorted by unknowns."""
    if format == "csv":
        text = render_stats_csv(rows)
    elif format == "json":
        text = render_stats_json(rows)
    else:
        raise ValueError(f"unsupported format {format!r}")
    if isinstance(destination, (str, Path)):
        Path(destination).write_text(text, encoding="utf-8")
    else:
        destination.write(text)


def interlevel_mean_correlation(kb: KnowledgeBase, a: Level, b: Level) -> float:
    """Diagnostic only, not part of any reproduced result: Pearson
    correlation of the nonempty mean-methods series of two levels, aligned by
    the number of *known* slots (the shallower level's k unknowns correspond
    to k plus the slot-count difference at the deeper level)."""
    rows_a = {r.unknowns: r.mean_methods for r in compute_stats(kb, a)}
    rows_b = {r.unknowns: r.mean_methods for r in compute_stats(kb, b)}
    offset = len(LEVEL_SLOTS[b]) - len(LEVEL_SLOTS[a])
    pairs = [
        (rows_a[k], rows_b[k + offset]) for k in sorted(rows_a) if k + offset in rows_b
    ]
    if len(pairs) < 2:
        raise ValueError("not enough aligned points to correlate")
    return statistics.correlation([p[0] for p in pairs], [p[1] for p in pairs])
