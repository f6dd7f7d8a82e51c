"""HTTP service exposing the knowledge base, selection, rules and statistics.

Stateless JSON-over-HTTP endpoints over one immutable knowledge base:

* ``GET /methods`` (optionally ``?abbr=``) - method records;
* ``POST /select`` - method selection for a descriptor object;
* ``GET /rules?level=N`` - derived rule base;
* ``GET /stats?level=N&include_empty=B`` - uncertainty statistics.

Every response carries the knowledge-base digest in ``X-KB-Digest`` so
clients can pin results to exact data.  Statistics are precomputed at
startup (the combination space is small and bounded).  The KB path and bind
address come from ``MCDA_KB`` / ``MCDA_ADDR`` or CLI flags; the allowed UI
origin from ``MCDA_UI_ORIGIN`` (default ``*``).
"""

from __future__ import annotations

import os

from fastapi import FastAPI, HTTPException, Query, Request
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse
from pydantic import BaseModel

from . import analyzer
from .descriptors import (
    Level,
    infer_structural_zeros,
    is_fully_specified,
    vector_from_mapping,
)
from .engine import activated_rule, derive_rule_base, explain_query, select_methods
from .errors import DescriptorParseError, InvalidDescriptorError, MethodNotFoundError
from .kb import M_SLOT_NAMES, KnowledgeBase, MethodRecord, load_default_kb, load_kb_from_path
from .validation import CaseStatus, run_cases


class MethodOut(BaseModel):
    id: int
    name: str
    abbreviation: str
    characteristics: dict[str, int]
    description: str | None
    citation_key: str


class SelectedMethodOut(BaseModel):
    id: int
    name: str
    abbreviation: str
    description: str | None


class SelectionResponse(BaseModel):
    methods: list[SelectedMethodOut]
    activated_rule: str | None
    method_count: int
    explanation: str | None = None


class RuleOut(BaseModel):
    label: str
    level: int
    pattern: dict[str, int | None]
    method_ids: list[int]
    method_abbreviations: list[str]


class StatsRowOut(BaseModel):
    unknowns: int
    rule_count: int
    min_methods: int
    mean_methods: float
    max_methods: int
    include_empty: bool


def _method_payload(m: MethodRecord) -> MethodOut:
    return MethodOut(
        id=m.id,
        name=m.name,
        abbreviation=m.abbreviation,
        characteristics=dict(zip(M_SLOT_NAMES, m.characteristics)),
        description=m.description,
        citation_key=m.citation_key,
    )


def _parse_level(level: int) -> Level:
    try:
        return Level(level)
    except ValueError:
        raise HTTPException(status_code=400, detail=f"level must be 1, 2 or 3, got {level}")


def create_app(kb: KnowledgeBase | None = None, *, precompute_stats: bool = True) -> FastAPI:
    if kb is None:
        kb_path = os.environ.get("MCDA_KB")
        kb = load_kb_from_path(kb_path) if kb_path else load_default_kb()

    app = FastAPI(
        title="MCDA method selection service",
        description="Recommends multi-criteria decision-analysis methods for a "
        "(possibly incomplete) problem description.",
        version="0.1.0",
    )
    app.add_middleware(
        CORSMiddleware,
        allow_origins=[os.environ.get("MCDA_UI_ORIGIN", "*")],
        allow_methods=["*"],
        allow_headers=["*"],
    )

    stats_cache: dict[tuple[Level, bool], list[analyzer.StatsRow]] = {}
    if precompute_stats:
        for level in Level:
            for include_empty in (False, True):
                stats_cache[(level, include_empty)] = analyzer.compute_stats(
                    kb, level, include_empty
                )

    @app.middleware("http")
    async def kb_digest_header(request: Request, call_next):
        response = await call_next(request)
        response.headers["X-KB-Digest"] = kb.content_digest
        return response

    @app.get("/methods", response_model=list[MethodOut])
    def methods(abbr: str | None = Query(default=None)):
        if abbr is None:
            return [_method_payload(m) for m in kb.methods]
        try:
            return [_method_payload(kb.get_method(abbr))]
        except MethodNotFoundError:
            raise HTTPException(status_code=404, detail=f"no method with abbreviation {abbr!r}")

    @app.post("/select", response_model=SelectionResponse)
    def select(payload: dict):
        descriptors = payload.get("descriptors", payload)
        mode = payload.get("mode", "strict") if "descriptors" in payload else "strict"
        if mode not in ("strict", "explain"):
            raise HTTPException(status_code=422, detail=f"unknown mode {mode!r}")
        if not isinstance(descriptors, dict):
            raise HTTPException(status_code=422, detail="descriptors must be an object")
        try:
            vector = infer_structural_zeros(vector_from_mapping(descriptors))
            selected = select_methods(kb, vector)
            rule = activated_rule(kb, vector) if is_fully_specified(vector) else None
            explanation = str(explain_query(vector)) if mode == "explain" else None
        except DescriptorParseError as exc:
            raise HTTPException(status_code=422, detail=str(exc))
        except InvalidDescriptorError as exc:
            raise HTTPException(
                status_code=422,
                detail=f"invalid descriptor combination (validity step {exc.step}): {exc}",
            )
        return SelectionResponse(
            methods=[
                SelectedMethodOut(
                    id=m.id,
                    name=m.name,
                    abbreviation=m.abbreviation,
                    description=m.description,
                )
                for m in selected
            ],
            activated_rule=rule.label if rule else None,
            method_count=len(selected),
            explanation=explanation,
        )

    @app.get("/rules", response_model=list[RuleOut])
    def rules(level: int = Query(...)):
        lvl = _parse_level(level)
        out = []
        for rule in derive_rule_base(kb, lvl):
            out.append(
                RuleOut(
                    label=rule.label,
                    level=int(lvl),
                    pattern={
                        name: value
                        for name, value in rule.pattern.to_mapping().items()
                        if value is not None
                    },
                    method_ids=list(rule.method_ids),
                    method_abbreviations=[
                        kb.get_method(i).abbreviation for i in rule.method_ids
                    ],
                )
            )
        return out

    @app.get("/stats", response_model=list[StatsRowOut])
    def stats(level: int = Query(...), include_empty: bool = Query(default=False)):
        lvl = _parse_level(level)
        key = (lvl, include_empty)
        rows = stats_cache.get(key)
        if rows is None:
            rows = analyzer.compute_stats(kb, lvl, include_empty)
            stats_cache[key] = rows
        return [
            StatsRowOut(**{**row.__dict__, "mean_methods": round(row.mean_methods, 4)})
            for row in rows
        ]

    @app.get("/validation")
    def validation():
        report = run_cases(kb)
        return JSONResponse(
            {
                "cases": [
                    {
                        "case": r.case.case_no,
                        "rule": r.rule_label,
                        "methods": list(r.method_abbrs),
                        "status": r.status.value,
                        "as_expected": r.as_expected,
                    }
                    for r in report.results
                ],
                "counts": {s.value: report.count(s) for s in CaseStatus},
                "all_as_expected": report.all_as_expected,
            }
        )

    return app


def run(addr: str | None = None, kb: KnowledgeBase | None = None) -> None:
    """Serve the API with uvicorn; ``addr`` is ``host:port``."""
    import uvicorn

    addr = addr or os.environ.get("MCDA_ADDR", "127.0.0.1:8571")
    host, _, port = addr.rpartition(":")
    uvicorn.run(create_app(kb), host=host or "127.0.0.1", port=int(port))
