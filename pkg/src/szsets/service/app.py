"""FastAPI application exposing the counting library.

All computation lives in the core package; routes translate between the wire
models and core calls.  Domain errors surface as HTTP 400 with a structured
``{"error": {"code", "message"}}`` body so clients can map them to exit codes:
``invalid_argument``, ``oracle_ceiling``, or ``mapping_domain``.
"""

from __future__ import annotations

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from .. import __version__
from ..bijection import MappingDomainError, forward, inverse, verify_bijection
from ..counts import SequenceFamily, VerificationReport, default_families, family_value, verify_family
from ..oracle import (
    OracleCeilingError,
    PredicateSpec,
    count_matching,
    ensure_within_ceiling,
    enumerate_matching,
)
from ..sets import FiniteSet
from . import schemas


def _error_response(code: str, exc: Exception) -> JSONResponse:
    return JSONResponse(status_code=400, content={"error": {"code": code, "message": str(exc)}})


def _family_from(tag: str, k: int | None) -> SequenceFamily:
    return SequenceFamily(tag, k)


def _report_model(report: VerificationReport) -> schemas.VerifyFamilyResponse:
    rows = [
        schemas.VerificationRowModel(
            n=row.n,
            oracle=str(row.oracle),
            formula=str(row.formula),
            recurrence=None if row.recurrence is None else str(row.recurrence),
            all_equal=row.all_equal,
        )
        for row in report.rows
    ]
    return schemas.VerifyFamilyResponse(
        family=report.family.tag,
        k=report.family.k,
        rows=rows,
        overall_pass=report.overall_pass,
    )


def create_app() -> FastAPI:
    app = FastAPI(
        title="szsets",
        version=__version__,
        description="Exact counts of Schreier and Zeckendorf subset families, "
        "with brute-force verification and the gap-widening bijection.",
    )

    @app.exception_handler(OracleCeilingError)
    async def _ceiling_handler(request: Request, exc: OracleCeilingError) -> JSONResponse:
        return _error_response("oracle_ceiling", exc)

    @app.exception_handler(MappingDomainError)
    async def _mapping_handler(request: Request, exc: MappingDomainError) -> JSONResponse:
        return _error_response("mapping_domain", exc)

    @app.exception_handler(ValueError)
    async def _value_handler(request: Request, exc: ValueError) -> JSONResponse:
        return _error_response("invalid_argument", exc)

    @app.get("/health")
    def health() -> dict:
        return {"status": "ok", "version": __version__}

    @app.post("/count", response_model=schemas.CountResponse)
    def count(req: schemas.CountRequest) -> schemas.CountResponse:
        family = _family_from(req.family, req.k)
        value = family_value(family, req.n)
        return schemas.CountResponse(family=req.family, n=req.n, k=req.k, value=str(value))

    @app.post("/table", response_model=schemas.TableResponse)
    def table(req: schemas.TableRequest) -> schemas.TableResponse:
        if req.start > req.stop:
            raise ValueError(f"empty range: from={req.start} > to={req.stop}")
        family = _family_from(req.family, req.k)
        rows = [
            schemas.TableRow(n=n, value=str(family_value(family, n)))
            for n in range(req.start, req.stop + 1)
        ]
        return schemas.TableResponse(family=req.family, k=req.k, rows=rows)

    @app.post("/list", response_model=schemas.ListResponse)
    def list_sets(req: schemas.ListRequest) -> schemas.ListResponse:
        spec = PredicateSpec(
            schreier=req.schreier,
            zeckendorf_gap=req.zeckendorf_gap,
            odd_gaps_only=req.odd_gaps_only,
            max_constraint=req.max_constraint,
            max_parity=req.max_parity,
            include_empty=req.include_empty,
        )
        matches = [list(s.elements) for s in enumerate_matching(req.n, spec)]
        count_value = count_matching(req.n, spec)
        return schemas.ListResponse(n=req.n, sets=matches, count=str(count_value))

    @app.post("/bijection/apply", response_model=schemas.ApplyMappingResponse)
    def apply_mapping(req: schemas.ApplyMappingRequest) -> schemas.ApplyMappingResponse:
        source = FiniteSet(req.elements)
        mapped = inverse(source, req.n) if req.invert else forward(source, req.n)
        return schemas.ApplyMappingResponse(
            n=req.n, invert=req.invert, elements=req.elements, result=list(mapped.elements)
        )

    @app.post("/verify/family", response_model=schemas.VerifyFamilyResponse)
    def verify_one(req: schemas.VerifyFamilyRequest) -> schemas.VerifyFamilyResponse:
        family = _family_from(req.family, req.k)
        return _report_model(verify_family(family, req.max_n))

    @app.post("/verify/bijection", response_model=schemas.VerifyBijectionResponse)
    def verify_mapping(req: schemas.VerifyBijectionRequest) -> schemas.VerifyBijectionResponse:
        ensure_within_ceiling(req.max_n)
        reports = [verify_bijection(n) for n in range(1, req.max_n + 1)]
        models = [
            schemas.BijectionCheckModel(
                n=r.n,
                domain_size=str(r.domain_size),
                image_size=str(r.image_size),
                all_images_in_y=r.all_images_in_y,
                round_trip_ok=r.round_trip_ok,
                is_bijection=r.is_bijection,
            )
            for r in reports
        ]
        return schemas.VerifyBijectionResponse(
            reports=models, overall_pass=all(r.is_bijection for r in reports)
        )

    @app.post("/verify/all", response_model=schemas.VerifyAllResponse)
    def verify_everything(req: schemas.VerifyAllRequest) -> schemas.VerifyAllResponse:
        families = default_families(req.k_values)
        family_reports = [_report_model(verify_family(f, req.max_n)) for f in families]
        bijection_response = verify_mapping(schemas.VerifyBijectionRequest(max_n=req.max_n))
        overall = all(r.overall_pass for r in family_reports) and bijection_response.overall_pass
        return schemas.VerifyAllResponse(
            families=family_reports, bijection=bijection_response, overall_pass=overall
        )

    return app
