"""HTTP service exposing the invariant computations.

The FastAPI app is the single entry point for compute, braid detection,
verification suites, and input validation; the command line client talks to
it either in-process (via an ASGI transport) or over the network.  Requests
and responses are pydantic models, and domain errors surface as a JSON body
``{"error": {"code": ..., "message": ...}}`` whose code the client maps to
its exit-code contract.
"""

from __future__ import annotations

import time
from typing import Literal

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse
from pydantic import BaseModel, Field

from . import __version__
from .complexes import DEFAULT_MAX_CROSSINGS
from .diagram import AnnularDiagram, TangleDiagram, input_digest, parse, validate
from .errors import IncompatibleInputError, SkhError
from .f2 import GradedDims
from .invariants import detect_braid, kh_total, khr_link, skh_annular, skh_tangle
from .verify import SUITES, run_suite

__all__ = ["create_app", "app"]

# HTTP status per domain error code; anything unknown becomes a 500.
_STATUS = {
    "parse-error": 400,
    "invalid-input": 400,
    "incompatible-invariant": 422,
    "size-cap": 413,
    "internal-check": 500,
}

InvariantName = Literal["skh-tangle", "skh-annular", "khr", "kh-total"]


class ComputeRequest(BaseModel):
    diagram: str = Field(description="Diagram in the text input format")
    invariant: InvariantName = "skh-tangle"
    max_crossings: int = Field(default=DEFAULT_MAX_CROSSINGS, ge=0)
    threads: int | None = Field(default=None, ge=1)


class GradingEntry(BaseModel):
    i: int
    j: int
    k: int | None = None
    dim: int


class OutputRecord(BaseModel):
    """One computed table: the shared shape for compute and detect-braid."""

    invariant: str
    input_digest: str
    gradings: list[GradingEntry]
    total: int
    verdicts: dict[str, bool] | None = None
    timing_ms: float


class VerifyRequest(BaseModel):
    suite: str
    seed: int = 0
    count: int = Field(default=20, ge=1)
    threads: int | None = Field(default=None, ge=1)


class VerifyResponse(BaseModel):
    suite: str
    seed: int
    runs: int
    passed: int
    ok: bool
    elapsed_ms: float
    failure: str | None = None


class ValidateRequest(BaseModel):
    diagram: str


class ValidateResponse(BaseModel):
    ok: bool
    annular: bool
    n_bottom: int
    n_top: int
    balanced: bool
    n_crossings: int
    input_digest: str


def _gradings(dims: GradedDims) -> list[GradingEntry]:
    out = []
    for key, dim in dims.items_sorted():
        if len(key) == 3:
            i, j, k = key
            out.append(GradingEntry(i=i, j=j, k=k, dim=dim))
        else:
            i, j = key
            out.append(GradingEntry(i=i, j=j, dim=dim))
    return out


def _compute_dims(
    d: TangleDiagram | AnnularDiagram, req: ComputeRequest
) -> GradedDims:
    annular = isinstance(d, AnnularDiagram)
    kw = {"max_crossings": req.max_crossings, "threads": req.threads}
    if req.invariant == "skh-tangle":
        if annular:
            raise IncompatibleInputError(
                "skh-tangle expects a tangle input without a closure directive"
            )
        return skh_tangle(d, **kw)
    if req.invariant == "khr":
        if annular:
            raise IncompatibleInputError("khr expects a (1,1)-tangle, not a closure")
        return khr_link(d, **kw)
    if req.invariant == "skh-annular":
        if not annular:
            raise IncompatibleInputError(
                "skh-annular needs an input with a 'closure annular' directive"
            )
        return skh_annular(d, **kw)
    if not annular:
        raise IncompatibleInputError(
            "kh-total needs an input with a 'closure annular' directive"
        )
    return kh_total(d, **kw)


def create_app() -> FastAPI:
    app = FastAPI(title="skh", version=__version__)

    @app.exception_handler(SkhError)
    async def _domain_error(_request: Request, exc: SkhError) -> JSONResponse:
        status = _STATUS.get(exc.code, 500)
        return JSONResponse(
            status_code=status,
            content={"error": {"code": exc.code, "message": str(exc)}},
        )

    @app.get("/health")
    async def health() -> dict:
        return {"status": "ok", "version": __version__}

    @app.post("/v1/compute", response_model=OutputRecord, response_model_exclude_none=True)
    async def compute(req: ComputeRequest) -> OutputRecord:
        t0 = time.perf_counter()
        d = parse(req.diagram)
        dims = _compute_dims(d, req)
        return OutputRecord(
            invariant=req.invariant,
            input_digest=input_digest(d),
            gradings=_gradings(dims),
            total=dims.total,
            timing_ms=(time.perf_counter() - t0) * 1000.0,
        )

    @app.post(
        "/v1/detect-braid", response_model=OutputRecord, response_model_exclude_none=True
    )
    async def detect(req: ComputeRequest) -> OutputRecord:
        t0 = time.perf_counter()
        d = parse(req.diagram)
        if isinstance(d, AnnularDiagram):
            raise IncompatibleInputError(
                "braid detection expects a tangle input without a closure directive"
            )
        verdict = detect_braid(d, max_crossings=req.max_crossings, threads=req.threads)
        return OutputRecord(
            invariant="skh-tangle",
            input_digest=input_digest(d),
            gradings=_gradings(verdict.dims),
            total=verdict.total,
            verdicts={"braid": verdict.is_braid},
            timing_ms=(time.perf_counter() - t0) * 1000.0,
        )

    @app.post("/v1/verify", response_model=VerifyResponse, response_model_exclude_none=True)
    async def verify(req: VerifyRequest) -> VerifyResponse:
        if req.suite not in SUITES:
            raise IncompatibleInputError(
                f"unknown suite {req.suite!r}; choose from {sorted(SUITES)}"
            )
        rep = run_suite(req.suite, seed=req.seed, count=req.count, threads=req.threads)
        return VerifyResponse(
            suite=rep.suite,
            seed=rep.seed,
            runs=rep.runs,
            passed=rep.passed,
            ok=rep.ok,
            elapsed_ms=rep.elapsed_ms,
            failure=rep.failure,
        )

    @app.post("/v1/validate", response_model=ValidateResponse)
    async def validate_input(req: ValidateRequest) -> ValidateResponse:
        d = parse(req.diagram)
        rep = validate(d)
        return ValidateResponse(
            ok=not rep.errors,
            annular=rep.annular,
            n_bottom=rep.n_bottom,
            n_top=rep.n_top,
            balanced=rep.balanced,
            n_crossings=rep.n_crossings,
            input_digest=input_digest(d),
        )

    return app


app = create_app()
