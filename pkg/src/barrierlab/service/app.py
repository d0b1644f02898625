"""FastAPI application exposing the scans, tables, and verification suites.

The factor sieve is the one expensive object, so it is cached between
requests and only ever grown.  Run with:

    uvicorn barrierlab.service.app:app
"""

from __future__ import annotations

import threading

from fastapi import FastAPI, HTTPException

from .. import __version__
from .. import barriers as bar
from .. import density as dens
from .. import gaps as gp
from .. import tables
from .. import verify as ver
from ..arith import BudgetError, FactorSieve, build_sieve, parse_eps
from . import schemas

app = FastAPI(title="barrierlab", version=__version__)

_SIEVE_CAP = 2_000_000
_sieve_lock = threading.Lock()
_sieve: FactorSieve | None = None


def _get_sieve(limit: int) -> FactorSieve:
    global _sieve
    limit = max(limit, 2)
    if limit > _SIEVE_CAP:
        raise HTTPException(status_code=400, detail=f"n beyond the service sieve cap {_SIEVE_CAP}")
    with _sieve_lock:
        if _sieve is None or _sieve.limit < limit:
            _sieve = build_sieve(max(limit, 100_000))
        return _sieve


def _core(fn, *args, **kwargs):
    try:
        return fn(*args, **kwargs)
    except (ValueError, OverflowError, BudgetError) as exc:
        raise HTTPException(status_code=400, detail=str(exc))


def _meta(command: str, eps: str | None, range_text: str | None) -> schemas.Meta:
    return schemas.Meta(command=command, eps=eps, range=range_text, version=__version__)


@app.get("/health", response_model=schemas.HealthResponse)
def health() -> schemas.HealthResponse:
    return schemas.HealthResponse(status="ok", version=__version__)


@app.post("/barriers/scan", response_model=schemas.BarrierScanResponse)
def barriers_scan(req: schemas.BarrierScanRequest) -> schemas.BarrierScanResponse:
    eps = parse_eps(req.eps)
    verdicts = _core(bar.scan_barriers, req.lo, req.hi, eps, threads=req.threads)
    rows = [
        schemas.BarrierRow(n=v.n, is_barrier=v.is_barrier, witness=v.witness, method=v.method)
        for v in verdicts
    ]
    return schemas.BarrierScanResponse(
        meta=_meta("barriers", req.eps, f"{req.lo}..{req.hi}"), rows=rows
    )


@app.post("/barriers/check", response_model=schemas.BarrierRow)
def barriers_check(req: schemas.CheckRequest) -> schemas.BarrierRow:
    eps = parse_eps(req.eps)
    sieve = _get_sieve(req.n - 1)
    fn = bar.is_barrier_windowed if req.method == "windowed" else bar.is_barrier_naive
    verdict = _core(fn, req.n, eps, sieve)
    return schemas.BarrierRow(
        n=verdict.n, is_barrier=verdict.is_barrier,
        witness=verdict.witness, method=verdict.method,
    )


@app.post("/barriers/bound", response_model=schemas.BoundResponse)
def barriers_bound(req: schemas.BoundRequest) -> schemas.BoundResponse:
    eps = parse_eps(req.eps)
    bound = _core(bar.guaranteed_barrier_bound, eps)
    return schemas.BoundResponse(eps=req.eps, t=bound.t, bound=bound.bound)


@app.post("/barriers/family", response_model=schemas.FamilyResponse)
def barriers_family(req: schemas.FamilyRequest) -> schemas.FamilyResponse:
    eps = parse_eps(req.eps)
    n, witness = _core(
        bar.non_barrier_family, eps, req.s, req.k, req.prime_indices, req.exponents
    )
    return schemas.FamilyResponse(n=n, witness=witness)


@app.post("/density/table", response_model=schemas.DensityResponse)
def density_table(req: schemas.DensityRequest) -> schemas.DensityResponse:
    eps = parse_eps(req.eps)
    rows = _core(dens.density_table, req.r_max, eps, t=req.t, threads=req.threads)
    models = [
        schemas.DensityRowModel(
            r=row.r, t=row.t, count=row.count, interval_len=row.interval_len,
            ratio=tables.ratio_text(row.count, row.interval_len),
        )
        for row in rows
    ]
    return schemas.DensityResponse(meta=_meta("density", req.eps, f"1..{req.r_max}"), rows=models)


@app.post("/gaps/scan", response_model=schemas.GapScanResponse)
def gaps_scan(req: schemas.GapScanRequest) -> schemas.GapScanResponse:
    records = _core(lambda: list(gp.scan_gap_stats(req.limit)))
    rows = [
        schemas.GapRowModel(n=r.n, gap=r.gap, argmax_m=r.argmax_m, lemma_bound=r.lemma_bound)
        for r in records
    ]
    return schemas.GapScanResponse(meta=_meta("gaps", None, f"2..{req.limit}"), rows=rows)


@app.post("/gaps/records", response_model=schemas.GapScanResponse)
def gaps_records(req: schemas.GapScanRequest) -> schemas.GapScanResponse:
    records = _core(gp.record_points, req.limit)
    rows = [
        schemas.GapRowModel(n=r.n, gap=r.gap, argmax_m=r.argmax_m, lemma_bound=r.lemma_bound)
        for r in records
    ]
    return schemas.GapScanResponse(meta=_meta("records", None, f"2..{req.limit}"), rows=rows)


@app.post("/gaps/classify", response_model=schemas.ClassifyResponse)
def gaps_classify(req: schemas.ClassifyRequest) -> schemas.ClassifyResponse:
    sieve = _get_sieve(req.n - 1)
    s = _core(gp.classify_subsequence, req.n, sieve)
    return schemas.ClassifyResponse(n=req.n, s=s)


@app.post("/gaps/subsequence", response_model=schemas.SubseqResponse)
def gaps_subsequence(req: schemas.SubseqRequest) -> schemas.SubseqResponse:
    values = _core(gp.gen_subsequence, req.s, req.count)
    return schemas.SubseqResponse(s=req.s, values=values)


@app.post("/verify", response_model=schemas.VerifyResponse)
def run_verify(req: schemas.VerifyRequest) -> schemas.VerifyResponse:
    eps = parse_eps(req.eps) if req.eps else None
    results = _core(ver.run_suites, req.suites, eps=eps, limit=req.limit)
    checks = [
        schemas.CheckRowModel(suite=r.suite, check=r.check, passed=r.passed, detail=r.detail)
        for r in results
    ]
    return schemas.VerifyResponse(passed=all(r.passed for r in results), checks=checks)
