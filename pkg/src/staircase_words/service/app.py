"""FastAPI service wrapping the counting and verification core."""
from __future__ import annotations

from fractions import Fraction

from fastapi import FastAPI, HTTPException, Query
from fastapi.responses import PlainTextResponse

from .. import __version__
from ..algebra import RationalFunction, minimal_recurrence
from ..families import Family, FamilySpec
from ..oracle import DEFAULT_BUDGET, OracleBudgetError, enumerate_count, refined_oracle
from ..transfer import transfer_count, transfer_gf, transfer_refined
from ..verify import SUITE_NAMES, UnknownReferenceError, reference_gf, run_suite
from .schemas import (
    ConfigEcho,
    CountResponse,
    GFPayload,
    GFResponse,
    HealthResponse,
    PrintedCheck,
    RecurrenceResponse,
    ReportModel,
    TableResponse,
    VerifyRequest,
    VerifyResponse,
)

TWO_ROW_ORDER = ("grid", "rt", "kg")


def _family(value: str) -> Family:
    try:
        return Family(value)
    except ValueError:
        raise HTTPException(
            status_code=400,
            detail=f"unknown family {value!r}; choose from "
            + ", ".join(f.value for f in Family),
        )


def _state_key(state) -> str:
    if isinstance(state, tuple):
        return ",".join(str(v) for v in state)
    return str(state)


def _gf_payload(rf: RationalFunction) -> GFPayload:
    data = rf.to_json_dict()
    return GFPayload(
        numerator=data["numerator"],
        denominator=data["denominator"],
        string=rf.to_string(),
    )


def create_app() -> FastAPI:
    app = FastAPI(
        title="staircase-words",
        version=__version__,
        description="Exact staircase-word counting, generating functions, "
        "and verification suites over grid-like graph families.",
    )

    @app.get("/health", response_model=HealthResponse)
    def health() -> HealthResponse:
        return HealthResponse(status="ok", version=__version__)

    @app.get("/count", response_model=CountResponse, response_model_exclude_none=True)
    def count(
        family: str,
        k: int = Query(ge=1),
        n: int = Query(ge=1),
        method: str = "transfer",
        refined: bool = False,
        budget: int = DEFAULT_BUDGET,
    ) -> CountResponse:
        fam = _family(family)
        config = ConfigEcho(oracle_budget=budget)
        try:
            spec = FamilySpec(fam, n)
            if method == "oracle":
                if refined:
                    table = refined_oracle(spec, k, budget=budget)
                    return CountResponse(
                        family=fam.value, k=k, n=n, method=method,
                        refined={_state_key(s): v for s, v in sorted(table.entries.items())},
                        config=config,
                    )
                value = enumerate_count(spec, k, budget=budget)
            elif method == "transfer":
                if refined:
                    table = transfer_refined(fam, k, n)
                    return CountResponse(
                        family=fam.value, k=k, n=n, method=method,
                        refined={_state_key(s): v for s, v in sorted(table.entries.items())},
                        config=config,
                    )
                value = transfer_count(fam, k, n, allow_short_cycle=False)
            else:
                raise HTTPException(
                    status_code=400, detail=f"unknown method {method!r}; use oracle or transfer"
                )
        except OracleBudgetError as err:
            raise HTTPException(status_code=400, detail=f"{err}; retry with method=transfer")
        except ValueError as err:
            raise HTTPException(status_code=400, detail=str(err))
        return CountResponse(family=fam.value, k=k, n=n, method=method, count=value, config=config)

    @app.get("/table", response_model=TableResponse)
    def table(k: int = Query(ge=1), n_max: int = Query(ge=1)) -> TableResponse:
        rows = {
            name: [transfer_count(Family(name), k, n) for n in range(1, n_max + 1)]
            for name in TWO_ROW_ORDER
        }
        return TableResponse(k=k, n_max=n_max, rows=rows, config=ConfigEcho())

    @app.get("/gf", response_model=GFResponse, response_model_exclude_none=True)
    def gf(family: str, k: int = Query(ge=1), check_printed: bool = False) -> GFResponse:
        fam = _family(family)
        try:
            derived = transfer_gf(fam, k)
        except ValueError as err:
            raise HTTPException(status_code=400, detail=str(err))
        check = None
        if check_printed:
            try:
                audit = reference_gf(fam, k)
            except UnknownReferenceError as err:
                raise HTTPException(status_code=400, detail=str(err))
            corrected = None if audit.status == "verified" else _gf_payload(audit.derived)
            check = PrintedCheck(
                status=audit.status,
                printed=_gf_payload(audit.entry.as_printed),
                corrected=corrected,
                note=audit.entry.note,
            )
        return GFResponse(
            family=fam.value, k=k, gf=_gf_payload(derived),
            printed_check=check, config=ConfigEcho(),
        )

    @app.get("/recurrence", response_model=RecurrenceResponse)
    def recurrence(family: str, k: int = Query(ge=1), terms: int = Query(default=25, ge=3)) -> RecurrenceResponse:
        fam = _family(family)
        counts = [
            transfer_count(fam, k, n, allow_short_cycle=(fam is Family.CYCLE))
            for n in range(1, terms + 1)
        ]
        rec = minimal_recurrence(counts, max_order=(terms - 1) // 2)
        if rec is None:
            raise HTTPException(
                status_code=400,
                detail=f"no linear recurrence of order <= {(terms - 1) // 2} "
                f"fits the first {terms} counts",
            )
        coeffs = [c if isinstance(c, int) else str(c) for c in rec.coefficients]
        return RecurrenceResponse(
            family=fam.value, k=k, order=rec.order, coefficients=coeffs,
            initial_terms=counts[: rec.order], terms_used=terms, config=ConfigEcho(),
        )

    @app.post("/verify", response_model=VerifyResponse, response_model_by_alias=True)
    def verify(request: VerifyRequest) -> VerifyResponse:
        if request.suite not in SUITE_NAMES:
            raise HTTPException(
                status_code=400,
                detail=f"unknown suite {request.suite!r}; choose from " + ", ".join(SUITE_NAMES),
            )
        try:
            xs = [Fraction(x) for x in request.x] if request.x else None
            tol = Fraction(request.tolerance)
        except (ValueError, ZeroDivisionError) as err:
            raise HTTPException(status_code=400, detail=f"bad numeric argument: {err}")
        try:
            result = run_suite(
                request.suite,
                ks=request.k,
                xs=xs,
                n_max=request.n_max,
                series_order=request.series_order,
                tol=tol,
                precision=request.precision,
            )
        except ValueError as err:
            raise HTTPException(status_code=400, detail=str(err))
        config = ConfigEcho(
            precision=request.precision,
            series_order=request.series_order,
            tolerance=request.tolerance,
        )
        reports = [ReportModel(**r.to_json_dict()) for r in result.reports]
        return VerifyResponse(suite=result.suite, passed=result.passed, reports=reports, config=config)

    @app.get("/bfile", response_class=PlainTextResponse)
    def bfile(family: str, k: int = Query(ge=1), n_max: int = Query(ge=1)) -> str:
        fam = _family(family)
        try:
            lines = [
                f"{n} {transfer_count(fam, k, n)}\n" for n in range(1, n_max + 1)
            ]
        except ValueError as err:
            raise HTTPException(status_code=400, detail=str(err))
        return "".join(lines)

    return app
