"""FastAPI service wrapping the numerical core.

Long-running deployments amortize the per-parameter eigenvalue tables and
constant caches across requests; the CLI talks to this app either
in-process or over HTTP.
"""

from __future__ import annotations

from typing import Optional, Union

from fastapi import FastAPI, HTTPException
from pydantic import BaseModel, Field

from . import api, identities
from .params import ConvergenceError

app = FastAPI(
    title="koshzeta",
    description=(
        "Deformed zeta functions on the eigenvalues of "
        "p sin(pi x) + x cos(pi x) = 0, with a registry of numerical "
        "verifiers for their modular relations."
    ),
    version="0.1.0",
)


class ComplexOut(BaseModel):
    re: str
    im: str


class EvalRequest(BaseModel):
    function_id: str
    p: str = "1"
    argument: str = "2"
    eps: float = Field(default=1e-12, gt=0)


class EvalResponse(BaseModel):
    function_id: str
    p: str
    argument: str
    value: ComplexOut
    method: Optional[str] = None
    trunc_terms: Optional[int] = None
    err_estimate: Optional[str] = None


class SideOut(BaseModel):
    label: str
    re: str
    im: str


class VerifyRequest(BaseModel):
    identity_id: str
    params: dict[str, Union[float, int, str]] = Field(default_factory=dict)
    profile: str = "desk"


class VerifyResponse(BaseModel):
    id: str
    params: dict
    sides: list[SideOut]
    max_abs_dev: str
    max_rel_dev: str
    tol: str
    passed: bool = Field(serialization_alias="pass", validation_alias="pass")
    diag: dict

    model_config = {"populate_by_name": True}


class SuiteRequest(BaseModel):
    profile: str = "desk"


class SuiteResponse(BaseModel):
    profile: str
    reports: list[VerifyResponse]
    total: int
    passed: int
    failed: int


class RootsResponse(BaseModel):
    p: str
    count: int
    tol: str
    lambdas: list[str]
    weights: list[str]
    residuals: list[str]


class IdentityInfo(BaseModel):
    id: str
    defaults: dict
    tol: str


def _wrap_errors(fn, *args, **kwargs):
    try:
        return fn(*args, **kwargs)
    except (KeyError, ValueError) as exc:
        raise HTTPException(status_code=422, detail=str(exc)) from exc
    except (ConvergenceError, ArithmeticError) as exc:
        raise HTTPException(status_code=500, detail=f"numeric failure: {exc}") from exc


@app.get("/health")
def health() -> dict:
    return {"status": "ok"}


@app.get("/identities", response_model=list[IdentityInfo])
def list_identities():
    return [
        IdentityInfo(
            id=iid,
            defaults=api.canonical(entry["defaults"]),
            tol=api.fmt_float(entry["tol"]),
        )
        for iid, entry in identities.REGISTRY.items()
    ]


@app.get("/roots", response_model=RootsResponse)
def roots(p: str = "1", count: int = 10, tol: float = 1e-12):
    payload = _wrap_errors(api.roots_payload, p, count, tol)
    return RootsResponse(
        p=payload["p"],
        count=payload["count"],
        tol=api.fmt_float(payload["tol"]),
        lambdas=[api.fmt_float(x) for x in payload["lambdas"]],
        weights=[api.fmt_float(x) for x in payload["weights"]],
        residuals=[api.fmt_float(x) for x in payload["residuals"]],
    )


@app.post("/eval", response_model=EvalResponse)
def eval_function(req: EvalRequest):
    value, meta = _wrap_errors(api.evaluate, req.function_id, req.p, req.argument, req.eps)
    return EvalResponse(
        function_id=req.function_id,
        p=req.p,
        argument=req.argument,
        value=ComplexOut(re=api.fmt_float(value.real), im=api.fmt_float(value.imag)),
        method=meta.get("method"),
        trunc_terms=meta.get("trunc_terms"),
        err_estimate=api.fmt_float(meta["err_estimate"]) if "err_estimate" in meta else None,
    )


@app.post("/verify", response_model=VerifyResponse, response_model_by_alias=True)
def verify(req: VerifyRequest):
    payload = _wrap_errors(api.verify_payload, req.identity_id, req.params, req.profile)
    return VerifyResponse(
        id=payload["id"],
        params=payload["params"],
        sides=[SideOut(**s) for s in payload["sides"]],
        max_abs_dev=payload["max_abs_dev"],
        max_rel_dev=payload["max_rel_dev"],
        tol=payload["tol"],
        passed=payload["pass"],
        diag=payload["diag"],
    )


@app.post("/suite", response_model=SuiteResponse, response_model_by_alias=True)
def suite(req: SuiteRequest):
    payload = _wrap_errors(api.suite_payload, req.profile)
    return SuiteResponse(
        profile=payload["profile"],
        reports=[
            VerifyResponse(
                id=pl["id"],
                params=pl["params"],
                sides=[SideOut(**s) for s in pl["sides"]],
                max_abs_dev=pl["max_abs_dev"],
                max_rel_dev=pl["max_rel_dev"],
                tol=pl["tol"],
                passed=pl["pass"],
                diag=pl["diag"],
            )
            for pl in payload["reports"]
        ],
        total=payload["total"],
        passed=payload["passed"],
        failed=payload["failed"],
    )
