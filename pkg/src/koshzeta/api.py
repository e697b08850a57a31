"""Shared dispatch layer for the service and the CLI.

Holds the evaluatable-function registry, argument parsing for the wire
formats ("a+bi" complex literals, the p-parameter literals), and the
byte-deterministic serialization used by every output channel: fixed key
order, floats printed with 17 significant digits.
"""

from __future__ import annotations

import re
from typing import Any, Callable

from . import eigen, identities, kernels, special, zeta
from .params import KoshParam

_COMPLEX_RE = re.compile(
    r"^\s*(?P<re>[+-]?(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)?"
    r"\s*(?P<im>[+-]\s*(?:\d+\.?\d*|\.\d+)?(?:[eE][+-]?\d+)?)?\s*(?P<i>[ij])?\s*$"
)


def parse_complex(text: str) -> complex:
    """Parse 'a', 'a+bi', 'bi', with either i or j as the imaginary unit."""
    t = str(text).strip().replace(" ", "")
    if not t:
        raise ValueError("empty complex literal")
    try:
        return complex(float(t))
    except ValueError:
        pass
    tt = t.replace("i", "j") if "i" in t and "j" not in t else t
    try:
        return complex(tt)
    except ValueError as exc:
        raise ValueError(f"cannot parse complex literal {text!r}") from exc


def fmt_float(x: float) -> str:
    """17-significant-digit decimal; canonical across runs and platforms."""
    return format(float(x), ".17g")


def canonical(obj: Any) -> Any:
    """Recursively convert to JSON-ready values with deterministic floats."""
    if isinstance(obj, dict):
        return {str(k): canonical(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [canonical(v) for v in obj]
    if isinstance(obj, complex):
        return {"re": fmt_float(obj.real), "im": fmt_float(obj.imag)}
    if isinstance(obj, float):
        return fmt_float(obj)
    if isinstance(obj, (int, str, bool)) or obj is None:
        return obj
    return str(obj)


# ---------------------------------------------------------------------------
# Function registry for `eval`
# ---------------------------------------------------------------------------

def _ev_zeta_p(p, s, eps):
    ev = zeta.zeta_p(p, s, eps)
    return ev.value, {"method": ev.method, "trunc_terms": ev.trunc_terms,
                      "err_estimate": ev.err_estimate}


def _ev_eta_p(p, s, eps):
    ev = zeta.eta_p(p, s, eps)
    return ev.value, {"method": ev.method, "trunc_terms": ev.trunc_terms,
                      "err_estimate": ev.err_estimate}


FUNCTIONS: dict[str, Callable] = {
    "zeta_p": _ev_zeta_p,
    "eta_p": _ev_eta_p,
    "omega_p": lambda p, s, eps: (zeta.omega_p(p, s, eps), {}),
    "xi_p": lambda p, s, eps: (zeta.xi_p(p, s, eps), {}),
    "Xi_p": lambda p, s, eps: (complex(zeta.Xi_p(p, s.real, eps)), {}),
    "zeta": lambda p, s, eps: (zeta.classical_zeta(s, eps), {}),
    "xi": lambda p, s, eps: (zeta.classical_xi(s, eps), {}),
    "Xi": lambda p, s, eps: (complex(zeta.classical_Xi(s.real, eps)), {}),
    "sigma": lambda p, s, eps: (complex(kernels.sigma_ratio(p, s)), {}),
    "sigma_p": lambda p, s, eps: (complex(kernels.sigma_p(p, s, eps)), {}),
    "inv_sigma_exp": lambda p, s, eps: (
        complex(kernels.inv_sigma_exp(p, s.real)), {}),
    "euler_const_1": lambda p, s, eps: (complex(special.euler_const_1(p, max(eps, 1e-12))), {}),
    "euler_const_2": lambda p, s, eps: (complex(special.euler_const_2(p, max(eps, 1e-12))), {}),
    "gen_bernoulli": lambda p, s, eps: (
        complex(special.gen_bernoulli(p, int(round(s.real)), max(eps, 1e-12))), {}),
    "psi_1p": lambda p, s, eps: (complex(special.psi_1p(p, s.real, max(eps, 1e-12))), {}),
    "psi_2p": lambda p, s, eps: (complex(special.psi_2p(p, s.real, max(eps, 1e-12))), {}),
    "phi_1p": lambda p, s, eps: (complex(special.phi_1p(p, s.real, max(eps, 1e-12))), {}),
    "phi_2p": lambda p, s, eps: (complex(special.phi_2p(p, s.real, max(eps, 1e-12))), {}),
    "capital_phi": lambda p, s, eps: (
        complex(special.capital_phi(p, s.real, max(eps, 1e-12))), {}),
    "tau": lambda p, s, eps: (complex(special.tau(s.real)), {}),
    "omega": lambda p, s, eps: (complex(special.omega_fn(s.real)), {}),
    "phi": lambda p, s, eps: (complex(special.classical_phi(s.real)), {}),
    "psi": lambda p, s, eps: (complex(special.classical_psi(s.real)), {}),
    "F_real": lambda p, s, eps: (
        complex(identities.F_p_real(p, s.real, max(eps, 1e-10))), {}),
}


def evaluate(function_id: str, p_text: str, argument: str, eps: float = 1e-12):
    """Evaluate one registered function; returns (complex value, metadata)."""
    if function_id not in FUNCTIONS:
        raise KeyError(f"unknown function id {function_id!r}")
    p = KoshParam.parse(p_text)
    s = parse_complex(argument)
    return FUNCTIONS[function_id](p, s, eps)


def roots_payload(p_text: str, count: int, tol: float = 1e-12) -> dict:
    p = KoshParam.parse(p_text)
    table = eigen.build_table(p, count, tol)
    return {
        "p": p.label(),
        "count": count,
        "tol": tol,
        "lambdas": list(table.lambdas),
        "weights": list(table.weights),
        "residuals": list(table.residuals),
    }


def report_payload(r: identities.VerifyReport) -> dict:
    """The stable JSON schema for a verification report."""
    return {
        "id": r.identity_id,
        "params": canonical(r.params),
        "sides": [
            {"label": lbl, "re": fmt_float(v.real), "im": fmt_float(v.imag)}
            for lbl, v in r.sides
        ],
        "max_abs_dev": fmt_float(r.max_abs_dev),
        "max_rel_dev": fmt_float(r.max_rel_dev),
        "tol": fmt_float(r.tol),
        "pass": bool(r.passed),
        "diag": canonical(r.diagnostics),
    }


def verify_payload(identity_id: str, params: dict, profile: str = "desk") -> dict:
    params = dict(params)
    if isinstance(params.get("s"), str):
        params["s"] = parse_complex(params["s"])
    report = identities.run_verifier(identity_id, params, profile)
    return report_payload(report)


def suite_payload(profile: str = "desk") -> dict:
    reports = identities.run_suite(profile)
    payloads = [report_payload(r) for r in reports]
    passed = sum(1 for r in reports if r.passed)
    return {
        "profile": profile,
        "reports": payloads,
        "total": len(reports),
        "passed": passed,
        "failed": len(reports) - passed,
    }


def sweep_csv_rows(payloads: list[dict]) -> list[list[str]]:
    """CSV for a single-identity sweep: one column per parameter and side."""
    if not payloads:
        return [["identity"]]
    param_names = sorted({k for pl in payloads for k in pl["params"]})
    side_labels = [s["label"] for s in payloads[0]["sides"]]
    header = (
        ["identity"]
        + param_names
        + side_labels
        + ["max_abs_dev", "max_rel_dev", "tol", "pass"]
    )
    rows = [header]
    for pl in payloads:
        sides = {s["label"]: s for s in pl["sides"]}
        row = [pl["id"]]
        row += [str(pl["params"].get(k, "")) for k in param_names]
        for lbl in side_labels:
            s = sides[lbl]
            row.append(
                s["re"] if float(s["im"]) == 0.0 else f"{s['re']}+{s['im']}i"
            )
        row += [pl["max_abs_dev"], pl["max_rel_dev"], pl["tol"],
                "1" if pl["pass"] else "0"]
        rows.append(row)
    return rows


def report_csv_rows(payloads: list[dict]) -> list[list[str]]:
    """Flatten reports for CSV output: identity, params, sides, deviations."""
    rows = [["identity", "params", "side_labels", "side_values",
             "max_abs_dev", "max_rel_dev", "tol", "pass"]]
    for pl in payloads:
        params = ";".join(f"{k}={v}" for k, v in pl["params"].items())
        labels = ";".join(s["label"] for s in pl["sides"])
        values = ";".join(
            s["re"] if float(s["im"]) == 0.0 else f"{s['re']}+{s['im']}i"
            for s in pl["sides"]
        )
        rows.append([
            pl["id"], params, labels, values,
            pl["max_abs_dev"], pl["max_rel_dev"], pl["tol"],
            "1" if pl["pass"] else "0",
        ])
    return rows
