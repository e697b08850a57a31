"""Command-line client.

A thin shell over the service layer: every command builds the same request
payloads the HTTP API accepts and renders the canonical JSON/CSV/text
forms.  With ``--server URL`` the work is delegated to a running service
instance; otherwise everything executes in-process.

Exit codes: 0 all checks passed, 1 verification failure, 2 unknown id or
unparsable argument, 3 numeric non-convergence.
"""

from __future__ import annotations

import csv
import io
import json
import os
import sys

import click

from . import api
from .params import ConvergenceError

EXIT_VERIFY_FAILED = 1
EXIT_BAD_REQUEST = 2
EXIT_NUMERIC = 3


def _emit(text: str, output: str | None):
    if output:
        with open(output, "w") as fh:
            fh.write(text)
    else:
        click.echo(text, nl=False)


def _json_dump(payload) -> str:
    return json.dumps(payload, indent=2) + "\n"


def _csv_text(rows) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerows(rows)
    return buf.getvalue()


class Remote:
    """HTTP delegation used when --server is given."""

    def __init__(self, base: str):
        import httpx

        self.base = base.rstrip("/")
        self.client = httpx.Client(timeout=600.0)

    def verify(self, identity_id, params, profile):
        r = self.client.post(
            f"{self.base}/verify",
            json={"identity_id": identity_id, "params": params, "profile": profile},
        )
        r.raise_for_status()
        return r.json()

    def suite(self, profile):
        r = self.client.post(f"{self.base}/suite", json={"profile": profile})
        r.raise_for_status()
        return r.json()

    def eval(self, function_id, p, argument, eps):
        r = self.client.post(
            f"{self.base}/eval",
            json={"function_id": function_id, "p": p, "argument": argument, "eps": eps},
        )
        r.raise_for_status()
        return r.json()

    def roots(self, p, count, tol):
        r = self.client.get(
            f"{self.base}/roots", params={"p": p, "count": count, "tol": tol}
        )
        r.raise_for_status()
        return r.json()


@click.group()
@click.option("--server", default=None, help="Base URL of a running service; "
              "omit to compute in-process.")
@click.pass_context
def main(ctx, server):
    """Evaluate the deformed zeta family and verify its modular relations."""
    ctx.ensure_object(dict)
    ctx.obj["remote"] = Remote(server) if server else None


def _default_profile() -> str:
    return os.environ.get("KOSHZETA_PROFILE", "desk")


@main.command()
@click.option("--p", "p_text", default="1", help="parameter: decimal, 'zero' or 'inf'")
@click.option("--count", default=10, type=int)
@click.option("--tol", default=1e-12, type=float)
@click.option("--format", "fmt", default="text",
              type=click.Choice(["json", "csv", "text"]))
@click.option("--output", default=None, type=click.Path())
@click.pass_context
def roots(ctx, p_text, count, tol, fmt, output):
    """First eigenvalues and weights of the characteristic equation."""
    try:
        remote = ctx.obj.get("remote")
        if remote:
            payload = remote.roots(p_text, count, tol)
        else:
            raw = api.roots_payload(p_text, count, tol)
            payload = {
                "p": raw["p"],
                "count": raw["count"],
                "tol": api.fmt_float(raw["tol"]),
                "lambdas": [api.fmt_float(x) for x in raw["lambdas"]],
                "weights": [api.fmt_float(x) for x in raw["weights"]],
                "residuals": [api.fmt_float(x) for x in raw["residuals"]],
            }
    except (KeyError, ValueError) as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(EXIT_BAD_REQUEST)
    except (ConvergenceError, ArithmeticError) as exc:
        click.echo(f"numeric failure: {exc}", err=True)
        sys.exit(EXIT_NUMERIC)
    if fmt == "json":
        _emit(_json_dump(payload), output)
    elif fmt == "csv":
        rows = [["j", "lambda", "weight", "residual"]]
        for j, (l, w, r) in enumerate(
            zip(payload["lambdas"], payload["weights"], payload["residuals"]), 1
        ):
            rows.append([str(j), l, w, r])
        _emit(_csv_text(rows), output)
    else:
        lines = [f"eigenvalues for p={payload['p']} (tol={payload['tol']})"]
        for j, (l, w) in enumerate(zip(payload["lambdas"], payload["weights"]), 1):
            lines.append(f"  lambda_{j} = {l}   w_{j} = {w}")
        _emit("\n".join(lines) + "\n", output)


@main.command("eval")
@click.argument("function_id")
@click.option("--p", "p_text", default="1")
@click.option("--s", "argument", default=None, help="complex argument as 'a+bi'")
@click.option("--x", "argument_x", default=None, help="alias for a real argument")
@click.option("--eps", default=1e-12, type=float)
@click.option("--format", "fmt", default="text",
              type=click.Choice(["json", "text"]))
@click.pass_context
def eval_cmd(ctx, function_id, p_text, argument, argument_x, eps, fmt):
    """Evaluate one function (zeta_p, eta_p, Xi_p, sigma_p, psi_1p, ...)."""
    arg = argument if argument is not None else argument_x
    if arg is None:
        arg = "2"
    try:
        remote = ctx.obj.get("remote")
        if remote:
            payload = remote.eval(function_id, p_text, arg, eps)
        else:
            value, meta = api.evaluate(function_id, p_text, arg, eps)
            payload = {
                "function_id": function_id,
                "p": p_text,
                "argument": arg,
                "value": {"re": api.fmt_float(value.real),
                          "im": api.fmt_float(value.imag)},
                "method": meta.get("method"),
                "trunc_terms": meta.get("trunc_terms"),
                "err_estimate": api.fmt_float(meta["err_estimate"])
                if "err_estimate" in meta else None,
            }
    except (KeyError, ValueError) as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(EXIT_BAD_REQUEST)
    except (ConvergenceError, ArithmeticError) as exc:
        click.echo(f"numeric failure: {exc}", err=True)
        sys.exit(EXIT_NUMERIC)
    if fmt == "json":
        _emit(_json_dump(payload), None)
    else:
        v = payload["value"]
        text = v["re"] if float(v["im"]) == 0.0 else f"{v['re']} + {v['im']}i"
        if payload.get("method"):
            text += f"   [{payload['method']}]"
        click.echo(text)


_PARAM_OPTS = ["p", "m", "alpha", "a", "s", "k", "tol"]


@main.command()
@click.argument("identity_id")
@click.option("--p", "p_text", default=None)
@click.option("--m", default=None, type=int)
@click.option("--alpha", default=None, type=float)
@click.option("--a", default=None, type=float)
@click.option("--s", default=None, type=str)
@click.option("--k", default=None, type=int)
@click.option("--tol", default=None, type=float)
@click.option("--profile", default=None)
@click.option("--format", "fmt", default="text",
              type=click.Choice(["json", "csv", "text"]))
@click.option("--output", default=None, type=click.Path())
@click.pass_context
def verify(ctx, identity_id, p_text, m, alpha, a, s, k, tol, profile, fmt, output):
    """Verify one identity; exit code 0 iff it passes."""
    profile = profile or _default_profile()
    params: dict = {}
    if p_text is not None:
        params["p"] = p_text
    for name, val in (("m", m), ("alpha", alpha), ("a", a), ("k", k), ("tol", tol)):
        if val is not None:
            params[name] = val
    if s is not None:
        params["s"] = api.parse_complex(s)
    try:
        remote = ctx.obj.get("remote")
        if remote:
            payload = remote.verify(identity_id, _wire_params(params), profile)
        else:
            payload = api.verify_payload(identity_id, params, profile)
    except (KeyError, ValueError) as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(EXIT_BAD_REQUEST)
    except (ConvergenceError, ArithmeticError) as exc:
        click.echo(f"numeric failure: {exc}", err=True)
        sys.exit(EXIT_NUMERIC)
    _render_reports([payload], fmt, output)
    sys.exit(0 if payload["pass"] else EXIT_VERIFY_FAILED)


def _wire_params(params: dict) -> dict:
    return {k: (str(v) if isinstance(v, complex) else v) for k, v in params.items()}


@main.command()
@click.option("--profile", default=None)
@click.option("--format", "fmt", default="text",
              type=click.Choice(["json", "csv", "text"]))
@click.option("--output", default=None, type=click.Path())
@click.pass_context
def suite(ctx, profile, fmt, output):
    """Run every registered identity on the fixed desk-scale grid."""
    profile = profile or _default_profile()
    try:
        remote = ctx.obj.get("remote")
        payload = remote.suite(profile) if remote else api.suite_payload(profile)
    except (ConvergenceError, ArithmeticError) as exc:
        click.echo(f"numeric failure: {exc}", err=True)
        sys.exit(EXIT_NUMERIC)
    _render_reports(payload["reports"], fmt, output)
    click.echo(
        f"suite[{payload['profile']}]: {payload['passed']}/{payload['total']} passed, "
        f"{payload['failed']} failed"
    )
    sys.exit(0 if payload["failed"] == 0 else EXIT_VERIFY_FAILED)


@main.command()
@click.argument("identity_id")
@click.option("--sweep", required=True,
              help="param=start:stop:count, e.g. alpha=0.5:2.0:4")
@click.option("--p", "p_text", default=None)
@click.option("--profile", default=None)
@click.option("--output", default=None, type=click.Path())
@click.pass_context
def table(ctx, identity_id, sweep, p_text, profile, output):
    """Sweep one parameter of an identity and emit a CSV table."""
    profile = profile or _default_profile()
    try:
        name, spec = sweep.split("=", 1)
        start, stop, count = spec.split(":")
        start, stop, count = float(start), float(stop), int(count)
        if count < 1:
            raise ValueError("sweep count must be >= 1")
        values = [
            start + (stop - start) * i / max(count - 1, 1) for i in range(count)
        ]
        payloads = []
        for v in values:
            params = {name: v}
            if p_text is not None:
                params["p"] = p_text
            remote = ctx.obj.get("remote")
            if remote:
                payloads.append(remote.verify(identity_id, params, profile))
            else:
                payloads.append(api.verify_payload(identity_id, params, profile))
    except (KeyError, ValueError) as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(EXIT_BAD_REQUEST)
    except (ConvergenceError, ArithmeticError) as exc:
        click.echo(f"numeric failure: {exc}", err=True)
        sys.exit(EXIT_NUMERIC)
    _emit(_csv_text(api.sweep_csv_rows(payloads)), output)
    sys.exit(0 if all(pl["pass"] for pl in payloads) else EXIT_VERIFY_FAILED)


@main.command()
@click.option("--host", default="127.0.0.1")
@click.option("--port", default=8000, type=int)
def serve(host, port):
    """Run the HTTP service."""
    import uvicorn

    uvicorn.run("koshzeta.service:app", host=host, port=port)


def _render_reports(payloads, fmt, output):
    if fmt == "json":
        body = payloads[0] if len(payloads) == 1 else payloads
        _emit(_json_dump(body), output)
    elif fmt == "csv":
        _emit(_csv_text(api.report_csv_rows(payloads)), output)
    else:
        lines = []
        for pl in payloads:
            status = "PASS" if pl["pass"] else "FAIL"
            params = " ".join(f"{k}={v}" for k, v in pl["params"].items())
            lines.append(f"[{status}] {pl['id']} ({params})")
            for side in pl["sides"]:
                val = side["re"] if float(side["im"]) == 0.0 else (
                    f"{side['re']} + {side['im']}i")
                lines.append(f"    {side['label']:<28} {val}")
            lines.append(
                f"    max_abs_dev={pl['max_abs_dev']} max_rel_dev={pl['max_rel_dev']}"
                f" tol={pl['tol']}"
            )
        _emit("\n".join(lines) + "\n", output)


if __name__ == "__main__":
    main()
