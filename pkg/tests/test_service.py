import json
import math

from fastapi.testclient import TestClient

from koshzeta.service import app

client = TestClient(app)


def test_health():
    assert client.get("/health").json() == {"status": "ok"}


def test_identities_listing():
    r = client.get("/identities")
    assert r.status_code == 200
    ids = [row["id"] for row in r.json()]
    assert "page220" in ids and len(ids) == 12


def test_roots_endpoint():
    r = client.get("/roots", params={"p": "1", "count": 3})
    assert r.status_code == 200
    body = r.json()
    lam = [float(x) for x in body["lambdas"]]
    assert 0.5 < lam[0] < 1.0 and 1.5 < lam[1] < 2.0
    assert all(0 < float(w) < 1 for w in body["weights"])


def test_eval_endpoint_classical_value():
    r = client.post("/eval", json={"function_id": "zeta_p", "p": "inf", "argument": "2"})
    assert r.status_code == 200
    body = r.json()
    assert abs(float(body["value"]["re"]) - math.pi**2 / 6) < 1e-12
    assert body["method"] == "closed_form"


def test_eval_complex_argument():
    r = client.post(
        "/eval", json={"function_id": "zeta_p", "p": "1", "argument": "2+3i"}
    )
    assert r.status_code == 200
    assert float(r.json()["value"]["im"]) != 0.0


def test_eval_unknown_function_is_422():
    r = client.post("/eval", json={"function_id": "zeta_q", "p": "1", "argument": "2"})
    assert r.status_code == 422


def test_verify_endpoint_schema():
    r = client.post(
        "/verify", json={"identity_id": "lerch-gen", "params": {"p": "zero", "m": 0}}
    )
    assert r.status_code == 200
    body = r.json()
    for key in ("id", "params", "sides", "max_abs_dev", "max_rel_dev",
                "tol", "pass", "diag"):
        assert key in body
    assert body["pass"] is True
    assert {"label", "re", "im"} <= set(body["sides"][0])


def test_verify_unknown_identity_is_422():
    r = client.post("/verify", json={"identity_id": "nope", "params": {}})
    assert r.status_code == 422


def test_verify_byte_determinism():
    payload = {"identity_id": "e2", "params": {"p": "1", "alpha": 2.0}}
    a = client.post("/verify", json=payload).content
    b = client.post("/verify", json=payload).content
    assert a == b


def test_suite_fast_profile():
    r = client.post("/suite", json={"profile": "fast"})
    assert r.status_code == 200
    body = r.json()
    assert body["failed"] == 0
    assert body["total"] == len(body["reports"])
    assert all(rep["pass"] for rep in body["reports"])


def test_verify_complex_param_over_wire():
    r = client.post(
        "/verify",
        json={"identity_id": "functional-eq", "params": {"p": "1", "s": "3+1i"}},
    )
    assert r.status_code == 200
    assert r.json()["pass"] is True


def test_numeric_failure_maps_to_500():
    r = client.get("/roots", params={"p": "1", "count": 2, "tol": 1e-30})
    assert r.status_code == 500
    assert "numeric failure" in r.json()["detail"]
