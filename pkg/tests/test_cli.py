import json

from click.testing import CliRunner

from koshzeta.cli import main

runner = CliRunner()


def test_eval_classical_value():
    res = runner.invoke(main, ["eval", "zeta_p", "--p", "inf", "--s", "2"])
    assert res.exit_code == 0
    assert res.output.startswith("1.644934066848226")


def test_eval_unknown_function_exit_2():
    res = runner.invoke(main, ["eval", "zeta_q", "--p", "1", "--s", "2"])
    assert res.exit_code == 2


def test_eval_parse_error_exit_2():
    res = runner.invoke(main, ["eval", "zeta_p", "--p", "1", "--s", "2+*i"])
    assert res.exit_code == 2


def test_verify_pass_exit_0():
    res = runner.invoke(main, ["verify", "lerch-gen", "--p", "zero", "--m", "0"])
    assert res.exit_code == 0
    assert "[PASS] lerch-gen" in res.output


def test_verify_fail_exit_1():
    # an absurd tolerance forces the failure branch
    res = runner.invoke(
        main, ["verify", "dedekind", "--p", "1", "--alpha", "1.5", "--tol", "1e-30"]
    )
    assert res.exit_code == 1
    assert "[FAIL]" in res.output


def test_verify_unknown_identity_exit_2():
    res = runner.invoke(main, ["verify", "riemann-hypothesis"])
    assert res.exit_code == 2


def test_verify_json_schema_and_determinism():
    args = ["verify", "e2", "--p", "1", "--alpha", "2", "--format", "json"]
    a = runner.invoke(main, args)
    b = runner.invoke(main, args)
    assert a.exit_code == 0
    assert a.output == b.output
    body = json.loads(a.output)
    assert body["pass"] is True
    assert body["id"] == "e2"
    assert "diag" in body


def test_roots_csv():
    res = runner.invoke(main, ["roots", "--p", "1", "--count", "2",
                               "--format", "csv"])
    assert res.exit_code == 0
    lines = res.output.strip().splitlines()
    assert lines[0] == "j,lambda,weight,residual"
    lam1 = float(lines[1].split(",")[1])
    assert 0.5 < lam1 < 1.0


def test_table_sweep_csv():
    res = runner.invoke(
        main,
        ["table", "dedekind", "--sweep", "alpha=1.0:2.0:3", "--p", "1"],
    )
    assert res.exit_code == 0
    lines = res.output.strip().splitlines()
    header = lines[0].split(",")
    assert header[0] == "identity"
    assert "alpha" in header and "p" in header
    assert header[-1] == "pass"
    assert len(lines) == 4
    assert all(line.endswith(",1") for line in lines[1:])


def test_roots_nonconvergence_exit_3():
    res = runner.invoke(main, ["roots", "--p", "1", "--count", "2",
                               "--tol", "1e-30"])
    assert res.exit_code == 3
    assert "numeric failure" in res.output


def test_profile_env_var(monkeypatch):
    monkeypatch.setenv("KOSHZETA_PROFILE", "fast")
    res = runner.invoke(main, ["verify", "e2", "--p", "1", "--alpha", "2"])
    assert res.exit_code == 0


def test_eval_gen_bernoulli_index():
    res = runner.invoke(
        main, ["eval", "gen_bernoulli", "--p", "inf", "--x", "1", "--format", "json"]
    )
    assert res.exit_code == 0
    body = json.loads(res.output)
    assert abs(float(body["value"]["re"]) - 1.0 / 6.0) < 1e-12
