import json

import pytest

from zetalab.cli import CommandRequest, main, parse_request, run


def run_cli(capsys, *argv):
    status = main(list(argv))
    captured = capsys.readouterr()
    return status, captured.out.strip(), captured.err


def test_zeta_neg(capsys):
    assert run_cli(capsys, "zeta", "neg", "1")[:2] == (0, "-1/12")


def test_mzv_reduce_json_is_compact(capsys):
    status, out, _ = run_cli(capsys, "mzv", "reduce", "-m", "0,0", "--json")
    assert status == 0
    assert out == ('{"terms":[{"shift":2,"coeff":"1/2"},{"shift":1,"coeff":"1"},'
                   '{"shift":0,"coeff":"1/3"}]}')


def test_mzv_reduce_table(capsys):
    assert run_cli(capsys, "mzv", "reduce", "-m", "0")[1] == "-zeta(s1-1) - 1/2*zeta(s1)"


def test_mzv_eval_exact_and_numeric(capsys):
    assert run_cli(capsys, "mzv", "eval", "-m", "0,0", "--m1", "0")[1] == "-1/4"
    status, out, _ = run_cli(capsys, "mzv", "eval", "-m", "0,0", "--s1", "0", "--json")
    assert status == 0
    assert json.loads(out)["value"]["re"] == pytest.approx(-0.25, abs=1e-9)


def test_mzv_eval_pole_exit_code(capsys):
    status, _, err = run_cli(capsys, "mzv", "eval", "-m", "0", "--s1", "2")
    assert status == 3
    assert "PoleHit" in err


def test_bernoulli_commands(capsys):
    assert run_cli(capsys, "bernoulli", "num", "12")[1] == "-691/2730"
    assert run_cli(capsys, "bernoulli", "poly", "2")[1] == "a^2 - a + 1/6"
    status, out, _ = run_cli(capsys, "hurwitz", "poly", "0", "--shifted", "--json")
    assert json.loads(out) == {"m": 0, "shifted": True, "coeffs": ["-1/2", "-1"]}


def test_usage_errors(capsys):
    assert run_cli(capsys, "zeta", "neg", "-1")[0] == 2
    assert run_cli(capsys, "mzv", "reduce", "-m", "0,x")[0] == 2
    assert run_cli(capsys, "frobnicate")[0] == 2
    status, _, err = run_cli(capsys, "parseval", "--s1", "0")
    assert status == 2
    assert "--s2" in err


def test_parseval_commands(capsys):
    status, out, _ = run_cli(capsys, "parseval", "--a", "1", "--b", "1")
    assert status == 0
    assert out == "lhs = 1/720\nrhs = 1/720"
    status, out, _ = run_cli(capsys, "parseval", "--s1", "0", "--s2", "0", "--json")
    assert json.loads(out)["abs_error"] <= 1e-8


def test_prop2_commands(capsys):
    assert run_cli(capsys, "prop2", "lhs", "-m", "1,1")[1] == "1/180"
    status, out, _ = run_cli(capsys, "prop2", "rhs", "-m", "0,0,0", "--cutoff", "10")
    assert status == 3
    status, out, _ = run_cli(capsys, "prop2", "rhs", "-m", "1,1", "--convergence", "100,200")
    assert status == 0
    assert out.splitlines()[0] == "cutoff,approximation,reference,abs_error"
    assert len(out.splitlines()) == 3


def test_fourier_partial(capsys):
    status, out, _ = run_cli(capsys, "fourier", "partial", "--kind", "bernoulli", "--m", "3",
                             "--alpha", "0.3", "--cutoff", "10000", "--json")
    assert status == 0
    assert json.loads(out)["value"]["re"] == pytest.approx(0.3 ** 3 - 1.5 * 0.09 + 0.15, abs=1e-6)
    assert run_cli(capsys, "fourier", "partial", "--kind", "hurwitz", "--alpha", "0.3")[0] == 2
    assert run_cli(capsys, "fourier", "partial", "--m", "1", "--alpha", "0")[0] == 3


def test_bfunc(capsys):
    assert run_cli(capsys, "bfunc", "--s", "0", "--alpha", "0.3")[1] == "1.0"


def test_verify_prop1(capsys):
    status, out, _ = run_cli(capsys, "verify", "prop1", "--max-m", "30", "--json")
    assert status == 0
    data = json.loads(out)
    assert data["overall"] == "pass"
    assert len(data["cases"]) == 31


def test_output_is_deterministic(capsys):
    first = run_cli(capsys, "mzv", "reduce", "-m", "2,1,3", "--json")
    second = run_cli(capsys, "mzv", "reduce", "-m", "2,1,3", "--json")
    assert first == second


def test_parse_request_and_run():
    request = parse_request(["zeta", "neg", "3", "--json"])
    assert request.command == "zeta neg"
    assert request.output_mode == "json"
    status, output = run(request)
    assert status == 0
    assert json.loads(output) == {"m": 3, "value": "1/120"}
    assert run(CommandRequest("nope"))[0] == 2


@pytest.mark.parametrize("value", ["nan", "inf", "-inf", "abc"])
def test_non_finite_alpha_is_usage_error(capsys, value):
    assert run_cli(capsys, "bfunc", "--s", "0.5", f"--alpha={value}")[0] == 2
    assert run_cli(capsys, "fourier", "partial", "--m", "2", f"--alpha={value}")[0] == 2
