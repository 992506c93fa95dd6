import json

import pytest

from coeffcount.cli import main, parse_field


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_parse_field():
    f = parse_field("2")
    assert (f.p, f.r) == (2, 1)
    f = parse_field("2^2")
    assert f.q == 4 and f.modulus == (1, 1, 1)
    f = parse_field("2^3:1,1,0,1")
    assert f.modulus == (1, 1, 0, 1)
    with pytest.raises(Exception):
        parse_field("2^2:1,1,1,1")


def test_automaton_command(capsys):
    code, out, err = run_cli(
        capsys, "automaton", "--field", "2", "--poly", "1+x", "--alpha", "1",
        "--n", "11",
    )
    assert code == 0
    data = json.loads(out)
    assert data["count"] == "8"


def test_automaton_repunit_and_dump(capsys):
    code, out, _ = run_cli(
        capsys, "automaton", "--field", "2", "--poly", "1+x",
        "--n", "rep:5", "--dump-states",
    )
    assert code == 0
    data = json.loads(out)
    assert data["count"] == "32"
    assert data["automaton"]["state_count"] == 2
    cols = data["automaton"]["transitions"]
    assert all(sum(m for _, m in col) == 2 for digit in cols for col in digit)


def test_qpow_command(capsys):
    code, out, _ = run_cli(
        capsys, "qpow", "--field", "2", "--g", "1+x^2+x^5", "--c", "1",
        "--alpha", "1", "--verify-upto", "8",
    )
    assert code == 0
    data = json.loads(out)
    assert data["u"] == ["80/31"] * 5
    assert data["v"] == ["-49/31", "-67/31", "-41/31", "11/31", "-9/31"]
    assert all(entry["matches"] for entry in data["verified"].values())


def test_genfun_command(capsys):
    code, out, _ = run_cli(capsys, "genfun", "--seq", "1,3,8,21,55,144,377")
    data = json.loads(out)
    assert code == 0
    assert data["denominator"] == ["1", "-3", "1"]

    code, out, _ = run_cli(
        capsys, "genfun", "--from-automaton", "1+x1+x2+x2^2", "--k", "2",
        "--field", "2",
    )
    data = json.loads(out)
    assert code == 0
    assert data["numerator"] == ["1", "2"]
    assert data["denominator"] == ["1", "-2", "-4"]


def test_oracle_command_pass_and_fail_line(capsys):
    code, out, err = run_cli(
        capsys, "oracle", "--field", "2", "--poly", "1+x1+x2+x1*x2^2",
        "--k", "2", "--n", "7", "--alpha", "1",
    )
    assert code == 0
    assert "PASS" in err
    data = json.loads(out)
    assert data["oracle"] == data["automaton"] == "46"


def test_oracle_product(capsys):
    code, out, _ = run_cli(
        capsys, "oracle", "--factors", "x1;x1+x2;x1+x2+x3", "--k", "3",
    )
    assert code == 0
    data = json.loads(out)
    assert data["distinct"] == "5"


def test_closed_form_commands(capsys):
    code, out, _ = run_cli(capsys, "closed-form", "omega", "--n", "6039")
    assert code == 0 and json.loads(out)["count"] == "2079"
    code, out, _ = run_cli(capsys, "closed-form", "lucas", "--n", "11",
                           "--m", "5", "--p", "2")
    assert code == 0 and json.loads(out)["value"] == 0
    code, out, _ = run_cli(capsys, "closed-form", "binom-census", "--n", "31",
                           "--p", "2")
    assert json.loads(out)["census"] == {"1": "32"}


def test_lattice_commands(capsys):
    code, out, _ = run_cli(capsys, "lattice", "draconian", "--n", "3")
    assert code == 0 and json.loads(out)["count"] == "5"
    code, out, _ = run_cli(capsys, "lattice", "omega", "--parts", "3,2,1")
    assert json.loads(out)["count"] == "5"
    code, out, _ = run_cli(capsys, "lattice", "ps", "--t-vec", "1,1,1")
    data = json.loads(out)
    assert data["direct"] == data["formula"] == "14"
    code, out, _ = run_cli(capsys, "lattice", "mrsk", "--m-vec", "1,2")
    assert json.loads(out)["equal"] is True


def test_traveling_commands(capsys):
    code, out, _ = run_cli(capsys, "traveling", "seq", "--j", "1", "--k", "3",
                           "--terms", "5")
    assert json.loads(out)["terms"] == ["1", "3", "8", "21", "55"]
    code, out, _ = run_cli(capsys, "traveling", "theta", "--k", "2", "--m", "2")
    data = json.loads(out)
    assert data["charpoly"] == data["determinant_path"]
    code, out, _ = run_cli(capsys, "traveling", "v-genfun", "--k", "2", "--m", "2")
    data = json.loads(out)
    assert data["numerator"] == ["1", "1"]
    assert data["denominator"] == ["1", "-5", "3"]


def test_verify_minimal(capsys):
    code, out, err = run_cli(capsys, "verify", "--suite", "minimal")
    assert code == 0
    data = json.loads(out)
    assert data["ok"] is True and data["failed"] == 0
    assert err.count("PASS") == data["passed"]


def test_deterministic_output(capsys):
    _, out1, _ = run_cli(capsys, "qpow", "--field", "2", "--g", "1+x^2+x^5")
    _, out2, _ = run_cli(capsys, "qpow", "--field", "2", "--g", "1+x^2+x^5")
    assert out1 == out2


def test_usage_error_exit_2():
    with pytest.raises(SystemExit) as exc:
        main(["automaton"])  # missing required flags
    assert exc.value.code == 2


def test_computation_error_exit_1(capsys):
    code, out, err = run_cli(
        capsys, "qpow", "--field", "2", "--g", "x+x^2"
    )
    assert code == 1
    assert "error" in err
