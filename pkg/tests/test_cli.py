import io
import json
from fractions import Fraction

import pytest
from certifier import Certificate
from cli import main
from power_sums import PowerSums


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_check_not_real_rooted(capsys):
    code, out, _ = run(capsys, "check", "x^2+1")
    assert code == 1
    assert "NotRealRooted" in out
    assert "witness: [0, 1]  Q = -2" in out


def test_check_real_rooted(capsys):
    code, out, _ = run(capsys, "check", "x^3-6*x^2+11*x-6")
    assert code == 0
    assert "verdict: RealRooted" in out


def test_check_constant(capsys):
    code, _, err = run(capsys, "check", "5")
    assert code == 2
    assert "nonconstant polynomial required" in err


@pytest.mark.parametrize("text", ["x^2 +", "x*y", "3x"])
def test_check_syntax_error(capsys, text):
    code, _, err = run(capsys, "check", text)
    assert code == 2
    assert err.startswith("error:")
    assert "position" in err


def test_check_coefficient_list(capsys):
    code, out, _ = run(capsys, "check", "--coeffs", "1, 0, 1")
    assert code == 1
    assert "polynomial: x^2 + 1" in out


def test_check_stdin(capsys, monkeypatch):
    monkeypatch.setattr("sys.stdin", io.StringIO("x^2 - 1\n"))
    code, out, _ = run(capsys, "check", "-")
    assert code == 0
    assert "polynomial: x^2 - 1" in out


def test_check_json(capsys):
    code, out, _ = run(capsys, "check", "--json", "--oracle", "x^3-x^2+x-1")
    assert code == 1
    document = json.loads(out)
    assert document["verified"] is True
    assert document["verification_reason"] == "ok"
    assert document["oracle"]["agrees"] is True
    cert = Certificate.model_validate(document["certificate"])
    assert cert.witness_value == Fraction(-4, 3)
    assert cert.counts.distinct_real_roots == 1


def test_check_lemma2(capsys):
    code, out, _ = run(capsys, "check", "--lemma2", "(x^2+1)^2")
    assert code == 1
    assert "lemma2 root" in out
    assert "expected -4" in out
    assert "imaginary-part defect" in out
    assert "conjugate symmetry defect" in out


def test_matrix(capsys):
    code, out, _ = run(capsys, "matrix", "x^3-x^2+x-1")
    assert code == 0
    assert "[3, 1, -1, 1, 3]" in out
    assert "  [1, -1, 1]" in out


def test_matrix_json(capsys):
    code, out, _ = run(capsys, "matrix", "--json", "x^2+1")
    assert code == 0
    assert json.loads(out)["hermite"] == [["2", "0"], ["0", "-2"]]


def test_witness(capsys):
    code, out, _ = run(capsys, "witness", "--json", "x^3-x^2+x-1")
    assert code == 1
    document = json.loads(out)
    assert document["witness"] == ["-1/3", "1", "0"]
    assert document["lemma2"]["expected"] == -2


def test_witness_real_rooted(capsys):
    code, out, _ = run(capsys, "witness", "x^2-1")
    assert code == 0
    assert "no witness" in out


def test_counts(capsys):
    code, out, _ = run(capsys, "counts", "--json", "(x-1)^2*(x^2+1)")
    assert code == 0
    document = json.loads(out)
    assert document["distinct_roots"] == 3
    assert document["distinct_real_roots"] == 1
    assert document["agrees"] is True
    assert document["note"] == "classical extension"


def test_selftest(capsys):
    code, out, _ = run(capsys, "selftest", "--cases", "60", "--degree-max", "6")
    assert code == 0
    assert "60 cases" in out
    assert "0 failures" in out


def test_selftest_empty(capsys):
    code, out, _ = run(capsys, "selftest", "--cases", "0")
    assert code == 0
    assert out.startswith("0 cases")


def test_selftest_json_with_lemma2(capsys):
    code, out, _ = run(
        capsys, "selftest", "--cases", "20", "--seed", "7", "--lemma2", "--json"
    )
    assert code == 0
    assert json.loads(out)["failures"] == []


def _broken_power_sums(original):
    def broken(f, upto=None):
        sums = original(f, upto)
        values = list(sums.values)
        if len(values) > 2:
            values[2] = -values[2]
        return PowerSums(n=sums.n, values=tuple(values))

    return broken


def test_injected_fault_is_detected(capsys, monkeypatch):
    import hermite.matrix

    monkeypatch.setattr(
        hermite.matrix,
        "newton_power_sums",
        _broken_power_sums(hermite.matrix.newton_power_sums),
    )
    code, _, _ = run(capsys, "check", "x^3-6*x^2+11*x-6")
    assert code == 3
    code, out, _ = run(capsys, "selftest", "--cases", "30", "--json")
    assert code == 3
    assert json.loads(out)["failures"]


def test_whitespace_list_with_signed_chunk_is_an_expression(capsys):
    code, _, err = run(capsys, "check", "3 -2")
    assert code == 2
    assert "nonconstant polynomial required" in err
    code, _, _ = run(capsys, "check", "--coeffs", "3 -2")
    assert code == 0
