import io
import json

import pytest

from heckeseries.cli import EXIT_FAIL, EXIT_OK, EXIT_USAGE, closed_series, main


def run(capsys, *argv, stdin=None, monkeypatch=None):
    if stdin is not None:
        monkeypatch.setattr("sys.stdin", io.StringIO(stdin))
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_series_text(capsys):
    code, out, _ = run(capsys, "series", "--genus", "2", "--terms", "2")
    assert code == EXIT_OK
    assert out.startswith("closed form: ")
    assert "X^1: " in out


def test_series_genus1_json(capsys):
    code, out, _ = run(capsys, "series", "--genus", "1", "--terms", "3", "--format", "json")
    data = json.loads(out)
    assert code == EXIT_OK and data["genus"] == 1 and len(data["coefficients"]) == 3


def test_series_json_is_deterministic(capsys):
    _, a, _ = run(capsys, "series", "--power", "2", "--terms", "4", "--format", "json")
    _, b, _ = run(capsys, "series", "--power", "2", "--terms", "4", "--format", "json")
    assert a == b


def test_series_unsupported_genus(capsys):
    code, _, err = run(capsys, "series", "--genus", "3")
    assert code == EXIT_USAGE and "UnsupportedGenus" in err


def test_closed_series_has_only_pole_factors():
    f = closed_series(2)
    assert len(f.factors) == 4


def test_verify_passing_suite(capsys):
    code, out, _ = run(capsys, "verify", "eq3")
    assert code == EXIT_OK and "[PASS" in out


def test_verify_json(capsys):
    code, out, _ = run(capsys, "verify", "conjecture-denominator", "--format", "json")
    data = json.loads(out)
    assert code == EXIT_OK
    assert [c["status"] for c in data["checks"]] == ["pass", "pass"]


def test_verify_failing_suite_exit_code(capsys):
    code, out, _ = run(capsys, "verify", "cubic")
    assert code == EXIT_FAIL and "[FAIL" in out


def test_verify_prefix_order_too_small(capsys):
    code, _, err = run(capsys, "verify", "rankin2", "--prefix-order", "5")
    assert code == EXIT_USAGE and "prefix-order" in err


def test_unknown_suite_is_usage_error(capsys):
    with pytest.raises(SystemExit) as e:
        main(["verify", "nope"])
    assert e.value.code == EXIT_USAGE


def test_spin_from_flags(capsys):
    code, out, _ = run(capsys, "lfactor", "spin", "--genus", "1", "--weight", "k", "--alphas", "a0", "a1")
    assert code == EXIT_OK and out.strip() == "(1 - a0*X)(1 - a0*a1*X)"


def test_eisenstein_piped_into_spin(capsys, monkeypatch):
    _, params, _ = run(capsys, "lfactor", "eisenstein", "--weight", "k", "--genus", "2")
    code, out, _ = run(capsys, "lfactor", "spin", stdin=params, monkeypatch=monkeypatch)
    assert code == EXIT_OK
    assert out.strip() == "(1 - X)(1 - p^{k-2}*X)(1 - p^{k-1}*X)(1 - p^{2k-3}*X)"


def test_standard_json(capsys):
    code, out, _ = run(capsys, "lfactor", "standard", "--genus", "1", "--weight", "k",
                       "--alphas", "1", "a1", "--format", "json")
    assert json.loads(out) == {"degree": 3, "factors": ["1 - X", "1 - a1^-1*X", "1 - a1*X"]}


def test_malformed_stdin(capsys, monkeypatch):
    code, _, err = run(capsys, "lfactor", "spin", stdin="{not json", monkeypatch=monkeypatch)
    assert code == EXIT_USAGE and "malformed" in err


def test_hodge(capsys):
    code, out, _ = run(capsys, "lfactor", "hodge", "--genus", "2", "--weight", "k")
    assert json.loads(out)["pairs"] == [["0", "2k-3"], ["k-2", "k-1"], ["k-1", "k-2"], ["2k-3", "0"]]


def test_ikeda(capsys):
    code, out, _ = run(capsys, "lfactor", "ikeda", "--weight", "k", "--m", "1")
    assert json.loads(out)["alphas"] == ["p^{k-1}", "alpha*p^{1/2}", "alpha^-1*p^{1/2}"]


def test_merge_from_flags(capsys):
    f = json.dumps({"genus": 2, "weight": "k", "alphas": ["1", "p^{k-2}", "p^{k-1}"]})
    g = json.dumps({"genus": 2, "weight": "k-2", "alphas": ["1", "p^{k-4}", "p^{k-3}"]})
    code, out, _ = run(capsys, "lfactor", "merge", "--first", f, "--second", g)
    assert code == EXIT_OK
    assert json.loads(out)["alphas"] == ["1", "p^{k-2}", "p^{k-1}", "p^{k-4}", "p^{k-3}"]


def test_merge_weight_mismatch(capsys, monkeypatch):
    p = {"genus": 2, "weight": "k", "alphas": ["1", "p^{k-2}", "p^{k-1}"]}
    code, _, err = run(capsys, "lfactor", "merge", stdin=json.dumps({"f": p, "g": p}), monkeypatch=monkeypatch)
    assert code == EXIT_USAGE and "WeightMismatch" in err


@pytest.mark.slow
def test_prime_mode_agrees_with_symbolic(capsys):
    _, sym, _ = run(capsys, "verify", "all", "--format", "json")
    _, num, _ = run(capsys, "verify", "all", "--prime", "3", "--format", "json")
    a, b = json.loads(sym), json.loads(num)
    assert b["config"]["p_mode"] == "numeric p=3"
    assert [(c["id"], c["status"]) for c in a["checks"]] == [(c["id"], c["status"]) for c in b["checks"]]
