import csv
import io
import json
import math

import pytest

from qentropy import cli


def run(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def rows(text):
    return list(csv.DictReader(io.StringIO(text)))


def test_entropy_sweep_columns(capsys):
    code, out, _ = run(capsys, "entropy", "--system", "ho", "--n", "0..1", "--alpha", "0.5:2:4",
                       "--kind", "renyi,tsallis")
    assert code == 0
    r = rows(out)
    assert list(r[0]) == cli.ENTROPY_COLUMNS
    assert len(r) == 2 * 2 * 4 * 2
    first = r[0]
    assert first["beta"] == "inf" and first["path"] == "closed" and first["status"] == "OK"
    # R(1/2) of the oscillator ground state is ln(2 pi)/2 + ln(2)/2
    assert float(first["value"]) == pytest.approx(0.5 * math.log(2 * math.pi) + 0.5 * math.log(2), rel=1e-11)


def test_twelve_significant_digits(capsys):
    _, out, _ = run(capsys, "entropy", "--system", "ho", "--n", "0", "--alpha", "2", "--space", "position")
    v = rows(out)[0]["value"]
    assert v == f"{0.5 * math.log(2 * math.pi):.12g}"


def test_threshold_clamp_and_divergence(capsys):
    _, out, _ = run(capsys, "entropy", "--system", "q1d", "--alpha", "0.2,0.25", "--space", "momentum")
    r = rows(out)
    assert r[0]["status"] == "DIVERGENT" and r[0]["value"] == ""
    assert r[1]["status"] == "CLAMPED" and float(r[1]["alpha"]) == pytest.approx(0.25 + 1e-9)


def test_scale_term_column_only_when_scaled(capsys):
    _, out, _ = run(capsys, "entropy", "--system", "robin", "--alpha", "2", "--scale", "2")
    r = rows(out)
    assert "scale_term" in r[0]
    assert float(r[0]["scale_term"]) == pytest.approx(math.log(2))
    assert float(r[1]["scale_term"]) == pytest.approx(-math.log(2))
    _, out, _ = run(capsys, "entropy", "--system", "robin", "--alpha", "2")
    assert "scale_term" not in rows(out)[0]


def test_spacings():
    assert cli.parse_grid("1:100:3", "log") == pytest.approx([1, 10, 100])
    assert cli.parse_grid("1:4:3", "inverse") == pytest.approx([1, 1.6, 4])
    assert cli.parse_grid("inf") == [math.inf]
    assert cli.parse_levels("1..3,6") == [1, 2, 3, 6]
    with pytest.raises(cli.UsageError):
        cli.parse_grid("0:1:3", "log")


def test_jobs_give_identical_output(capsys):
    args = ["entropy", "--system", "dirichlet", "--n", "1..2", "--alpha", "0.6:3:5",
            "--space", "momentum"]
    _, serial, _ = run(capsys, *args)
    _, parallel, _ = run(capsys, *args, "--jobs", "3")
    assert serial == parallel


def test_json_output(capsys, tmp_path):
    out = tmp_path / "u.json"
    code, _, _ = run(capsys, "uncertainty", "--system", "ho", "--n", "0", "--alpha", "0.5,2",
                     "--format", "json", "--out", str(out))
    assert code == 0
    data = json.loads(out.read_text())
    assert data["metadata"]["rel_tol"] == 1e-8
    assert data["columns"] == cli.RELATION_COLUMNS
    assert all(r["saturated"] for r in data["rows"])
    assert data["rows"][0]["beta"] == "inf"


def test_env_tolerance(capsys, monkeypatch):
    monkeypatch.setenv("QENTROPY_REL_TOL", "1e-6")
    _, out, _ = run(capsys, "uncertainty", "--system", "ho", "--alpha", "1", "--format", "json")
    assert json.loads(out)["metadata"]["rel_tol"] == 1e-6
    monkeypatch.setenv("QENTROPY_REL_TOL", "abc")
    code, _, err = run(capsys, "uncertainty", "--system", "ho", "--alpha", "1")
    assert code == 2 and "QENTROPY_REL_TOL" in err


def test_tsallis_check_marks_diagnostic(capsys):
    _, out, _ = run(capsys, "tsallis-check", "--system", "ho", "--n", "1", "--alpha", "0.5,1.2")
    r = rows(out)
    assert r[0]["satisfied"] == "true" and r[0]["status"] == "OK"
    assert r[1]["satisfied"] == "false" and r[1]["status"] == "DIAGNOSTIC"


def test_maximum_and_conjecture(capsys):
    _, out, _ = run(capsys, "maximum", "--system", "q1d", "--n", "2")
    r = rows(out)[0]
    assert float(r["value"]) == pytest.approx(2.887609, abs=1e-5)
    _, out, _ = run(capsys, "conjecture", "--system", "dirichlet", "--points", "8")
    r = rows(out)
    assert r[-1]["j"] == "limit" and float(r[-1]["renyi_sum"]) == pytest.approx(math.log(2 * math.pi), abs=1e-2)
    code, _, _ = run(capsys, "conjecture", "--system", "dirichlet", "--n", "2")
    assert code == 2


def test_thermo_commands(capsys):
    code, out, _ = run(capsys, "thermo", "additivity", "--f", "0.2,0.8", "--g", "0.5,0.5", "--alpha", "3")
    assert code == 0 and rows(out)[0]["passed"] == "true"
    code, out, _ = run(capsys, "thermo", "equilibrium", "--energies", "0,1,2,5", "--alpha", "1.5")
    assert [r["status"] for r in rows(out)] == ["OK", "OK", "CUTOFF", "CUTOFF"]
    code, out, _ = run(capsys, "thermo", "free-energy", "--energies", "0,1,2", "--t1", "1", "--t2", "3")
    assert code == 0 and abs(float(rows(out)[0]["gap"])) < 1e-12
    code, _, _ = run(capsys, "thermo", "equilibrium", "--energies", "3,4", "--alpha", "2")
    assert code == 1
    code, _, _ = run(capsys, "thermo", "entropy", "--probs", "0.5,0.6")
    assert code == 2


def test_verify_exit_codes(capsys):
    code, out, _ = run(capsys, "verify", "13")
    assert code == 0 and "criterion 13 PASS" in out
    code, _, _ = run(capsys, "verify", "99")
    assert code == 2


def test_usage_errors(capsys):
    assert run(capsys, "entropy", "--system", "square", "--alpha", "2")[0] == 2
    assert run(capsys, "entropy", "--system", "robin", "--n", "1", "--alpha", "2")[0] == 2
    assert run(capsys, "entropy", "--system", "ho", "--alpha", "2", "--jobs", "0")[0] == 2
    with pytest.raises(SystemExit) as exc:
        cli.main(["entropy"])
    assert exc.value.code == 2


def test_nonconvergent_exit(capsys, monkeypatch):
    from qentropy.quadrature import NonConvergent, QuadratureResult

    def boom(*a, **k):
        raise NonConvergent("forced", QuadratureResult(1.0, 1.0, 0))

    monkeypatch.setattr(cli.entropy, "renyi", boom)
    code, out, _ = run(capsys, "entropy", "--system", "ho", "--alpha", "2", "--space", "position")
    assert code == 3 and rows(out)[0]["status"] == "NONCONVERGENT"
