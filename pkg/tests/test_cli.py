import json
import subprocess
import sys

import pytest

from qsl import cli
from qsl.report import Report


def run(*args, env=None):
    return subprocess.run([sys.executable, "-m", "qsl", *args], capture_output=True, text=True,
                          env=env)


@pytest.mark.parametrize("args,expected", [
    ("imm --m 1 --n 1 --lambda 1 --rows 1", "x_{11}"),
    ("imm --m 1 --n 1 --lambda 1 --rows 2", "-x_{22}"),
    ("imm --m 1 --n 1 --lambda 2,2 --rows 1,1,2,2", "0"),
    ("schur --m 1 --n 1 --lambda 1", "x1 + y1"),
    ("schur --m 1 --n 1 --lambda 2,2", "0"),
    ("series --kind gamma --k 1 --m 1 --n 1", "x_{11} - x_{22}"),
])
def test_documented_outputs(capsys, args, expected):
    assert cli.main(args.split()) == 0
    assert capsys.readouterr().out.strip() == expected


@pytest.mark.parametrize("suite,extra", [
    ("ybe", ["--m", "2", "--n", "1"]),
    ("macmahon", ["--m", "1", "--n", "1", "--order", "4"]),
    ("ch11", []),
])
def test_documented_suites(capsys, suite, extra):
    assert cli.main(["verify", suite, *extra, "--format", "json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["suite"] == suite
    assert doc["checks"] and all(c["status"] == "pass" for c in doc["checks"])
    assert set(doc["checks"][0]) >= {"name", "params", "status"}


def test_subprocess_entry_point():
    res = run("imm", "--m", "1", "--n", "1", "--lambda", "1", "--rows", "2")
    assert res.returncode == 0 and res.stdout.strip() == "-x_{22}"


@pytest.mark.parametrize("args", [
    "imm --m 1 --n 1 --lambda 2 --rows 1",
    "imm --m 1 --n 1 --lambda 1 --rows 3",
    "imm --m 1 --lambda 1 --rows 1",
    "schur --m 0 --n 0 --lambda 1",
    "schur --m 1 --n 1 --lambda 1,2",
    "verify nosuch",
    "series --kind delta --k 1 --m 1 --n 1",
    "imm --m 1 --n 1 --lambda x --rows 1",
])
def test_usage_errors_exit_2(capsys, args):
    with pytest.raises(SystemExit) as exc:
        cli.main(args.split())
    assert exc.value.code == 2


def test_failure_exit_1_with_witness(capsys, monkeypatch):
    def broken(cfg):
        rep = Report("broken", {"m": 1, "n": 1})
        rep.fail({"word": [[1, 2]]})
        yield rep
    monkeypatch.setitem(cli.SUITES, "ybe", broken)
    assert cli.main(["verify", "ybe", "--format", "json"]) == 1
    doc = json.loads(capsys.readouterr().out)
    assert doc["checks"][0]["status"] == "fail"
    assert doc["checks"][0]["witness"] == {"word": [[1, 2]]}


def test_kmax_caps_order(capsys, monkeypatch):
    monkeypatch.setenv("QSL_KMAX", "2")
    assert cli.main(["verify", "macmahon", "--m", "1", "--n", "1", "--order", "4",
                     "--format", "json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["checks"][0]["params"]["order"] == 2
    with pytest.raises(SystemExit) as exc:
        cli.main(["series", "--kind", "alpha", "--k", "3", "--m", "1", "--n", "1"])
    assert exc.value.code == 2


def test_q_specialisation(capsys):
    assert cli.main(["series", "--kind", "alpha", "--k", "2", "--m", "1", "--n", "1",
                     "--q", "2"]) == 0
    assert "(1)/(2)" in capsys.readouterr().out


def test_latex_and_json_formats(capsys):
    assert cli.main(["imm", "--m", "1", "--n", "1", "--lambda", "1", "--rows", "1",
                     "--format", "json"]) == 0
    assert json.loads(capsys.readouterr().out)["terms"][0]["word"] == [[1, 1]]
    assert cli.main(["verify", "rtt", "--m", "1", "--n", "1", "--format", "latex"]) == 0
    assert "\\texttt{rtt}" in capsys.readouterr().out


def test_experimental_residual_is_reported(capsys):
    assert cli.main(["verify", "ch11", "--experimental", "--format", "json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert [c["status"] for c in doc["checks"]] == ["pass", "reported"]


def test_deterministic_output():
    a = run("verify", "confluence", "--m", "2", "--n", "1", "--seed", "5", "--format", "json")
    b = run("verify", "confluence", "--m", "2", "--n", "1", "--seed", "5", "--format", "json")
    assert a.returncode == 0 and a.stdout == b.stdout


def test_all_suites_pass(capsys):
    assert cli.main(["verify", "all", "--format", "json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    names = {c["name"] for c in doc["checks"]}
    assert {"ybe", "rtt", "macmahon", "newton", "kostant", "ch11", "gt_convention"} <= names
