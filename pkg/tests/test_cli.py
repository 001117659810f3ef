import json
import subprocess
import sys

import pytest

from ntfkit import cli
from ntfkit.ideal import parse_ideal_file
from ntfkit.report import RunReport, emit_report
from ntfkit.suite import ScenarioOutcome


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def fx(fixtures, name):
    return str(fixtures / name)


def test_ntf_on_five_cycle_cover(capsys, fixtures):
    code, out, _ = run(capsys, "ntf", "--max-power", "3", fx(fixtures, "cover_c5.ideal"))
    assert code == 0
    assert "verdict: fails-at-2" in out
    assert "embedded: [x1,x2,x3,x4,x5] at k=2" in out


def test_ntf_pass_line(capsys, fixtures):
    code, out, _ = run(capsys, "ntf", "--max-power", "3", fx(fixtures, "di_p4.ideal"))
    assert code == 0 and out.splitlines()[0] == "verdict: NTF-up-to-3"


def test_dual_of_neighborhood_ideal(capsys, fixtures):
    _, out, _ = run(capsys, "dual", fx(fixtures, "ni_p4.ideal"))
    assert out == (fixtures / "di_p4.ideal").read_text()


def test_colon_on_example_square(capsys, fixtures):
    _, out, _ = run(capsys, "colon", "--by", "x2*x3*x4*x5*x7", fx(fixtures, "example_L2.ideal"))
    assert out.splitlines()[1] == "ideal x1, x2, x3, x4, x5, x6, x7, x8"


@pytest.mark.parametrize("argv, expected", [
    (["min", "example_I.ideal"], "ideal x1*x2*x3, x2*x3*x4, x1*x2*x5, x4*x5"),
    (["power", "-k", "2", "di_p4.ideal"], "ideal x1^2*x3^2"),
    (["symbolic", "-k", "2", "cover_c5.ideal"], "x1*x2*x3*x4*x5"),
    (["minor", "--delete", "x1", "cover_c5.ideal"], "ideal x2*x3*x5, x2*x4*x5"),
    (["minor", "--contract", "x1", "cover_c5.ideal"], "ideal x2*x4, x3*x4, x3*x5"),
    (["beta1", "cover_c7.ideal"], "beta1: 1"),
    (["mnnt", "--max-power", "4", "cover_c5.ideal"], "verdict: minimally-not-NTF-up-to-4"),
    (["ass", "cover_c5.ideal"], "prime: (x1,x2)"),
    (["minprimes", "example_I.ideal"], "prime: (x1,x2,x4)"),
    (["decompose", "example_I.ideal"], "component: x1, x2, x4"),
])
def test_subcommands(capsys, fixtures, argv, expected):
    *head, last = argv
    code, out, _ = run(capsys, *head, fx(fixtures, last))
    assert code == 0 and expected in out


def test_intersect_several_files(capsys, fixtures):
    code, out, _ = run(capsys, "intersect", fx(fixtures, "ni_p4.ideal"), fx(fixtures, "di_p4.ideal"))
    assert code == 0 and out.splitlines()[1] == "ideal x1*x2*x3, x1*x2*x4, x1*x3*x4, x2*x3*x4"


def test_graph_subcommand(capsys, fixtures):
    _, out, _ = run(capsys, "graph", "--type", "cycle", "--n", "5", "--ideal", "cover")
    assert out == (fixtures / "cover_c5.ideal").read_text()
    _, out, _ = run(capsys, "graph", "--from", fx(fixtures, "c5.graph"), "--ideal", "edge")
    assert "ideal x1*x2, x2*x3, x3*x4, x1*x5, x4*x5" in out
    _, out, _ = run(capsys, "graph", "--type", "tree", "--n", "7", "--seed", "1")
    assert out.count("edge") == 6


def test_json_report_fields_and_round_trip(capsys, fixtures):
    _, out, _ = run(capsys, "--json", "dual", fx(fixtures, "ni_p4.ideal"))
    data = json.loads(out)
    assert list(data) == ["command", "inputs", "result", "verdict", "witnesses", "timing_ms", "seed"]
    assert data["inputs"]["ideal"].startswith("sha256:")
    emitted = "vars x1 x2 x3 x4\nideal " + data["result"]["ideal"][1:-1]
    assert parse_ideal_file(emitted) == parse_ideal_file((fixtures / "di_p4.ideal").read_text())


def test_json_after_subcommand(capsys, fixtures):
    _, out, _ = run(capsys, "ntf", fx(fixtures, "cover_c5.ideal"), "--max-power", "2", "--json")
    data = json.loads(out)
    assert data["verdict"] == "fails-at-2"
    assert data["witnesses"][0]["witness"] == "x1*x2*x3*x4*x5"


def test_usage_and_parse_errors(capsys, tmp_path):
    assert run(capsys, "frobnicate")[0] == 2
    assert run(capsys, "ntf", "--bogus", "x")[0] == 2
    bad = tmp_path / "bad.ideal"
    bad.write_text("vars x1\nideal x2\n")
    code, _, err = run(capsys, "min", str(bad))
    assert code == 2 and "line 2, column 7" in err
    assert run(capsys, "min", str(tmp_path / "missing.ideal"))[0] == 2


def test_budget_exit_code(capsys):
    code, _, err = run(capsys, "graph", "--type", "path", "--n", "17", "--ideal", "di")
    assert code == 3 and "budget" in err


def test_suite_failure_sets_exit_code(capsys, monkeypatch):
    def fake(label, K, seed):
        o = ScenarioOutcome(label, "fake")
        o.check(False, "deliberate", witness="x1")
        return o

    monkeypatch.setattr(cli, "run_scenario", fake)
    code, out, _ = run(capsys, "paper-suite", "--scenario", "A")
    assert code == 1 and "fail" in out and '"witness": "x1"' in out


def test_suite_budget_exit_code(capsys, monkeypatch):
    monkeypatch.setattr(cli, "run_scenario",
                        lambda label, K, seed: ScenarioOutcome(label, "x", budget_error="too big"))
    assert run(capsys, "paper-suite", "--scenario", "G")[0] == 3


def test_suite_small_horizon_rejected(capsys):
    assert run(capsys, "paper-suite", "--max-power", "2")[0] == 2


def test_suite_deterministic_modulo_timing(capsys):
    outs = []
    for _ in range(2):
        code, out, _ = run(capsys, "--json", "paper-suite", "--scenario", "DE", "--seed", "7")
        assert code == 0
        data = json.loads(out)
        data.pop("timing_ms")
        outs.append(data)
    assert outs[0] == outs[1]
    assert [s["scenario"] for s in outs[0]["result"]["scenarios"]] == ["D", "E"]


def test_suite_table(capsys):
    code, out, _ = run(capsys, "paper-suite", "--scenario", "A")
    assert code == 0
    assert out.splitlines()[0].split()[:4] == ["scenario", "status", "checks", "seconds"]
    assert out.splitlines()[1].startswith("A") and "pass" in out.splitlines()[1]


def test_emit_report_human_verdict():
    r = RunReport(command="ntfkit ntf", verdict="NTF-up-to-3", text="")
    assert emit_report(r) == "verdict: NTF-up-to-3\n"


def test_console_script_entry_point(fixtures):
    res = subprocess.run([sys.executable, "-m", "ntfkit.cli", "beta1", fx(fixtures, "cover_c5.ideal")],
                         capture_output=True, text=True)
    assert res.returncode == 0 and res.stdout == "beta1: 1\n"
