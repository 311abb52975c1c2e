import json

from ecq.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_describe(capsys):
    code, out, _ = run(capsys, "describe", "--a", "0", "0", "1", "0", "0")
    assert code == 0
    assert "conductor 27" in out and "II" in out


def test_describe_json(capsys):
    code, out, _ = run(capsys, "describe", "--a", "0", "0", "1", "0", "0",
                       "--json")
    obj = json.loads(out)
    assert code == 0 and obj["conductor"] == 27
    assert obj["local"][0]["kodaira"] == "II"


def test_classify_example(capsys):
    code, out, _ = run(capsys, "classify", "--family", "6", "1", "-p", "3")
    assert code == 0 and "II" in out and "III" in out


def test_dual(capsys):
    code, out, _ = run(capsys, "dual", "--family", "2", "1", "--json")
    assert code == 0
    assert json.loads(out)["a"] == ["8", "0", "19", "0", "0"]


def test_torsion_by_label(capsys):
    code, out, _ = run(capsys, "torsion", "--label", "54b3")
    assert code == 0 and "Z/9" in out


def test_analytic_by_label(capsys):
    code, out, _ = run(capsys, "analytic", "--label", "11a1", "--json")
    obj = json.loads(out)
    assert code == 0 and obj["sha"] == "1"
    assert abs(float(obj["l_over_period"]) - 0.2) < 1e-9


def test_rootnum(capsys):
    code, out, _ = run(capsys, "rootnum", "--label", "171.b2")
    assert code == 0 and "global: -1" in out


def test_verify_exit_zero(capsys):
    code, out, _ = run(capsys, "verify", "--label", "176.a2", "--d", "5")
    assert code == 0


def test_scan_small(capsys, tmp_path):
    out_file = tmp_path / "report.jsonl"
    code, _, err = run(capsys, "scan", "--amax", "3", "--bmax", "3",
                       "--json", "--out", str(out_file),
                       "--l-cap", "500")
    assert code == 0
    lines = out_file.read_text().splitlines()
    assert lines and all(json.loads(l)["status"] != "fail" for l in lines)


def test_usage_errors(capsys):
    # no curve specification
    assert run(capsys, "describe")[0] == 2
    # conflicting specifications
    assert run(capsys, "torsion", "--a", "0", "0", "1", "0", "0",
               "--label", "11a1")[0] == 2
    # unknown flag
    assert run(capsys, "describe", "--bogus")[0] == 2


def test_error_exit_one(capsys):
    code, _, err = run(capsys, "twist", "--label", "11a1", "--d", "4")
    assert code == 1 and "squarefree" in err
