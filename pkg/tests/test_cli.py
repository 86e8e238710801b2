import io
import json
import subprocess
import sys

import pytest

from fixsub import graphs
from fixsub.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_graphgen_gp_roundtrip(capsys):
    code, out, _ = run_cli(capsys, "graphgen", "gp", "10", "2")
    assert code == 0
    assert graphs.decode_graph6(out.strip()) == graphs.make_generalized_petersen(10, 2)


def test_graphgen_edgelist(capsys):
    code, out, _ = run_cli(capsys, "graphgen", "heawood", "--format", "edgelist")
    assert code == 0
    assert graphs.decode_edgelist(out) == graphs.heawood()


@pytest.mark.parametrize(
    "argv",
    [("gp", "4", "2"), ("gp", "10"), ("nosuch",), ("cycle", "x"), ("circulant", "6")],
)
def test_graphgen_usage_errors(capsys, argv):
    code, _, err = run_cli(capsys, "graphgen", *argv)
    assert code == 2
    assert err


def test_report_heawood(capsys):
    code, out, _ = run_cli(capsys, "report", "heawood")
    d = json.loads(out)
    assert code == 0
    assert (d["cycles"], d["autG"], d["fHam"], d["fStarHam"]) == (24, 336, True, False)
    assert [(o["size"], o["stab"]) for o in d["orbits"]] == [(24, 14)]


def test_report_gp_uses_rim_signatures(capsys):
    _, out, _ = run_cli(capsys, "report", "gp", "7", "2")
    d = json.loads(out)
    assert [o["signature"] for o in d["orbits"]] == ["1,1,2"]


def test_report_line_k33_and_cage8(capsys):
    _, out, _ = run_cli(capsys, "report", "line-k33")
    assert json.loads(out)["fHam"] is False
    _, out, _ = run_cli(capsys, "report", "cage8")
    d = json.loads(out)
    assert (d["cycles"], d["autG"], d["fHam"]) == (144, 1440, True)


def test_report_from_file_and_stdin(capsys, tmp_path, monkeypatch):
    path = tmp_path / "k4.g6"
    path.write_text("C~\n")
    _, out, _ = run_cli(capsys, "report", str(path))
    assert json.loads(out)["fStarHam"] is True
    monkeypatch.setattr(sys, "stdin", io.StringIO(graphs.encode_edgelist(graphs.make_cycle(5))))
    _, out, _ = run_cli(capsys, "report", "-")
    assert json.loads(out)["cycles"] == 1


def test_report_bad_input(capsys, tmp_path):
    path = tmp_path / "bad.g6"
    path.write_text("C~~\n")
    assert run_cli(capsys, "report", str(path))[0] == 2
    assert run_cli(capsys, "report", str(tmp_path / "missing"))[0] == 2


def test_verify_passing_suite(capsys):
    code, out, _ = run_cli(capsys, "verify", "heawood", "--no-timing")
    rows = json.loads(out)
    assert code == 0
    assert all(r["status"] == "pass" for r in rows)
    assert all("runtime_ms" not in r for r in rows)


def test_verify_text_format(capsys):
    code, out, _ = run_cli(capsys, "verify", "claim", "--range", "7:9", "--format", "text")
    assert code == 0
    assert out.strip().splitlines()[-1].startswith("6 passed, 0 failed")


def test_verify_failure_exit_code(capsys):
    # the n = 6 instance of the k = 2 rule does not hold (see the README)
    code, out, _ = run_cli(capsys, "verify", "thm7", "--k", "2", "--range", "6:6", "--no-timing")
    assert code == 1
    assert any(r["status"] == "fail" for r in json.loads(out))


@pytest.mark.parametrize(
    "argv",
    [("thm6", "--range", "3:8"), ("thm6", "--range", "7:7"), ("thm8", "--range", "5:9"),
     ("thm7", "--range", "9:7"), ("thm1", "--samples", "0")],
)
def test_verify_infeasible_ranges(capsys, argv):
    code, _, err = run_cli(capsys, "verify", *argv)
    assert code == 2
    assert "refused" in err


def test_verify_bad_range_syntax(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["verify", "thm7", "--range", "6-9"])
    assert exc.value.code == 2


def test_verify_jobs_do_not_change_output(capsys):
    argv = ("verify", "thm7", "--k", "1", "--range", "3:8", "--no-timing")
    _, one, _ = run_cli(capsys, *argv, "--jobs", "1")
    _, two, _ = run_cli(capsys, *argv, "--jobs", "2")
    assert one == two


def test_module_entry_point():
    out = subprocess.run([sys.executable, "-m", "fixsub.cli", "graphgen", "complete", "4"],
                         capture_output=True, text=True, check=True).stdout
    assert out.strip() == "C~"
