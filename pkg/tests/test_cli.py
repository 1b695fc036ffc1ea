import json
import subprocess
import sys

import pytest

from oddholes import cycle, parse_graph6, petersen, write_graph6
from oddholes.cli import EXIT_BUDGET, EXIT_INPUT, EXIT_OK, main


def run_cli(argv, capsys):
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_analyze_petersen(tmp_path, capsys):
    p = tmp_path / "pet.g6"
    p.write_text(write_graph6(petersen()) + "\n")
    code, out, _ = run_cli(["analyze", str(p)], capsys)
    assert code == EXIT_OK
    assert "girth=5" in out and "member (ell=2)" in out and "chi=3" in out
    assert "odd-K4: found" in out


def test_analyze_json_schema(tmp_path, capsys):
    p = tmp_path / "c11.g6"
    p.write_text(write_graph6(cycle(11)) + "\n")
    code, out, _ = run_cli(
        ["analyze", str(p), "--json", "--no-timings"], capsys
    )
    assert code == EXIT_OK
    doc = json.loads(out)
    assert len(doc) == 1
    rep = doc[0]
    assert rep["girth"] == 11
    assert rep["gell"]["member"] and rep["gell"]["ell"] == 5
    assert rep["odd_k4"]["status"] == "absent-certified"
    assert "wall_time" not in rep


def test_analyze_malformed_names_line(tmp_path, capsys):
    p = tmp_path / "bad.g6"
    p.write_text("Dhc\nDh\n")
    code, _, err = run_cli(["analyze", str(p)], capsys)
    assert code == EXIT_INPUT
    assert "line 2" in err


def test_analyze_missing_file(capsys):
    code, _, err = run_cli(["analyze", "/nonexistent/file.g6"], capsys)
    assert code == EXIT_INPUT and "error:" in err


def test_generate_roundtrip(tmp_path, capsys):
    out = tmp_path / "host.g6"
    code, _, _ = run_cli(
        ["generate", "k4sub", "5", "5", "1", "--out", str(out)], capsys
    )
    assert code == EXIT_OK
    record = out.read_text().strip()
    assert record == "SK_GIE??G?c@O???_?G_@G????G??G_?C"
    G = parse_graph6(record)
    assert G.n == 20 and G.m == 22
    manifest = json.loads((tmp_path / "host.g6.manifest.json").read_text())
    assert manifest[0]["provenance"] == "k4sub(5,5,1)"


def test_generate_stdout(capsys):
    code, out, _ = run_cli(["generate", "cycle", "7"], capsys)
    assert code == EXIT_OK
    assert parse_graph6(out.strip()).n == 7


def test_generate_bad_params(capsys):
    code, _, err = run_cli(["generate", "theta", "1", "1", "2"], capsys)
    assert code == EXIT_INPUT and "error:" in err
    code, _, _ = run_cli(["generate", "cycle"], capsys)
    assert code == EXIT_INPUT
    code, _, _ = run_cli(["generate", "random", "10", "11", "5"], capsys)
    assert code == EXIT_INPUT  # --seed required


def test_generate_random_seeded(tmp_path, capsys):
    a = tmp_path / "a.g6"
    b = tmp_path / "b.g6"
    for out in (a, b):
        code, _, _ = run_cli(
            ["generate", "random", "14", "15", "5", "--seed", "77", "--out", str(out)],
            capsys,
        )
        assert code == EXIT_OK
    assert a.read_text() == b.read_text()


def test_lemmas_on_files(tmp_path, capsys):
    p = tmp_path / "in.g6"
    p.write_text(write_graph6(petersen()) + "\n" + write_graph6(cycle(9)) + "\n")
    code, out, _ = run_cli(
        ["lemmas", str(p), "--json", "--no-timings"], capsys
    )
    assert code == EXIT_OK
    doc = json.loads(out)
    assert len(doc["graphs"]) == 2
    assert doc["summary"]["violations"] == []


def test_lemmas_filter_and_unknown(tmp_path, capsys):
    p = tmp_path / "in.g6"
    p.write_text(write_graph6(cycle(9)) + "\n")
    code, out, _ = run_cli(
        ["lemmas", str(p), "--json", "--no-timings", "--lemma", "L2.5"], capsys
    )
    assert code == EXIT_OK
    doc = json.loads(out)
    assert list(doc["summary"]["instances"]) == ["L2.5"]
    code, _, err = run_cli(["lemmas", str(p), "--lemma", "L9.9"], capsys)
    assert code == EXIT_INPUT and "unknown check" in err


def test_lemmas_budget_strict(tmp_path, capsys):
    p = tmp_path / "in.g6"
    p.write_text(write_graph6(petersen()) + "\n")
    code, _, _ = run_cli(
        ["lemmas", str(p), "--budget", "1", "--strict", "--json", "--no-timings"],
        capsys,
    )
    assert code == EXIT_BUDGET
    # without --strict budget exhaustion is not an error
    code, _, _ = run_cli(
        ["lemmas", str(p), "--budget", "1", "--json", "--no-timings"], capsys
    )
    assert code == EXIT_OK


def test_budget_env_var(tmp_path, capsys, monkeypatch):
    p = tmp_path / "in.g6"
    p.write_text(write_graph6(petersen()) + "\n")
    monkeypatch.setenv("ODDHOLE_BUDGET", "1")
    code, _, _ = run_cli(["lemmas", str(p), "--strict", "--json", "--no-timings"], capsys)
    assert code == EXIT_BUDGET
    monkeypatch.setenv("ODDHOLE_BUDGET", "junk")
    code, _, err = run_cli(["lemmas", str(p)], capsys)
    assert code == EXIT_INPUT and "ODDHOLE_BUDGET" in err


def test_oddk4_command(tmp_path, capsys):
    p = tmp_path / "in.g6"
    p.write_text(write_graph6(cycle(11)) + "\n" + write_graph6(petersen()) + "\n")
    code, out, _ = run_cli(["oddk4", str(p), "--json", "--no-timings"], capsys)
    assert code == EXIT_OK
    doc = json.loads(out)
    assert doc["findings"][0]["status"] == "absent-certified"
    assert doc["findings"][1]["status"] == "found"
    assert doc["findings"][1]["witness"]["face_lengths"] == [5, 5, 5, 5]


def test_oddk4_budget_and_certify(tmp_path, capsys):
    p = tmp_path / "in.g6"
    p.write_text(write_graph6(petersen()) + "\n")
    code, out, _ = run_cli(
        ["oddk4", str(p), "--budget", "3", "--strict", "--json", "--no-timings"],
        capsys,
    )
    assert code == EXIT_BUDGET
    assert json.loads(out)["findings"][0]["status"] == "absent-budget"
    # --certify ignores the budget and completes the search
    code, out, _ = run_cli(
        ["oddk4", str(p), "--budget", "3", "--certify", "--json", "--no-timings"],
        capsys,
    )
    assert code == EXIT_OK
    assert json.loads(out)["findings"][0]["status"] == "found"


def test_stdin_input(tmp_path):
    proc = subprocess.run(
        [sys.executable, "-m", "oddholes", "oddk4", "-", "--json", "--no-timings"],
        input=write_graph6(cycle(9)) + "\n",
        capture_output=True,
        text=True,
    )
    assert proc.returncode == EXIT_OK
    assert json.loads(proc.stdout)["findings"][0]["id"] == "<stdin>:1"


def test_console_script_entrypoint():
    proc = subprocess.run(
        [sys.executable, "-m", "oddholes", "--help"], capture_output=True, text=True
    )
    assert proc.returncode == 0
    assert "analyze" in proc.stdout and "lemmas" in proc.stdout
