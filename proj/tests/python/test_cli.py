import json
import os
import subprocess

import pytest

CLI = os.environ.get("SILTED_CLI", "silted")
DATA = os.environ.get("SILTED_DATA", os.path.join(os.path.dirname(__file__), "..", "..", "data", "quivers"))


def run(*args):
    return subprocess.run([CLI, *args], capture_output=True, text=True)


def data(name):
    return os.path.join(DATA, name)


def test_ar_two_term_ascii_for_a2():
    out = run("ar", data("A2.quiver"), "--two-term", "--format", "ascii")
    assert out.returncode == 0
    cells = out.stdout.split()
    assert len(cells) == 5
    assert "11[1]" in cells


def test_ar_dot_for_d4_has_twelve_vertices():
    out = run("ar", data("D4.quiver"), "--format", "dot")
    assert out.returncode == 0
    assert out.stdout.count("[label=") == 12


def test_silting_counts():
    out = run("silting", data("D5.json"), "--format", "json")
    assert json.loads(out.stdout)["count"] == 182
    out = run("silting", data("A3.quiver"), "--tilting-only", "--format", "json")
    assert json.loads(out.stdout)["count"] == 5


def test_silting_oracle_on_a4():
    out = run("silting", data("A4.quiver"), "--oracle", "--format", "csv")
    assert out.returncode == 0
    assert len(out.stdout.strip().splitlines()) == 43


def test_classify_a4_families():
    out = run("classify", data("A4.quiver"), "--format", "json", "--jobs", "2")
    report = json.loads(out.stdout)
    assert len(report["classes"]) == 15
    assert report["families"] == {"A2⊔A2": 1, "A3⊔A1": 4, "A4": 10}


def test_classify_d5_strictly_shod():
    out = run("classify", data("D5.json"), "--format", "json")
    report = json.loads(out.stdout)
    assert len(report["classes"]) == 62
    assert report["families"]["strictly shod"] == 4


def test_output_is_independent_of_jobs(tmp_path):
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    assert run("classify", data("D4.quiver"), "--format", "csv", "--jobs", "1", "--out", str(a)).returncode == 0
    assert run("classify", data("D4.quiver"), "--format", "csv", "--jobs", "3", "--out", str(b)).returncode == 0
    assert a.read_bytes() == b.read_bytes()


@pytest.mark.parametrize(
    "text,code",
    [
        ("vertices 1 2\narrow a:1->2\narrow b:2->1\n", 2),
        ("vertices 1 2\narrow a:1->\n", 2),
        ("vertices 1 2 3 4 5\narrows a:1->5 b:2->5 c:3->5 d:4->5\n", 3),
        ("vertices 1 2 3\narrows a:1->2 b:2->3 c:1->3\n", 3),
    ],
)
def test_exit_codes(tmp_path, text, code):
    path = tmp_path / "q.quiver"
    path.write_text(text)
    assert run("silting", str(path)).returncode == code
    assert run("ar", str(path)).returncode == code


def test_missing_file_is_a_parse_error():
    assert run("classify", "/nonexistent/q.quiver").returncode == 2


def test_fixture_suite_passes():
    out = run("paper-suite", "--jobs", "2")
    assert out.returncode == 0
    assert out.stdout.count("PASS") == 7
