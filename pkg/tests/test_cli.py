import io

import pytest

from conftest import DATA
from kusub.cli import run
from kusub.io import bundled_corpus_dir

CORPUS = bundled_corpus_dir()

A4_REPORT = """\
group: A4
order: 12
pi: 2 3
soluble: true
supersoluble: false
p2: true
p3: true
uresidual_order: 4
labels: A B-I
equivalence: ok
witnesses: -
"""


def call(*argv):
    out = io.StringIO()
    code = run(list(argv), out)
    return code, out.getvalue()


def test_classify_a4_golden():
    assert call("classify", str(CORPUS / "A4.expr")) == (0, A4_REPORT)


def test_classify_generator_file_and_cayley_table():
    code, text = call("classify", str(DATA / "C7^2_S3xC5.grp"), "--cap", "5000")
    assert code == 0 and "labels: D-2" in text
    code, text = call("classify", str(DATA / "C2.tbl"))
    assert code == 0 and "labels: SUPERSOLUBLE" in text


def test_analyze():
    code, text = call("analyze", str(CORPUS / "S4.expr"))
    assert code == 0
    rows = dict(line.split(": ", 1) for line in text.splitlines())
    assert rows["order"] == "24" and rows["subgroups"] == "30"
    assert rows["chief_factors"] == "4 3 2" and rows["uresidual_order"] == "4"
    assert rows["supersoluble"] == "false" and rows["soluble"] == "true"


def test_lattice_listing():
    code, text = call("lattice", str(CORPUS / "S4.expr"))
    assert code == 0
    lines = text.splitlines()
    assert lines[2] == "subgroups: 30" and lines[3] == "classes: 11"
    assert len(lines) == 4 + 30


def test_build_round_trips(tmp_path):
    code, text = call("build", "--expr", "directProduct(quaternion(8), cyclic(3))", "--name", "Q8xC3")
    assert code == 0 and "order 24" in text
    path = tmp_path / "Q8xC3.grp"
    path.write_text(text)
    code, report = call("classify", str(path))
    assert code == 0 and "labels: SUPERSOLUBLE" in report


def test_verify_is_deterministic_and_jobs_agree():
    a = call("verify", "--theorem", "ALL")
    b = call("verify", "--theorem", "ALL")
    c = call("verify", "--theorem", "ALL", "--jobs", "2")
    assert a[0] == 0
    assert a == b == c
    assert "summary theorem=ALL groups=97 errors=0" in a[1]


def test_verify_report_file(tmp_path):
    report = tmp_path / "out.txt"
    code, text = call("verify", "--theorem", "C", "--report", str(report))
    assert code == 0 and report.read_text() == text


@pytest.mark.parametrize("argv", [
    (),
    ("frobnicate",),
    ("classify",),
    ("verify", "--theorem", "E"),
    ("verify", "--jobs", "0"),
    ("build",),
])
def test_usage_errors(argv):
    assert call(*argv)[0] == 2


def test_bad_inputs(tmp_path):
    bad = tmp_path / "bad.grp"
    bad.write_text("name bad\ndegree 3\ngen (1 1 2)\n")
    assert call("classify", str(bad))[0] == 2
    assert call("analyze", str(tmp_path / "missing.grp"))[0] == 2
    assert call("build", "--expr", "cyclic(")[0] == 2
    assert call("classify", str(CORPUS / "S5.expr"), "--cap", "100")[0] == 2


def test_verify_with_malformed_member(tmp_path):
    (tmp_path / "C6.expr").write_text("name C6\nexpr cyclic(6)\norder 6\n")
    (tmp_path / "bad.tbl").write_text("2\n2 1\n1 2\n")
    code, text = call("verify", "--corpus", str(tmp_path))
    assert code == 2
    assert "errors=1" in text


def test_verify_rejects_duplicate_names(tmp_path):
    (tmp_path / "a.expr").write_text("name G\nexpr cyclic(6)\n")
    (tmp_path / "b.expr").write_text("name G\nexpr cyclic(5)\n")
    assert call("verify", "--corpus", str(tmp_path))[0] == 2


def test_cache_directory(tmp_path):
    first = call("classify", str(CORPUS / "SL2_3.grp"), "--cache", str(tmp_path))
    assert list(tmp_path.iterdir())
    second = call("classify", str(CORPUS / "SL2_3.grp"), "--cache", str(tmp_path))
    assert first == second and first[0] == 0
