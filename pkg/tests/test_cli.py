import json
import subprocess
import sys
from pathlib import Path

import pytest
from hypothesis import HealthCheck, given, settings, strategies as st

import oracles
from weakhopf.cli import run_command
from weakhopf.fileio import (ParseError, algebra_from_dict, algebra_to_dict, dumps, loads_json,
                             modules_from_dict, modules_to_dict, read_algebra, read_modules)

DATA = Path(__file__).resolve().parent.parent / "data"
ALGEBRAS = sorted(p.name for p in DATA.glob("*.alg"))


def run(tmp_path, *argv, name="report.json"):
    out = tmp_path / name
    code, report = run_command([*argv, "--out", str(out)])
    return code, report, out


# -- file formats --------------------------------------------------------------------------

@pytest.mark.parametrize("name", ALGEBRAS)
def test_algebra_file_fixpoint(name):
    raw = (DATA / name).read_text()
    H, R, _ = read_algebra(DATA / name)
    text = dumps(algebra_to_dict(H, R))
    assert text == raw
    H2, R2 = algebra_from_dict(loads_json(text))
    assert dumps(algebra_to_dict(H2, R2)) == text


@pytest.mark.parametrize("name", ["s3", "pair2"])
def test_modules_file_fixpoint(name):
    H, _, _ = read_algebra(DATA / f"{name}.alg")
    d = loads_json((DATA / f"{name}.modules.json").read_text())
    factories = modules_from_dict(d, H.field)
    assert len(factories) == len(d["modules"])
    from weakhopf.comod import RightAModule

    class FakeE:
        def __init__(self, n):
            self.dim = n

    entries = []
    for m in d["modules"]:
        U = factories[(m["component"], m["block"])](FakeE(len(m["action"])))
        assert isinstance(U, RightAModule)
        entries.append((m["component"], m["block"], U))
    assert modules_to_dict(entries, H.field) == d


@pytest.mark.parametrize("doc,msg", [
    ({"format": "nope"}, "not a"),
    ({"format": "weakhopf-algebra", "version": 7}, "version"),
    ({"format": "weakhopf-algebra", "version": 1, "dim": 0}, "dim"),
    ({"format": "weakhopf-algebra", "version": 1, "dim": 1, "mult": [[0, 0, 1, "1"]]}, "out of range"),
    ({"format": "weakhopf-algebra", "version": 1, "dim": 1, "mult": [[0, 0, 0, 1]]}, "string"),
    ({"format": "weakhopf-algebra", "version": 1, "dim": 1, "mult": [[0, 0, 0, "x/"]]}, "mult"),
    ({"format": "weakhopf-algebra", "version": 1, "dim": 1, "mult": []}, "unit"),
])
def test_parse_errors(doc, msg):
    with pytest.raises(ParseError, match=msg):
        algebra_from_dict(doc)


@settings(max_examples=60, deadline=None, suppress_health_check=[HealthCheck.function_scoped_fixture])
@given(st.recursive(st.none() | st.booleans() | st.integers() | st.text(max_size=5),
                    lambda c: st.lists(c, max_size=4) | st.dictionaries(st.text(max_size=6), c, max_size=4),
                    max_leaves=12))
def test_garbage_never_crashes(tmp_path_factory, doc):
    path = tmp_path_factory.mktemp("g") / "x.alg"
    path.write_text(json.dumps(doc))
    code, _ = run_command(["verify", str(path), "--out", str(path.with_suffix(".out"))])
    assert code == 2


@settings(max_examples=30, deadline=None)
@given(st.lists(st.tuples(st.integers(-9, 9), st.integers(1, 9)), min_size=1, max_size=4))
def test_coefficient_strings_roundtrip(pairs):
    # a nonsense R, only to push coefficients through the format
    from fractions import Fraction
    H, _, _ = read_algebra(DATA / "s3.alg")
    R = {(i, i): H.field.parse(str(Fraction(p, q))) for i, (p, q) in enumerate(pairs) if p}
    d = algebra_to_dict(H, R)
    H2, R2 = algebra_from_dict(loads_json(dumps(d)))
    assert R2 == R


# -- commands and exit codes ------------------------------------------------------------------------

def test_verify_s3_passes(tmp_path):
    code, report, out = run(tmp_path, "verify", str(DATA / "s3.alg"))
    assert code == 0 and report["passed"]
    assert json.loads(out.read_text()) == report
    assert report["schema"] == "weakhopf-report" and report["schema_version"] == 1
    assert [s["title"] for s in report["sections"]]


def test_verify_broken_names_axiom4(tmp_path):
    code, report, _ = run(tmp_path, "verify", str(DATA / "broken.alg"))
    assert code == 1 and not report["passed"]
    failed = [c for s in report["sections"] for c in s["checks"] if not c["passed"]]
    names = {c["name"] for c in failed}
    assert "axiom4_target" in names
    assert all("witness" in c for c in failed)


def test_parse_error_exit_2(tmp_path):
    bad = tmp_path / "bad.alg"
    bad.write_text("{not json")
    assert run_command(["verify", str(bad)])[0] == 2
    assert run_command(["verify"])[0] == 2
    assert run_command(["frobnicate", "x"])[0] == 2
    assert run_command(["verify", str(DATA / "s3.alg"), "--precision", "3"])[0] == 2


def test_io_error_exit_3(tmp_path):
    assert run_command(["verify", str(tmp_path / "missing.alg")])[0] == 3
    code, _ = run_command(["verify", str(DATA / "s3.alg"), "--out", str(tmp_path / "no" / "dir.json")])
    assert code == 3


def test_reports_byte_identical(tmp_path):
    for fmt in ("json", "text"):
        a = run(tmp_path, "decompose", str(DATA / "s3.alg"), "--format", fmt, name=f"a.{fmt}")[2]
        b = run(tmp_path, "decompose", str(DATA / "s3.alg"), "--format", fmt, name=f"b.{fmt}")[2]
        assert a.read_bytes() == b.read_bytes()


def test_text_format(tmp_path):
    code, _, out = run(tmp_path, "verify", str(DATA / "broken.alg"), "--format", "text")
    text = out.read_text()
    assert code == 1
    assert text.startswith("verify: FAIL")
    assert "FAIL  axiom4_target  witness=" in text


def test_timing_is_opt_in(tmp_path):
    _, plain, _ = run(tmp_path, "verify", str(DATA / "pair2.alg"))
    _, timed, _ = run(tmp_path, "verify", str(DATA / "pair2.alg"), "--timing")
    assert "timing" not in plain and set(timed["timing"]) >= {"wha_verify", "qt_verify"}


def test_decompose_s3(tmp_path):
    code, report, _ = run(tmp_path, "decompose", str(DATA / "s3.alg"))
    p = report["payload"]
    assert code == 0
    assert sorted(p["component_dims"]) == [1, 2, 3]
    r = p["components"]
    assert p["hom_yd_dims"] == [[int(i == j) for j in range(r)] for i in range(r)]


def test_enumerate_s3_with_modules(tmp_path):
    code, report, _ = run(tmp_path, "enumerate-yd", str(DATA / "s3.alg"), "--modules",
                          str(DATA / "s3.modules.json"))
    p = report["payload"]
    assert code == 0
    assert p["simple_count"] == 8 and p["simple_dims"] == oracles.dpr_dims(3)
    assert p["sum_of_squares"] == 36 and p["all_constructed"]
    assert p["constructed_sum_of_squares"] == 36


def test_enumerate_s3_counts_without_modules(tmp_path):
    code, report, _ = run(tmp_path, "enumerate-yd", str(DATA / "s3.alg"))
    assert code == 0
    assert report["payload"]["simple_dims"] == oracles.dpr_dims(3)
    assert not report["payload"]["all_constructed"]


def test_enumerate_pair_groupoid(tmp_path):
    code, report, _ = run(tmp_path, "enumerate-yd", str(DATA / "pair2.alg"), "--modules",
                          str(DATA / "pair2.modules.json"))
    assert code == 0 and report["payload"]["simple_dims"] == [2]


def test_enumerate_foreign_modules_do_not_parse(tmp_path):
    # cyclotomic coefficients against a rational algebra
    code, _ = run_command(["enumerate-yd", str(DATA / "pair2.alg"), "--modules", str(DATA / "s3.modules.json")])
    assert code == 2


def test_enumerate_bogus_module_fails(tmp_path):
    d = json.loads((DATA / "s3.modules.json").read_text())
    first = d["modules"][0]
    first["action"] = [[[0, 0, "1"], [1, 1, "1"]] for _ in first["action"]]
    bogus = tmp_path / "bogus.json"
    bogus.write_text(json.dumps(d))
    code, report, _ = run(tmp_path, "enumerate-yd", str(DATA / "s3.alg"), "--modules", str(bogus))
    failed = [c["name"] for s in report["sections"] for c in s["checks"] if not c["passed"]]
    assert code == 1
    assert failed == [f"component_{first['component']}_block_{first['block']}_user_module"]
    assert not report["payload"]["all_constructed"]


def test_modules_digest_changes_input_hash(tmp_path):
    _, a, _ = run(tmp_path, "enumerate-yd", str(DATA / "s3.alg"), name="a.json")
    _, b, _ = run(tmp_path, "enumerate-yd", str(DATA / "s3.alg"), "--modules",
                  str(DATA / "s3.modules.json"), name="b.json")
    assert a["input_sha256"] != b["input_sha256"]


def test_example_group_emits_corpus_file(tmp_path):
    emitted = tmp_path / "s3.alg"
    code, report, _ = run(tmp_path, "example", "group", str(DATA / "s3.table.json"), "--field",
                          "cyclotomic:3", "--emit", str(emitted))
    assert code == 0 and report["payload"]["dim_H"] == 6
    assert emitted.read_bytes() == (DATA / "s3.alg").read_bytes()


@pytest.mark.parametrize("kind,table,dim", [("groupoid", "pair2.table.json", 4),
                                            ("double", "z2.table.json", 4),
                                            ("groupoid", "z2.table.json", 2)])
def test_example_kinds(tmp_path, kind, table, dim):
    code, report, _ = run(tmp_path, "example", kind, str(DATA / table))
    assert code == 0 and report["payload"]["dim_H"] == dim


def test_example_rejects_groupoid_for_double(tmp_path):
    assert run_command(["example", "double", str(DATA / "pair2.table.json")])[0] == 2
    assert run_command(["example", "group", str(DATA / "s3.table.json"), "--field", "reals"])[0] == 2


def test_module_entry_point(tmp_path):
    out = tmp_path / "r.json"
    proc = subprocess.run([sys.executable, "-m", "weakhopf", "verify", str(DATA / "z2.table.json")],
                          capture_output=True, text=True)
    assert proc.returncode == 2 and "weakhopf:" in proc.stderr
    proc = subprocess.run([sys.executable, "-m", "weakhopf", "verify", str(DATA / "pair2.alg"),
                           "--out", str(out)], capture_output=True, text=True)
    assert proc.returncode == 0 and json.loads(out.read_text())["passed"]
    v = subprocess.run([sys.executable, "-m", "weakhopf", "--version"], capture_output=True, text=True)
    assert v.stdout.startswith("weakhopf ")


def test_read_modules_returns_raw_bytes():
    H, _, _ = read_algebra(DATA / "s3.alg")
    factories, raw = read_modules(DATA / "s3.modules.json", H.field)
    assert raw.startswith(b"{") and factories


def test_corpus_regenerates_identically(tmp_path):
    script = DATA.parent / "demos" / "build_corpus.py"
    subprocess.run([sys.executable, str(script), str(tmp_path)], check=True, capture_output=True)
    for p in DATA.iterdir():
        assert (tmp_path / p.name).read_bytes() == p.read_bytes(), p.name
