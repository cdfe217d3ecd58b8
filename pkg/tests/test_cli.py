import csv
import io
import json
import subprocess
import sys
import time
from pathlib import Path

import jsonschema
import pytest

from oriented_ramsey.cli import main
from oriented_ramsey.constructions import witness
from oriented_ramsey.digraph import format_arc_list, parse_arc_list

SCHEMAS = Path(__file__).parents[1] / "src/oriented_ramsey/schemas"


def schema(name):
    return json.loads((SCHEMAS / f"{name}.schema.json").read_text())


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def w8_file(tmp_path):
    path = tmp_path / "w8.arcs"
    path.write_text(format_arc_list(witness("W8")), newline="\n")
    return path


def test_verify_w14(capsys):
    code, out, _ = run(capsys, "verify", "w14", "--format", "json")
    assert code == 0
    data = json.loads(out)
    jsonschema.validate(data, schema("verify"))
    (section,) = data["witnesses"]
    assert section["free"] and section["arc_count"] == 42 and section["independence_number"] == 3
    assert (section["m"], section["n"]) == (4, 3)


def test_verify_all_text(capsys):
    start = time.perf_counter()
    code, out, _ = run(capsys, "verify", "all")
    assert time.perf_counter() - start < 1.0
    assert code == 0
    assert out.count("-free: yes") == 3
    assert "[W8]" in out and "[W14]" in out and "[W22]" in out
    code2, out2, _ = run(capsys, "verify", "all")
    assert (code2, out2) == (code, out)


def test_verify_unknown(capsys):
    code, _, err = run(capsys, "verify", "w99")
    assert code == 2 and "unknown witness" in err


def test_check_free(capsys, w8_file):
    code, out, _ = run(capsys, "check", str(w8_file), "--m", "3", "--n", "3")
    assert code == 0 and out.startswith("free")


def test_check_certificate(capsys, w8_file):
    code, out, _ = run(capsys, "check", str(w8_file), "--m", "2", "--n", "3", "--format", "json")
    assert code == 1
    data = json.loads(out)
    jsonschema.validate(data, schema("check"))
    assert data["certificate"]["kind"] == "independent-set"
    assert len(data["certificate"]["vertices"]) == 2


def test_check_malformed(capsys, tmp_path):
    bad = tmp_path / "bad.arcs"
    bad.write_text("n 3\n0 1\n1 0\n")
    code, _, err = run(capsys, "check", str(bad), "--m", "2", "--n", "3")
    assert code == 2 and "line 3" in err
    code, _, _ = run(capsys, "check", str(tmp_path / "missing.arcs"), "--m", "2", "--n", "3")
    assert code == 2


def test_construct(capsys, tmp_path):
    code, out, _ = run(capsys, "construct", "--spec", "k=14; all=+1,-2; even=+4; odd=-6")
    assert code == 0 and parse_arc_list(out) == witness("W14")
    target = tmp_path / "w22.arcs"
    code, out, _ = run(capsys, "construct", "--witness", "w22", "--out", str(target))
    assert code == 0 and out == ""
    assert parse_arc_list(target.read_text()) == witness("W22")
    code, _, err = run(capsys, "construct", "--spec", "k=4; all=+2")
    assert code == 2 and "reverses" in err


def test_bounds_exact_rows(capsys):
    code, out, _ = run(capsys, "bounds", "--m-max", "5", "--n-max", "3", "--format", "json")
    assert code == 0
    rows = json.loads(out)
    jsonschema.validate(rows, schema("bounds"))
    cells = {(r["m"], r["n"]): r for r in rows}
    assert (cells[4, 3]["lower"], cells[4, 3]["upper"], cells[4, 3]["exact"]) == (15, 15, True)
    assert (cells[5, 3]["lower"], cells[5, 3]["upper"], cells[5, 3]["exact"]) == (23, 23, True)


def test_bounds_known_value_beats_exponential(capsys):
    code, out, _ = run(capsys, "bounds", "--m-max", "2", "--n-max", "6", "--format", "csv")
    rows = {(r["m"], r["n"]): r for r in csv.DictReader(io.StringIO(out))}
    row = rows["2", "6"]
    assert (row["lower"], row["upper"], row["exact"]) == ("28", "28", "true")


def test_bounds_csv_header(capsys):
    code, out, _ = run(capsys, "bounds", "--m-max", "8", "--n-max", "8", "--format", "csv")
    assert code == 0
    assert out.splitlines()[0] == "m,n,lower,upper,exact,lower_src,upper_src"
    assert len(out.splitlines()) == 1 + 7 * 7


def test_bounds_range(capsys):
    code, _, _ = run(capsys, "bounds", "--m-max", "21")
    assert code == 2


def test_search_33(capsys):
    code, out, err = run(capsys, "search", "--m", "3", "--n", "3", "--max-order", "9",
                         "--format", "json", "--threads", "1")
    assert code == 0
    data = json.loads(out)
    jsonschema.validate(data, schema("search_report"))
    assert data["extremal_order"] == 8
    assert data["per_order"][7]["classes"] == 1
    assert "order 9: 0 classes" in err


def test_search_23_text(capsys):
    code, out, _ = run(capsys, "search", "--m", "2", "--n", "3", "--max-order", "5")
    assert code == 0 and "extremal order: 3" in out and "r(I_2, L_3) = 4" in out


def test_search_guard(capsys):
    code, out, err = run(capsys, "search", "--m", "3", "--n", "3", "--max-order", "9",
                         "--class-cap", "10", "--format", "json")
    assert code == 3 and "aborted" in err
    data = json.loads(out)
    jsonschema.validate(data, schema("search_report"))
    assert [lv["classes"] for lv in data["per_order"]] == [1, 2, 5]


def test_cayley(capsys):
    code, out, _ = run(capsys, "cayley", "--group", "cyclic", "--order", "14", "--m", "4", "--n", "3",
                       "--format", "json")
    assert code == 0
    data = json.loads(out)
    jsonschema.validate(data, schema("cayley"))
    assert (data["scanned"], data["free"]) == (729, 0)


def test_usage_errors(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["verify", "all", "--bogus"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main([])
    assert exc.value.code == 2
    code, _, _ = run(capsys, "verify", "all", "--format", "csv")
    assert code == 2
    code, _, _ = run(capsys, "cayley", "--group", "dihedral", "--order", "7", "--m", "3", "--n", "3")
    assert code == 2


def test_module_entry_point(tmp_path):
    proc = subprocess.run(
        [sys.executable, "-m", "oriented_ramsey", "verify", "all", "--format", "json"],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["passed"] is True
