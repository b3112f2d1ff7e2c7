import csv
import io
import json
import math

import pytest

from so3_invariants.cli import EXIT_FAIL, EXIT_OK, EXIT_USAGE, TABLE_COLUMNS, main, oracle_checks
from so3_invariants.surgery import Presentation


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


def test_invariant_json(tmp_path):
    path = tmp_path / "rp3.json"
    path.write_text(Presentation.from_framings([2]).to_json())
    code, text = run("invariant", str(path), "--r", "5,7", "--format", "json")
    assert code == EXIT_OK
    rows = json.loads(text)
    assert [row["r"] for row in rows] == [5, 7]
    lo, hi = rows[0]["modulus"]
    assert lo <= (1 + math.sqrt(5)) / 2 <= hi
    assert rows[0]["q_A_gt_2"] is False


def test_invariant_list_file(tmp_path):
    path = tmp_path / "many.json"
    items = [Presentation.from_framings([0]).to_dict(), Presentation.from_framings([4, 2], [(0, 1)]).to_dict()]
    path.write_text(json.dumps(items))
    code, text = run("invariant", str(path), "--format", "csv")
    assert code == EXIT_OK
    rows = list(csv.DictReader(io.StringIO(text)))
    assert [row["index"] for row in rows] == ["0", "1"]


def test_invariant_missing_file(tmp_path):
    code, _ = run("invariant", str(tmp_path / "missing.json"))
    assert code == EXIT_USAGE


def test_invariant_bad_root(tmp_path):
    path = tmp_path / "rp3.json"
    path.write_text(Presentation.from_framings([2]).to_json())
    assert run("invariant", str(path), "--root", "nonsense")[0] == EXIT_USAGE
    assert run("invariant", str(path), "--r", "6")[0] == EXIT_USAGE


def test_verify_single_suite():
    code, text = run("verify", "omuminus", "--format", "csv")
    assert code == EXIT_OK
    rows = list(csv.DictReader(io.StringIO(text)))
    assert rows and all(row["status"] == "PASS" for row in rows)


def test_verify_unknown_suite():
    assert run("verify", "bogus")[0] == EXIT_USAGE


def test_verify_nonprime_level_fails_cleanly():
    code, _ = run("verify", "gauss", "--r", "9")
    assert code not in (EXIT_OK, EXIT_FAIL)


def test_oracle_r5():
    rows = oracle_checks(5)
    assert rows and all(row["status"] == "PASS" for row in rows)
    assert {row["table"] for row in rows} == {"delta", "twist", "hopf"}
    assert sum(row["table"] == "hopf" for row in rows) == 16


def test_oracle_command():
    code, text = run("oracle", "--r", "5", "--format", "json")
    assert code == EXIT_OK
    assert all(row["status"] == "PASS" for row in json.loads(text))


def test_table_csv():
    code, text = run("table", "rp3-powers:3", "bz:1,2,-1,3", "--r", "5,7", "--format", "csv")
    assert code == EXIT_OK
    rows = list(csv.DictReader(io.StringIO(text)))
    assert list(rows[0]) == TABLE_COLUMNS
    bz = [row for row in rows if row["family"] == "bz"]
    assert [row["q_A_gt_2"] for row in bz] == ["True", "True"]
    rp3 = [row for row in rows if row["family"] == "rp3-powers"]
    assert abs(float(rp3[0]["modulus_mid"]) - 1.6180339887**3) < 1e-8


def test_table_empty_and_errors():
    code, text = run("table", "--format", "csv")
    assert code == EXIT_OK
    assert text.strip() == ",".join(TABLE_COLUMNS)
    assert run("table", "bz:1,2,3")[0] == EXIT_USAGE
    assert run("table", "torus:3")[0] == EXIT_USAGE
    assert run("table", "lens:x")[0] == EXIT_USAGE


def test_table_deterministic():
    assert run("table", "lens:4,2", "--format", "csv") == run("table", "lens:4,2", "--format", "csv")


def test_pretty_output():
    code, text = run("table", "lens:4,2", "--r", "5")
    assert code == EXIT_OK
    assert text.splitlines()[0].split() == TABLE_COLUMNS


def test_argparse_usage_exit():
    with pytest.raises(SystemExit) as info:
        main(["frobnicate"])
    assert info.value.code == 2
