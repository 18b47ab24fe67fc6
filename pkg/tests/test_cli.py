import csv
import io
import json
import subprocess
import sys

import pytest

from pytuple.cli import main
from pytuple.triples import all_triples
from pytuple.tuples import all_completions


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_triples_csv_leg_792(capsys):
    code, out, _ = run(capsys, "triples", "792", "--class", "primitive", "--format", "csv")
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(out)))
    assert [(r["delta"], r["b"], r["c"], r["primitive"]) for r in rows] == [
        ("2", "156815", "156817", "true"),
        ("32", "9785", "9817", "true"),
        ("162", "1855", "2017", "true"),
        ("242", "1175", "1417", "true"),
    ]


def test_triples_empty_is_success(capsys):
    code, out, _ = run(capsys, "triples", "2", "--format", "json")
    assert code == 0
    assert json.loads(out)["solutions"] == []


def test_triples_nonprimitive_60(capsys):
    code, out, _ = run(capsys, "triples", "60", "--class", "non-primitive", "--format", "json")
    doc = json.loads(out)
    assert code == 0 and len(doc["solutions"]) == 9
    assert all(r["primitive"] is False for r in doc["solutions"])


def test_table_format_layout(capsys):
    code, out, _ = run(capsys, "triples", "60", "--class", "non-primitive")
    lines = out.splitlines()
    assert lines[0].split()[0] == "delta"
    assert "(60, 448, 452)" in lines[2]


@pytest.mark.parametrize("a, total, prim", [("60", "13", "4"), ("1", "0", "0"), ("792", None, "4")])
def test_count(capsys, a, total, prim):
    code, out, _ = run(capsys, "count", a, "--format", "json")
    doc = json.loads(out)
    assert code == 0
    if total is not None:
        assert doc["total"] == total
    assert doc["primitive"] == prim


def test_complete_210_135(capsys):
    code, out, _ = run(capsys, "complete", "210", "135", "--class", "primitive", "--format", "csv")
    rows = list(csv.DictReader(io.StringIO(out)))
    assert [(r["delta"], r["completion"], r["hypotenuse"]) for r in rows] == [
        ("1", "31162", "31163"), ("9", "3458", "3467"), ("25", "1234", "1259"), ("225", "26", "251")
    ]


def test_complete_infeasible_reports_reason(capsys):
    code, out, _ = run(capsys, "complete", "3", "5", "--format", "json")
    doc = json.loads(out)
    assert code == 0
    assert doc["solutions"] == [] and doc["feasible"] is False
    assert doc["reason"] == "k=2 (mod 4)" and doc["k"] == "34"
    code, out, _ = run(capsys, "complete", "3", "5")
    assert "infeasible" in out


def test_complete_eight_legs(capsys):
    code, out, _ = run(capsys, "complete", "55", "15", "20", "10", "35", "45", "30", "25",
                       "--class", "primitive", "--format", "json")
    doc = json.loads(out)
    assert [(r["delta"], r["completion"]) for r in doc["solutions"]] == [
        ("1", "4262"), ("11", "382"), ("25", "158"), ("31", "122")
    ]


def test_chain_rows(capsys):
    code, out, _ = run(capsys, "chain", "15", "--depth", "3", "--strategy", "all", "--format", "json")
    doc = json.loads(out)
    assert code == 0 and doc["truncated"] is False
    assert {"legs": ["15", "36", "760", "289560"], "hypotenuse": "289561", "deltas": ["3", "1", "1"],
            "branch": "non-primitive", "truncated": False, "halted": None} in doc["solutions"]

    code, out, _ = run(capsys, "chain", "3", "--depth", "1", "--format", "csv")
    assert out == "legs,hypotenuse,deltas,branch,truncated,halted\n3 4,5,1,primitive,false,\n"


def test_chain_min_delta(capsys):
    code, out, _ = run(capsys, "chain", "15", "--depth", "4", "--strategy", "min-delta", "--format", "json")
    (row,) = json.loads(out)["solutions"]
    legs = [int(x) for x in row["legs"]]
    assert sum(x * x for x in legs) == int(row["hypotenuse"]) ** 2


def test_chain_magnitude_is_per_branch(capsys):
    code, out, _ = run(capsys, "chain", "15", "--depth", "3", "--max-magnitude", "10000", "--format", "json")
    doc = json.loads(out)
    assert code == 0
    assert any(r["halted"] == "magnitude" for r in doc["solutions"])


def test_chain_truncation_flag(capsys):
    code, out, _ = run(capsys, "chain", "60", "--depth", "1", "--max-branches", "2", "--format", "json")
    doc = json.loads(out)
    assert doc["truncated"] is True and len(doc["solutions"]) == 2


def test_huge_values_print_exactly(capsys):
    code, out, _ = run(capsys, "chain", "3", "--depth", "15", "--strategy", "min-delta",
                       "--max-magnitude", "1" + "0" * 9000, "--format", "csv")
    assert code == 0
    row = list(csv.DictReader(io.StringIO(out)))[0]
    legs = [int(x) for x in row["legs"].split()]
    assert len(row["hypotenuse"]) > 4300
    assert sum(x * x for x in legs) == int(row["hypotenuse"]) ** 2


def test_json_round_trip_matches_memory(capsys):
    _, out, _ = run(capsys, "triples", "5400", "--format", "json")
    doc = json.loads(out)
    assert [(int(r["delta"]), int(r["b"]), int(r["c"]), r["primitive"]) for r in doc["solutions"]] == [
        (t.delta, t.b, t.c, t.primitive) for t in all_triples(5400)
    ]
    _, out, _ = run(capsys, "complete", "24", "57", "54", "33", "39", "21", "48", "--format", "json")
    doc = json.loads(out)
    assert [(int(r["delta"]), int(r["completion"]), int(r["hypotenuse"]), r["primitive"]) for r in doc["solutions"]] == [
        (s.delta, s.completion, s.hypotenuse, s.primitive) for s in all_completions([24, 57, 54, 33, 39, 21, 48])
    ]


@pytest.mark.parametrize("argv", [
    ["triples", "3600"], ["complete", "14", "98"], ["count", "720720"], ["chain", "12", "--depth", "2"],
])
def test_json_and_csv_agree(capsys, argv):
    _, js, _ = run(capsys, *argv, "--format", "json")
    _, cs, _ = run(capsys, *argv, "--format", "csv")
    rows = list(csv.DictReader(io.StringIO(cs)))
    doc = json.loads(js)["solutions"]
    assert len(rows) == len(doc)
    for r, d in zip(rows, doc):
        for key, value in r.items():
            expected = d[key]
            if isinstance(expected, bool):
                expected = "true" if expected else "false"
            elif expected is None:
                expected = ""
            elif isinstance(expected, list):
                expected = " ".join(expected)
            assert value == expected


def test_output_is_deterministic(capsys):
    outs = set()
    for _ in range(3):
        _, out, _ = run(capsys, "chain", "15", "--depth", "3", "--format", "json")
        outs.add(out)
    assert len(outs) == 1


@pytest.mark.parametrize("argv", [
    ["triples", "0"], ["triples", "abc"], ["complete"], ["chain", "2", "--depth", "1"],
    ["chain", "15"], ["verify", "nonsense"], ["frobnicate"], [],
])
def test_usage_errors_exit_2(capsys, argv):
    code, _, _ = run(capsys, *argv)
    assert code == 2


def test_budget_exit_3(capsys, monkeypatch):
    monkeypatch.setenv("PYTUPLE_FACTOR_BUDGET", "3")
    code, _, err = run(capsys, "triples", str(1_000_000_007 * 998_244_353))
    assert code == 3 and "budget" in err


@pytest.mark.parametrize("argv", [
    ["verify", "triples-oracle", "--max-leg", "60"],
    ["verify", "euclid-coverage", "--max-m", "20"],
    ["verify", "predictor", "--max-leg", "300", "--cases", "50"],
    ["verify", "counts", "--max-leg", "300"],
    ["verify", "tuples-oracle", "--cases", "20", "--max-k", "20000"],
])
def test_verify_modes_pass(capsys, argv):
    code, out, _ = run(capsys, *argv, "--format", "json")
    assert code == 0
    assert json.loads(out)["discrepancies"] == "0"


def test_verify_exit_4_on_discrepancy(capsys, monkeypatch):
    from pytuple import verify

    monkeypatch.setattr(verify, "predict_primitive_deltas", lambda a: set())
    code, out, _ = run(capsys, "verify", "predictor", "--max-leg", "10", "--cases", "1")
    assert code == 4
    assert "predictor (3)" in out


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "pytuple", "count", "60", "--format", "csv"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert proc.stdout.splitlines()[1] == "60,13,4,9,2 8 18 50"
