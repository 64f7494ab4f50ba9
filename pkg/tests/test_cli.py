import json

import jsonschema
import pytest

from gbell.cli import main
from gbell.graph import path
from gbell.graph6 import write_graph6_file
from gbell.catalogue import extension_catalogue
from gbell.report import JSON_SCHEMA


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def field(out, name):
    return next(line.split(" ", 1)[1] for line in out.splitlines() if line.startswith(name + " "))


def test_compute_graph6(capsys):
    code, out, _ = run(capsys, "compute", "--graph6", "Bw")
    assert code == 0
    assert field(out, "S") == "0 0 1" and field(out, "A") == "3/1 3.000000"
    code, out, _ = run(capsys, "compute", "--graph6", "A_")
    assert (field(out, "B"), field(out, "T"), field(out, "A")) == ("1", "2", "2/1 2.000000")


def test_compute_family_and_edges(capsys):
    code, out, _ = run(capsys, "compute", "--family", "path-complement", "--params", "5")
    assert code == 0 and field(out, "A") == "15/4 3.750000"
    assert field(out, "chi") == "3" and field(out, "S") == "0 0 3 4 1"
    code, out, _ = run(capsys, "compute", "--edges", "5; 0-1,1-2,2-3,3-4,4-0")
    assert field(out, "delta") == "2" and field(out, "chi") == "3"


@pytest.mark.parametrize("argv", [
    ["compute", "--graph6", "B~~"],
    ["compute", "--edges", "3; 0-9"],
    ["compute", "--family", "cycle", "--params", "2"],
    ["compute", "--family", "bogus", "--params", "2"],
    ["compute", "--graph6", "Bw", "--edges", "3;"],
    ["family", "bogus"],
    ["family", "empty", "--range", "x"],
    ["verify", "bogus"],
    ["sweep", "--conjectures", "4"],
])
def test_input_errors(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2 and err.startswith("error:")


def test_limit_error(capsys):
    code, _, err = run(capsys, "compute", "--family", "empty", "--params", "21")
    assert code == 3
    code, _, _ = run(capsys, "oracle", "--max-n", "12")
    assert code == 3


def test_env_limit(capsys, monkeypatch):
    monkeypatch.setenv("GBELL_ENGINE_LIMIT", "4")
    import gbell.engine as engine
    monkeypatch.setattr(engine, "_default", engine.Engine())
    code, _, _ = run(capsys, "compute", "--family", "path", "--params", "5")
    assert code == 3


def test_family_tables(capsys):
    code, out, _ = run(capsys, "family", "path-complement", "--range", "1:12")
    assert code == 0
    rows = [line.split("\t") for line in out.splitlines()[1:]]
    fib = [1, 2, 3, 5, 8, 13, 21, 34, 55, 89, 144, 233]
    assert [int(r[1]) for r in rows] == fib
    assert all(r[-1] == "yes" for r in rows)
    for name, rng in [("cycle-complement", "4:12"), ("empty", "1:10"), ("tree", "1:6"),
                      ("cycle", "3:7"), ("clique", "1:6")]:
        code, out, _ = run(capsys, "family", name, "--range", rng, "--p", "1")
        assert code == 0 and "NO" not in out


def test_family_beyond_engine(capsys):
    code, out, _ = run(capsys, "family", "empty", "--range", "20:22")
    assert code == 0
    assert out.splitlines()[-1].endswith("-\t-")


def test_verify(capsys):
    code, out, _ = run(capsys, "verify", "counterexamples")
    assert code == 0 and out.startswith("PASS counterexamples")
    code, out, _ = run(capsys, "verify", "recurrences", "--max-n", "5")
    assert code == 0
    code, out, _ = run(capsys, "verify", "q-lemmas", "--max-n", "8")
    assert code == 0


def test_oracle(capsys):
    code, out, _ = run(capsys, "oracle", "--max-n", "5")
    assert code == 0 and "total 52 graphs, 0 mismatches" in out
    code, out, _ = run(capsys, "oracle", "--graph6", "Bg")
    assert code == 0 and "engine 0 1 1" in out and "oracle 0 1 1" in out
    code, out, _ = run(capsys, "oracle", "--max-n", "9", "--samples", "3", "--seed", "7")
    assert code == 0 and "(sampled)" in out


def test_sweep_json(capsys):
    code, out, err = run(capsys, "sweep", "--max-n", "5", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    jsonschema.validate(doc, JSON_SCHEMA)
    assert doc["violations"] == 0 and len(doc["rows"]) == 52
    assert "violations 0" in err


def test_sweep_csv_and_file_input(capsys, tmp_path):
    out_a, out_b = tmp_path / "a.csv", tmp_path / "b.csv"
    code, _, _ = run(capsys, "sweep", "--max-n", "6", "--out", str(out_a))
    assert code == 0
    g6 = tmp_path / "in.g6"
    write_graph6_file(g6, [g for n in range(1, 7) for g in extension_catalogue(n)])
    code, _, _ = run(capsys, "sweep", "--max-n", "6", "--input", str(g6), "--out", str(out_b),
                     "--checks", "removal,peel")
    assert code == 0
    assert out_a.read_bytes() == out_b.read_bytes()


def test_sweep_bad_input(capsys, tmp_path):
    g6 = tmp_path / "bad.g6"
    g6.write_text("Bw\nB\n")
    code, _, err = run(capsys, "sweep", "--max-n", "3", "--input", str(g6))
    assert code == 2 and "line 2" in err
    code, _, _ = run(capsys, "sweep", "--input", str(tmp_path / "missing.g6"))
    assert code == 2
