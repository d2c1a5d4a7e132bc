import json
import subprocess
import sys

import pytest

from boxcube.cli import main


def write(path, doc):
    path.write_text(json.dumps(doc))
    return str(path)


P3_INTERVALS = {"n": 3, "intervals": {"0": [0, 1, 1, 1], "1": [1, 2, 2, 1], "2": [3, 2, 3, 1]}}


@pytest.fixture
def p3_files(tmp_path):
    graph = write(tmp_path / "p3.json", {"n": 3, "edges": [[0, 1], [1, 2]]})
    reps = write(tmp_path / "p3.intervals.json", P3_INTERVALS)
    return graph, reps


def test_gen_star(tmp_path):
    out = tmp_path / "star.json"
    assert main(["gen", "--family", "star", "--n", "5", "--out", str(out)]) == 0
    assert json.loads(out.read_text()) == {"n": 5, "edges": [[0, 1], [0, 2], [0, 3], [0, 4]]}


def test_gen_cycle_to_stdout(capsys):
    assert main(["gen", "--family", "cycle", "--n", "4"]) == 0
    assert json.loads(capsys.readouterr().out)["edges"] == [[0, 1], [0, 3], [1, 2], [2, 3]]


def test_gen_random_interval_is_deterministic(tmp_path):
    outs = []
    for run in ("a", "b"):
        out = tmp_path / f"{run}.json"
        assert main(["gen", "--family", "random-interval", "--n", "16", "--seed", "7", "--out", str(out)]) == 0
        outs.append((out.read_bytes(), (tmp_path / f"{run}.intervals.json").read_bytes()))
    assert outs[0] == outs[1]
    reps = json.loads(outs[0][1])
    assert reps["n"] == 16 and len(reps["intervals"]) == 16


def test_gen_errors(tmp_path, capsys):
    assert main(["gen", "--family", "random-interval", "--n", "4"]) == 2
    assert main(["gen", "--family", "star", "--n", "0"]) == 2
    with pytest.raises(SystemExit) as info:
        main(["gen", "--family", "petersen", "--n", "4"])
    assert info.value.code == 2


def test_order(tmp_path, p3_files):
    out = tmp_path / "order.json"
    assert main(["order", "--intervals", p3_files[1], "--out", str(out)]) == 0
    assert json.loads(out.read_text())["order"] == [0, 1, 2]


def test_convert_interval_to_cube(tmp_path, p3_files):
    out = tmp_path / "cubes.json"
    assert main(["convert", "interval-to-cube", "--in", p3_files[1], "--out", str(out)]) == 0
    doc = json.loads(out.read_text())
    assert doc == {"n": 3, "dims": 2, "side": 4, "anchors": {"0": [2, 0], "1": [6, 3], "2": [2, 7]}}

    assert main(["convert", "interval-to-cube", "--in", p3_files[1], "--out", str(out), "--normalize"]) == 0
    doc = json.loads(out.read_text())
    assert doc["side"] == 1 and doc["anchors"]["2"] == [[1, 2], [7, 4]]


def test_convert_complete_and_box(tmp_path):
    same = write(tmp_path / "k6.json", {"n": 6, "intervals": {str(v): [0, 1, 1, 1] for v in range(6)}})
    out = tmp_path / "c.json"
    assert main(["convert", "interval-to-cube", "--in", same, "--out", str(out)]) == 0
    assert json.loads(out.read_text())["dims"] == 0

    box1 = write(tmp_path / "b1.json", {"n": 3, "dims": 1, "boxes": {k: [v] for k, v in P3_INTERVALS["intervals"].items()}})
    out_b = tmp_path / "b.json"
    assert main(["convert", "box-to-cube", "--in", box1, "--out", str(out_b)]) == 0
    ivs = write(tmp_path / "i.json", P3_INTERVALS)
    assert main(["convert", "interval-to-cube", "--in", ivs, "--out", str(out)]) == 0
    assert out_b.read_bytes() == out.read_bytes()


def test_convert_rejects_malformed(tmp_path, capsys):
    bad = write(tmp_path / "bad.json", {"n": 1, "intervals": {"0": [2, 1, 1, 1]}})
    assert main(["convert", "interval-to-cube", "--in", bad]) == 2
    assert "intervals['0']" in capsys.readouterr().err
    broken = tmp_path / "broken.json"
    broken.write_text('{"n": 1,\n')
    assert main(["convert", "interval-to-cube", "--in", str(broken)]) == 2
    assert main(["convert", "interval-to-cube", "--in", str(tmp_path / "missing.json")]) == 2


def test_verify_round_trip(tmp_path, p3_files, capsys):
    cubes = tmp_path / "cubes.json"
    main(["convert", "interval-to-cube", "--in", p3_files[1], "--out", str(cubes)])
    assert main(["verify", "--graph", p3_files[0], "--cubes", str(cubes)]) == 0
    out = capsys.readouterr().out
    assert "result: MATCH" in out
    assert "dim 2: 1: (0,2)" in out

    doc = json.loads(cubes.read_text())
    doc["anchors"]["1"][0] += 2 * doc["side"]
    perturbed = write(tmp_path / "perturbed.json", doc)
    assert main(["verify", "--graph", p3_files[0], "--cubes", perturbed]) == 1
    out = capsys.readouterr().out
    assert "result: MISMATCH" in out
    assert "missing edges (in graph, not represented): 2: (0,1), (1,2)" in out


def test_verify_normalized_and_intervals(tmp_path, p3_files, capsys):
    cubes = tmp_path / "norm.json"
    main(["convert", "interval-to-cube", "--in", p3_files[1], "--out", str(cubes), "--normalize"])
    assert main(["verify", "--graph", p3_files[0], "--cubes", str(cubes)]) == 0
    assert main(["verify", "--graph", p3_files[0], "--intervals", p3_files[1]]) == 0


def test_verify_complete_dims_zero(tmp_path):
    graph = write(tmp_path / "k3.json", {"n": 3, "edges": [[0, 1], [0, 2], [1, 2]]})
    cubes = write(tmp_path / "c.json", {"n": 3, "dims": 0, "side": 4, "anchors": {"0": [], "1": [], "2": []}})
    assert main(["verify", "--graph", graph, "--cubes", cubes]) == 0


def test_verify_edge_list_and_boxes(tmp_path, capsys):
    graph = tmp_path / "c4.txt"
    graph.write_text("0 1\n1 2\n2 3\n3 0\n")
    boxes = write(tmp_path / "boxes.json", {
        "n": 4, "dims": 2,
        "boxes": {
            "0": [[0, 1, 1, 1], [0, 1, 3, 1]],
            "1": [[0, 1, 3, 1], [0, 1, 1, 1]],
            "2": [[2, 1, 3, 1], [0, 1, 3, 1]],
            "3": [[0, 1, 3, 1], [2, 1, 3, 1]],
        },
    })
    assert main(["verify", "--graph", str(graph), "--boxes", boxes]) == 0
    cubes = tmp_path / "cubes.json"
    assert main(["convert", "box-to-cube", "--in", boxes, "--out", str(cubes)]) == 0
    assert main(["verify", "--graph", str(graph), "--cubes", str(cubes)]) == 0


def test_verify_vertex_mismatch(tmp_path, p3_files):
    graph = write(tmp_path / "g.json", {"n": 4, "edges": []})
    assert main(["verify", "--graph", graph, "--intervals", p3_files[1]]) == 2


def test_oracle_command(tmp_path):
    star4 = write(tmp_path / "star.json", {"n": 4, "edges": [[0, 1], [0, 2], [0, 3]]})
    out = tmp_path / "r.json"
    assert main(["oracle", "--graph", star4, "--parameter", "cubicity", "--out", str(out)]) == 0
    doc = json.loads(out.read_text())
    assert (doc["value"], doc["exceeded"], len(doc["witness"])) == (2, False, 2)

    c4 = write(tmp_path / "c4.json", {"n": 4, "edges": [[0, 1], [0, 3], [1, 2], [2, 3]]})
    assert main(["oracle", "--graph", c4, "--parameter", "boxicity", "--out", str(out)]) == 0
    assert json.loads(out.read_text())["value"] == 2

    k5 = write(tmp_path / "k5.json", {"n": 5, "edges": [[u, v] for u in range(5) for v in range(u + 1, 5)]})
    assert main(["oracle", "--graph", k5, "--parameter", "cubicity", "--out", str(out)]) == 0
    assert json.loads(out.read_text()) == {"exceeded": False, "parameter": "cubicity", "value": 0, "witness": []}


def test_oracle_limits(tmp_path, monkeypatch):
    big = write(tmp_path / "p7.json", {"n": 7, "edges": [[v, v + 1] for v in range(6)]})
    assert main(["oracle", "--graph", big, "--parameter", "cubicity"]) == 3
    c4 = write(tmp_path / "c4.json", {"n": 4, "edges": [[0, 1], [0, 3], [1, 2], [2, 3]]})
    out = tmp_path / "r.json"
    assert main(["oracle", "--graph", c4, "--parameter", "boxicity", "--max-b", "1", "--out", str(out)]) == 3
    assert json.loads(out.read_text())["exceeded"] is True
    monkeypatch.setenv("BOXCUBE_BRUTE_LIMIT", "3")
    assert main(["oracle", "--graph", c4, "--parameter", "boxicity"]) == 3


def test_module_entry_point(tmp_path):
    out = tmp_path / "g.json"
    proc = subprocess.run(
        [sys.executable, "-m", "boxcube", "gen", "--family", "path", "--n", "3", "--out", str(out)],
        capture_output=True, text=True,
    )
    assert proc.returncode == 0, proc.stderr
    assert out.read_text() == '{"edges": [[0, 1], [1, 2]], "n": 3}\n'
