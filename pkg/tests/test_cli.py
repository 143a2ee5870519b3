import json

import pytest

from strandkit.cli import main
from strandkit.scene import dump_scene


@pytest.fixture
def scene_file(tmp_path, bigon_scene):
    path = tmp_path / "scene.json"
    dump_scene(bigon_scene, path)
    return str(path)


@pytest.fixture
def grounded_file(tmp_path, outerstring_scene):
    path = tmp_path / "grounded.json"
    dump_scene(outerstring_scene, path)
    return str(path)


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, json.loads(out)


def test_arrange(capsys, scene_file, tmp_path):
    out = tmp_path / "out"
    code, rep = run(capsys, "arrange", "--in", scene_file, "--out", str(out),
                    "--format", "json,dot")
    assert code == 0
    assert rep["curves"] == 5 and rep["events"] == 7
    assert (out / "events.json").exists()
    assert (out / "graph.dot").read_text().startswith("graph")


def test_planarise(capsys, scene_file, tmp_path):
    out = tmp_path / "out"
    code, rep = run(capsys, "planarise", "--in", scene_file, "--out", str(out),
                    "--format", "json,dot,svg")
    assert code == 0
    assert rep["genus"] == 0
    assert (out / "coloured.json").exists()
    assert (out / "scene.svg").read_text().startswith("<svg")


def test_colour(capsys, scene_file):
    code, rep = run(capsys, "colour", "--in", scene_file)
    assert code == 0
    assert set(rep["params"]) == {"t", "d", "k", "r"}


def test_model(capsys, scene_file, tmp_path):
    out = tmp_path / "out"
    code, rep = run(capsys, "model", "--in", scene_file, "--out", str(out))
    assert code == 0
    assert rep["ok"] and rep["check"]["valid"]
    assert (out / "model.json").exists()


def test_custom_colouring(capsys, grounded_file, tmp_path):
    col = tmp_path / "col.json"
    col.write_text(json.dumps({"a": 1, "c": 1, "b": 2}))
    code, rep = run(capsys, "outerstring", "--in", grounded_file,
                    "--colouring", str(col), "--out", str(tmp_path / "o"),
                    "--format", "json,td")
    assert code == 0
    assert rep["t"] == 2 and rep["width"] <= rep["bound"]
    pace = (tmp_path / "o" / "td.td").read_text()
    assert pace.startswith("s td ")


def test_decomp(capsys, scene_file, tmp_path):
    code, rep = run(capsys, "decomp", "--in", scene_file,
                    "--out", str(tmp_path / "d"))
    assert code == 0
    assert rep["layered_width"] <= rep["layered_width_bound"]
    assert rep["width"] >= rep["exact_treewidth"]


def test_localise(capsys, scene_file, tmp_path):
    code, rep = run(capsys, "localise", "--in", scene_file,
                    "--out", str(tmp_path / "l"))
    assert code == 0
    assert rep["crossings_after"] <= rep["crossings_before"]
    assert (tmp_path / "l" / "reduced.json").exists()


def test_gen_and_verify(capsys, tmp_path):
    out = tmp_path / "g"
    code, rep = run(capsys, "gen", "--family", "grounded", "--params", "n=5",
                    "--seed", "4", "--out", str(out))
    assert code == 0 and rep["curves"] == 5
    code, rep = run(capsys, "verify", "--in", str(out / "scene.json"))
    assert code == 0
    assert rep["ok"] and rep["checks"]["outerstring"]


def test_gen_convex(capsys, tmp_path):
    code, rep = run(capsys, "gen", "--family", "rectangles",
                    "--params", "delta=3", "--out", str(tmp_path / "r"))
    assert code == 0
    assert rep["max_crossings"] <= rep["crossing_cap"] == 18


def test_bounds_command(capsys):
    code, rep = run(capsys, "bounds", "--theorem", "planar-outerstring",
                    "--params", "t=3", "d=2")
    assert code == 0 and rep["value"] == 23


def test_bad_theorem_exit_2(capsys):
    code, rep = run(capsys, "bounds", "--theorem", "bogus")
    assert code == 2 and rep["kind"] == "invalid-input"


def test_degenerate_scene_exit_2(capsys, tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"curves": [
        {"id": "a", "points": [[[0, 1], [0, 1]], [[4, 1], [0, 1]]]},
        {"id": "b", "points": [[[2, 1], [0, 1]], [[2, 1], [3, 1]]]}]}))
    code, rep = run(capsys, "arrange", "--in", str(bad))
    assert code == 2 and rep["kind"] == "invalid-input"


def test_missing_file_exit_2(capsys, tmp_path):
    code, rep = run(capsys, "arrange", "--in", str(tmp_path / "nope.json"))
    assert code == 2


def test_bad_params_exit_2(capsys):
    code, rep = run(capsys, "bounds", "--theorem", "localised",
                    "--params", "delta")
    assert code == 2


def test_reports_byte_identical(capsys, scene_file, tmp_path):
    code1 = main(["colour", "--in", scene_file])
    out1 = capsys.readouterr().out
    code2 = main(["colour", "--in", scene_file])
    out2 = capsys.readouterr().out
    assert code1 == code2 == 0
    assert out1 == out2
