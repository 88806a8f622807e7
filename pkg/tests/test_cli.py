import json
import os

from qlfd.cli import main

DATA = os.path.join(os.path.dirname(__file__), "data")


def path(name):
    return os.path.join(DATA, name)


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, (json.loads(out) if out.strip().startswith("{") else out)


def test_analyze_a2(capsys):
    code, report = run(capsys, "analyze", path("a2.json"))
    assert code == 0
    assert report["graph_class"] == {"kind": "dynkin", "name": "A2"}
    assert report["q_value"] == 1
    assert report["is_tree"] is True


def test_lfd_a2(capsys):
    code, report = run(capsys, "lfd", path("a2.json"))
    assert code == 0
    assert report["verdict"] == "linear_free"
    assert report["degree"] == 1
    assert report["reduced"]["seed"] == report["provenance"]["seed"]


def test_lfd_cycle_not_a_tree(capsys):
    code, report = run(capsys, "lfd", path("cycle3.json"))
    assert code == 0  # definitive negative
    assert report["verdict"] == "not_linear_free"
    assert any("tree" in r for r in report["reasons"])


def test_tubes_e7(capsys):
    code, report = run(capsys, "tubes", path("e7.json"))
    assert code == 0
    assert report["periods"] == [4, 3, 2]
    assert all(t["sum_is_delta"] for t in report["tubes"])


def test_degrees_d4(capsys):
    code, report = run(capsys, "degrees", path("d4.json"))
    assert code == 0
    assert report["certified"] is True
    assert report["degrees"] == [2, 2, 2]


def test_reflect_and_normal_form(capsys):
    code, report = run(capsys, "reflect", path("a2.json"), "1")
    assert code == 0
    assert report["after"]["arrows"] == [["2", "1"]]
    assert report["after"]["dim"] == {"1": 0, "2": 1}
    code, report = run(capsys, "normal-form", path("e7.json"))
    assert code == 0
    assert report["stage_count"] <= 2


def test_homogeneity_split(capsys):
    code, report = run(capsys, "homogeneity", path("a2.json"),
                       "--split", "1,0:0,1")
    assert code == 0
    assert report["euler_witness"] is True


def test_homogeneity_parts_tube(capsys):
    # two consecutive regular simples of the period-3 tube summing to d
    code, report = run(capsys, "homogeneity", path("e7.json"),
                       "--parts", "1,1,1,2,1,1,1,1:0,1,1,1,1,1,0,0")
    assert code == 0
    assert report["certificate"] == "weakly"
    assert report["route"] == "tube"


def test_determinism(capsys):
    code1, rep1 = run(capsys, "--seed", "99", "lfd", path("d4.json"))
    code2, rep2 = run(capsys, "--seed", "99", "lfd", path("d4.json"))
    assert code1 == code2 == 0
    assert rep1 == rep2


def test_bad_input_exit_code(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert main(["lfd", str(bad)]) == 1
    missing_dim = tmp_path / "nodim.json"
    missing_dim.write_text(json.dumps({"vertices": ["1"], "arrows": []}))
    assert main(["lfd", str(missing_dim)]) == 1


def test_text_format(capsys):
    code = main(["--format", "text", "analyze", path("a2.json")])
    out = capsys.readouterr().out
    assert code == 0
    assert out.startswith("analyze:")
