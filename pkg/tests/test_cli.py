import json

import pytest

from fliplab.cli import build_parser, main
from pcircles.fixtures import nonkrupp3
from signotopes import all_minus, all_plus


def run(capsys, *argv):
    with pytest.raises(SystemExit) as exc:
        main(list(argv))
    out = capsys.readouterr().out
    return exc.value.code, out


def run_json(capsys, *argv):
    code, out = run(capsys, *argv)
    return code, json.loads(out)


def test_every_command_is_registered():
    parser = build_parser()
    for name in [
        "enumerate", "connectivity", "diameter", "degrees", "classify", "cylindrical-check",
        "canonicalize", "cylindrify", "path-to-shellable", "realize", "feasible",
        "interpolate", "walk", "render",
    ]:
        args = parser.parse_args([name])
        assert callable(args.func)


def test_enumerate(capsys):
    code, data = run_json(capsys, "enumerate", "--family", "pseudoline", "--n", "5")
    assert code == 0
    assert data["vertices"] == 62
    assert data["truncated"] is False


def test_enumerate_budget_exceeded(capsys):
    code, data = run_json(capsys, "enumerate", "--n", "5", "--budget", "10")
    assert code == 3
    assert data["vertices"] == 10
    assert data["truncated"] is True


def test_enumerate_dot(capsys):
    code, out = run(capsys, "enumerate", "--n", "4", "--format", "dot")
    assert code == 0
    assert out.count(" -- ") == 8


def test_connectivity(capsys):
    code, data = run_json(capsys, "connectivity", "--family", "pseudoline", "--n", "4", "--mode", "exact")
    assert code == 0
    assert data["connectivity"] == 2


def test_degrees_and_diameter(capsys):
    code, data = run_json(capsys, "degrees", "--n", "5")
    assert code == 0
    assert data["min_degree"] == 3
    code, data = run_json(capsys, "diameter", "--family", "cylindrical", "--n", "3")
    assert code == 0
    assert data["diameter"] == 2
    assert data["canonical_distance"] == 2


def test_connectivity_on_truncated_graph(capsys):
    code, _ = run(capsys, "connectivity", "--n", "5", "--budget", "5")
    assert code == 3


def test_missing_n_is_an_input_error(capsys):
    code, out = run(capsys, "enumerate")
    assert code == 2
    assert out == ""


def test_cylindrical_check_nonkrupp3(capsys):
    code, data = run_json(capsys, "cylindrical-check", "--fixture", "nonkrupp3")
    assert code == 0
    assert data["agree"] is True
    assert set(data["predicates"].values()) == {False}


def test_classify_from_file(capsys, tmp_path):
    path = tmp_path / "nk3.json"
    path.write_text(json.dumps(nonkrupp3().to_json()))
    code, data = run_json(capsys, "classify", "--input", str(path))
    assert code == 0
    assert data["triples"] == {"1,2,3": "NonKrupp(3)"}


def test_bad_input_file(capsys, tmp_path):
    path = tmp_path / "broken.json"
    path.write_text("{not json")
    code, _ = run(capsys, "classify", "--input", str(path))
    assert code == 2
    code, _ = run(capsys, "classify", "--input", str(tmp_path / "missing.json"))
    assert code == 2


def test_canonicalize(capsys):
    code, data = run_json(capsys, "canonicalize", "--n", "5", "--seed", "4")
    assert code == 0
    assert data["count"] <= data["bound"] == 20


def test_cylindrify(capsys):
    code, data = run_json(capsys, "cylindrify", "--fixture", "nonkrupp3")
    assert code == 0
    assert data["length"] == 1


def test_path_realize_feasible(capsys, tmp_path):
    path = tmp_path / "pair.json"
    path.write_text(json.dumps({"from": all_minus(5).to_json(), "to": all_plus(5).to_json()}))
    code, data = run_json(capsys, "path-to-shellable", "--input", str(path))
    assert code == 0
    assert data["length"] == data["hamming"] == 10

    single = tmp_path / "s.json"
    single.write_text(json.dumps(all_plus(5).to_json()))
    code, data = run_json(capsys, "realize", "--input", str(single), "--slopes", "1,2,3,4,5")
    assert code == 0
    assert len(data["arrangement"]["intercepts"]) == 5

    code, data = run_json(capsys, "feasible", "--input", str(single))
    assert code == 0
    assert data["feasible"] is True

    code, data = run_json(capsys, "feasible", "--n", "4", "--slopes", "0,1,5/2,3")
    assert code == 0
    assert data["signotopes"] == 8


def test_wrong_slope_count(capsys, tmp_path):
    single = tmp_path / "s.json"
    single.write_text(json.dumps(all_plus(5).to_json()))
    code, _ = run(capsys, "realize", "--input", str(single), "--slopes", "1,2,3")
    assert code == 2


def test_interpolate(capsys, tmp_path):
    path = tmp_path / "motion.json"
    path.write_text(json.dumps({
        "from": {"slopes": ["1", "2", "3"], "intercepts": ["0", "0", "1"]},
        "to": {"slopes": ["1", "2", "3"], "intercepts": ["0", "0", "-1"]},
    }))
    code, data = run_json(capsys, "interpolate", "--input", str(path))
    assert code == 0
    assert len(data["events"]) == 1
    assert data["events"][0] == {"time": "1/2", "triple": [1, 2, 3]}


def test_walk_is_reproducible(capsys):
    _, first = run(capsys, "walk", "--n", "5", "--steps", "20", "--seed", "9")
    _, second = run(capsys, "walk", "--n", "5", "--steps", "20", "--seed", "9")
    assert first == second
    assert len(json.loads(first)["states"]) == 21


def test_render_to_file(capsys, tmp_path):
    out = tmp_path / "krupp.svg"
    code, printed = run(capsys, "render", "--fixture", "krupp", "--out", str(out))
    assert code == 0
    assert printed == ""
    assert out.read_text().startswith("<svg")
