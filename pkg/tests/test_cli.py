import json

import pytest

from hocolimkit import cli

SPAN_DIAGRAM = {
    "shape": {"objects": ["a", "b", "c"],
              "morphisms": [{"id": "l", "src": "b", "tgt": "a"},
                            {"id": "r", "src": "b", "tgt": "c"}],
              "compose": []},
    "values": {"a": "point", "b": "boundary:1", "c": "point"},
    "arrows": {m: {"0": {"[0]": [0], "[1]": [0]},
                   "1": {"[0,0]": [0, 0], "[1,1]": [0, 0]},
                   "2": {"[0,0,0]": [0, 0, 0], "[1,1,1]": [0, 0, 0]},
                   "3": {"[0,0,0,0]": [0, 0, 0, 0],
                         "[1,1,1,1]": [0, 0, 0, 0]}}
               for m in ("l", "r")}}

CAT_MISSING_COMPOSITE = {
    "objects": ["x", "y", "z"],
    "morphisms": [{"id": "f", "src": "x", "tgt": "y"},
                  {"id": "g", "src": "y", "tgt": "z"}],
    "compose": []}


def write(tmp_path, name, doc):
    p = tmp_path / name
    p.write_text(json.dumps(doc))
    return str(p)


def run_json(capsys, argv):
    code = cli.run(argv)
    out = capsys.readouterr().out
    return code, json.loads(out) if out else None


def test_validate_pass_and_fail(tmp_path, capsys):
    good = write(tmp_path, "good.json",
                 {"objects": [0, 1],
                  "morphisms": [{"id": "f", "src": 0, "tgt": 1}],
                  "compose": []})
    code, doc = run_json(capsys, ["validate", good])
    assert code == 0 and doc["status"] == "pass"
    bad = write(tmp_path, "bad.json", CAT_MISSING_COMPOSITE)
    code, doc = run_json(capsys, ["validate", bad])
    assert code == 1 and doc["status"] == "fail"


def test_nerve_names_missing_pair(tmp_path, capsys):
    bad = write(tmp_path, "bad.json", CAT_MISSING_COMPOSITE)
    code = cli.run(["nerve", bad, "--cap", "2"])
    err = capsys.readouterr().err
    assert code == 2
    assert "missing-composite" in err and "'g'" in err and "'f'" in err


def test_nerve_output_schema(tmp_path, capsys):
    good = write(tmp_path, "good.json",
                 {"objects": [0, 1],
                  "morphisms": [{"id": "f", "src": 0, "tgt": 1}],
                  "compose": []})
    code, doc = run_json(capsys, ["nerve", good, "--cap", "2"])
    assert code == 0
    assert [len(l) for l in doc["simplices"]] == [2, 3, 4]
    assert doc["provenance"]["cap"] == 2


def test_hocolim_then_homology_pipeline(tmp_path, capsys, monkeypatch):
    import io
    dg = write(tmp_path, "span.json", SPAN_DIAGRAM)
    for method in ("voevodsky", "bk"):
        code, doc = run_json(capsys, ["hocolim", dg, "--method", method,
                                      "--cap", "3"])
        assert code == 0
        monkeypatch.setattr("sys.stdin", io.StringIO(json.dumps(doc)))
        code, hdoc = run_json(capsys, ["homology", "-", "--max-degree", "2"])
        assert code == 0
        assert hdoc["groups"] == [
            {"degree": 0, "betti": 1, "torsion": []},
            {"degree": 1, "betti": 1, "torsion": []},
            {"degree": 2, "betti": 0, "torsion": []}]


def test_colim_subcommand(tmp_path, capsys):
    dg = write(tmp_path, "span.json", SPAN_DIAGRAM)
    code, doc = run_json(capsys, ["colim", dg, "--cap", "3"])
    assert code == 0
    assert [len(l) for l in doc["simplices"]] == [1, 1, 1, 1]


def test_check_cofinal_exit_codes(tmp_path, capsys):
    target = {"objects": [0, 1],
              "morphisms": [{"id": "f01", "src": 0, "tgt": 1}],
              "compose": []}
    src = {"objects": [0], "morphisms": [], "compose": []}
    at1 = write(tmp_path, "at1.json",
                {"source": src, "target": target,
                 "obj_map": {"0": 1}, "mor_map": {}})
    at0 = write(tmp_path, "at0.json",
                {"source": src, "target": target,
                 "obj_map": {"0": 0}, "mor_map": {}})
    code, doc = run_json(capsys, ["check-cofinal", at1, "--cap", "3"])
    assert code == 0 and doc["status"] == "passes-necessary-conditions"
    code, doc = run_json(capsys, ["check-cofinal", at0, "--cap", "3"])
    assert code == 1 and doc["status"] == "certified-fail"


def test_kan_subcommand(tmp_path, capsys):
    interval = {"shape": {"objects": [0, 1],
                          "morphisms": [{"id": "f01", "src": 0, "tgt": 1}],
                          "compose": []},
                "values": {"0": "point", "1": "point"},
                "arrows": {"f01": {str(n): {json.dumps([0] * (n + 1)):
                                            [0] * (n + 1)}
                                   for n in range(4)}}}
    functor = {"target": {"objects": [0, 1, 2],
                          "morphisms": [{"id": "a", "src": 0, "tgt": 1},
                                        {"id": "b", "src": 1, "tgt": 2},
                                        {"id": "c", "src": 0, "tgt": 2}],
                          "compose": [{"g": "b", "f": "a", "gf": "c"}]},
               "obj_map": {"0": 0, "1": 1}, "mor_map": {"f01": "a"}}
    dg = write(tmp_path, "interval.json", interval)
    fn = write(tmp_path, "incl.json", functor)
    code, doc = run_json(capsys, ["kan", dg, "--functor", fn,
                                  "--cap", "3"])
    assert code == 0
    sizes = {k: [len(l) for l in v["simplices"]]
             for k, v in doc["values"].items()}
    assert sizes == {"0": [1, 1, 1, 1], "1": [2, 3, 4, 5],
                     "2": [2, 3, 4, 5]}


def test_homology_cap_violation_is_exit_2(tmp_path, capsys):
    code = cli.run(["homology", "point", "--max-degree", "3", "--cap", "3"])
    assert code == 2


def test_malformed_json_is_exit_2(tmp_path, capsys):
    p = tmp_path / "junk.json"
    p.write_text("{not json")
    assert cli.run(["validate", str(p)]) == 2


def test_threads_env_validation(tmp_path, capsys, monkeypatch):
    monkeypatch.setenv("HOCOLIMKIT_THREADS", "banana")
    good = write(tmp_path, "good.json",
                 {"objects": [0], "morphisms": [], "compose": []})
    assert cli.run(["validate", good]) == 2
    monkeypatch.setenv("HOCOLIMKIT_THREADS", "2")
    assert cli.run(["validate", good]) == 0
    capsys.readouterr()


def test_verify_single_suite(capsys):
    code = cli.run(["verify", "quillen-a", "--seed", "0"])
    out = capsys.readouterr().out
    assert code == 0
    lines = out.strip().split("\n")
    assert json.loads(lines[-1])["summary"]["failures"] == 0
    assert cli.run(["verify", "no-such-suite"]) == 2
    capsys.readouterr()
