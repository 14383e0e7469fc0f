import io
import json

import pytest

from coxcones.classify import ClassificationReport, classify
from coxcones.cli import emit_report, run

SUBCOMMANDS = ["classify", "classify-grid", "hilbert", "flip-eval", "git-chambers", "intersect", "cox"]


def call(*argv):
    buf = io.StringIO()
    code = run(list(argv), out=buf)
    return code, buf.getvalue()


def call_json(*argv):
    code, text = call(*argv, "--json")
    assert code == 0, text
    doc = json.loads(text)
    assert doc["schema"] == 1
    return doc


def test_classify_example_json():
    doc = call_json("classify", "--factors", "1,3", "--degree", "4,2", "--level", "very_general")
    assert doc["mds"] == "no"
    assert doc["nef"]["rays"] == [[1, 0], [-2, 3]]


def test_classify_example_two_big_factors():
    doc = call_json("classify", "--factors", "2,2", "--degree", "1,1")
    assert doc["mds"] == "yes"
    for key in ("eff", "mov", "nef"):
        assert doc[key]["rays"] == [[1, 0], [0, 1]]


def test_classify_text_has_case_tag_and_open_marker():
    code, text = call("classify", "--factors", "1,3", "--degree", "4,2", "--level", "very_general")
    assert code == 0
    assert "p1pn-non-mds" in text
    assert "(-2,3)°" in text


def test_flip_eval_example():
    code, text = call("flip-eval", "--d", "2", "--e", "2", "--n", "3", "--point", "1,1;1,2,0,0", "--mod", "5")
    assert code == 0
    assert text.strip() == "(1:1)×(1:2:0:0) -> (1:0)×(1:2:0:0)"
    code, text = call("flip-eval", "--d", "2", "--e", "2", "--n", "3", "--point", "1,0;1,2,0,0",
                      "--mod", "5", "--inverse")
    assert text.strip().endswith("(1:1)×(1:2:0:0)")


def test_flip_eval_sampled_round_trip():
    fwd = call_json("flip-eval", "--d", "3", "--e", "2", "--n", "4", "--count", "6", "--seed", "3")
    back = call_json("flip-eval", "--d", "3", "--e", "2", "--n", "4", "--count", "6", "--seed", "3", "--inverse")
    assert [p["point"] for p in fwd["pairs"]] == [p["image"] for p in back["pairs"]]
    assert len(fwd["pairs"]) == 6


def test_flip_eval_explicit_form():
    doc = call_json("flip-eval", "--d", "2", "--e", "2", "--n", "3", "--mod", "5",
                    "--f", "x0^2*y0^2 + x0*x1*y1^2 + x1^2*y2^2", "--point", "1,1;1,2,0,0")
    assert doc["pairs"][0]["image"]["factors"] == [[1, 0], [1, 2, 0, 0]]


def test_git_chambers():
    doc = call_json("git-chambers", "--d", "2", "--e", "2", "--n", "3")
    chambers = doc["chambers"]
    assert [c["label"] for c in chambers] == ["Y", "Z", "Y+"]
    assert "x0*y0" in chambers[0]["generators"]
    assert "y0*z1" in chambers[2]["generators"]
    code, text = call("git-chambers", "--d", "2", "--e", "2", "--n", "3")
    assert "Y+" in text and "x0*z1" in text


def test_hilbert_table():
    doc = call_json("hilbert", "--d", "2", "--e", "2", "--n", "3", "--amax", "2", "--bmax", "3")
    rows = {(r["a"], r["b"]): r for r in doc["rows"]}
    assert rows[(-1, 2)]["h0"] == rows[(-1, 2)]["koszul"] == 2
    assert rows[(1, 0)]["h0"] == 2
    code, text = call("hilbert", "--d", "2", "--e", "2", "--n", "3", "--format", "tsv")
    assert text.splitlines()[0] == "a\tb\th0\tkoszul"


def test_intersect():
    doc = call_json("intersect", "--factors", "1,3", "--degree", "2,2", "--power=-2,3")
    assert doc["degree"] == 9 * (3 * 2 - 2 * 2 * 3)
    doc = call_json("intersect", "--factors", "1,3", "--degree", "2,2", "--classes", "1,0;0,1;0,1")
    assert doc["degree"] == 2
    doc = call_json("intersect", "--factors", "1,3", "--degree", "2,2", "--power=-2,6")
    assert doc["degree"] == 0


def test_cox():
    doc = call_json("cox", "--factors", "1,3", "--degree", "2,2")
    assert doc["cox"]["relation_degrees"] == [[0, 2]] * 3
    assert doc["krull_dimension"] == 5
    code, text = call("cox", "--factors", "1,3", "--degree", "2,2", "--equations")
    assert "y0^2 + x1*z1" in text


def test_classify_grid():
    doc = call_json("classify-grid", "--n", "3", "--dmax", "6", "--emax", "6")
    mds = {(c["d"], c["e"]) for c in doc["cells"] if c["mds"] == "yes"}
    assert mds == {(d, e) for d in range(1, 7) for e in range(1, 7) if d <= 3 or e == 1}


@pytest.mark.parametrize("argv", [
    ["classify", "--factors", "1,3", "--degree", "2,2"],
    ["git-chambers", "--d", "3", "--e", "2", "--n", "3"],
    ["flip-eval", "--d", "2", "--e", "2", "--n", "3", "--count", "4"],
    ["hilbert", "--d", "2", "--e", "3", "--n", "4"],
])
@pytest.mark.parametrize("fmt", ["text", "json", "tsv"])
def test_deterministic(argv, fmt):
    assert call(*argv, "--format", fmt) == call(*argv, "--format", fmt)


def test_emit_report_json_idempotent():
    for args in [((1, 3), (2, 2)), ((1, 3), (4, 2), "very_general"), ((1, 2, 2), (2, 3, 3))]:
        r = classify(*args)
        once = emit_report(r, "json")
        again = emit_report(ClassificationReport.from_json(json.loads(once)), "json")
        assert once == again


def test_emit_report_formats():
    r = classify((1, 3), (2, 2))
    assert b"p1pn-flip" in emit_report(r, "text")
    assert b"case_tag\tp1pn-flip" in emit_report(r, "tsv")


@pytest.mark.parametrize("sub", SUBCOMMANDS)
def test_help(sub, capsys):
    assert run([sub, "--help"]) == 0
    assert "usage" in capsys.readouterr().out


def test_usage_errors(capsys):
    assert run([]) == 2
    assert run(["classify", "--factors", "1,3"]) == 2
    assert run(["classify", "--factors", "1,3", "--degree", "2,2", "--bogus"]) == 2
    assert run(["frobnicate"]) == 2
    assert run(["classify", "--factors", "1,x", "--degree", "2,2"]) == 2


def test_computation_error_json():
    code, text = call("flip-eval", "--d", "2", "--e", "2", "--n", "3", "--point", "1,1;0,0,0,1",
                      "--mod", "5", "--json")
    assert code == 1
    doc = json.loads(text)
    assert doc["schema"] == 1 and doc["error"]["type"] == "IndeterminacyError"


def test_computation_error_text(capsys):
    code, text = call("classify", "--factors", "1,3", "--degree", "0,2")
    assert code == 1 and text == ""
    assert "error" in capsys.readouterr().err
