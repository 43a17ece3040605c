"""Tests for the command line interface."""

import json
import os

from click.testing import CliRunner

from dblcheck.cli import main, render_text

FIXTURES = os.path.join(os.path.dirname(__file__), "..", "fixtures")


def fx(name):
    return os.path.join(FIXTURES, name)


def run(*args):
    return CliRunner().invoke(main, list(args))


def test_validate_fixtures():
    for name in ("trivial.json", "parity.json", "bool2.json", "walk.json",
                 "preorder.json"):
        res = run("validate", fx(name))
        assert res.exit_code == 0, res.output
        assert "passed" in res.output


def test_validate_parse_error(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    res = run("validate", str(bad))
    assert res.exit_code == 2


def test_validate_schema_error(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"builtin": "no-such-thing"}))
    res = run("validate", str(bad))
    assert res.exit_code == 2


def test_functor_check():
    res = run("functor-check", fx("monad-functor.json"))
    assert res.exit_code == 0, res.output


def test_functor_check_law_failure(tmp_path):
    doc = json.load(open(fx("monad-functor.json")))
    # swap the unitor target onto the wrong boundary
    doc["unit"]["*"] = {"top": "R", "bottom": "R",
                        "left": "1^*", "right": "1^*"}
    path = tmp_path / "broken.json"
    path.write_text(json.dumps(doc))
    res = run("functor-check", str(path))
    assert res.exit_code == 1
    assert "FAIL" in res.output


def test_transform_check():
    res = run("transform-check", fx("transform-hor.json"))
    assert res.exit_code == 0, res.output


def test_quasi_check():
    res = run("quasi-check", fx("preorder-pair.json"))
    assert res.exit_code == 0, res.output


def test_curry_uncurry():
    assert run("curry", fx("preorder-pair.json")).exit_code == 0
    assert run("uncurry", fx("preorder-pair.json")).exit_code == 0


def test_strictify_destrictify():
    assert run("strictify", fx("preorder-pair.json")).exit_code == 0
    assert run("destrictify", fx("quasi-identity.json")).exit_code == 0
    # a non-invertible unitor stops destrictification with a law failure
    res = run("destrictify", fx("preorder-pair.json"))
    assert res.exit_code == 1
    assert "unitor" in res.output


def test_tensor_factorize():
    res = run("tensor-factorize", fx("preorder-pair.json"))
    assert res.exit_code == 0, res.output


def test_hom():
    res = run("hom", fx("trivial.json"), fx("parity.json"), "--flavor", "hop")
    assert res.exit_code == 0, res.output
    assert "objects: 4" in res.output


def test_monads_enumerate():
    res = run("monads-enumerate", "--size", "2")
    assert res.exit_code == 0, res.output
    assert "count: 4" in res.output


def test_monads_comp_and_diagram():
    assert run("monads-comp", "--size", "2").exit_code == 0
    assert run("monads-diagram", "--size", "2").exit_code == 0
    res = run("monads-diagram", "--size", "3", "--sample", "10",
              "--seed", "1")
    assert res.exit_code == 0, res.output
    assert "checked: 10" in res.output


def test_monads_diagram_deterministic():
    a = run("monads-diagram", "--size", "3", "--sample", "5", "--seed", "7")
    b = run("monads-diagram", "--size", "3", "--sample", "5", "--seed", "7")
    # strip the timing line prefix before comparing
    strip = lambda out: [l for l in out.splitlines() if "checked" in l]
    assert strip(a.output) == strip(b.output)


def test_json_report_roundtrip(tmp_path):
    out = tmp_path / "report.json"
    res = run("quasi-check", fx("preorder-pair.json"), "--json", str(out))
    assert res.exit_code == 0
    payload = json.loads(out.read_text())
    assert payload["verdict"] == "passed"
    assert render_text(payload) == res.output.rstrip("\n")
    # the machine format survives a serialization cycle losslessly
    assert json.loads(json.dumps(payload)) == payload
