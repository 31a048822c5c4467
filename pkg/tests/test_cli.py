from __future__ import annotations

import io
import json

import pytest

from tamezeta.cli import main
from tamezeta.document import emit, parse, render_pretty, to_document
from tamezeta.errors import InvariantError, ParseError
from tamezeta.fiber import StratumData
from tamezeta.kodaira import kodaira_config


def run(monkeypatch, capsys, argv, stdin=""):
    monkeypatch.setattr("sys.stdin", io.StringIO(stdin))
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


def test_document_round_trip(fixture_config):
    assert parse(emit(fixture_config)) == fixture_config


def test_strata_round_trip():
    s = StratumData(((2, -2), (1, 1)), 3, -3)
    assert parse(emit(s)) == s


@pytest.mark.parametrize(
    "text, where",
    [
        ("{", None),
        ('{"kind": "surface"}', "kind"),
        ('{"kind": "curve_dual_graph", "residue_char": 0, "components": [], "extra": 1}', "extra"),
        ('{"kind": "curve_dual_graph", "residue_char": 0, "components": [{"id": "A"}]}', "components[0].multiplicity"),
        ('{"kind": "curve_dual_graph", "residue_char": 0, "components": [{"id": "A", "multiplicity": 1.5}]}', "components[0].multiplicity"),
    ],
)
def test_parse_errors(text, where):
    with pytest.raises(ParseError) as info:
        parse(text)
    if where:
        assert info.value.path == where


def test_total_chi_checked_against_fiber():
    doc = to_document(kodaira_config("II"))
    doc["total_chi"] = 0
    parse(json.dumps(doc))
    doc["total_chi"] = -2
    with pytest.raises(InvariantError):
        parse(json.dumps(doc))


def test_kodaira_to_charpoly(monkeypatch, capsys):
    code, doc, _ = run(monkeypatch, capsys, ["kodaira", "II"])
    assert code == 0
    code, out, _ = run(monkeypatch, capsys, ["charpoly"], doc)
    assert code == 0
    result = json.loads(out)
    assert result["char_poly_h1"] == {"cyclotomic": {"6": 1}, "coefficients": [1, -1, 1]}


def test_commands_on_wild_fiber(monkeypatch, capsys):
    _, doc, _ = run(monkeypatch, capsys, ["kodaira", "II", "--residue-char", "2"])
    code, out, _ = run(monkeypatch, capsys, ["tame", "--d", "3"], doc)
    assert code == 0 and json.loads(out)["tame"] is False
    code, out, _ = run(monkeypatch, capsys, ["trace"], doc)
    assert json.loads(out)["epsilon"] == 1
    code, _, err = run(monkeypatch, capsys, ["degree"], doc)
    assert code == 1 and "NotTame" in err
    code, out, _ = run(monkeypatch, capsys, ["points", "--bound", "9"], doc)
    assert json.loads(out)["members"] == [1, 3, 5, 7, 9]


def test_surgery_commands(monkeypatch, capsys):
    _, doc, _ = run(monkeypatch, capsys, ["kodaira", "IV*"])
    code, blown, _ = run(monkeypatch, capsys, ["blowup", "--intersection", "C,A1.1"], doc)
    assert code == 0
    code, out, _ = run(monkeypatch, capsys, ["minimal"], blown)
    assert json.loads(out) == {"minimal": False, "witnesses": ["X1"]}
    code, out, _ = run(monkeypatch, capsys, ["contract", "--component", "X1"], blown)
    back = json.loads(out)
    assert back["class"] == "StaysSncd" and back["config"] == json.loads(doc)


def test_validate_exit_codes(monkeypatch, capsys):
    doc = to_document(kodaira_config("II"))
    code, out, _ = run(monkeypatch, capsys, ["validate"], json.dumps(doc))
    assert code == 0 and json.loads(out)["ok"]
    doc["components"][0]["self_intersection"] = -7
    code, out, _ = run(monkeypatch, capsys, ["validate"], json.dumps(doc))
    assert code == 1 and not json.loads(out)["ok"]
    code, _, err = run(monkeypatch, capsys, ["zeta"], "not json")
    assert code == 2 and "invalid JSON" in err


def test_stratified_input(monkeypatch, capsys):
    doc = json.dumps(
        {"kind": "stratified", "residue_char": 2, "strata": [{"multiplicity": 4, "chi_open": -1}, {"multiplicity": 1, "chi_open": 3}], "total_chi": 2}
    )
    code, out, _ = run(monkeypatch, capsys, ["trace"], doc)
    result = json.loads(out)
    assert code == 0 and (result["s"], result["epsilon"], result["trace"]) == (3, -1, 2)
    code, _, err = run(monkeypatch, capsys, ["charpoly"], doc)
    assert code == 2


def test_pretty_output(monkeypatch, capsys):
    _, doc, _ = run(monkeypatch, capsys, ["kodaira", "I2*"])
    code, out, _ = run(monkeypatch, capsys, ["--pretty", "charpoly"], doc)
    assert code == 0 and "polynomial: t^2 + 2*t + 1" in out
    assert "coefficients" in render_pretty({"coefficients": [1]})
