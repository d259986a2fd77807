import json

import jsonschema
import pytest

from conftest import GOLDEN, SCHEMAS


def validator(schema, pointer):
    return jsonschema.Draft202012Validator(dict(schema, **{"$ref": pointer}))


def check_output(schema, command, doc):
    pointer = "#/$defs/error" if "error" in doc else f"#/$defs/commands/{command}"
    validator(schema, pointer).validate(doc)


def golden_cases():
    return sorted(p.stem for p in GOLDEN.glob("*.args"))


def test_schemas_are_valid():
    for path in SCHEMAS.glob("*.json"):
        jsonschema.Draft202012Validator.check_schema(json.loads(path.read_text()))


@pytest.mark.parametrize("name", golden_cases())
def test_golden_outputs_match_schema(output_schema, name):
    args = json.loads((GOLDEN / f"{name}.args").read_text())
    doc = json.loads((GOLDEN / f"{name}.json").read_text())
    check_output(output_schema, args[0], doc)


@pytest.mark.parametrize("name", golden_cases())
def test_fresh_outputs_match_golden(cli, name):
    args = json.loads((GOLDEN / f"{name}.args").read_text())
    _, out = cli(*args)
    assert out == (GOLDEN / f"{name}.json").read_text()


@pytest.mark.parametrize("doc", [
    {"rd": "3/1"},
    {"rd": "1/0"},
    {"rd": "1/2", "extra": 1},
    {"rd": 0.5},
    {"rd": "-0"},
])
def test_schema_rejects_malformed_rd(output_schema, doc):
    with pytest.raises(jsonschema.ValidationError):
        check_output(output_schema, "rd", doc)


def test_schema_rejects_bad_error_code(output_schema):
    with pytest.raises(jsonschema.ValidationError):
        check_output(output_schema, "rd", {"error": {"code": "Oops", "message": ""}})


def test_input_schema_accepts_input_file(input_schema):
    doc = {"matrix": [[2, 1], [1, 2]], "nu": ["1/3", "1/3"], "prec": "2", "k": "1/2", "numeric": True}
    jsonschema.Draft202012Validator(input_schema).validate(doc)
    with pytest.raises(jsonschema.ValidationError):
        jsonschema.Draft202012Validator(input_schema).validate({"matrix": [[2]], "colour": "red"})


def test_input_file_round_trip(cli, input_schema, output_schema, tmp_path):
    doc = {"matrix": [[2, 1], [1, 2]], "verbose": True}
    jsonschema.Draft202012Validator(input_schema).validate(doc)
    path = tmp_path / "in.json"
    path.write_text(json.dumps(doc))
    code, out = cli("rd", "--input", path)
    assert code == 0
    result = json.loads(out)
    check_output(output_schema, "rd", result)
    assert result["rd"] == "2/3"
    assert "vertices" in result
