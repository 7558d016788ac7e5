import io
import json
import subprocess
import sys

import jsonschema
import pytest

from pkmatrix.cli import main

NAT = {"type": "integer", "minimum": 0}
NAT_LIST = {"type": "array", "items": NAT}

SCHEMAS = {
    "pair": {"type": "object", "required": ["x", "y", "z"],
             "properties": {"x": NAT, "y": NAT, "z": NAT}, "additionalProperties": False},
    "unpair": {"type": "object", "required": ["x", "y", "z"],
               "properties": {"x": NAT, "y": NAT, "z": NAT}, "additionalProperties": False},
    "row": NAT_LIST,
    "col": NAT_LIST,
    "gf": {"type": "object", "required": ["numerator", "denominator", "coefficients"],
           "properties": {k: {"type": "array", "items": {"type": "integer"}}
                          for k in ("numerator", "denominator", "coefficients")}},
    "shell": {"type": "object", "required": ["n", "values"],
              "properties": {"n": NAT, "values": NAT_LIST}},
    "segment": {"type": "object", "required": ["y", "terms"],
                "properties": {"y": NAT, "terms": NAT_LIST}},
    "bijection": {"type": "array", "items": {
        "type": "object", "required": ["index", "shell_value", "segment_value"],
        "properties": {"index": NAT, "shell_value": NAT, "segment_value": NAT}}},
    "sg_hit": {"type": "object", "required": ["p", "q", "x", "y"],
               "properties": {"p": NAT, "q": NAT, "x": NAT, "y": NAT}, "additionalProperties": False},
    "sg-columns": {"type": "array", "items": {
        "type": "object", "required": ["x", "class", "residue_pattern"],
        "properties": {"x": NAT, "class": {"enum": ["allowed", "forbidden"]},
                       "residue_pattern": {"type": "string"}}}},
    "conjecture6": {"type": "array", "items": {
        "type": "object", "required": ["y", "witness", "terms_scanned"],
        "properties": {"y": NAT, "witness": {"type": ["integer", "null"]}, "terms_scanned": NAT}}},
    "density": {"type": "object",
                "required": ["set", "N", "count", "density_num", "density_den", "limit_num", "limit_den"],
                "properties": {"set": {"type": "string"}, "N": NAT, "count": NAT,
                               "density_num": NAT, "density_den": NAT,
                               "limit_num": {"type": ["integer", "null"]},
                               "limit_den": {"type": ["integer", "null"]}}},
}


def run(*argv, environ=None):
    out, err = io.BytesIO(), io.StringIO()
    code = main(list(argv), stdout=out, stderr=err, environ=environ or {})
    return code, out.getvalue().decode(), err.getvalue()


def test_pair_and_unpair():
    assert run("pair", "1", "4") == (0, "47\n", "")
    assert run("unpair", "47")[1] == "1 4\n"


def test_shell_plain_output():
    code, out, _ = run("shell", "--n", "6")
    expected = ("31, 47, 39, 55, 35, 43, 51, 59, 33, 37, 41, 45, 49, 53, 57, 61, "
                + ", ".join(str(e) for e in range(32, 63, 2)) + "\n")
    assert code == 0 and out == expected


def test_shell_appendix_a_format():
    out = run("shell", "--n", "6", "--appendix-a-format")[1]
    assert out == ("31, 47, 39, 55, 35, 43, 51, 59, 33, 37, 41, 45, 49, 53, 57, 61.\n"
                   "Next come even numbers: 32, 34, 36, ..., 62.\n")


def test_sg_scan():
    assert run("sg-scan", "--limit", "25")[1] == "2, 3, 5, 11, 23\n"
    lines = run("sg-scan", "--limit", "25", "--format", "json")[1].splitlines()
    hits = [json.loads(l) for l in lines]
    for h in hits:
        jsonschema.validate(h, SCHEMAS["sg_hit"])
    assert hits[1] == {"p": 3, "q": 7, "x": 0, "y": 2}
    csv_out = run("sg-scan", "--limit", "25", "--format", "csv")[1]
    assert csv_out.splitlines()[:2] == ["p,q,x,y", "2,5,1,0"]


@pytest.mark.parametrize("schema, argv", [
    ("pair", ["pair", "3", "3"]),
    ("unpair", ["unpair", "55"]),
    ("row", ["row", "3", "--count", "5"]),
    ("col", ["col", "2", "--count", "5"]),
    ("gf", ["gf-row", "3", "--terms", "6"]),
    ("gf", ["gf-col", "2", "--terms", "6"]),
    ("shell", ["shell", "--n", "5"]),
    ("segment", ["segment", "3"]),
    ("bijection", ["bijection", "--columns", "20"]),
    ("sg-columns", ["sg-columns", "--count", "10", "--max-y", "8"]),
    ("conjecture6", ["conjecture6", "2", "8"]),
    ("density", ["density", "mersenne", "--N", "1023"]),
    ("density", ["density", "row", "--index", "2", "--N", "1000"]),
    ("density", ["density", "col", "--index", "1", "--N", "100"]),
    ("density", ["density", "sg", "--N", "10000"]),
])
def test_json_outputs_match_schema(schema, argv):
    code, out, _ = run(*argv, "--format", "json")
    assert code == 0
    doc = json.loads(out)
    jsonschema.validate(doc, SCHEMAS[schema])
    # plain mode is stable across runs
    assert run(*argv) == run(*argv)


def test_gf_plain():
    assert run("gf-col", "1", "--terms", "4")[1] == "(2 - 1·t)/(1 - 3·t + 2·t²)\n2, 5, 11, 23\n"


def test_density_values():
    doc = json.loads(run("density", "mersenne", "--N", "1023", "--format", "json")[1])
    assert (doc["count"], doc["density_num"], doc["density_den"]) == (10, 10, 1023)


def test_bijection_plain_matches_fixture(tmp_path):
    from pathlib import Path
    fixture = (Path(__file__).parent / "data" / "appendix_b.tsv").read_text()
    assert run("bijection", "--columns", "127")[1] == fixture
    wrapped = run("bijection", "--columns", "30", "--wrap", "20")[1]
    assert len(wrapped.strip().split("\n\n")) == 2


def test_carpet_to_file(tmp_path):
    target = tmp_path / "c.pgm"
    code, out, _ = run("carpet", "--width", "8", "--height", "6", "--image", "pgm", "--out", str(target))
    assert code == 0 and out == ""
    assert target.read_bytes().startswith(b"P2\n8 6\n255\n")


def test_usage_errors_exit_2():
    assert run()[0] == 2
    assert run("nope")[0] == 2
    assert run("pair", "-1", "0")[0] == 2
    assert run("shell", "--n", "0")[0] == 2
    assert run("conjecture6", "1")[0] == 2


def test_capacity_errors_exit_3():
    code, _, err = run("pair", "0", "2000")
    assert code == 0
    code, _, err = run("pair", "0", "2000", "--bit-budget", "1000")
    assert code == 3 and "capacity" in err
    assert run("segment", "31")[0] == 3


def test_falsified_conjecture_exits_4(monkeypatch):
    from pkmatrix import segments
    monkeypatch.setattr(segments, "is_prime", lambda z: False)
    code, out, _ = run("conjecture6", "3")
    assert code == 4
    assert "falsified" in out


def test_environment_overrides():
    env = {"PKM_FORMAT": "json", "PKM_BIT_BUDGET": "1000"}
    assert run("pair", "1", "4", environ=env)[1] == '{"x": 1, "y": 4, "z": 47}\n'
    assert run("pair", "0", "2000", environ=env)[0] == 3
    # flags beat the environment
    assert run("pair", "1", "4", "--format", "plain", environ=env)[1] == "47\n"


def test_global_flags_before_subcommand():
    assert run("--format", "json", "pair", "1", "4")[1] == '{"x": 1, "y": 4, "z": 47}\n'


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "pkmatrix", "pair", "1", "4"],
                          capture_output=True, text=True, check=True)
    assert proc.stdout == "47\n"
