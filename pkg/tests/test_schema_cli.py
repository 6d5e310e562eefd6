import json
from fractions import Fraction

import pytest

from gradedalg.builders import builtin
from gradedalg.cli import main
from gradedalg.errors import SchemaError
from gradedalg.schema import (algebra_to_description, canonical_json,
                              description_to_algebra, digest,
                              poly_from_description)

F = Fraction

BUILTIN_NAMES = ["m2_z2", "ut2", "sl2", "gl2_z2", "heis3", "aff1", "fz2",
                 "free_trunc_2_3", "free_trunc_1_4"]


@pytest.mark.parametrize("name", BUILTIN_NAMES)
def test_round_trip_builtins(name):
    A = builtin(name)
    desc = algebra_to_description(A)
    B = description_to_algebra(json.loads(json.dumps(desc)))
    assert B.kind == A.kind
    assert B.dim == A.dim
    assert B.group == A.group
    assert B.degrees == A.degrees
    assert B.structure == A.structure
    assert B.unit == A.unit
    assert algebra_to_description(B) == desc


def test_rationals_serialized_in_lowest_terms():
    desc = algebra_to_description(builtin("sl2"))
    for entry in desc["structure"]:
        assert isinstance(entry[3], str)
        F(entry[3])     # parses back


def test_schema_errors_carry_positions():
    desc = algebra_to_description(builtin("fz2"))
    bad = json.loads(json.dumps(desc))
    bad["structure"][0] = [0, 0, 99, "1"]
    with pytest.raises(SchemaError, match=r"structure\[0\]"):
        description_to_algebra(bad)
    bad = json.loads(json.dumps(desc))
    bad["structure"][2] = [0, 0, 0, "1/0"]
    with pytest.raises(SchemaError, match=r"structure\[2\]"):
        description_to_algebra(bad)
    bad = json.loads(json.dumps(desc))
    bad["degrees"] = ["x", 0]
    with pytest.raises(SchemaError, match=r"degrees\[0\]"):
        description_to_algebra(bad)
    bad = json.loads(json.dumps(desc))
    bad["structure"].append(bad["structure"][0])
    with pytest.raises(SchemaError, match="duplicate"):
        description_to_algebra(bad)
    with pytest.raises(SchemaError, match="missing"):
        description_to_algebra({"kind": "associative"})


def test_poly_description():
    A = builtin("m2_z2")
    obj = {"n": 2,
           "terms": [{"coef": "1", "perm": [1, 2], "labels": [0, 0]},
                     {"coef": "-1", "perm": [2, 1], "labels": [0, 0]}]}
    poly = poly_from_description(obj, A)
    from gradedalg.identities import is_graded_identity
    assert is_graded_identity(poly, A)
    with pytest.raises(SchemaError, match=r"terms\[0\].perm"):
        poly_from_description({"n": 2, "terms": [
            {"coef": "1", "perm": [1, 1], "labels": [0, 0]}]}, A)


def test_cli_codim_golden(capsys, tmp_path):
    out = tmp_path / "report.json"
    code = main(["codim", "--builtin", "m2_z2", "--n-max", "2",
                 "--json-out", str(out)])
    assert code == 0
    printed = capsys.readouterr().out
    assert "2" in printed and "7" in printed
    rep = json.loads(out.read_text())
    assert rep["results"]["gr"]["values"] == [2, 7]


def test_cli_codim_both_modes(tmp_path):
    out = tmp_path / "r.json"
    code = main(["codim", "--builtin", "fz2", "--n-max", "3", "--mode", "both",
                 "--json-out", str(out)])
    assert code == 0
    rep = json.loads(out.read_text())
    assert rep["results"]["gr"]["values"] == rep["results"]["h"]["values"]


def test_cli_verify_free_trunc(capsys, tmp_path):
    out = tmp_path / "v.json"
    code = main(["verify", "--builtin", "free_trunc_2_3", "--json-out", str(out)])
    assert code == 0
    rep = json.loads(out.read_text())
    assert rep["results"]["passed"] is True
    (entry,) = rep["results"]["reports"]
    assert entry["dim"] == 6 and entry["graded"] is True and entry["nilpotency_index"] == 3


def test_cli_radical_sl2(capsys):
    code = main(["radical", "--builtin", "sl2"])
    assert code == 0
    outp = capsys.readouterr().out
    assert "solvable: dim 0" in outp
    assert "nilpotent: dim 0" in outp


def test_cli_decompose(capsys):
    assert main(["decompose", "--builtin", "m2_z2"]) == 0
    outp = capsys.readouterr().out
    assert "dims [4]" in outp
    assert main(["decompose", "--builtin", "ut2"]) == 0
    outp = capsys.readouterr().out
    assert "complement dim 2" in outp
    assert main(["decompose", "--builtin", "gl2_z2"]) == 0
    outp = capsys.readouterr().out
    assert "Levi subalgebra dim 3" in outp


def test_cli_builtin_emits_parseable_json(capsys):
    assert main(["builtin", "m2_z2"]) == 0
    desc = json.loads(capsys.readouterr().out)
    assert description_to_algebra(desc).dim == 4


def test_cli_check_identity(tmp_path, capsys):
    poly = tmp_path / "poly.json"
    poly.write_text(json.dumps({
        "n": 2,
        "terms": [{"coef": "1", "perm": [1, 2], "labels": [0, 0]},
                  {"coef": "-1", "perm": [2, 1], "labels": [0, 0]}]}))
    assert main(["check-identity", "--builtin", "m2_z2", "--poly", str(poly)]) == 0
    assert "identity" in capsys.readouterr().out


def test_cli_reports_are_deterministic(tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    main(["codim", "--builtin", "ut2", "--n-max", "3", "--json-out", str(a)])
    main(["codim", "--builtin", "ut2", "--n-max", "3", "--json-out", str(b)])
    assert a.read_bytes() == b.read_bytes()


def test_cli_exit_codes(tmp_path, capsys):
    # usage
    assert main(["codim"]) == 1
    assert main(["no-such-command"]) == 1
    # parse: malformed json
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert main(["radical", "--input", str(bad)]) == 2
    # parse: schema violation with position
    bad2 = tmp_path / "bad2.json"
    bad2.write_text(json.dumps({"kind": "associative", "dim": 1, "group": {"type": "trivial"},
                                "degrees": [0], "structure": [[0, 0, 5, "1"]]}))
    assert main(["radical", "--input", str(bad2)]) == 2
    # invariant violation: structure constant incompatible with the grading
    desc = algebra_to_description(builtin("fz2"))
    desc["structure"] = [[0, 0, 1, "1"]]
    desc.pop("unit")
    bad3 = tmp_path / "bad3.json"
    bad3.write_text(json.dumps(desc))
    assert main(["radical", "--input", str(bad3)]) == 3
    # unknown builtin name
    assert main(["radical", "--builtin", "nope"]) == 3
    # resource cap on n
    assert main(["codim", "--builtin", "fz2", "--n-max", "3", "--max-n", "2"]) == 4
    capsys.readouterr()


def test_cli_max_blocks_flag():
    assert main(["codim", "--builtin", "fz2", "--n-max", "3", "--max-blocks", "4"]) == 4


def test_digest_stability():
    d1 = digest(algebra_to_description(builtin("m2_z2")))
    d2 = digest(algebra_to_description(builtin("m2_z2")))
    assert d1 == d2 and len(d1) == 64
    assert canonical_json({"b": 1, "a": 2}) == '{"a":2,"b":1}'
