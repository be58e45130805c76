import json

import pytest

from conftest import load
from hopfkit.constructions import structurally_equal
from hopfkit.errors import AxiomFailure, ParseError
from hopfkit.fileformat import export_algebra, load_algebra, parse_algebra, write_algebra


@pytest.mark.parametrize("name", ["sweedler", "taft:3", "group:S3", "dual:taft:3", "group:C5"])
def test_round_trip_is_byte_identical(name, tmp_path):
    H = load(name)
    text = export_algebra(H)
    K = parse_algebra(text)
    assert structurally_equal(H, K)
    assert export_algebra(K) == text
    p = tmp_path / "h.jsonl"
    write_algebra(H, p)
    assert export_algebra(load_algebra(p)) == text


def test_prime_field_round_trip():
    from hopfkit.scalar import FieldSpec
    H = load("group:C5", FieldSpec.prime(5))
    K = parse_algebra(export_algebra(H))
    assert K.field is H.field


def _lines(name):
    return export_algebra(load(name)).splitlines()


def test_missing_table_is_named():
    text = "\n".join(ln for ln in _lines("sweedler") if '"antipode"' not in ln)
    with pytest.raises(ParseError, match="missing table.*antipode"):
        parse_algebra(text)


def test_wrong_antipode_gives_witness():
    lines = _lines("group:C2")
    bad = json.dumps({"entries": [[0, 0, "1"], [0, 1, "1"]], "table": "antipode"})
    text = "\n".join(bad if '"antipode"' in ln else ln for ln in lines)
    with pytest.raises(AxiomFailure) as exc:
        parse_algebra(text)
    assert exc.value.witness["basis"] == ["a"]


@pytest.mark.parametrize("mutate,match", [
    (lambda L: L[:1] + ["{not json"] + L[1:], r":2: invalid JSON"),
    (lambda L: [L[0].replace('"dim": 2', '"dim": 3')] + L[1:], "dim"),
    (lambda L: L + ['{"table": "unit", "entries": [[7, "1"]]}'], "out of range"),
    (lambda L: L + ['{"table": "unit", "entries": [[0, 1]]}'], "scalars must be strings"),
    (lambda L: L + ['{"table": "weird", "entries": []}'], "unknown table"),
    (lambda L: [], "empty"),
])
def test_parse_errors_have_locations(mutate, match):
    with pytest.raises(ParseError, match=match):
        parse_algebra("\n".join(mutate(_lines("group:C2"))))


def test_unreadable_path(tmp_path):
    with pytest.raises(ParseError, match="cannot read"):
        load_algebra(tmp_path / "missing.jsonl")
