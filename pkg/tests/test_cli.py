import json
import subprocess
import sys

import jsonschema
import pytest

from hopfkit.cli import main, schema


def run(args, capsys):
    code = main(args)
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.mark.parametrize("args", [
    ["verify", "sweedler", "all"],
    ["verify", "group:C5", "--field", "Fp:5", "mainss"],
    ["verify", "bicross:3", "--window", "4", "radford"],
    ["verify", "qsl2", "integrals", "--degree", "4"],
    ["verify", "taft:3", "axioms"],
])
def test_verify_examples_exit_zero(args, capsys):
    code, out, _ = run(args, capsys)
    assert code == 0
    assert "status: pass" in out


def test_bad_characteristic_report(capsys):
    code, out, _ = run(["verify", "group:C5", "--field", "Fp:5", "mainss", "--json", "-"], capsys)
    doc = json.loads(out)
    assert code == 0
    assert doc["values"]["mainss/mainss-truth"] == {"i": False, "ii": True, "iii": True, "iv": False,
                                                    "v": True, "vi": True}
    statuses = {c["name"]: c["status"] for c in doc["checks"]}
    assert statuses["mainss/mainss-unanimity"] == "not-applicable"


def test_inspect_sweedler_orders(capsys):
    code, out, _ = run(["inspect", "sweedler", "orders", "--json", "-"], capsys)
    objs = json.loads(out)["objects"]
    assert code == 0
    assert (objs["order-S"], objs["order-S2"], objs["order-alpha"], objs["order-g"]) == (4, 2, 2, 2)


def test_inspect_taft_grouplikes(capsys):
    code, out, _ = run(["inspect", "taft:3", "grouplikes", "--json", "-"], capsys)
    objs = json.loads(out)["objects"]
    assert objs["g"] == "c^2"
    assert objs["alpha"]["c"] == "-zeta3^1 - 1"  # zeta3^-1 = zeta3^2


def test_inspect_qsl2_nakayama(capsys):
    code, out, _ = run(["inspect", "qsl2", "nakayama", "--degree", "6", "--json", "-"], capsys)
    chi = json.loads(out)["objects"]["chi"]
    assert chi == {"a": "((1)/(q^2))*a", "b": "b", "c": "c", "d": "(q^2)*d"}


@pytest.mark.parametrize("what", ["integrals", "grouplikes", "nakayama", "orders"])
@pytest.mark.parametrize("target", ["sweedler", "bicross:2", "qsl2"])
def test_inspect_all_targets(target, what, capsys):
    code, out, _ = run(["inspect", target, what, "--degree", "3", "--window", "2"], capsys)
    assert code == 0 and out


@pytest.mark.parametrize("target", ["sweedler", "group:C5", "bicross:2", "qsl2"])
def test_json_validates_against_schema(target, tmp_path, capsys):
    p = tmp_path / "r.json"
    extra = ["--window", "2"] if target.startswith("bicross") else ["--degree", "3"] if target == "qsl2" else []
    code, _, _ = run(["verify", target, "all", "--json", str(p)] + extra, capsys)
    assert code == 0
    doc = json.loads(p.read_text())
    jsonschema.validate(doc, schema())
    assert list(doc) == sorted(doc)


def test_export_then_verify_file(tmp_path, capsys):
    p = tmp_path / "s.jsonl"
    assert run(["export", "sweedler", "--out", str(p)], capsys)[0] == 0
    code, out, _ = run(["verify", str(p), "all"], capsys)
    assert code == 0


def test_export_rejects_infinite(tmp_path, capsys):
    code, _, err = run(["export", "qsl2", "--out", str(tmp_path / "x")], capsys)
    assert code == 2 and "infinite" in err


def test_exit_codes_for_bad_input(tmp_path, capsys):
    assert run(["verify", "nope", "all"], capsys)[0] == 2
    bad = tmp_path / "bad.jsonl"
    bad.write_text("{oops\n")
    assert run(["verify", str(bad), "axioms"], capsys)[0] == 2
    # a wrong antipode is an axiom failure with a witness on stderr
    lines = []
    p = tmp_path / "c2.jsonl"
    run(["export", "group:C2", "--out", str(p)], capsys)
    for ln in p.read_text().splitlines():
        lines.append('{"entries": [[0, 0, "1"], [0, 1, "1"]], "table": "antipode"}' if '"antipode"' in ln else ln)
    p.write_text("\n".join(lines) + "\n")
    code, _, err = run(["verify", str(p), "all"], capsys)
    assert code == 1 and "witness: at a" in err


def test_console_script_entry_point():
    r = subprocess.run([sys.executable, "-m", "hopfkit.cli", "--version"], capture_output=True, text=True)
    assert r.returncode == 0 and "hopfkit" in r.stdout
