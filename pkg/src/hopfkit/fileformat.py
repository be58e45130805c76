"""Line-oriented JSON files holding structure constants.

Line 1 is a header with the field descriptor, dimension and basis names.
Every following line is a record with a "table" key:

    {"entries": [[k, "c"], ...], "table": "unit"}
    {"entries": [[k, "c"], ...], "i": 0, "j": 1, "table": "mult"}
    {"entries": [[j, k, "c"], ...], "i": 0, "table": "comult"}
    {"entries": [[k, "c"], ...], "table": "counit"}
    {"entries": [[row, col, "c"], ...], "table": "antipode"}

Scalars are canonical strings; absent entries are zero. Keys are sorted, so
export(load(f)) reproduces a canonical file byte for byte.
"""
from __future__ import annotations

import json
from pathlib import Path

from .errors import ParseError
from .hopf import HopfPresentation, verified
from .linalg import Matrix
from .scalar import FieldSpec

FORMAT = "hopfkit-algebra/1"
TABLES = ("unit", "mult", "comult", "counit", "antipode")


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(", ", ": "))


def export_algebra(H: HopfPresentation) -> str:
    lines = [_dump({"basis": list(H.basis), "dim": H.dim, "field": H.field.descriptor(),
                    "format": FORMAT, "name": H.name})]
    lines.append(_dump({"table": "unit", "entries": [[k, str(c)] for k, c in enumerate(H.unit) if c]}))
    for (i, j) in sorted(H.mult):
        lines.append(_dump({"table": "mult", "i": i, "j": j,
                            "entries": [[k, str(c)] for k, c in H.mult[i, j]]}))
    for i, terms in enumerate(H.comult):
        lines.append(_dump({"table": "comult", "i": i,
                            "entries": [[j, k, str(c)] for j, k, c in sorted(terms, key=lambda t: t[:2])]}))
    lines.append(_dump({"table": "counit", "entries": [[k, str(c)] for k, c in enumerate(H.counit) if c]}))
    S = H.antipode
    lines.append(_dump({"table": "antipode",
                        "entries": [[r, c, str(S.entries[r, c])] for r, c in sorted(S.entries)]}))
    return "\n".join(lines) + "\n"


def write_algebra(H: HopfPresentation, path) -> None:
    Path(path).write_text(export_algebra(H), encoding="utf-8")


def _index(v, n, where):
    if not isinstance(v, int) or isinstance(v, bool) or not 0 <= v < n:
        raise ParseError(f"{where}: index {v!r} out of range 0..{n - 1}")
    return v


def _scalar(F: FieldSpec, v, where):
    if not isinstance(v, str):
        raise ParseError(f"{where}: scalars must be strings, got {v!r}")
    try:
        return F.parse(v)
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"{where}: bad scalar {v!r}: {exc}") from None


def parse_algebra(text: str, source: str = "<string>", verify: bool = True) -> HopfPresentation:
    lines = [(no, ln) for no, ln in enumerate(text.splitlines(), 1) if ln.strip()]
    if not lines:
        raise ParseError(f"{source}: empty file")

    def load(no, ln):
        try:
            obj = json.loads(ln)
        except json.JSONDecodeError as exc:
            raise ParseError(f"{source}:{no}: invalid JSON ({exc.msg})") from None
        if not isinstance(obj, dict):
            raise ParseError(f"{source}:{no}: expected a JSON object")
        return obj

    no, ln = lines[0]
    head = load(no, ln)
    for key in ("basis", "dim", "field"):
        if key not in head:
            raise ParseError(f"{source}:{no}: header is missing field '{key}'")
    F = FieldSpec.from_descriptor(head["field"])
    n = head["dim"]
    basis = head["basis"]
    if not isinstance(n, int) or n < 1 or not isinstance(basis, list) or len(basis) != n:
        raise ParseError(f"{source}:{no}: 'dim' must match the length of 'basis'")

    unit = [F.zero] * n
    counit = [F.zero] * n
    mult: dict = {}
    comult = [[] for _ in range(n)]
    S: dict = {}
    seen = set()
    for no, ln in lines[1:]:
        rec = load(no, ln)
        where = f"{source}:{no}"
        table = rec.get("table")
        if table not in TABLES:
            raise ParseError(f"{where}: unknown table {table!r} (expected one of {', '.join(TABLES)})")
        entries = rec.get("entries")
        if not isinstance(entries, list):
            raise ParseError(f"{where}: table '{table}' needs an 'entries' list")
        seen.add(table)
        width = 3 if table in ("comult", "antipode") else 2
        for e in entries:
            if not isinstance(e, list) or len(e) != width:
                raise ParseError(f"{where}: '{table}' entries must have {width} items, got {e!r}")
        if table in ("unit", "counit"):
            target = unit if table == "unit" else counit
            for k, c in entries:
                target[_index(k, n, where)] = _scalar(F, c, where)
        elif table == "mult":
            i = _index(rec.get("i"), n, where + " field 'i'")
            j = _index(rec.get("j"), n, where + " field 'j'")
            mult[i, j] = {_index(k, n, where): _scalar(F, c, where) for k, c in entries}
        elif table == "comult":
            i = _index(rec.get("i"), n, where + " field 'i'")
            comult[i].extend((_index(j, n, where), _index(k, n, where), _scalar(F, c, where))
                             for j, k, c in entries)
        else:
            for r, c, v in entries:
                S[_index(r, n, where), _index(c, n, where)] = _scalar(F, v, where)
    missing = [t for t in TABLES if t not in seen]
    if missing:
        raise ParseError(f"{source}: missing table(s): {', '.join(missing)}")
    H = HopfPresentation(F, basis, mult, unit, comult, counit, Matrix(n, n, S, F),
                         name=head.get("name") or Path(source).stem)
    return verified(H) if verify else H


def load_algebra(path) -> HopfPresentation:
    """Parse and axiom-check an algebra file."""
    p = Path(path)
    try:
        text = p.read_text(encoding="utf-8")
    except OSError as exc:
        raise ParseError(f"{path}: cannot read ({exc.strerror})") from None
    return parse_algebra(text, str(path))
