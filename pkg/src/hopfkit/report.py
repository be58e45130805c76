"""Verification reports: named checks with pass/fail/not-applicable status."""
from __future__ import annotations

from dataclasses import dataclass, field

PASS = "pass"
FAIL = "fail"
NA = "not-applicable"


@dataclass(frozen=True)
class Check:
    name: str
    status: str
    witness: dict | None = None
    note: str | None = None

    def to_dict(self) -> dict:
        d = {"name": self.name, "status": self.status}
        if self.witness is not None:
            d["witness"] = self.witness
        if self.note is not None:
            d["note"] = self.note
        return d


def witness(basis, lhs, rhs) -> dict:
    """Witness record: the basis tuple plus both evaluated sides as text."""
    if isinstance(basis, (list, tuple)):
        basis = [str(b) for b in basis]
    else:
        basis = [str(basis)]
    return {"basis": basis, "lhs": str(lhs), "rhs": str(rhs)}


@dataclass
class VerificationReport:
    """Ordered list of checks plus computed values (truth vectors, orders...)."""

    checks: list = field(default_factory=list)
    values: dict = field(default_factory=dict)

    def add(self, name: str, ok: bool | None, witness: dict | None = None, note: str | None = None):
        if ok is None:
            status = NA
        else:
            status = PASS if ok else FAIL
        if status == FAIL and witness is None:
            raise ValueError(f"failing check {name!r} needs a witness")
        self.checks.append(Check(name, status, witness if status == FAIL else None, note))
        return self

    def add_check(self, check: Check):
        self.checks.append(check)
        return self

    def extend(self, other: "VerificationReport", prefix: str = ""):
        for c in other.checks:
            self.checks.append(Check(prefix + c.name, c.status, c.witness, c.note))
        for k, v in other.values.items():
            self.values[prefix + k] = v
        return self

    def __getitem__(self, name: str) -> Check:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def status(self, name: str) -> str:
        return self[name].status

    @property
    def failures(self) -> list:
        return [c for c in self.checks if c.status == FAIL]

    @property
    def ok(self) -> bool:
        return not self.failures

    def sorted(self) -> "VerificationReport":
        return VerificationReport(sorted(self.checks, key=lambda c: c.name), dict(sorted(self.values.items())))

    def to_dict(self) -> dict:
        return {
            "checks": [c.to_dict() for c in self.checks],
            "values": self.values,
        }

    def summary(self) -> str:
        lines = []
        for c in self.checks:
            line = f"{c.name:<48} {c.status}"
            if c.witness:
                line += f"  at {','.join(c.witness['basis'])}: {c.witness['lhs']} != {c.witness['rhs']}"
            lines.append(line)
        return "\n".join(lines)


def first_mismatch(items, fmt=str):
    """First (basis, lhs, rhs) triple with lhs != rhs, as a witness; else None."""
    for basis, lhs, rhs in items:
        if lhs != rhs:
            return witness(basis, fmt(lhs), fmt(rhs))
    return None
