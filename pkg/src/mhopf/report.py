"""Check records and suite results."""
from __future__ import annotations

from dataclasses import dataclass, field

from .linalg import serialize

PASS, FAIL, INCONCLUSIVE = "pass", "fail", "inconclusive"


def _text(v) -> str:
    if isinstance(v, str):
        return v
    if isinstance(v, bool):
        return str(v).lower()
    return serialize(v)


@dataclass
class Record:
    axiom: str
    instance: str
    sample: str
    status: str
    lhs: str = ""
    rhs: str = ""

    def as_sample(self) -> dict:
        return {"input": f"{self.axiom}: {self.sample}", "lhs": self.lhs, "rhs": self.rhs, "status": self.status}


def compare(axiom: str, instance: str, sample, lhs, rhs) -> Record:
    """Exact comparison of two values (Elem or scalar)."""
    ok = lhs == rhs
    return Record(axiom, instance, _text(sample), PASS if ok else FAIL, _text(lhs), _text(rhs))


def verdict(axiom: str, instance: str, sample, ok: bool, lhs="", rhs="") -> Record:
    return Record(axiom, instance, _text(sample), PASS if ok else FAIL, _text(lhs), _text(rhs))


def inconclusive(axiom: str, instance: str, sample, why: str) -> Record:
    return Record(axiom, instance, _text(sample), INCONCLUSIVE, why, "")


@dataclass
class SuiteResult:
    name: str
    records: list = field(default_factory=list)
    notes: list = field(default_factory=list)

    @property
    def status(self) -> str:
        sts = {r.status for r in self.records}
        if FAIL in sts:
            return FAIL
        if not self.records or INCONCLUSIVE in sts:
            return INCONCLUSIVE
        return PASS

    def counts(self) -> dict:
        out = {PASS: 0, FAIL: 0, INCONCLUSIVE: 0}
        for r in self.records:
            out[r.status] += 1
        return out

    def failures(self) -> list:
        return [r for r in self.records if r.status == FAIL]

    def as_dict(self) -> dict:
        return {
            "name": self.name,
            "samples": [r.as_sample() for r in self.records],
            "status": self.status,
            "notes": list(self.notes),
        }


def summarize(records) -> dict:
    out = {PASS: 0, FAIL: 0, INCONCLUSIVE: 0}
    for r in records:
        out[r.status] += 1
    return out
