"""Ingestion of curve records (JSON lines) and emission of verification
reports.

Record grammar, one object per line:
    {"label": str?, "a": [5 ints], "rank": int?, "torsion": int?,
     "sha": int?, "tamagawa": {"p": int, ...}?}
Unknown keys are ignored.  Reports are newline-delimited JSON with sorted
keys and fixed separators, so identical verdict lists serialize to identical
bytes.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from importlib import resources

from .curve import WeierstrassCurve, invariants
from .errors import EcqError

__all__ = ["CurveRecord", "ParseIssue", "parse_records", "serialize_record",
           "write_report", "named_curves"]


@dataclass(frozen=True)
class CurveRecord:
    a_invariants: tuple                 # five ints
    label: str | None = None
    rank: int | None = None
    torsion_order: int | None = None
    sha_order: int | None = None
    tamagawa: tuple = ()                # sorted ((p, c_p), ...)

    def curve(self) -> WeierstrassCurve:
        return invariants(*self.a_invariants)


@dataclass(frozen=True)
class ParseIssue:
    line: int
    message: str

    def __str__(self):
        return f"line {self.line}: {self.message}"


def _parse_line(obj, lineno):
    if not isinstance(obj, dict):
        raise ValueError("record is not an object")
    if "a" not in obj:
        raise ValueError('missing "a"')
    a = obj["a"]
    if not (isinstance(a, list) and len(a) == 5
            and all(isinstance(x, int) for x in a)):
        raise ValueError('"a" must be an array of 5 integers')
    invariants(*a)          # rejects singular quintuples
    for key in ("rank", "torsion", "sha"):
        if key in obj and (not isinstance(obj[key], int)
                           or (key != "rank" and obj[key] < 1)
                           or (key == "rank" and obj[key] < 0)):
            raise ValueError(f'"{key}" out of range')
    tam = ()
    if "tamagawa" in obj:
        if not isinstance(obj["tamagawa"], dict):
            raise ValueError('"tamagawa" must be an object')
        items = []
        for k, v in obj["tamagawa"].items():
            if not (k.isdigit() and isinstance(v, int) and v >= 1):
                raise ValueError(f'bad tamagawa entry {k!r}: {v!r}')
            items.append((int(k), v))
        tam = tuple(sorted(items))
    return CurveRecord(
        a_invariants=tuple(a),
        label=obj.get("label"),
        rank=obj.get("rank"),
        torsion_order=obj.get("torsion"),
        sha_order=obj.get("sha"),
        tamagawa=tam,
    )


def parse_records(text):
    """Parse newline-delimited records; returns (records, issues).

    Order-preserving; a malformed line becomes a ParseIssue with its line
    number and does not affect the other lines.
    """
    records, issues = [], []
    for lineno, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        try:
            obj = json.loads(line)
            records.append(_parse_line(obj, lineno))
        except (ValueError, EcqError) as exc:
            issues.append(ParseIssue(lineno, str(exc)))
    return records, issues


def serialize_record(rec: CurveRecord) -> str:
    obj = {"a": list(rec.a_invariants)}
    if rec.label is not None:
        obj["label"] = rec.label
    if rec.rank is not None:
        obj["rank"] = rec.rank
    if rec.torsion_order is not None:
        obj["torsion"] = rec.torsion_order
    if rec.sha_order is not None:
        obj["sha"] = rec.sha_order
    if rec.tamagawa:
        obj["tamagawa"] = {str(p): c for p, c in rec.tamagawa}
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def write_report(verdicts, sink) -> None:
    """Emit one JSON object per verdict: {"theorem", "curve", "status",
    "witness"}; byte-stable for identical verdict lists."""
    for v in verdicts:
        obj = {"theorem": v.theorem, "curve": v.curve, "status": v.status,
               "witness": v.witness}
        sink.write(json.dumps(obj, sort_keys=True, separators=(",", ":")))
        sink.write("\n")


def named_curves():
    """The bundled fixture records, keyed by label."""
    text = (resources.files("ecq") / "data" / "named_curves.jsonl").read_text()
    records, issues = parse_records(text)
    assert not issues, issues
    return {r.label: r for r in records}
