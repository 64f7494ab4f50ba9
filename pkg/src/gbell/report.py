"""CSV and JSON serialization of conjecture reports.

Rationals are written as ``"p/q"`` strings (authoritative) with a six-decimal
convenience field next to ``A``.
"""

from __future__ import annotations

import csv
import io
import json
from fractions import Fraction

from .lab import ConjectureReport, ReportRow, decimal6

CSV_HEADER = ["key", "n", "m", "chi", "delta", "B", "T", "A", "A_dec",
              "L1", "L2", "L3", "c1", "c2", "c3", "eq1", "eq2", "eq3"]

_RATIONAL = {"type": "string", "pattern": r"^-?[0-9]+/[0-9]+$"}
_DECIMAL = {"type": "string", "pattern": r"^-?[0-9]+\.[0-9]{6}$"}

JSON_SCHEMA = {
    "type": "object",
    "required": ["rows", "summaries", "theorem_checks", "skipped", "violations"],
    "properties": {
        "rows": {
            "type": "array",
            "items": {
                "type": "object",
                "required": CSV_HEADER,
                "properties": {
                    "key": {"type": "string"},
                    **{k: {"type": "integer", "minimum": 0} for k in ("n", "m", "chi", "delta")},
                    "B": {"type": "string", "pattern": "^[0-9]+$"},
                    "T": {"type": "string", "pattern": "^[0-9]+$"},
                    "A": _RATIONAL, "A_dec": _DECIMAL,
                    "L1": _RATIONAL, "L2": _RATIONAL, "L3": _RATIONAL,
                    **{k: {"type": "boolean"} for k in ("c1", "c2", "c3", "eq1", "eq2", "eq3")},
                },
            },
        },
        "summaries": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["kind", "n", "value", "count", "min_A", "minimizers", "expected", "ok"],
                "properties": {
                    "kind": {"enum": ["all", "chi", "delta"]},
                    "n": {"type": "integer"},
                    "value": {"type": ["integer", "null"]},
                    "count": {"type": "integer"},
                    "min_A": _RATIONAL,
                    "minimizers": {"type": "array", "items": {"type": "string"}},
                    "expected": {"type": "string"},
                    "expected_present": {"type": "boolean"},
                    "ok": {"type": "boolean"},
                },
            },
        },
        "theorem_checks": {"type": "object"},
        "skipped": {"type": "integer"},
        "violations": {"type": "integer"},
    },
}


def rat(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def row_dict(r: ReportRow) -> dict:
    return {
        "key": r.key, "n": r.n, "m": r.m, "chi": r.chi, "delta": r.delta,
        "B": str(r.B), "T": str(r.T), "A": rat(r.A), "A_dec": decimal6(r.A),
        "L1": rat(r.L1), "L2": rat(r.L2), "L3": rat(r.L3),
        "c1": r.c1, "c2": r.c2, "c3": r.c3, "eq1": r.eq1, "eq2": r.eq2, "eq3": r.eq3,
    }


def to_json(report: ConjectureReport) -> str:
    doc = {
        "rows": [row_dict(r) for r in report.rows],
        "summaries": [
            {"kind": s.kind, "n": s.n, "value": s.value, "count": s.count, "min_A": rat(s.min_A),
             "minimizers": s.minimizers, "expected": s.expected,
             "expected_present": s.expected_present, "ok": s.ok}
            for s in report.summaries
        ],
        "theorem_checks": report.theorem_checks,
        "skipped": report.skipped,
        "violations": report.violations,
    }
    return json.dumps(doc, indent=1, sort_keys=False) + "\n"


def to_csv(report: ConjectureReport) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_HEADER)
    for r in report.rows:
        d = row_dict(r)
        w.writerow([int(v) if isinstance(v, bool) else v for v in (d[k] for k in CSV_HEADER)])
    return buf.getvalue()
