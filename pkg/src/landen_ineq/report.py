"""CSV and JSON serialization of sweep reports.

Floats are written with 17 significant digits so that parsing either format
recovers the exact binary64 values.  Output contains no timestamps or other
run-dependent data, so identical inputs give byte-identical files.
"""
from __future__ import annotations

import csv
import io
import json
import math
from enum import Enum

from .verify import SweepReport

CSV_HEADER = ("r", "lhs", "rhs", "margin", "verdict")


def fmt_float(x: float) -> str:
    if math.isnan(x):
        return "NaN"
    if math.isinf(x):
        return "Infinity" if x > 0 else "-Infinity"
    return format(x, ".17g")


def dumps(obj, indent: int = 2, _level: int = 0) -> str:
    """JSON encoding with floats at 17 significant digits and stable key order."""
    pad = " " * (indent * (_level + 1))
    end = " " * (indent * _level)
    if isinstance(obj, Enum):
        obj = obj.value
    if isinstance(obj, bool) or obj is None:
        return json.dumps(obj)
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, float):
        return fmt_float(obj)
    if isinstance(obj, str):
        return json.dumps(obj, ensure_ascii=False)
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        items = [f"{pad}{json.dumps(str(k), ensure_ascii=False)}: {dumps(v, indent, _level + 1)}" for k, v in obj.items()]
        return "{\n" + ",\n".join(items) + "\n" + end + "}"
    if isinstance(obj, (list, tuple)):
        if not obj:
            return "[]"
        return "[\n" + ",\n".join(pad + dumps(v, indent, _level + 1) for v in obj) + "\n" + end + "]"
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def report_to_dict(report: SweepReport) -> dict:
    return {
        "theorem_id": report.theorem_id,
        "params": dict(report.params),
        "grid": report.grid.as_dict(),
        "records": [
            {"r": rec.r, "lhs": rec.lhs, "rhs": rec.rhs, "margin": rec.margin, "verdict": rec.verdict.value}
            for rec in report.records
        ],
        "min_margin": report.min_margin,
        "n_violations": report.n_violations,
    }


def to_json(report: SweepReport) -> str:
    return dumps(report_to_dict(report)) + "\n"


def to_csv(report: SweepReport) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for rec in report.records:
        writer.writerow([fmt_float(rec.r), fmt_float(rec.lhs), fmt_float(rec.rhs), fmt_float(rec.margin), rec.verdict.value])
    return buf.getvalue()


def records_from_csv(text: str) -> list[dict]:
    rows = list(csv.DictReader(io.StringIO(text)))
    return [{k: (row[k] if k == "verdict" else float(row[k])) for k in CSV_HEADER} for row in rows]


def records_from_json(text: str) -> list[dict]:
    return json.loads(text)["records"]


def to_table(report: SweepReport) -> str:
    lines = [
        f"{report.theorem_id}  params={dict(report.params)}",
        f"{'r':>8} {'lhs':>22} {'rhs':>22} {'margin':>22}  verdict",
    ]
    for rec in report.records:
        lines.append(f"{rec.r:>8.4g} {rec.lhs:>22.15g} {rec.rhs:>22.15g} {rec.margin:>22.15g}  {rec.verdict.value}")
    lines.append(f"min_margin={fmt_float(report.min_margin)}  n_violations={report.n_violations}")
    return "\n".join(lines) + "\n"
