"""CSV and JSON emission for reports, with exact round-trip parsing.

Floats are written with repr (shortest round-trip form), lists and dicts
as compact JSON cells, so parse(emit(x)) reconstructs x bit for bit.
All CSV uses comma delimiters, '.' decimals, and LF line endings.
"""

from __future__ import annotations

import csv
import io
import json
from typing import Optional, Sequence

from .cm_verifier import CMReport
from .inequalities import IneqReport

SCHEMA_VERSION = 1


def _fmt(value) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return repr(value)
    return str(value)


def _parse_float(cell: str) -> Optional[float]:
    return float(cell) if cell else None


def _parse_bool(cell: str) -> bool:
    return cell == "true"


def rows_to_csv(rows: Sequence[dict], columns: Sequence[str]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(columns)
    for row in rows:
        writer.writerow([_fmt(row.get(c)) for c in columns])
    return buf.getvalue()


def rows_from_csv(text: str) -> list[dict]:
    reader = csv.reader(io.StringIO(text))
    header = next(reader)
    out = []
    for raw in reader:
        out.append({c: _parse_float(cell) for c, cell in zip(header, raw)})
    return out


_INEQ_COLUMNS = (
    "id", "params", "samples", "min_slack_lower", "min_slack_upper",
    "verdict", "flags",
)


def ineq_reports_to_csv(reports: Sequence[IneqReport]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(_INEQ_COLUMNS)
    for r in reports:
        writer.writerow([
            r.case_id,
            json.dumps(r.params, sort_keys=True),
            r.samples,
            _fmt(r.min_slack_lower),
            _fmt(r.min_slack_upper),
            _fmt(r.verdict),
            ";".join(r.flags),
        ])
    return buf.getvalue()


def ineq_reports_from_csv(text: str) -> list[IneqReport]:
    reader = csv.reader(io.StringIO(text))
    header = next(reader)
    assert tuple(header) == _INEQ_COLUMNS, f"unexpected header {header}"
    out = []
    for raw in reader:
        out.append(IneqReport(
            case_id=raw[0],
            params=json.loads(raw[1]),
            samples=int(raw[2]),
            min_slack_lower=_parse_float(raw[3]),
            min_slack_upper=_parse_float(raw[4]),
            verdict=_parse_bool(raw[5]),
            flags=tuple(f for f in raw[6].split(";") if f),
        ))
    return out


_CM_COLUMNS = (
    "family", "p", "q", "lambda", "sign", "grid", "cm_tol",
    "orders_checked", "requested_orders", "clipped",
    "order", "worst_margin", "verdict",
)


def cm_report_to_csv(report: CMReport) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(_CM_COLUMNS)
    shared = [
        report.family,
        json.dumps(list(report.p)),
        json.dumps(list(report.q)),
        _fmt(report.lam),
        report.sign,
        json.dumps(list(report.grid)),
        _fmt(report.cm_tol),
        report.orders_checked,
        report.requested_orders,
        _fmt(report.clipped),
    ]
    for m in range(report.orders_checked + 1):
        writer.writerow(shared + [m, _fmt(report.worst_margin[m]),
                                  _fmt(report.verdict[m])])
    return buf.getvalue()


def cm_report_from_csv(text: str) -> CMReport:
    reader = csv.reader(io.StringIO(text))
    header = next(reader)
    assert tuple(header) == _CM_COLUMNS, f"unexpected header {header}"
    rows = list(reader)
    first = rows[0]
    margins = [0.0] * len(rows)
    verdicts = [False] * len(rows)
    for raw in rows:
        m = int(raw[10])
        margins[m] = float(raw[11])
        verdicts[m] = _parse_bool(raw[12])
    return CMReport(
        family=first[0],
        p=tuple(json.loads(first[1])),
        q=tuple(json.loads(first[2])),
        lam=float(first[3]),
        sign=int(first[4]),
        grid=tuple(json.loads(first[5])),
        cm_tol=float(first[6]),
        orders_checked=int(first[7]),
        requested_orders=int(first[8]),
        clipped=_parse_bool(first[9]),
        worst_margin=tuple(margins),
        verdict=tuple(verdicts),
    )


def json_document(payload: dict) -> str:
    doc = {"schema_version": SCHEMA_VERSION}
    doc.update(payload)
    return json.dumps(doc, indent=2, sort_keys=True)
