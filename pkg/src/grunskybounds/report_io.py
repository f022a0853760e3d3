from __future__ import annotations

import csv
import io
from fractions import Fraction
from typing import Any, Iterable, Sequence

from .app_constants import FLOAT_FORMAT
from .grunsky import GrunskyTable
from .mapping_io import dump_json
from .power_series import TruncatedSeries


def fmt_float(value: float) -> str:
    return format(value, FLOAT_FORMAT)


def json_float(value: float | None) -> float | None:
    return None if value is None else float(fmt_float(value))


def fmt_rational(value: Fraction) -> str:
    return str(value)


def fmt_point(point: Sequence[float] | None) -> str:
    return "-" if point is None else ", ".join(fmt_float(v) for v in point)


def omega_key(index: tuple[int, int]) -> str:
    return f"{index[0]},{index[1]}"


def series_payload(name: str, f: TruncatedSeries, f2: TruncatedSeries, table: GrunskyTable, verified: bool) -> dict[str, Any]:
    return {
        "function": name,
        "order": f.order,
        "cap": table.cap,
        "univalence_verified": verified,
        "f": [fmt_rational(c) for c in f.coeffs],
        "f2": [fmt_rational(c) for c in f2.coeffs],
        "omega": {omega_key(index): fmt_rational(value) for index, value in table.items()},
    }


def csv_text(header: Sequence[str], rows: Iterable[Sequence[Any]]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buffer.getvalue()


def series_csv(payload: dict[str, Any]) -> str:
    rows: list[list[str]] = []
    rows.extend(["f", str(n), value] for n, value in enumerate(payload["f"]))
    rows.extend(["f2", str(n), value] for n, value in enumerate(payload["f2"]))
    rows.extend(["omega", key, value] for key, value in payload["omega"].items())
    return csv_text(["kind", "index", "value"], rows)


def series_text(payload: dict[str, Any]) -> str:
    lines = [
        f"function: {payload['function']} (order {payload['order']}, cap {payload['cap']})",
        f"f:  {', '.join(payload['f'])}",
        f"f2: {', '.join(payload['f2'])}",
        "omega:",
    ]
    lines.extend(f"  {key:6} {value}" for key, value in payload["omega"].items())
    return "\n".join(lines) + "\n"


def render(payload: Any, fmt: str, text: str, csv_body: str | None = None) -> str:
    if fmt == "json":
        return dump_json(payload)
    if fmt == "csv" and csv_body is not None:
        return csv_body
    return text


def verify_text(payload: dict[str, Any]) -> str:
    lines: list[str] = []
    for item in payload["functions"]:
        flag = "" if item["univalence_verified"] else " (univalence not verified)"
        lines.append(f"{item['function']}{flag}")
        for identity in item["identities"]:
            mark = "ok" if identity["residual"] == "0" else "FAIL"
            lines.append(f"  identity   {identity['name']:28} residual={identity['residual']:10} {mark}")
        for report in item["functionals"]:
            mark = "ok" if report["matches"] else "FAIL"
            lines.append(
                f"  functional {report['name']:28} direct={report['direct']:10} omega={report['via_omega']:10} {mark}"
            )
        for check in item["moduli"]:
            mark = "ok" if check["holds"] else "FAIL"
            lines.append(f"  modulus    {check['name']:28} {check['value']} <= {check['bound']} {mark}")
    status = "all identities hold" if payload["ok"] else "residuals are not all zero"
    lines.append(f"{payload['identities_checked']} identities checked: {status}")
    return "\n".join(lines) + "\n"


def bound_text(payload: dict[str, Any]) -> str:
    lines = [f"target: {payload['target']}"]
    if "components" in payload:
        parts = payload["components"]
        lines.append(f"B1: {fmt_float(parts['b1'])}")
        lines.append(f"B2: {fmt_float(parts['b2'])}")
    lines.append(f"value: {fmt_float(payload['value'])}")
    if payload.get("argmax") is not None:
        lines.append(f"argmax: {fmt_point(payload['argmax'])}")
        lines.append(f"edge: {payload['edge']}")
    if payload.get("enclosure") is not None:
        lines.append(f"enclosure: [{fmt_point(payload['enclosure'])}]")
    lines.append(f"method: {payload['method']}")
    lines.append(f"published: {payload['published']} (match: {'yes' if payload['match'] else 'no'})")
    if payload.get("announced"):
        lines.append(f"announced: {payload['announced']}")
    if payload.get("previous"):
        lines.append(f"previous: {payload['previous']}")
    return "\n".join(lines) + "\n"


SUMMARY_HEADER = ["target", "value", "published", "match", "previous"]


def summary_rows(payloads: Iterable[dict[str, Any]]) -> list[list[str]]:
    return [
        [
            item["target"],
            fmt_float(item["value"]),
            item["published"],
            "yes" if item["match"] else "no",
            item.get("previous") or "",
        ]
        for item in payloads
    ]


def summary_text(payloads: Sequence[dict[str, Any]]) -> str:
    lines = [f"{'target':10} {'value':12} {'published':10} {'match':5} previous"]
    for row in summary_rows(payloads):
        lines.append(f"{row[0]:10} {row[1]:12} {row[2]:10} {row[3]:5} {row[4]}".rstrip())
    return "\n".join(lines) + "\n"
