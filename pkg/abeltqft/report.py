"""Render command reports as aligned tables, JSON or CSV.

JSON keys and CSV headers are fixed identifiers; only table headers
and yes/no cells go through the locale files.
"""
import csv
import io
import json
from typing import Any, Optional

from abeltqft.algebra.cyclotomic import CyclotomicNumber, GaussianApprox
from abeltqft.config import config
from abeltqft.handlers.base import OutputFormat, Report
from abeltqft.i18n import t


def dumps_json(payload: Any) -> str:
    return json.dumps(payload, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def format_exact(value: CyclotomicNumber, symbolic_terms: Optional[int] = None) -> str:
    """Integer when the value is one, symbolic when short, numeric otherwise."""
    limit = config.get("output.symbolic_terms", 8) if symbolic_terms is None else symbolic_terms
    as_int = value.as_integer()
    if as_int is not None:
        return str(as_int)
    reduced = value.reduced()
    if len(reduced.terms) <= limit:
        return str(reduced)
    return str(value.numeric())


def _format_list(values) -> str:
    return "[" + ",".join(str(v) for v in values) + "]"


def _table_cell(value: Any) -> str:
    if isinstance(value, bool):
        return t("yes") if value else t("no")
    if isinstance(value, CyclotomicNumber):
        return format_exact(value)
    if isinstance(value, (list, tuple)):
        return _format_list(value)
    return str(value)


def _csv_cell(value: Any) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, CyclotomicNumber):
        as_int = value.as_integer()
        return str(as_int) if as_int is not None else str(value)
    if isinstance(value, GaussianApprox):
        return str(reduced)
    if isinstance(value, (list, tuple)):
        return _format_list(value)
    return str(value)


def render_table(report: Report) -> str:
    headers = [t(f"col_{c}") for c in report.columns]
    cells = [[_table_cell(v) for v in row] for row in report.rows]
    widths = [len(h) for h in headers]
    for row in cells:
        for i, cell in enumerate(row):
            widths[i] = max(widths[i], len(cell))

    lines = []
    if report.title:
        lines.append(report.title)
    lines.append("  ".join(h.ljust(w) for h, w in zip(headers, widths)).rstrip())
    lines.append("  ".join("-" * w for w in widths))
    for row in cells:
        lines.append("  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip())
    return "\n".join(lines) + "\n"


def render_csv(report: Report) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(report.columns)
    for row in report.rows:
        writer.writerow([_csv_cell(v) for v in row])
    return buffer.getvalue()


def render(report: Report, output_format: OutputFormat) -> str:
    if output_format is OutputFormat.JSON:
        return dumps_json(report.payload)
    if output_format is OutputFormat.CSV:
        return render_csv(report)
    return render_table(report)
