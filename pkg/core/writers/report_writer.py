import csv
import io
import json
import sys
from datetime import datetime, timezone
from enum import Enum
from fractions import Fraction
from pathlib import Path
from typing import Any, Optional

import mpmath

from core.helpers.rational_codec import RationalCodec
from core.models.command import OutputFormat
from core.models.report import Report

SUMMARY_COLUMNS = ["check_id", "passed", "checked", "skipped", "counterexamples"]
TEXT_COUNTEREXAMPLE_LIMIT = 5


class ReportWriter:
    def __init__(self, version: str = "", codec: Optional[RationalCodec] = None) -> None:
        self.version = version
        self.codec = codec or RationalCodec()

    def write(
        self,
        report: Report,
        output_format: OutputFormat,
        digits: int,
        output: Optional[Path] = None,
    ) -> None:
        text = self.render(report, output_format, digits)

        if output is None:
            sys.stdout.write(text)
            return

        output.parent.mkdir(parents=True, exist_ok=True)
        output.write_text(text, encoding="utf-8")

    def render(self, report: Report, output_format: OutputFormat, digits: int) -> str:
        renderers = {
            OutputFormat.JSON: self.render_json,
            OutputFormat.CSV: self.render_csv,
            OutputFormat.TEXT: self.render_text,
        }
        return renderers[output_format](report, digits)

    def render_json(self, report: Report, digits: int) -> str:
        payload = {
            "metadata": {
                "tool": "binomsum",
                "version": self.version,
                "command": report.command,
                "generated_at": datetime.now(timezone.utc).isoformat(timespec="seconds"),
            },
            "config_echo": self._exact(report.config_echo, digits),
            "passed": report.passed,
            "rows": self._exact(report.rows, digits),
            "reports": [self._exact(item.to_dict(), digits) for item in report.reports],
        }
        return json.dumps(payload, indent=2, ensure_ascii=False) + "\n"

    def render_csv(self, report: Report, digits: int) -> str:
        columns, rows = self._table(report, digits)

        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(columns)
        writer.writerows(rows)
        return buffer.getvalue()

    def render_text(self, report: Report, digits: int) -> str:
        columns, rows = self._table(report, digits)
        widths = [
            max([len(column)] + [len(row[i]) for row in rows]) for i, column in enumerate(columns)
        ]

        lines = ["  ".join(column.ljust(w) for column, w in zip(columns, widths)).rstrip()]
        for row in rows:
            lines.append("  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip())

        for item in report.reports:
            for counterexample in item.counterexamples[:TEXT_COUNTEREXAMPLE_LIMIT]:
                lines.append(
                    f"  {item.check_id} {counterexample.params}: "
                    f"{counterexample.lhs} {counterexample.relation} {counterexample.rhs} "
                    f"fails {counterexample.note}".rstrip()
                )
            hidden = len(item.counterexamples) - TEXT_COUNTEREXAMPLE_LIMIT
            if hidden > 0:
                lines.append(f"  {item.check_id}: {hidden} more counterexample(s)")

        return "\n".join(lines) + "\n"

    def _table(self, report: Report, digits: int) -> tuple[list[str], list[list[str]]]:
        if report.columns:
            rows = [
                [self._decimal(row.get(column), digits) for column in report.columns]
                for row in report.rows
            ]
            return list(report.columns), rows

        rows = [
            [
                item.check_id,
                self._decimal(item.passed, digits),
                str(item.checked),
                str(item.skipped),
                str(len(item.counterexamples)),
            ]
            for item in report.reports
        ]
        return list(SUMMARY_COLUMNS), rows

    def _exact(self, value: Any, digits: int) -> Any:
        if isinstance(value, Fraction):
            return self.codec.encode(value)
        if isinstance(value, Enum):
            return value.value
        if isinstance(value, Path):
            return str(value)
        if hasattr(value, "_mpf_"):
            return mpmath.nstr(value, digits)
        if isinstance(value, dict):
            return {str(key): self._exact(item, digits) for key, item in value.items()}
        if isinstance(value, (list, tuple)):
            return [self._exact(item, digits) for item in value]
        return value

    def _decimal(self, value: Any, digits: int) -> str:
        if value is None:
            return ""
        if isinstance(value, bool):
            return "true" if value else "false"
        if isinstance(value, Fraction) or hasattr(value, "_mpf_"):
            return self.codec.to_decimal(value, digits)
        if isinstance(value, (list, tuple)):
            return " ".join(self._decimal(item, digits) for item in value)
        return str(value)
