from dataclasses import dataclass, field
from typing import Any

from core.models.verification_report import VerificationReport


@dataclass
class Report:
    command: str
    config_echo: dict[str, Any]
    columns: list[str] = field(default_factory=list)
    rows: list[dict[str, Any]] = field(default_factory=list)
    reports: list[VerificationReport] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(report.passed for report in self.reports)

    def add_row(self, **values: Any) -> None:
        self.rows.append(values)
