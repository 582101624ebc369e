from dataclasses import dataclass
from typing import Any, Optional

from core.models.verification_report import VerificationReport


@dataclass
class CellResult:
    params: dict[str, Any]
    report: Optional[VerificationReport] = None
    skipped_reason: str = ""

    @property
    def skipped(self) -> bool:
        return self.report is None
