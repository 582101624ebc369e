import dataclasses
import logging
from collections.abc import Mapping
from concurrent.futures import ProcessPoolExecutor
from itertools import repeat
from typing import Any, Optional

from core.models.errors import ScopeError
from core.models.result import CellResult
from core.models.sweep_definition import CellFunction, SweepDefinition
from core.models.verification_report import VerificationReport

logger = logging.getLogger(__name__)


def _run_cell(cell: CellFunction, params: dict[str, Any]) -> CellResult:
    try:
        report = cell(**params)
    except ScopeError as exc:
        # außerhalb des Geltungsbereichs: übersprungen, kein Gegenbeispiel
        return CellResult(params=params, skipped_reason=str(exc))
    return CellResult(params=params, report=report)


def _describe_axis(values: list[Any]) -> Any:
    distinct = sorted(set(values))
    is_int = all(isinstance(v, int) for v in distinct)
    if is_int and len(distinct) > 2 and distinct[-1] - distinct[0] == len(distinct) - 1:
        return f"{distinct[0]}:{distinct[-1]}"
    return distinct


class SweepRunner:
    def __init__(self, workers: int = 1) -> None:
        if workers < 1:
            raise ValueError(f"workers must be >= 1, got {workers}")
        self.workers = workers

    def run_cells(
        self, definition: SweepDefinition, cells: list[dict[str, Any]]
    ) -> list[CellResult]:
        if self.workers == 1 or len(cells) < 2:
            results = [_run_cell(definition.cell, params) for params in cells]
        else:
            chunksize = max(1, len(cells) // (self.workers * 4))
            with ProcessPoolExecutor(max_workers=self.workers) as pool:
                results = list(
                    pool.map(_run_cell, repeat(definition.cell), cells, chunksize=chunksize)
                )

        results.sort(key=lambda result: self._sort_key(definition, result.params))

        for result in results:
            if result.skipped:
                logger.debug(
                    "%s skipped %s: %s", definition.name, result.params, result.skipped_reason
                )
        return results

    def run(
        self,
        definition: SweepDefinition,
        overrides: Optional[Mapping[str, Any]] = None,
    ) -> VerificationReport:
        cells = definition.expand(overrides)
        logger.info(
            "running %s over %d cells with %d worker(s)",
            definition.name,
            len(cells),
            self.workers,
        )

        # SuiteCorruptionError from a cell propagates unchanged
        results = self.run_cells(definition, cells)
        reports = [result.report for result in results if result.report is not None]
        skipped = len(results) - len(reports)
        if results and not reports:
            raise ScopeError(
                f"{definition.name}: all {skipped} cell(s) out of scope, "
                f"first: {results[0].skipped_reason}"
            )

        if definition.summarize is not None:
            report = dataclasses.replace(definition.summarize(reports), skipped=skipped)
        else:
            domain = {
                axis: _describe_axis([cell[axis] for cell in cells])
                for axis in definition.axes
                if cells and axis in cells[0]
            }
            report = VerificationReport.merge(definition.name, domain, reports, skipped=skipped)

        if report.passed:
            logger.info(
                "%s passed: %d checked, %d skipped", report.check_id, report.checked, skipped
            )
        else:
            logger.warning(
                "%s failed with %d counterexample(s)", report.check_id, len(report.counterexamples)
            )
        return report

    def _sort_key(self, definition: SweepDefinition, params: dict[str, Any]) -> tuple[Any, ...]:
        return tuple(params[axis] for axis in definition.axes if axis in params)
