import logging
import sys
from collections.abc import Callable
from typing import Optional

from binomsum import __version__
from core.cli.cli_args import CliArgsParser
from core.loaders.profile_loader import ProfileLoader
from core.loaders.run_config_loader import RunConfigLoader
from core.models.command import Command
from core.models.errors import SingularEvaluationError, SuiteCorruptionError
from core.models.report import Report
from core.models.run_config import RunConfig
from core.services.report_service import ReportService
from core.services.sweep_runner import SweepRunner
from core.writers.report_writer import ReportWriter

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2


def status(message: str) -> None:
    print(message, file=sys.stderr)


def print_verification_results(report: Report) -> None:
    if not report.reports:
        return

    status("\n📊 VERIFICATION RESULTS:")
    for item in report.reports:
        mark = "✅" if item.passed else "❌"
        status(
            f"{mark} {item.check_id}: {item.checked} checked, {item.skipped} skipped, "
            f"{len(item.counterexamples)} counterexample(s)"
        )


def run_seq(service: ReportService, config: RunConfig) -> Report:
    return service.seq(config)


def run_peak(service: ReportService, config: RunConfig) -> Report:
    report = service.peak(config)
    exceptional = sorted({row["m"] for row in report.rows if row["exceptional"]})
    if exceptional:
        status(f"⚠️ exceptional m flagged: {exceptional}")
    return report


def run_verify(service: ReportService, config: RunConfig) -> Report:
    return service.verify(config)


def run_pq(service: ReportService, config: RunConfig) -> Report:
    return service.pq(config)


def run_dist(service: ReportService, config: RunConfig) -> Report:
    return service.dist(config)


def run_asym(service: ReportService, config: RunConfig) -> Report:
    return service.asym(config)


def run_rm(service: ReportService, config: RunConfig) -> Report:
    return service.rm(config)


HANDLERS: dict[Command, Callable[[ReportService, RunConfig], Report]] = {
    Command.SEQ: run_seq,
    Command.PEAK: run_peak,
    Command.VERIFY: run_verify,
    Command.PQ: run_pq,
    Command.DIST: run_dist,
    Command.ASYM: run_asym,
    Command.RM: run_rm,
}


def run(argv: Optional[list[str]] = None) -> int:
    args = CliArgsParser().parse(argv)
    profile = ProfileLoader().load_or_default(args.get("profile"))
    logging.basicConfig(
        level=profile.log_level.upper(), format="%(levelname)s %(name)s: %(message)s"
    )

    config = RunConfigLoader().load(args, profile)
    service = ReportService(runner=SweepRunner(workers=config.workers))

    report = HANDLERS[config.command](service, config)
    ReportWriter(version=__version__).write(
        report, config.output_format, config.digits, config.output
    )

    print_verification_results(report)
    if config.output is not None:
        status(f"- Report: {config.output}")

    if report.passed:
        status(f"✅ {config.command.value.upper()} COMPLETED")
        return EXIT_OK

    status(f"❌ {config.command.value.upper()} FOUND COUNTEREXAMPLES")
    return EXIT_FAILED


def main(argv: Optional[list[str]] = None) -> int:
    try:
        return run(argv)
    except SuiteCorruptionError as exc:
        status(f"❌❌ SUITE CORRUPTION: {exc}")
        return EXIT_FAILED
    except (ValueError, FileNotFoundError, SingularEvaluationError) as exc:
        status(f"❌ {exc}")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
