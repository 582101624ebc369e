import logging
from collections.abc import Callable
from fractions import Fraction
from typing import Optional

from core.models.command import Command
from core.models.report import Report
from core.models.run_config import RunConfig
from core.models.seq_spec import SeqSpec
from core.registry.catalog import register_checks
from core.registry.registry import CheckRegistry
from core.services.asymptotics import Asymptotics
from core.services.binom_core import BinomCore
from core.services.distribution_builder import DistributionBuilder
from core.services.pq_polys import PQPolys
from core.services.rm_codes import RMCodes
from core.services.sweep_runner import SweepRunner

logger = logging.getLogger(__name__)

DEFAULT_SEQ_M = (10,)
DEFAULT_WEIGHT = (Fraction(1),)
DEFAULT_PQ_N = 6
DEFAULT_DIST_M = (2, 3, 5)
DEFAULT_SCHEDULE = (1001, 2003, 4001, 8003)
DEFAULT_RM_M = tuple(range(2, 11))

AXES = ("m", "a", "l", "n", "k", "r")


class ReportService:
    def __init__(
        self,
        runner: Optional[SweepRunner] = None,
        registry: Optional[CheckRegistry] = None,
        binom_core: Optional[BinomCore] = None,
    ) -> None:
        self.runner = runner or SweepRunner()
        self.binom_core = binom_core or BinomCore()

        if registry is None:
            registry = CheckRegistry()
            register_checks(registry)
        self.registry = registry

        self.pq_polys = PQPolys()
        self.asymptotics = Asymptotics(self.binom_core)
        self.distribution = DistributionBuilder(self.binom_core)
        self.rm_codes = RMCodes(self.binom_core)

    def build(self, config: RunConfig) -> Report:
        handlers: dict[Command, Callable[[RunConfig], Report]] = {
            Command.SEQ: self.seq,
            Command.PEAK: self.peak,
            Command.VERIFY: self.verify,
            Command.PQ: self.pq,
            Command.DIST: self.dist,
            Command.ASYM: self.asym,
            Command.RM: self.rm,
        }
        logger.info("building %s report", config.command.value)
        return handlers[config.command](config)

    def seq(self, config: RunConfig) -> Report:
        report = Report(
            command=config.command.value,
            config_echo=config.echo(),
            columns=["m", "a", "r", "f"],
        )
        for a in config.a or DEFAULT_WEIGHT:
            for m in config.m or DEFAULT_SEQ_M:
                sequence = self.binom_core.f_sequence(SeqSpec(m, a))
                for r, value in enumerate(sequence.values):
                    report.add_row(m=m, a=a, r=r, f=value)
        return report

    def peak(self, config: RunConfig) -> Report:
        definition = self.registry.get("peak")
        report = Report(
            command=config.command.value,
            config_echo=config.echo(),
            columns=["m", "a", "predicted", "argmax", "ties", "exceptional", "matches"],
        )

        for a in config.a or definition.defaults["a"]:
            m_values = [m for m in (config.m or definition.defaults["m"]) if m >= 2]
            for row in self.binom_core.peak_scan(a, m_values):
                report.add_row(
                    m=row.m,
                    a=row.a,
                    predicted=row.predicted,
                    argmax=row.observed.argmax_min,
                    ties=list(row.observed.tie_indices),
                    exceptional=row.exceptional,
                    matches=row.matches,
                )

        report.reports.append(self.runner.run(definition, self._overrides(config)))
        return report

    def verify(self, config: RunConfig) -> Report:
        names = [config.check.value] if config.check is not None else self.registry.names()
        report = Report(command=config.command.value, config_echo=config.echo())

        for name in names:
            report.reports.append(self.runner.run(self.registry.get(name), self._overrides(config)))
        return report

    def pq(self, config: RunConfig) -> Report:
        n_max = max(config.n) if config.n else DEFAULT_PQ_N
        report = Report(
            command=config.command.value,
            config_echo=config.echo(),
            columns=["n", "P_text", "Q_text"],
        )
        report.rows.extend(self.pq_polys.pq_table_rows(n_max))
        return report

    def dist(self, config: RunConfig) -> Report:
        report = Report(
            command=config.command.value,
            config_echo=config.echo(),
            columns=["m", "a", "normalizer", "mean", "asymptotic_mean", "mode", "gap"],
        )

        for a in config.a or DEFAULT_WEIGHT:
            for m in config.m or DEFAULT_DIST_M:
                distribution = self.distribution.pmf(m, a)
                mean = self.distribution.mean_direct(m, a)
                mode = (
                    self.binom_core.predicted_peak(m, a)
                    if distribution.spec.integer_weight and m >= 2
                    else None
                )
                report.add_row(
                    m=m,
                    a=distribution.spec.a,
                    normalizer=distribution.normalizer,
                    mean=mean,
                    asymptotic_mean=self.distribution.asymptotic_mean(m, a),
                    mode=mode,
                    gap=None if mode is None else mean - mode,
                    pmf=list(distribution.pmf),
                )
        return report

    def asym(self, config: RunConfig) -> Report:
        schedule = config.schedule or config.m or DEFAULT_SCHEDULE
        report = Report(
            command=config.command.value,
            config_echo=config.echo(),
            columns=["m", "a", "scaled", "limit", "rel_err"],
        )

        for a in config.a or DEFAULT_WEIGHT:
            rows = self.asymptotics.convergence_table(a, schedule, config.precision)
            for row in rows:
                report.add_row(
                    m=row.m, a=a, scaled=row.scaled, limit=row.limit, rel_err=row.rel_err
                )
        return report

    def rm(self, config: RunConfig) -> Report:
        report = Report(
            command=config.command.value,
            config_echo=config.echo(),
            columns=["m", "r", "n", "k", "d", "kd/n", "best"],
        )
        for m in config.m or DEFAULT_RM_M:
            report.rows.extend(self.rm_codes.rm_table(m))
        return report

    def _overrides(self, config: RunConfig) -> dict[str, tuple]:
        return {axis: getattr(config, axis) for axis in AXES if getattr(config, axis) is not None}
