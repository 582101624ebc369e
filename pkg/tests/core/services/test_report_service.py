from fractions import Fraction

from core.models.run_config import RunConfig
from core.models.verification_report import VerificationReport
from core.services.report_service import ReportService


def test_seq_rows():
    report = ReportService().build(RunConfig(command="seq", m=(3,), a=(Fraction(1),)))

    assert report.columns == ["m", "a", "r", "f"]
    assert [row["f"] for row in report.rows] == [1, 2, Fraction(7, 4), 1]
    assert report.passed


def test_peak_rows_and_report():
    report = ReportService().build(RunConfig(command="peak", m=(2, 3, 10), a=(Fraction(1),)))

    assert [row["m"] for row in report.rows] == [2, 3, 10]
    assert report.rows[1]["exceptional"]
    assert report.rows[2]["argmax"] == 4
    assert report.reports[0].check_id == "peak"
    assert report.passed


def test_verify_runs_requested_check(mocker):
    runner = mocker.Mock()
    runner.run.return_value = VerificationReport("prop31", {})
    service = ReportService(runner=runner)

    report = service.build(
        RunConfig(command="verify", check="prop31", m=(5,), a=(Fraction(2),))
    )

    assert report.passed
    definition, overrides = runner.run.call_args.args
    assert definition.name == "prop31"
    assert overrides == {"m": (5,), "a": (Fraction(2),)}


def test_verify_without_check_runs_every_registered_check(mocker):
    runner = mocker.Mock()
    runner.run.return_value = VerificationReport("x", {})
    service = ReportService(runner=runner)

    report = service.build(RunConfig(command="verify"))

    assert len(report.reports) == len(service.registry.names())


def test_verify_real_check():
    report = ReportService().build(
        RunConfig(command="verify", check="lemma38", a=(Fraction(1),), l=(0, 1, 2))
    )

    assert report.passed
    assert report.reports[0].checked == 3


def test_pq_dist_asym_rm_tables():
    service = ReportService()

    pq = service.build(RunConfig(command="pq", n=(3,)))
    assert [row["n"] for row in pq.rows] == [0, 1, 2, 3]

    dist = service.build(RunConfig(command="dist", m=(2,), a=(Fraction(1),)))
    assert dist.rows[0]["normalizer"] == Fraction(7, 2)
    assert dist.rows[0]["pmf"] == [Fraction(2, 7), Fraction(3, 7), Fraction(2, 7)]

    asym = service.build(RunConfig(command="asym", schedule=(50, 100), precision=64))
    assert [row["m"] for row in asym.rows] == [50, 100]

    rm = service.build(RunConfig(command="rm", m=(3,)))
    assert [row["kd/n"] for row in rm.rows] == [1, 2, Fraction(7, 4), 1]
