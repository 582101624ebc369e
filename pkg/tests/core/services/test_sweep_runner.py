import pytest

from core.models.errors import ScopeError, SuiteCorruptionError
from core.models.sweep_definition import SweepDefinition
from core.models.verification_report import ComparisonLog, VerificationReport
from core.registry.catalog import register_checks
from core.registry.registry import CheckRegistry
from core.services.sweep_runner import SweepRunner


def even_only_cell(m):
    if m % 2:
        raise ScopeError(f"odd m={m}")
    log = ComparisonLog("even", {"m": m})
    log.compare(m, "<", 6)
    return log.report()


def corrupt_cell(m):
    raise SuiteCorruptionError(f"broken at m={m}")


def test_runner_skips_out_of_scope_cells_and_merges():
    definition = SweepDefinition(
        name="even", axes=("m",), cell=even_only_cell, defaults={"m": tuple(range(1, 9))}
    )

    report = SweepRunner().run(definition)

    assert report.check_id == "even"
    assert report.domain == {"m": "1:8"}
    assert report.checked == 4
    assert report.skipped == 4
    assert [c.params["m"] for c in report.counterexamples] == [6, 8]


def test_runner_rejects_sweep_with_every_cell_out_of_scope():
    definition = SweepDefinition(
        name="even", axes=("m",), cell=even_only_cell, defaults={"m": (1, 3, 5)}
    )

    with pytest.raises(ScopeError, match=r"all 3 cell\(s\) out of scope.*odd m=1"):
        SweepRunner().run(definition)


def test_runner_results_are_sorted_by_axes():
    definition = SweepDefinition(name="even", axes=("m",), cell=even_only_cell)

    results = SweepRunner().run_cells(definition, [{"m": 4}, {"m": 1}, {"m": 2}])

    assert [result.params["m"] for result in results] == [1, 2, 4]
    assert results[0].skipped
    assert "odd" in results[0].skipped_reason


def test_runner_propagates_suite_corruption():
    definition = SweepDefinition(
        name="corrupt", axes=("m",), cell=corrupt_cell, defaults={"m": (1,)}
    )

    with pytest.raises(SuiteCorruptionError):
        SweepRunner().run(definition)


def test_runner_uses_summarizer():
    def summarize(reports):
        return VerificationReport("summary", {}, checked=len(reports))

    definition = SweepDefinition(
        name="even",
        axes=("m",),
        cell=even_only_cell,
        defaults={"m": (1, 2, 4)},
        summarize=summarize,
    )

    report = SweepRunner().run(definition)

    assert report.check_id == "summary"
    assert report.checked == 2
    assert report.skipped == 1


def test_parallel_run_matches_sequential_run():
    registry = CheckRegistry()
    register_checks(registry)
    definition = registry.get("prop32")
    overrides = {"m": tuple(range(2, 30)), "a": (1, 2)}

    sequential = SweepRunner().run(definition, overrides)
    parallel = SweepRunner(workers=2).run(definition, overrides)

    assert parallel == sequential
    assert parallel.passed


def test_runner_rejects_invalid_worker_count():
    with pytest.raises(ValueError):
        SweepRunner(workers=0)
