import importlib
import json

from binomsum import cli
from core.models.errors import SuiteCorruptionError
from core.models.report import Report
from core.models.verification_report import ComparisonLog
from core.services.report_service import ReportService


def test_package_cli_exports_main():
    module = importlib.import_module("binomsum.cli")
    assert hasattr(module, "main")


def test_seq_writes_json_and_exits_zero(capsys):
    assert cli.main(["seq", "m=3", "a=1"]) == 0

    payload = json.loads(capsys.readouterr().out)
    assert [row["f"] for row in payload["rows"]] == ["1", "2", "7/4", "1"]


def test_verify_failure_sweep_writes_report_file(tmp_path, capsys):
    output = tmp_path / "lemma35.json"

    code = cli.main(["verify", "lemma35-probe", "a=1", "k=3:5", f"output={output}"])

    assert code == 0
    payload = json.loads(output.read_text(encoding="utf-8"))
    assert payload["reports"][0]["check_id"] == "lemma35-probe"
    assert "VERIFY COMPLETED" in capsys.readouterr().err


def test_counterexample_exits_one(mocker, capsys):
    log = ComparisonLog("prop31", {"m": 5, "a": 2})
    log.compare(20, "<", 11)
    mocker.patch.object(
        ReportService,
        "verify",
        return_value=Report(command="verify", config_echo={}, reports=[log.report()]),
    )

    assert cli.main(["verify", "prop31", "format=text"]) == 1
    assert "COUNTEREXAMPLES" in capsys.readouterr().err


def test_suite_corruption_exits_one(mocker, capsys):
    mocker.patch.object(ReportService, "seq", side_effect=SuiteCorruptionError("routes disagree"))

    assert cli.main(["seq"]) == 1
    assert "SUITE CORRUPTION" in capsys.readouterr().err


def test_usage_errors_exit_two(capsys):
    assert cli.main(["nope"]) == 2
    assert cli.main(["seq", "m=x"]) == 2
    assert cli.main(["seq", "profile=missing"]) == 2
    assert cli.main(["seq", "check=prop31"]) == 2


def test_verify_with_every_cell_out_of_scope_exits_two(capsys):
    assert cli.main(["verify", "prop31", "m=3", "a=1"]) == 2
    err = capsys.readouterr().err
    assert "out of scope" in err
    assert "VERIFY COMPLETED" not in err

    assert cli.main(["verify", "prop31", "a=5/2"]) == 2


def test_verify_with_some_cells_out_of_scope_still_passes(capsys):
    assert cli.main(["verify", "prop31", "m=2:6", "a=1"]) == 0
    assert "VERIFY COMPLETED" in capsys.readouterr().err
