import pytest

from core.models.sweep_definition import SweepDefinition
from core.models.verification_report import VerificationReport
from core.registry.registry import CheckRegistry


def _cell(**params):
    return VerificationReport("demo", params)


def test_registry_register_get_and_duplicate_guard():
    registry = CheckRegistry()
    definition = SweepDefinition(name="demo", axes=("m",), cell=_cell)

    registry.register(definition)

    assert registry.get("demo") is definition
    assert registry.names() == ["demo"]

    with pytest.raises(ValueError):
        registry.register(definition)

    with pytest.raises(ValueError):
        registry.get("missing")
