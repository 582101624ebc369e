import pytest

from core.models.check_id import CheckId
from core.registry.catalog import build_definitions, register_checks
from core.registry.registry import CheckRegistry


def test_catalog_covers_every_check_id():
    names = [definition.name for definition in build_definitions()]

    assert names == [check.value for check in CheckId]


def test_every_definition_has_defaults_for_its_axes():
    for definition in build_definitions():
        assert definition.description
        assert set(definition.defaults) == set(definition.axes)
        assert definition.expand()


def test_register_checks_twice_is_rejected():
    registry = CheckRegistry()
    register_checks(registry)

    assert len(registry.names()) == len(CheckId)

    with pytest.raises(ValueError):
        register_checks(registry)
