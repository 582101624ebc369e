from core.models.sweep_definition import SweepDefinition
from core.models.verification_report import VerificationReport


def _cell(**params):
    return VerificationReport("demo", params)


def test_expand_forms_product_over_axes():
    definition = SweepDefinition(
        name="demo", axes=("m", "a"), cell=_cell, defaults={"m": (1, 2), "a": (1, 3)}
    )

    assert definition.expand() == [
        {"m": 1, "a": 1},
        {"m": 1, "a": 3},
        {"m": 2, "a": 1},
        {"m": 2, "a": 3},
    ]


def test_expand_overrides_and_optional_axes():
    definition = SweepDefinition(
        name="demo", axes=("m", "r"), cell=_cell, defaults={"m": (1, 2), "r": None}
    )

    assert definition.expand() == [{"m": 1}, {"m": 2}]
    assert definition.expand({"m": (5,), "r": (0, 1)}) == [{"m": 5, "r": 0}, {"m": 5, "r": 1}]
