from fractions import Fraction

from core.checkers.inequality_suite import InequalitySuite
from core.models.check_id import CheckId
from core.models.sweep_definition import SweepDefinition
from core.registry.registry import CheckRegistry
from core.sweeps import cells


def _span(lo: int, hi: int) -> tuple[int, ...]:
    return tuple(range(lo, hi + 1))


def _weights(*values: object) -> tuple[Fraction, ...]:
    return tuple(Fraction(str(v)) for v in values)


REAL_WEIGHTS = _weights("1/2", 1, 2, "7/3", 5)
DISTRIBUTION_WEIGHTS = _weights(1, 2, 3, "5/2")
SAMPLE_WEIGHTS = _weights(1, "3/2", 2, 5, 10)


def build_definitions() -> list[SweepDefinition]:
    return [
        SweepDefinition(
            name=CheckId.LOG_CONCAVITY.value,
            axes=("m", "a"),
            cell=cells.log_concavity,
            defaults={"m": _span(0, 100), "a": REAL_WEIGHTS},
            description="f-sequence is log-concave and unimodal",
        ),
        SweepDefinition(
            name=CheckId.STRONG_LOG_CONCAVITY.value,
            axes=("m", "a"),
            cell=cells.strong_log_concavity,
            defaults={"m": _span(0, 12), "a": REAL_WEIGHTS},
            description="strong log-concavity, cross-checked against the plain form",
        ),
        SweepDefinition(
            name=CheckId.LEMMA21.value,
            axes=("m", "a"),
            cell=cells.lemma21,
            defaults={"m": _span(0, 40), "a": REAL_WEIGHTS},
            description="Hadamard partial-sum oracle on C(m,i) and a^i",
        ),
        SweepDefinition(
            name=CheckId.PEAK.value,
            axes=("m", "a"),
            cell=cells.peak,
            defaults={"m": _span(2, 300), "a": _weights(1, 2, 3, 4, 5)},
            description="observed argmax against r_a, exceptional m flagged",
        ),
        SweepDefinition(
            name=CheckId.PROP31.value,
            axes=("m", "a"),
            cell=cells.prop31,
            defaults={"m": _span(2, 300), "a": _weights(1, 2, 3, 4, 5)},
            description="f(r_a - 1) < f(r_a)",
        ),
        SweepDefinition(
            name=CheckId.PROP32.value,
            axes=("m", "a"),
            cell=cells.prop32,
            defaults={"m": _span(2, 300), "a": _weights(1, 2, 3, 4, 5)},
            description="f(r_a) > f(r_a + 1)",
        ),
        SweepDefinition(
            name=CheckId.LEMMA33.value,
            axes=("m", "a"),
            cell=cells.lemma33,
            defaults={"m": _span(4, 300), "a": _weights(1, 2, 3, 4, 5)},
            description="termwise inequality below r_a, direct and reformulated",
        ),
        SweepDefinition(
            name=CheckId.LEMMA35.value,
            axes=("a", "k"),
            cell=cells.lemma35,
            defaults={"a": _weights(1, 2, 3, 4), "k": _span(3, 12)},
            description="critical inequality on m = (2a+1)k + 3",
        ),
        SweepDefinition(
            name=CheckId.LEMMA35_PROBE.value,
            axes=("a", "k"),
            cell=cells.lemma35_probe,
            defaults={"a": _weights(1, 2, 3, 4), "k": _span(3, 12)},
            description="raw inequality fails only at the documented point",
            summarize=InequalitySuite().summarize_lemma35_probe,
        ),
        SweepDefinition(
            name=CheckId.LEMMA35_BOUND.value,
            axes=("a", "k"),
            cell=cells.lemma35_bound,
            defaults={"a": _weights(1, 2, 3, 4), "k": _span(3, 12)},
            description="cleared-denominator margin is positive",
        ),
        SweepDefinition(
            name=CheckId.LEMMA36.value,
            axes=("m", "a", "r"),
            cell=cells.lemma36,
            defaults={"m": _span(1, 60), "a": DISTRIBUTION_WEIGHTS, "r": None},
            description="implication instances from m down to m - 1",
        ),
        SweepDefinition(
            name=CheckId.LEMMA37.value,
            axes=("m", "a", "r"),
            cell=cells.lemma37,
            defaults={"m": _span(1, 60), "a": DISTRIBUTION_WEIGHTS, "r": None},
            description="implication instances from m up to m + 2",
        ),
        SweepDefinition(
            name=CheckId.LEMMA38.value,
            axes=("a", "l"),
            cell=cells.lemma38,
            defaults={"a": _weights(1, 2, 3, 4), "l": _span(0, 15)},
            description="base inequality on m = (2a+1)l + 5",
        ),
        SweepDefinition(
            name=CheckId.CHAIN.value,
            axes=("a", "k"),
            cell=cells.chain,
            defaults={"a": _weights(1, 2, 3, 4, 5), "k": _span(0, 20)},
            description="index steps and instances covering each residue block",
        ),
        SweepDefinition(
            name=CheckId.RESIDUE.value,
            axes=("m", "a"),
            cell=cells.residue,
            defaults={"m": _span(3, 300), "a": _weights(1, 2, 3, 4, 5)},
            description="residue decomposition round trip",
        ),
        SweepDefinition(
            name=CheckId.CLOSED_FORMS.value,
            axes=("n",),
            cell=cells.closed_forms,
            defaults={"n": (25,)},
            description="coefficient closed forms and recurrences up to n",
        ),
        SweepDefinition(
            name=CheckId.PROP41.value,
            axes=("a", "l", "n"),
            cell=cells.prop41,
            defaults={"a": _weights(1, 2, 3, 4), "l": _span(0, 12), "n": None},
            description="exact remainder identity through P_n / Q_n",
        ),
        SweepDefinition(
            name=CheckId.PROP42.value,
            axes=("n", "a"),
            cell=cells.prop42,
            defaults={"n": _span(3, 25), "a": SAMPLE_WEIGHTS},
            description="lower bound on p_{n,n-1}",
        ),
        SweepDefinition(
            name=CheckId.PROP43.value,
            axes=("n", "a"),
            cell=cells.prop43,
            defaults={"n": _span(3, 25), "a": SAMPLE_WEIGHTS},
            description="p_{n,i-1} dominates the neighbouring q coefficients",
        ),
        SweepDefinition(
            name=CheckId.SIGN.value,
            axes=("a", "l", "n"),
            cell=cells.sign,
            defaults={"a": _weights(1, 2, 3, 4), "l": _span(2, 15), "n": None},
            description="P_n(a,l) below (l - T) a^n l^(n-1); P_{l+1} < 0 < Q_{l+1}",
        ),
        SweepDefinition(
            name=CheckId.PROP51.value,
            axes=("m", "a"),
            cell=cells.prop51,
            defaults={"m": _span(2, 300), "a": _weights(1, 2, 3, 4)},
            description="sandwich bounds on the peak value",
        ),
        SweepDefinition(
            name=CheckId.OFFSET.value,
            axes=("m", "a"),
            cell=cells.offset,
            defaults={"m": _span(2, 1000), "a": _weights(1, 2, 3, 4, 5)},
            description="2 < (1+2a) r_a - am + a + 1 <= 2a + 3",
        ),
        SweepDefinition(
            name=CheckId.PROP71.value,
            axes=("a", "l", "n"),
            cell=cells.prop71,
            defaults={"a": _weights(1, 2, 3, 4), "l": _span(0, 12), "n": None},
            description="top-n window sum beats the pivot term",
        ),
        SweepDefinition(
            name=CheckId.NORMALIZER.value,
            axes=("m", "a"),
            cell=cells.normalizer,
            defaults={"m": _span(0, 120), "a": DISTRIBUTION_WEIGHTS},
            description="normalizer by closed form and direct sum",
        ),
        SweepDefinition(
            name=CheckId.MEAN.value,
            axes=("m", "a"),
            cell=cells.mean,
            defaults={"m": _span(0, 120) + (200,), "a": DISTRIBUTION_WEIGHTS},
            description="mean by both routes, asymptotic mean and mode distance",
        ),
        SweepDefinition(
            name=CheckId.RM_IDENTITY.value,
            axes=("m",),
            cell=cells.rm_identity,
            defaults={"m": _span(0, 64)},
            description="kd/n = f(m, 1, r) and the best Reed-Muller order",
        ),
    ]


def register_checks(registry: CheckRegistry) -> None:
    for definition in build_definitions():
        registry.register(definition)
