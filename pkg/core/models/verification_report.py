import operator
from collections.abc import Callable, Iterable
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

RELATIONS: dict[str, Callable[[Any, Any], bool]] = {
    "<": operator.lt,
    "<=": operator.le,
    ">": operator.gt,
    ">=": operator.ge,
    "==": operator.eq,
}


@dataclass(frozen=True)
class Counterexample:
    params: dict[str, Any]
    lhs: Fraction
    relation: str
    rhs: Fraction
    note: str = ""

    def to_dict(self) -> dict[str, Any]:
        data: dict[str, Any] = {
            "params": dict(self.params),
            "lhs": self.lhs,
            "relation": self.relation,
            "rhs": self.rhs,
        }
        if self.note:
            data["note"] = self.note
        return data


@dataclass(frozen=True)
class VerificationReport:
    check_id: str
    domain: dict[str, Any]
    counterexamples: tuple[Counterexample, ...] = ()
    checked: int = 1
    skipped: int = 0
    notes: tuple[str, ...] = field(default_factory=tuple)

    @property
    def passed(self) -> bool:
        return not self.counterexamples

    def to_dict(self) -> dict[str, Any]:
        return {
            "check_id": self.check_id,
            "domain": dict(self.domain),
            "passed": self.passed,
            "checked": self.checked,
            "skipped": self.skipped,
            "counterexamples": [item.to_dict() for item in self.counterexamples],
            "notes": list(self.notes),
        }

    @classmethod
    def merge(
        cls,
        check_id: str,
        domain: dict[str, Any],
        reports: Iterable["VerificationReport"],
        skipped: int = 0,
    ) -> "VerificationReport":
        counterexamples: list[Counterexample] = []
        notes: list[str] = []
        checked = 0

        for report in reports:
            counterexamples.extend(report.counterexamples)
            notes.extend(report.notes)
            checked += report.checked
            skipped += report.skipped

        return cls(
            check_id=check_id,
            domain=domain,
            counterexamples=tuple(counterexamples),
            checked=checked,
            skipped=skipped,
            notes=tuple(notes),
        )


class ComparisonLog:
    def __init__(self, check_id: str, domain: dict[str, Any]) -> None:
        self.check_id = check_id
        self.domain = domain
        self.counterexamples: list[Counterexample] = []
        self.notes: list[str] = []
        self.checked = 0

    def compare(
        self,
        lhs: Fraction,
        relation: str,
        rhs: Fraction,
        note: str = "",
        **params: Any,
    ) -> bool:
        try:
            test = RELATIONS[relation]
        except KeyError as exc:
            raise ValueError(f"Unknown relation: {relation}") from exc

        self.checked += 1
        lhs = Fraction(lhs)
        rhs = Fraction(rhs)
        holds = test(lhs, rhs)

        if not holds:
            self.counterexamples.append(
                Counterexample(
                    params={**self.domain, **params},
                    lhs=lhs,
                    relation=relation,
                    rhs=rhs,
                    note=note,
                )
            )
        return holds

    def record_pass(self) -> None:
        self.checked += 1

    def note(self, message: str) -> None:
        self.notes.append(message)

    def report(self) -> VerificationReport:
        return VerificationReport(
            check_id=self.check_id,
            domain=dict(self.domain),
            counterexamples=tuple(self.counterexamples),
            checked=self.checked,
            notes=tuple(self.notes),
        )
