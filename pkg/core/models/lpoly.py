from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from core.models.apoly import APoly, Scalar


def _trim(coefficients: tuple[APoly, ...]) -> tuple[APoly, ...]:
    size = len(coefficients)
    while size and coefficients[size - 1].is_zero():
        size -= 1
    return coefficients[:size]


@dataclass(frozen=True)
class LPoly:
    coefficients: tuple[APoly, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "coefficients", _trim(tuple(self.coefficients)))

    @classmethod
    def constant(cls, value: Union[APoly, int]) -> "LPoly":
        if isinstance(value, int):
            value = APoly.constant(value)
        return cls((value,))

    @classmethod
    def linear(cls, slope: APoly, intercept: APoly) -> "LPoly":
        return cls((intercept, slope))

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    @property
    def leading(self) -> APoly:
        return self.coefficients[-1] if self.coefficients else APoly()

    def is_zero(self) -> bool:
        return not self.coefficients

    def coeff(self, power: int) -> APoly:
        if 0 <= power < len(self.coefficients):
            return self.coefficients[power]
        return APoly()

    def __add__(self, other: "LPoly") -> "LPoly":
        size = max(len(self.coefficients), len(other.coefficients))
        return LPoly(tuple(self.coeff(i) + other.coeff(i) for i in range(size)))

    def __neg__(self) -> "LPoly":
        return LPoly(tuple(-c for c in self.coefficients))

    def __sub__(self, other: "LPoly") -> "LPoly":
        return self + (-other)

    def __mul__(self, other: Union["LPoly", APoly, int]) -> "LPoly":
        if isinstance(other, (APoly, int)):
            return LPoly(tuple(c * other for c in self.coefficients))

        if self.is_zero() or other.is_zero():
            return LPoly()

        product = [APoly()] * (len(self.coefficients) + len(other.coefficients) - 1)
        for i, left in enumerate(self.coefficients):
            for j, right in enumerate(other.coefficients):
                product[i + j] = product[i + j] + left * right
        return LPoly(tuple(product))

    __rmul__ = __mul__

    def evaluate(self, a: Scalar, l: Scalar) -> Fraction:
        result = Fraction(0)
        for coefficient in reversed(self.coefficients):
            result = result * l + coefficient.evaluate(a)
        return result

    def to_lists(self) -> list[list[int]]:
        """Nested coefficient arrays: ``[power of l][power of a]``."""
        return [list(c.coefficients) for c in self.coefficients]

    def __str__(self) -> str:
        if self.is_zero():
            return "0"

        terms: list[str] = []
        for power in range(len(self.coefficients) - 1, -1, -1):
            coefficient = self.coefficients[power]
            if coefficient.is_zero():
                continue

            variable = "" if power == 0 else ("l" if power == 1 else f"l^{power}")
            text = str(coefficient)
            if variable:
                if text == "1":
                    text = variable
                elif text == "-1":
                    text = f"-{variable}"
                else:
                    text = f"({text}){variable}"
            terms.append(text)

        return " + ".join(terms)
