from dataclasses import dataclass
from fractions import Fraction
from typing import Union

Scalar = Union[int, Fraction]


def _trim(coefficients: tuple[int, ...]) -> tuple[int, ...]:
    size = len(coefficients)
    while size and coefficients[size - 1] == 0:
        size -= 1
    return coefficients[:size]


@dataclass(frozen=True)
class APoly:
    """Integer polynomial in ``a``; ``coefficients[i]`` multiplies ``a**i``.

    Trailing zeros are trimmed, so the zero polynomial is the empty tuple.
    """

    coefficients: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "coefficients", _trim(tuple(int(c) for c in self.coefficients)))

    @classmethod
    def constant(cls, value: int) -> "APoly":
        return cls((value,))

    @classmethod
    def monomial(cls, coefficient: int, power: int) -> "APoly":
        if power < 0:
            raise ValueError(f"power must be nonnegative, got {power}")
        return cls((0,) * power + (coefficient,))

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def is_zero(self) -> bool:
        return not self.coefficients

    def __getitem__(self, power: int) -> int:
        if 0 <= power < len(self.coefficients):
            return self.coefficients[power]
        return 0

    def __add__(self, other: "APoly") -> "APoly":
        size = max(len(self.coefficients), len(other.coefficients))
        return APoly(tuple(self[i] + other[i] for i in range(size)))

    def __neg__(self) -> "APoly":
        return APoly(tuple(-c for c in self.coefficients))

    def __sub__(self, other: "APoly") -> "APoly":
        return self + (-other)

    def __mul__(self, other: Union["APoly", int]) -> "APoly":
        if isinstance(other, int):
            return APoly(tuple(c * other for c in self.coefficients))

        if self.is_zero() or other.is_zero():
            return APoly()

        product = [0] * (len(self.coefficients) + len(other.coefficients) - 1)
        for i, left in enumerate(self.coefficients):
            if not left:
                continue
            for j, right in enumerate(other.coefficients):
                product[i + j] += left * right
        return APoly(tuple(product))

    __rmul__ = __mul__

    def evaluate(self, a: Scalar) -> Fraction:
        # Horner
        result = Fraction(0)
        for coefficient in reversed(self.coefficients):
            result = result * a + coefficient
        return result

    def __str__(self) -> str:
        if self.is_zero():
            return "0"

        terms: list[str] = []
        for power in range(len(self.coefficients) - 1, -1, -1):
            coefficient = self.coefficients[power]
            if not coefficient:
                continue

            sign = "-" if coefficient < 0 else "+"
            magnitude = abs(coefficient)
            if power == 0:
                body = str(magnitude)
            else:
                variable = "a" if power == 1 else f"a^{power}"
                body = variable if magnitude == 1 else f"{magnitude}{variable}"
            terms.append(f"{sign} {body}")

        text = " ".join(terms)
        return text[2:] if text.startswith("+ ") else "-" + text[2:]
