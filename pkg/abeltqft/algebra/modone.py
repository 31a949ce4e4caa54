"""Exact elements of Q/Z."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

RationalLike = Union[int, Fraction, str, "ModOne"]


@dataclass(frozen=True, order=True)
class ModOne:
    """A rational reduced to its representative in [0, 1)."""
    value: Fraction

    def __post_init__(self):
        v = self.value.value if isinstance(self.value, ModOne) else Fraction(self.value)
        object.__setattr__(self, "value", v % 1)

    @classmethod
    def zero(cls) -> "ModOne":
        return cls(Fraction(0))

    @property
    def numerator(self) -> int:
        return self.value.numerator

    @property
    def denominator(self) -> int:
        return self.value.denominator

    def is_zero(self) -> bool:
        return self.value == 0

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __add__(self, other: RationalLike) -> "ModOne":
        other = other.value if isinstance(other, ModOne) else Fraction(other)
        return ModOne(self.value + other)

    __radd__ = __add__

    def __neg__(self) -> "ModOne":
        return ModOne(-self.value)

    def __sub__(self, other: RationalLike) -> "ModOne":
        other = other.value if isinstance(other, ModOne) else Fraction(other)
        return ModOne(self.value - other)

    def __mul__(self, n: int) -> "ModOne":
        # only integer multiples are well defined on Q/Z
        if isinstance(n, bool) or not isinstance(n, int):
            return NotImplemented
        return ModOne(self.value * n)

    __rmul__ = __mul__

    def __str__(self) -> str:
        return str(self.value)
