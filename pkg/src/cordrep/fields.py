"""Exact coefficient fields: the rationals and prime fields.

A field object does the arithmetic; its elements are plain Python values
(``Fraction`` for Q, ``int`` in ``[0, p)`` for F_p), so augmentations and
matrices stay cheap to copy, hash and compare.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Any


class FieldError(ValueError):
    pass


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


@dataclass(frozen=True)
class Rationals:
    name = "Q"

    @property
    def p(self):
        return None

    def __call__(self, v) -> Fraction:
        if isinstance(v, str):
            return Fraction(v)
        return Fraction(v)

    def zero(self):
        return Fraction(0)

    def one(self):
        return Fraction(1)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return 1 / Fraction(a)

    def pow(self, a, e: int):
        if e < 0:
            return self.inv(a) ** (-e)
        return Fraction(a) ** e

    def is_zero(self, a) -> bool:
        return a == 0

    def to_json(self, a) -> Any:
        a = Fraction(a)
        if a.denominator == 1:
            return str(a.numerator)
        return f"{a.numerator}/{a.denominator}"

    def from_json(self, v) -> Fraction:
        if isinstance(v, bool) or not isinstance(v, (int, str)):
            raise FieldError(f"bad rational {v!r}")
        try:
            return Fraction(v)
        except (ValueError, ZeroDivisionError) as e:
            raise FieldError(f"bad rational {v!r}") from e

    def elements(self):
        raise FieldError("Q is infinite")

    def describe(self) -> dict:
        return {"field": "Q"}


@dataclass(frozen=True)
class PrimeField:
    p: int

    def __post_init__(self):
        if not is_prime(self.p):
            raise FieldError(f"{self.p} is not prime")

    @property
    def name(self):
        return "Fp"

    def __call__(self, v) -> int:
        if isinstance(v, Fraction):
            return self.mul(v.numerator % self.p, self.inv(v.denominator % self.p))
        return int(v) % self.p

    def zero(self):
        return 0

    def one(self):
        return 1 % self.p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, -1, self.p)

    def pow(self, a, e: int):
        if e < 0:
            return pow(self.inv(a), -e, self.p)
        return pow(a, e, self.p)

    def is_zero(self, a) -> bool:
        return a % self.p == 0

    def to_json(self, a) -> int:
        return int(a) % self.p

    def from_json(self, v) -> int:
        if isinstance(v, bool) or not isinstance(v, int):
            raise FieldError(f"bad F_{self.p} residue {v!r}")
        return v % self.p

    def elements(self):
        return range(self.p)

    def describe(self) -> dict:
        return {"field": "Fp", "p": self.p}


QQ = Rationals()


def GF(p: int) -> PrimeField:
    return PrimeField(p)


def field_from_json(d: dict):
    kind = d.get("field")
    if kind == "Q":
        return QQ
    if kind == "Fp":
        p = d.get("p")
        if not isinstance(p, int):
            raise FieldError("F_p field needs an integer 'p'")
        return PrimeField(p)
    raise FieldError(f"unknown field {kind!r}")
