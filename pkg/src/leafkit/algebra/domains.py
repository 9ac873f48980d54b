"""Coefficient fields: the rationals and prime fields.

Rational coefficients are ``gmpy2.mpq`` values (always in lowest terms with a
positive denominator); prime-field coefficients are plain ints in ``[0, p)``.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial

from gmpy2 import is_prime, mpq


class RationalField:
    characteristic = 0

    def __init__(self):
        self.zero = mpq(0)
        self.one = mpq(1)

    def __call__(self, value) -> mpq:
        if isinstance(value, str):
            return mpq(Fraction(value))
        if isinstance(value, Fraction):
            return mpq(value.numerator, value.denominator)
        return mpq(value)

    def inv(self, a):
        if not a:
            raise ZeroDivisionError("inverse of zero")
        return 1 / a

    def div(self, a, b):
        return a * self.inv(b)

    def normalize(self, a):
        return a

    def factorial(self, n: int):
        return mpq(factorial(n))

    def fmt(self, c) -> str:
        return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"

    def elements(self):
        raise ValueError("QQ is infinite")

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("QQ")

    def __repr__(self):
        return "QQ"


class FiniteField:
    def __init__(self, p: int):
        p = int(p)
        if p < 2 or not is_prime(p):
            raise ValueError(f"GF({p}): modulus must be prime")
        self.characteristic = p
        self.zero = 0
        self.one = 1

    def __call__(self, value) -> int:
        p = self.characteristic
        if isinstance(value, str):
            value = Fraction(value)
        if isinstance(value, (Fraction, type(mpq(0)))):
            num, den = int(value.numerator), int(value.denominator)
            if den % p == 0:
                raise ZeroDivisionError(f"denominator {den} vanishes in GF({p})")
            return num * pow(den, -1, p) % p
        return int(value) % p

    def inv(self, a):
        if a % self.characteristic == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, -1, self.characteristic)

    def div(self, a, b):
        return a * self.inv(b) % self.characteristic

    def normalize(self, a):
        return a % self.characteristic

    def factorial(self, n: int):
        return factorial(n) % self.characteristic

    def fmt(self, c) -> str:
        return str(c)

    def elements(self):
        return range(self.characteristic)

    def __eq__(self, other):
        return isinstance(other, FiniteField) and other.characteristic == self.characteristic

    def __hash__(self):
        return hash(("GF", self.characteristic))

    def __repr__(self):
        return f"GF({self.characteristic})"


QQ = RationalField()


def GF(p: int) -> FiniteField:
    return FiniteField(p)


def parse_domain(text: str):
    """Accept ``QQ`` or ``GF(p)``."""
    t = text.replace(" ", "")
    if t == "QQ":
        return QQ
    if t.startswith("GF(") and t.endswith(")") and t[3:-1].isdigit():
        return FiniteField(int(t[3:-1]))
    raise ValueError(f"unknown coefficient domain {text!r}")
