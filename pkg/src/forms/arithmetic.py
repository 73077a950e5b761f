#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
Rational helpers, prime-field residues and content normalization at a prime.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Sequence, Union

import sympy
from sympy import Poly, QQ, Rational

from .ternary import FormError, TernaryForm


logger = logging.getLogger(__name__)


class NonIntegralError(FormError):
    """Raised when reducing a rational with negative p-adic valuation."""
    pass


def to_fraction(value: Union[int, str, Fraction, Rational]) -> Fraction:
    """Convert ints, strings like '3/4', Fractions and sympy rationals to Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise FormError(f"Boolean is not a rational number: {value!r}")
    if isinstance(value, (int, str)):
        return Fraction(value)
    if isinstance(value, sympy.Basic):
        if not value.is_Rational:
            raise FormError(f"Not a rational number: {value}")
        return Fraction(int(value.p), int(value.q))
    raise FormError(f"Cannot interpret {value!r} as a rational number")


@dataclass(frozen=True)
class PrimeFieldElement:
    """Residue class modulo a prime p, stored as an integer in [0, p)."""

    prime: int
    residue: int

    def __post_init__(self):
        if not 0 <= self.residue < self.prime:
            object.__setattr__(self, 'residue', self.residue % self.prime)

    def _lift(self, other) -> int:
        if isinstance(other, PrimeFieldElement):
            if other.prime != self.prime:
                raise FormError(f"Prime mismatch: {self.prime} vs {other.prime}")
            return other.residue
        if isinstance(other, int):
            return other % self.prime
        if isinstance(other, Fraction):
            return reduce_mod_p(other, self.prime).residue
        raise TypeError(f"Unsupported operand {other!r}")

    def __add__(self, other):
        return PrimeFieldElement(self.prime, (self.residue + self._lift(other)) % self.prime)

    __radd__ = __add__

    def __sub__(self, other):
        return PrimeFieldElement(self.prime, (self.residue - self._lift(other)) % self.prime)

    def __rsub__(self, other):
        return PrimeFieldElement(self.prime, (self._lift(other) - self.residue) % self.prime)

    def __neg__(self):
        return PrimeFieldElement(self.prime, (-self.residue) % self.prime)

    def __mul__(self, other):
        return PrimeFieldElement(self.prime, (self.residue * self._lift(other)) % self.prime)

    __rmul__ = __mul__

    def inverse(self) -> 'PrimeFieldElement':
        if self.residue == 0:
            raise ZeroDivisionError(f"0 has no inverse modulo {self.prime}")
        return PrimeFieldElement(self.prime, pow(self.residue, -1, self.prime))

    def __truediv__(self, other):
        divisor = PrimeFieldElement(self.prime, self._lift(other))
        return self * divisor.inverse()

    def __pow__(self, exponent: int):
        if exponent < 0:
            return self.inverse() ** (-exponent)
        return PrimeFieldElement(self.prime, pow(self.residue, exponent, self.prime))

    def __bool__(self):
        return self.residue != 0

    def __int__(self):
        return self.residue

    def __str__(self):
        return f"{self.residue} mod {self.prime}"


def reduce_mod_p(value, p: int) -> PrimeFieldElement:
    """
    Residue of a p-integral rational modulo p.

    Raises:
        NonIntegralError: if p divides the reduced denominator
    """
    value = to_fraction(value)
    if value.denominator % p == 0:
        raise NonIntegralError(f"{value} is not {p}-integral")
    residue = value.numerator * pow(value.denominator, -1, p) % p
    return PrimeFieldElement(p, residue)


def is_p_integral(value: Fraction, p: int) -> bool:
    return Fraction(value).denominator % p != 0


def reduce_form_mod_p(form: TernaryForm, p: int) -> TernaryForm:
    """Coefficient-wise reduction, residues represented by integers in [0, p)."""
    return form.map_coefficients(lambda c: reduce_mod_p(c, p).residue)


def primitive_at(form: TernaryForm, p: int) -> TernaryForm:
    """
    Integral, p-primitive rescaling of a form.

    Clears all denominators, then removes the largest power of p dividing
    every coefficient. The result has integer coefficients and at least one
    coefficient prime to p.
    """
    if form.is_zero():
        raise FormError("The zero form has no primitive rescaling")

    common = 1
    for c in form.terms.values():
        common = common * c.denominator // gcd(common, c.denominator)
    integral = form.scale(common)

    exponent = min(_int_valuation(c.numerator, p) for c in integral.terms.values())
    result = integral.scale(Fraction(1, p ** exponent))
    logger.debug(f"primitive_at p={p}: scaled by {common} / {p}^{exponent}")
    return result


def _int_valuation(n: int, p: int) -> int:
    n = abs(n)
    count = 0
    while n % p == 0:
        n //= p
        count += 1
    return count


def resultant_univariate(a: Union[Sequence, Poly], b: Union[Sequence, Poly]) -> Fraction:
    """
    Resultant of two univariate polynomials over Q.

    Polynomials are sympy Polys or coefficient sequences, highest degree
    first.
    """
    x = sympy.Symbol('x')

    def as_poly(value):
        if isinstance(value, Poly):
            value = value.all_coeffs()
        coefficients = [Rational(to_fraction(c).numerator, to_fraction(c).denominator) for c in value]
        return Poly(coefficients, x, domain=QQ)

    result = as_poly(a).resultant(as_poly(b))
    return to_fraction(sympy.sympify(result))
