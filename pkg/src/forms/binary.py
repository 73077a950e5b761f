#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
Homogeneous forms in two variables x, z and their transvectants.

Coefficient index i holds the coefficient of x^(d-i) z^i.
"""

from fractions import Fraction
from math import comb, factorial
from typing import Any, List, Sequence

from ..core import constants as const
from .linalg import LinearMap, determinant
from .ternary import FormError, _coerce


class BinaryForm:
    """Dense binary form of fixed degree; the zero form keeps its degree."""

    __slots__ = ('degree', 'coefficients')

    def __init__(self, degree: int, coefficients: Sequence = None):
        if degree < 0:
            raise FormError(f"Degree must be non-negative, got {degree}")
        if coefficients is None:
            coefficients = [0] * (degree + 1)
        if len(coefficients) != degree + 1:
            raise FormError(
                f"A binary form of degree {degree} needs {degree + 1} coefficients, got {len(coefficients)}"
            )
        self.degree = degree
        self.coefficients: List[Any] = [_coerce(c) for c in coefficients]

    @classmethod
    def zero(cls, degree: int) -> 'BinaryForm':
        return cls(degree)

    @classmethod
    def from_dict(cls, degree: int, terms: dict) -> 'BinaryForm':
        """Build from {z-exponent: coefficient}."""
        coefficients = [Fraction(0)] * (degree + 1)
        for i, c in terms.items():
            coefficients[i] = c
        return cls(degree, coefficients)

    def coefficient(self, i: int):
        return self.coefficients[i] if 0 <= i <= self.degree else Fraction(0)

    def is_zero(self) -> bool:
        return not any(self.coefficients)

    def map_coefficients(self, fn) -> 'BinaryForm':
        return BinaryForm(self.degree, [fn(c) for c in self.coefficients])

    # ----- arithmetic -----

    def __add__(self, other):
        if not isinstance(other, BinaryForm):
            return NotImplemented
        if other.degree != self.degree:
            raise FormError(f"Degree mismatch: {self.degree} vs {other.degree}")
        return BinaryForm(self.degree, [a + b for a, b in zip(self.coefficients, other.coefficients)])

    def __neg__(self):
        return BinaryForm(self.degree, [-c for c in self.coefficients])

    def __sub__(self, other):
        if not isinstance(other, BinaryForm):
            return NotImplemented
        return self + (-other)

    def scale(self, factor) -> 'BinaryForm':
        factor = _coerce(factor)
        return BinaryForm(self.degree, [c * factor for c in self.coefficients])

    def __mul__(self, other):
        if not isinstance(other, BinaryForm):
            return self.scale(other)
        product = [Fraction(0)] * (self.degree + other.degree + 1)
        for i, a in enumerate(self.coefficients):
            if not a:
                continue
            for j, b in enumerate(other.coefficients):
                if b:
                    product[i + j] = product[i + j] + a * b
        return BinaryForm(self.degree + other.degree, product)

    def __rmul__(self, other):
        return self.scale(other)

    def __eq__(self, other):
        if not isinstance(other, BinaryForm):
            return NotImplemented
        return self.degree == other.degree and self.coefficients == other.coefficients

    def __hash__(self):
        return hash((self.degree, tuple(self.coefficients)))

    # ----- calculus -----

    def evaluate(self, point: Sequence):
        if len(point) != 2:
            raise FormError(f"Binary form evaluated at a point of arity {len(point)}")
        x, z = (_coerce(v) for v in point)
        d = self.degree
        total = Fraction(0)
        for i, c in enumerate(self.coefficients):
            if c:
                total = total + c * (x ** (d - i) * z ** i)
        return total

    def differentiate(self, dx: int, dz: int) -> 'BinaryForm':
        """d^dx/dx^dx d^dz/dz^dz."""
        d = self.degree
        order = dx + dz
        if order > d:
            return BinaryForm.zero(0)
        result = [Fraction(0)] * (d - order + 1)
        for i, c in enumerate(self.coefficients):
            x_exp, z_exp = d - i, i
            if not c or x_exp < dx or z_exp < dz:
                continue
            factor = (factorial(x_exp) // factorial(x_exp - dx)) * (factorial(z_exp) // factorial(z_exp - dz))
            result[i - dz] = c * factor
        return BinaryForm(d - order, result)

    def derivative_x(self) -> 'BinaryForm':
        return self.differentiate(1, 0)

    def derivative_z(self) -> 'BinaryForm':
        return self.differentiate(0, 1)

    def act(self, transform: LinearMap) -> 'BinaryForm':
        """Right action f.T (x, z) = f(T (x, z))."""
        if transform.size != 2:
            raise FormError(f"Binary forms need a 2x2 matrix, got size {transform.size}")
        (a, b), (c, d) = transform.rows
        row_x = BinaryForm(1, [a, b])
        row_z = BinaryForm(1, [c, d])
        n = self.degree
        x_powers = [BinaryForm(0, [1])]
        z_powers = [BinaryForm(0, [1])]
        for _ in range(n):
            x_powers.append(x_powers[-1] * row_x)
            z_powers.append(z_powers[-1] * row_z)
        result = BinaryForm.zero(n)
        for i, coeff in enumerate(self.coefficients):
            if coeff:
                result = result + (x_powers[n - i] * z_powers[i]).scale(coeff)
        return result

    def to_expression(self) -> str:
        d = self.degree
        x, z = const.BINARY_VARIABLES
        pieces = []
        for i, c in enumerate(self.coefficients):
            if not c:
                continue
            factors = [f"({c})"]
            if d - i:
                factors.append(x if d - i == 1 else f"{x}^{d - i}")
            if i:
                factors.append(z if i == 1 else f"{z}^{i}")
            pieces.append('*'.join(factors))
        return ' + '.join(pieces) or '0'

    def __repr__(self):
        return f"BinaryForm(degree={self.degree}, {self.to_expression()})"


def binary_transvectant(f: BinaryForm, g: BinaryForm, k: int) -> BinaryForm:
    """
    k-th transvectant (f, g)_k.

    Normalized by (m-k)!(n-k)!/(m!n!) so that (x^2, z^2)_2 = 1 and
    (f, g)_0 = f*g.
    """
    m, n = f.degree, g.degree
    if k < 0 or k > min(m, n):
        raise FormError(f"Transvectant order {k} exceeds min degree {min(m, n)}")
    normalization = Fraction(factorial(m - k) * factorial(n - k), factorial(m) * factorial(n))
    result = BinaryForm.zero(m + n - 2 * k)
    for i in range(k + 1):
        left = f.differentiate(k - i, i)
        right = g.differentiate(i, k - i)
        term = left * right
        sign_binomial = (-1) ** i * comb(k, i)
        result = result + term.scale(sign_binomial)
    return result.scale(normalization)


def sylvester_resultant(f: BinaryForm, g: BinaryForm) -> Fraction:
    """Resultant of two binary forms via the Sylvester matrix."""
    m, n = f.degree, g.degree
    size = m + n
    if size == 0:
        return Fraction(1)
    rows = []
    for shift in range(n):
        rows.append([Fraction(0)] * shift + list(f.coefficients) + [Fraction(0)] * (n - 1 - shift))
    for shift in range(m):
        rows.append([Fraction(0)] * shift + list(g.coefficients) + [Fraction(0)] * (m - 1 - shift))
    return determinant(rows)


def binary_discriminant_raw(f: BinaryForm) -> Fraction:
    """Res(df/dx, df/dz); vanishes exactly when f has a repeated factor."""
    return sylvester_resultant(f.derivative_x(), f.derivative_z())
