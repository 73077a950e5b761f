#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
Truncated power series in one variable t with exact rational coefficients.

Used as a coefficient ring for forms so that invariants can be expanded
along one-parameter families F0 + t*G.
"""

from fractions import Fraction
from typing import Iterable, List, Optional, Sequence, Union

Scalar = Union[int, Fraction]


class TruncatedSeries:
    """
    Element of Q[t]/(t^precision).

    Coefficients are stored densely, index k holding the coefficient of t^k.
    """

    __slots__ = ('coefficients', 'precision')

    def __init__(self, coefficients: Iterable[Scalar], precision: int):
        values = [Fraction(c) for c in coefficients][:precision]
        values.extend([Fraction(0)] * (precision - len(values)))
        self.coefficients: List[Fraction] = values
        self.precision = precision

    @classmethod
    def constant(cls, value: Scalar, precision: int) -> 'TruncatedSeries':
        return cls([value], precision)

    @classmethod
    def variable(cls, precision: int) -> 'TruncatedSeries':
        """The series t."""
        return cls([0, 1], precision)

    def _coerce(self, other) -> Optional['TruncatedSeries']:
        if isinstance(other, TruncatedSeries):
            if other.precision != self.precision:
                raise ValueError(
                    f"Series precision mismatch: {self.precision} vs {other.precision}"
                )
            return other
        if isinstance(other, (int, Fraction)):
            return TruncatedSeries.constant(other, self.precision)
        return None

    def coefficient(self, k: int) -> Fraction:
        return self.coefficients[k] if 0 <= k < self.precision else Fraction(0)

    def order(self) -> Optional[int]:
        """Index of the first nonzero coefficient, or None for the zero series."""
        for k, c in enumerate(self.coefficients):
            if c:
                return k
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return TruncatedSeries(
            [a + b for a, b in zip(self.coefficients, other.coefficients)], self.precision
        )

    __radd__ = __add__

    def __neg__(self):
        return TruncatedSeries([-c for c in self.coefficients], self.precision)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return TruncatedSeries(
            [a - b for a, b in zip(self.coefficients, other.coefficients)], self.precision
        )

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return TruncatedSeries([c * other for c in self.coefficients], self.precision)
        other = self._coerce(other)
        if other is None:
            return NotImplemented

        n = self.precision
        product = [Fraction(0)] * n
        for i, a in enumerate(self.coefficients):
            if not a:
                continue
            for j in range(n - i):
                b = other.coefficients[j]
                if b:
                    product[i + j] += a * b
        return TruncatedSeries(product, n)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return TruncatedSeries([c / other for c in self.coefficients], self.precision)
        return NotImplemented

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError(f"Series power must be a non-negative integer, got {exponent!r}")
        result = TruncatedSeries.constant(1, self.precision)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __bool__(self):
        return any(self.coefficients)

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self.coefficients == other.coefficients

    def __hash__(self):
        return hash((self.precision, tuple(self.coefficients)))

    def __repr__(self):
        terms = [f"{c}*t^{k}" for k, c in enumerate(self.coefficients) if c]
        return f"TruncatedSeries({' + '.join(terms) or '0'}, O(t^{self.precision}))"


def series_coefficients(value, precision: int) -> Sequence[Fraction]:
    """Coefficient list of a series or of a constant promoted to a series."""
    if isinstance(value, TruncatedSeries):
        return value.coefficients
    return TruncatedSeries.constant(value, precision).coefficients
