#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
Homogeneous forms in three variables.

Coefficients are exact rationals by default; any ring element supporting
+, - and * with Fractions (e.g. TruncatedSeries) may be used instead, which
is how invariants get expanded along one-parameter families.

Monomials are exponent triples (i, j, k) for x1^i x2^j x3^k, listed in
graded-lexicographic order with x1^d first and x3^d last.
"""

from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Any, Callable, Dict, Iterable, Mapping, Optional, Sequence, Tuple

from ..core import constants as const
from .linalg import LinearMap

Monomial = Tuple[int, int, int]


class FormError(Exception):
    """Custom exception for malformed forms and invalid form operations."""
    pass


@lru_cache(maxsize=None)
def monomials(degree: int) -> Tuple[Monomial, ...]:
    """All exponent triples of the given degree in the canonical order."""
    return tuple(
        (i, j, degree - i - j)
        for i in range(degree, -1, -1)
        for j in range(degree - i, -1, -1)
    )


@lru_cache(maxsize=None)
def monomial_index(degree: int) -> Dict[Monomial, int]:
    return {m: k for k, m in enumerate(monomials(degree))}


def _coerce(value):
    if isinstance(value, (int, Fraction)) and not isinstance(value, bool):
        return Fraction(value)
    return value


def _falling(n: int, k: int) -> int:
    result = 1
    for step in range(k):
        result *= n - step
    return result


def _linear_powers(row: Sequence, top: int, n_vars: int) -> list:
    """Powers 0..top of the linear form sum(row[i] * y_i), as exponent dicts."""
    powers = [{(0,) * n_vars: Fraction(1)}]
    for _ in range(top):
        previous = powers[-1]
        current: Dict[Tuple[int, ...], Fraction] = {}
        for exps, coeff in previous.items():
            for var, a in enumerate(row):
                if not a:
                    continue
                shifted = list(exps)
                shifted[var] += 1
                key = tuple(shifted)
                current[key] = current.get(key, Fraction(0)) + coeff * a
        powers.append({k: v for k, v in current.items() if v})
    return powers


def substitute_linear(terms: Mapping[Monomial, Any], degree: int,
                      images: Sequence[Sequence], n_vars: int) -> Dict[Tuple[int, ...], Any]:
    """
    Substitute x_i -> sum_j images[i][j] * y_j into a ternary form.

    Returns the resulting form in n_vars variables as an exponent dict.
    """
    powers = [_linear_powers([Fraction(a) for a in row], degree, n_vars) for row in images]
    result: Dict[Tuple[int, ...], Any] = {}
    for (a, b, c), coeff in terms.items():
        for e1, v1 in powers[0][a].items():
            for e2, v2 in powers[1][b].items():
                v12 = v1 * v2
                for e3, v3 in powers[2][c].items():
                    key = tuple(x + y + z for x, y, z in zip(e1, e2, e3))
                    contribution = coeff * (v12 * v3)
                    if key in result:
                        result[key] = result[key] + contribution
                    else:
                        result[key] = contribution
    return result


class TernaryForm:
    """
    Homogeneous polynomial of fixed degree in three variables.

    `dual` marks forms in the dual variables v1, v2, v3 (contravariants);
    it only affects printing and bookkeeping, not the arithmetic.
    """

    __slots__ = ('degree', 'terms', 'dual')

    def __init__(self, degree: int, terms: Optional[Mapping[Monomial, Any]] = None, dual: bool = False):
        if degree < 0:
            raise FormError(f"Degree must be non-negative, got {degree}")
        self.degree = degree
        self.dual = dual
        self.terms: Dict[Monomial, Any] = {}
        for exps, coeff in (terms or {}).items():
            exps = tuple(exps)
            if len(exps) != 3 or min(exps) < 0 or sum(exps) != degree:
                raise FormError(f"Exponent {exps} does not belong to a ternary form of degree {degree}")
            coeff = _coerce(coeff)
            if coeff:
                self.terms[exps] = coeff

    # ----- construction -----

    @classmethod
    def from_coefficients(cls, degree: int, values: Sequence, dual: bool = False) -> 'TernaryForm':
        basis = monomials(degree)
        if len(values) != len(basis):
            raise FormError(
                f"A ternary form of degree {degree} needs {len(basis)} coefficients, got {len(values)}"
            )
        return cls(degree, dict(zip(basis, values)), dual=dual)

    @classmethod
    def monomial(cls, exps: Monomial, coeff=1, dual: bool = False) -> 'TernaryForm':
        return cls(sum(exps), {tuple(exps): coeff}, dual=dual)

    @classmethod
    def constant(cls, value) -> 'TernaryForm':
        return cls(0, {(0, 0, 0): value})

    @classmethod
    def linear(cls, a, b, c, dual: bool = False) -> 'TernaryForm':
        return cls(1, {(1, 0, 0): a, (0, 1, 0): b, (0, 0, 1): c}, dual=dual)

    @classmethod
    def zero(cls, degree: int, dual: bool = False) -> 'TernaryForm':
        return cls(degree, {}, dual=dual)

    # ----- access -----

    def coefficient(self, exps: Monomial):
        return self.terms.get(tuple(exps), Fraction(0))

    def dense(self) -> list:
        return [self.coefficient(m) for m in monomials(self.degree)]

    def scalar(self):
        """Value of a degree-0 form."""
        if self.degree != 0:
            raise FormError(f"Form of degree {self.degree} is not a scalar")
        return self.coefficient((0, 0, 0))

    def is_zero(self) -> bool:
        return not self.terms

    def map_coefficients(self, fn: Callable[[Any], Any]) -> 'TernaryForm':
        return TernaryForm(self.degree, {m: fn(c) for m, c in self.terms.items()}, dual=self.dual)

    def as_dual(self, dual: bool = True) -> 'TernaryForm':
        return TernaryForm(self.degree, self.terms, dual=dual)

    # ----- arithmetic -----

    def _check_compatible(self, other: 'TernaryForm') -> None:
        if self.degree != other.degree:
            raise FormError(f"Degree mismatch: {self.degree} vs {other.degree}")

    def __add__(self, other):
        if not isinstance(other, TernaryForm):
            return NotImplemented
        self._check_compatible(other)
        terms = dict(self.terms)
        for m, c in other.terms.items():
            terms[m] = terms[m] + c if m in terms else c
        return TernaryForm(self.degree, terms, dual=self.dual)

    def __neg__(self):
        return TernaryForm(self.degree, {m: -c for m, c in self.terms.items()}, dual=self.dual)

    def __sub__(self, other):
        if not isinstance(other, TernaryForm):
            return NotImplemented
        return self + (-other)

    def scale(self, factor) -> 'TernaryForm':
        factor = _coerce(factor)
        return TernaryForm(self.degree, {m: c * factor for m, c in self.terms.items()}, dual=self.dual)

    def __mul__(self, other):
        if not isinstance(other, TernaryForm):
            return self.scale(other)
        terms: Dict[Monomial, Any] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                key = (m1[0] + m2[0], m1[1] + m2[1], m1[2] + m2[2])
                product = c1 * c2
                terms[key] = terms[key] + product if key in terms else product
        return TernaryForm(self.degree + other.degree, terms, dual=self.dual)

    def __rmul__(self, other):
        return self.scale(other)

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int) or exponent < 0:
            raise FormError(f"Form power must be a non-negative integer, got {exponent!r}")
        result = TernaryForm.constant(1).as_dual(self.dual)
        for _ in range(exponent):
            result = result * self
        return result

    def __eq__(self, other):
        if not isinstance(other, TernaryForm):
            return NotImplemented
        return self.degree == other.degree and self.terms == other.terms

    def __hash__(self):
        return hash((self.degree, tuple(sorted(self.terms.items()))))

    # ----- calculus -----

    def evaluate(self, point: Sequence):
        if len(point) != 3:
            raise FormError(f"Ternary form evaluated at a point of arity {len(point)}")
        x1, x2, x3 = (_coerce(v) for v in point)
        total = Fraction(0)
        for (a, b, c), coeff in self.terms.items():
            total = total + coeff * (x1 ** a * x2 ** b * x3 ** c)
        return total

    def differentiate(self, exps: Monomial) -> 'TernaryForm':
        """Partial derivative d^i/dx1^i d^j/dx2^j d^k/dx3^k."""
        i, j, k = exps
        order = i + j + k
        if order > self.degree:
            return TernaryForm.zero(0, dual=self.dual)
        terms = {}
        for (a, b, c), coeff in self.terms.items():
            if a < i or b < j or c < k:
                continue
            factor = _falling(a, i) * _falling(b, j) * _falling(c, k)
            terms[(a - i, b - j, c - k)] = coeff * factor
        return TernaryForm(self.degree - order, terms, dual=self.dual)

    def derivative(self, index: int) -> 'TernaryForm':
        exps = [0, 0, 0]
        exps[index] = 1
        return self.differentiate(tuple(exps))

    def gradient(self) -> Tuple['TernaryForm', 'TernaryForm', 'TernaryForm']:
        return tuple(self.derivative(i) for i in range(3))

    def apply_operator(self, target: 'TernaryForm') -> 'TernaryForm':
        """
        Apply this form as the differential operator self(d/dy) to target.

        The variables of the two forms are paired index by index; the
        result lives in the variables of target.
        """
        if self.degree > target.degree:
            raise FormError(
                f"Cannot apply an operator of degree {self.degree} to a form of degree {target.degree}"
            )
        if self.degree == target.degree:
            return TernaryForm.constant(self.contract(target)).as_dual(target.dual)

        terms: Dict[Monomial, Any] = {}
        for m, c in self.terms.items():
            for n, value in target.differentiate(m).terms.items():
                contribution = c * value
                terms[n] = terms[n] + contribution if n in terms else contribution
        return TernaryForm(target.degree - self.degree, terms, dual=target.dual)

    def contract(self, other: 'TernaryForm'):
        """Full differential pairing of two forms of equal degree."""
        self._check_compatible(other)
        total = Fraction(0)
        for m, c in self.terms.items():
            d = other.terms.get(m)
            if d is not None:
                total = total + c * d * (factorial(m[0]) * factorial(m[1]) * factorial(m[2]))
        return total

    # ----- group action -----

    def act(self, transform: LinearMap) -> 'TernaryForm':
        """Right action F.T (x) = F(T x)."""
        if transform.size != 3:
            raise FormError(f"Ternary forms need a 3x3 matrix, got size {transform.size}")
        return TernaryForm(
            self.degree, substitute_linear(self.terms, self.degree, transform.rows, 3), dual=self.dual
        )

    def restrict_to_line(self, p: Sequence, q: Sequence):
        """Binary form F(s p + r q) in the variables (s, r)."""
        from .binary import BinaryForm

        images = [(p[i], q[i]) for i in range(3)]
        values = substitute_linear(self.terms, self.degree, images, 2)
        coefficients = [Fraction(0)] * (self.degree + 1)
        for (_, r_exp), coeff in values.items():
            coefficients[r_exp] = coeff
        return BinaryForm(self.degree, coefficients)

    # ----- printing -----

    def variable_names(self) -> Tuple[str, str, str]:
        return const.DUAL_VARIABLES if self.dual else const.TERNARY_VARIABLES

    def to_expression(self) -> str:
        if not self.terms:
            return '0'
        names = self.variable_names()
        pieces = []
        for m in monomials(self.degree):
            if m not in self.terms:
                continue
            factors = [
                name if e == 1 else f"{name}^{e}"
                for name, e in zip(names, m) if e
            ]
            pieces.append('*'.join([f"({self.terms[m]})"] + factors))
        return ' + '.join(pieces)

    def __str__(self):
        return self.to_expression()

    def __repr__(self):
        return f"TernaryForm(degree={self.degree}, {self.to_expression()})"


def sum_forms(forms: Iterable[TernaryForm], degree: int, dual: bool = False) -> TernaryForm:
    total = TernaryForm.zero(degree, dual=dual)
    for form in forms:
        total = total + form
    return total


# Reference conic x2^2 - 4 x1 x3 and its dual v2^2 - v1 v3
REFERENCE_CONIC = TernaryForm(2, {(0, 2, 0): 1, (1, 0, 1): -4})
REFERENCE_DUAL_CONIC = TernaryForm(2, {(0, 2, 0): 1, (1, 0, 1): -1}, dual=True)
