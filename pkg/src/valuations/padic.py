#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
p-adic valuations of rationals.

A valuation is a Fraction or INFINITY (math.inf, the valuation of 0).
Fractions compare and take minima with INFINITY directly.
"""

import math
from fractions import Fraction
from typing import Iterable, Union

from sympy import multiplicity


ValOrInf = Union[Fraction, float]

INFINITY = math.inf


def is_infinite(value: ValOrInf) -> bool:
    return isinstance(value, float) and math.isinf(value)


def val_p(value, p: int) -> ValOrInf:
    """v_p of an integer or rational; v_p(0) is INFINITY."""
    value = Fraction(value)
    if value == 0:
        return INFINITY
    return Fraction(multiplicity(p, abs(value.numerator)) - multiplicity(p, value.denominator))


def min_valuation(values: Iterable[ValOrInf]) -> ValOrInf:
    """Minimum with the empty minimum equal to INFINITY."""
    return min(values, default=INFINITY)
