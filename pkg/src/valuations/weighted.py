#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
Valuations of points in weighted projective space.

For x = (x_0 : ... : x_n) with weights d_i, the slope
lambda = min v(x_i)/d_i measures how far x is from a minimal representative,
and the normalized valuation of y of degree e is
v_x(y) = v(y)/e - min(v(y)/e, lambda).
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence, Tuple

from ..forms.arithmetic import PrimeFieldElement, reduce_mod_p
from .padic import INFINITY, ValOrInf, is_infinite, min_valuation, val_p


logger = logging.getLogger(__name__)


class ValuationError(Exception):
    """Custom exception for undefined valuations and residues."""
    pass


@dataclass(frozen=True)
class WeightedValuationPoint:
    values: Tuple[Fraction, ...]
    weights: Tuple[int, ...]
    prime: int

    def __post_init__(self):
        if len(self.values) != len(self.weights):
            raise ValuationError(
                f"{len(self.values)} values but {len(self.weights)} weights"
            )
        if any(w <= 0 for w in self.weights):
            raise ValuationError(f"Weights must be positive: {self.weights}")
        object.__setattr__(self, 'values', tuple(Fraction(v) for v in self.values))
        object.__setattr__(self, 'weights', tuple(int(w) for w in self.weights))

    @classmethod
    def from_vector(cls, vector, p: int) -> 'WeightedValuationPoint':
        """From any invariant vector exposing values and weights."""
        return cls(tuple(vector.values), tuple(vector.weights), p)

    def valuations(self) -> Tuple[ValOrInf, ...]:
        return tuple(val_p(v, self.prime) for v in self.values)

    def slopes(self) -> Tuple[ValOrInf, ...]:
        return tuple(v if is_infinite(v) else v / d for v, d in zip(self.valuations(), self.weights))

    def is_zero(self) -> bool:
        return not any(self.values)


def min_slope(point: WeightedValuationPoint) -> Fraction:
    """
    lambda = min v(x_i) / d_i.

    Raises:
        ValuationError: for the all-zero point
    """
    if point.is_zero():
        raise ValuationError("The all-zero point has no minimal representative")
    return min_valuation(point.slopes())


def normalized_valuation(point: WeightedValuationPoint, y, e: int) -> ValOrInf:
    """
    v_x(y) = v(y)/e - min(v(y)/e, min v(x_i)/d_i), always >= 0.

    Returns INFINITY for y = 0, also when some x_i vanish.

    Raises:
        ValuationError: when both x and y are zero, or e <= 0
    """
    if e <= 0:
        raise ValuationError(f"Degree must be positive, got {e}")
    if Fraction(y) == 0:
        if point.is_zero():
            raise ValuationError("Normalized valuation undefined for a zero point and y = 0")
        return INFINITY

    slope_y = val_p(y, point.prime) / e
    return slope_y - min(slope_y, min_valuation(point.slopes()))


def minimal_residues(point: WeightedValuationPoint) -> Optional[Tuple[PrimeFieldElement, ...]]:
    """
    Residues of x_i / p^(lambda d_i), or None when some lambda d_i is not an
    integer (a ramified extension would be needed).
    """
    slope = min_slope(point)
    p = point.prime
    exponents = [slope * d for d in point.weights]
    if any(Fraction(k).denominator != 1 for k in exponents):
        logger.debug(f"Minimal representative at p={p} needs an extension (slope {slope})")
        return None
    return tuple(
        reduce_mod_p(value / Fraction(p) ** int(k), p) for value, k in zip(point.values, exponents)
    )


def weight_zero_residue(point: WeightedValuationPoint, i: int, j: int) -> PrimeFieldElement:
    """
    Residue of x_i / x_j^(d_i/d_j) for any nonzero slot j.

    Raises:
        ValuationError: if d_j does not divide d_i, x_j vanishes, or the
            ratio is not p-integral
    """
    d_i, d_j = point.weights[i], point.weights[j]
    if d_i % d_j:
        raise ValuationError(f"Weight {d_j} does not divide {d_i}")
    if point.values[j] == 0:
        raise ValuationError(f"Slot {j} vanishes")
    p = point.prime
    ratio = point.values[i] / point.values[j] ** (d_i // d_j)
    if val_p(ratio, p) < 0:
        raise ValuationError(f"Ratio of slots {i} and {j} is not {p}-integral")
    return reduce_mod_p(ratio, p)


def ratio_residue(point: WeightedValuationPoint, i: int, j: int) -> PrimeFieldElement:
    """
    Residue of x_i / x_j^(d_i/d_j) for a unit slot j; independent of the
    choice of minimal representative.

    Raises:
        ValuationError: if d_j does not divide d_i, x_j is not a unit, or the
            ratio is not p-integral
    """
    if val_p(point.values[j], point.prime) != 0:
        raise ValuationError(f"Slot {j} is not a {point.prime}-adic unit")
    return weight_zero_residue(point, i, j)


def ratio_valuation(point: WeightedValuationPoint, i: int, j: int) -> ValOrInf:
    """v(x_i / x_j^(d_i/d_j)) for a unit slot j."""
    d_i, d_j = point.weights[i], point.weights[j]
    if d_i % d_j:
        raise ValuationError(f"Weight {d_j} does not divide {d_i}")
    if point.values[j] == 0:
        raise ValuationError(f"Slot {j} vanishes")
    return val_p(point.values[i] / point.values[j] ** (d_i // d_j), point.prime)


def valuation_pattern(values: Sequence, p: int) -> Tuple[ValOrInf, ...]:
    return tuple(val_p(v, p) for v in values)
