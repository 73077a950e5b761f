#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
The iota invariants: polynomials in the Dixmier-Ohno invariants that vanish
to increasing order along the double conic Q0^2, and whose leading terms are
the Shioda invariants of the octic b8(G) for F = Q0^2 + t G.

Every function takes a mapping from Dixmier-Ohno labels to values of any
ring supporting +, - and * (Fractions or truncated series).
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Dict, Mapping, Tuple

from ..core import constants as const

Values = Mapping[str, Any]


# ===== Brackets =====
# Each iota_{3i} is a scalar times a power of I3 times a bracket, plus
# products of lower iotas. The brackets are linear in the newest invariant.

def bracket9(v: Values):
    I3, I6, I9, J9 = v['I3'], v['I6'], v['I9'], v['J9']
    return I3 ** 3 * 14 - I3 * I6 * 2520 - I9 * 81 + J9 * 135


def bracket12(v: Values):
    I3, I6, I9, J9 = v['I3'], v['I6'], v['I9'], v['J9']
    return I3 ** 3 * (-32) + I3 * I6 * 14580 + I9 * 261 - J9 * 495


def bracket15(v: Values):
    I3, I6, I9, J9, J12 = v['I3'], v['I6'], v['I9'], v['J9'], v['J12']
    return (I3 ** 4 * (-592) + I3 ** 2 * I6 * 30780 + I3 * I9 * 2601 - I3 * J9 * 45
            + I6 * I6 * 7290000 - J12 * 2430)


def bracket18(v: Values):
    I3, I6, I9, J9, I12 = v['I3'], v['I6'], v['I9'], v['J9'], v['I12']
    return (I3 ** 4 * (-8) - I3 ** 2 * I6 * 14418 - I3 * I9 * 117 + I3 * J9 * 423
            + I6 * I6 * 155520 - I12 * 486)


def bracket21(v: Values):
    I3, I6, I9, J9 = v['I3'], v['I6'], v['I9'], v['J9']
    I12, J12, I15, J15 = v['I12'], v['J12'], v['I15'], v['J15']
    return (I3 ** 5 * (-128) + I3 ** 3 * I6 * 213912 + I3 ** 2 * I9 * 2961
            - I3 ** 2 * J9 * 8541 - I3 * I6 * I6 * 18057600 + I3 * I12 * 12204
            + I3 * J12 * 810 - I6 * I9 * 45360 + I6 * J9 * 285120
            - I15 * 4860 - J15 * 540)


# Coefficient of the newest invariant inside each bracket
BRACKET_LINEAR_TERMS: Dict[str, Dict[str, int]] = {
    'bracket9': {'I9': -81, 'J9': 135},
    'bracket12': {'I9': 261, 'J9': -495},
    'bracket15': {'J12': -2430},
    'bracket18': {'I12': -486},
    # I15 and J15 enter only through 9 I15 + J15
    'bracket21': {'W15': -540},
}

# ===== Scalars =====

IOTA6_SCALE = Fraction(3 ** 2, 2 ** 5 * 5 * 7)
IOTA9_SCALE = Fraction(3 ** 5, 2 ** 9 * 5 ** 2 * 7 ** 3)
IOTA12_SCALE = Fraction(3 ** 3, 2 ** 14 * 5 * 7 ** 3)
IOTA15_SCALE = Fraction(3 ** 4, 2 ** 16 * 5 ** 2 * 7 ** 5)
IOTA18_SCALE = Fraction(3 ** 8, 2 ** 24 * 5 ** 2 * 7 ** 4)
IOTA21_SCALE = Fraction(3 ** 7, 2 ** 44 * 5 ** 7 * 7 ** 5)


def iota_values(v: Values) -> Dict[str, Any]:
    """iota6 .. iota21 as a dict keyed by the iota labels."""
    I3 = v['I3']
    iota6 = (I3 * I3 - v['I6'] * 180) * IOTA6_SCALE
    iota9 = bracket9(v) * IOTA9_SCALE
    iota12 = I3 * bracket12(v) * IOTA12_SCALE + iota6 * iota6 * Fraction(5 ** 2, 2 * 3 * 7 ** 2)
    iota15 = I3 * bracket15(v) * IOTA15_SCALE + iota6 * iota9 * Fraction(5 ** 2, 3 ** 2 * 7)
    iota18 = (I3 * I3 * bracket18(v) * IOTA18_SCALE
              + iota6 ** 3 * Fraction(17 ** 3, 2 ** 6 * 3 ** 2 * 7 ** 3)
              + iota9 * iota9 * Fraction(3 * 5, 2 ** 5)
              - iota6 * iota12 * Fraction(17, 2 ** 3 * 7))
    iota21 = (I3 * I3 * bracket21(v) * IOTA21_SCALE
              + iota6 * iota6 * iota9 * Fraction(2 * 5 ** 3, 3 ** 3 * 7 ** 2)
              - iota9 * iota12 * Fraction(13, 2 * 3 ** 2)
              - iota6 * iota15 * Fraction(17, 2 ** 2 * 3 * 7))
    return dict(zip(const.IOTA_LABELS, (iota6, iota9, iota12, iota15, iota18, iota21)))


def iota42_value(v: Values):
    """iota42 = 3^10 / (2^18 5^5) * I3^5 * I27."""
    return v['I3'] ** 5 * v['I27'] * const.IOTA42_SCALE


@dataclass(frozen=True)
class IotaVector:
    values: Tuple[Fraction, ...]
    iota42: Fraction
    weights: Tuple[int, ...] = const.IOTA_WEIGHTS

    def as_dict(self) -> Dict[str, Fraction]:
        result = dict(zip(const.IOTA_LABELS, self.values))
        result['iota42'] = self.iota42
        return result


def iota(do_vector) -> IotaVector:
    """Iota invariants of a DixmierOhnoVector."""
    values = do_vector.as_dict()
    computed = iota_values(values)
    return IotaVector(
        values=tuple(computed[label] for label in const.IOTA_LABELS),
        iota42=iota42_value(values),
    )
