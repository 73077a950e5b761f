#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
Invariants of the depressed binary quartic x^4 + a x^2 z^2 + b x z^3 + c z^4
attached to a Picard curve.
"""

from dataclasses import dataclass
from fractions import Fraction

from ..core import constants as const
from ..forms.binary import BinaryForm
from ..forms.ternary import FormError, TernaryForm


@dataclass(frozen=True)
class BinaryQuarticInvariants:
    q2: Fraction
    q3: Fraction
    d6: Fraction


def picard_invariants(a, b, c) -> BinaryQuarticInvariants:
    """
    q2 = a^2 + 12c and q3 = 72ac - 27b^2 - 2a^3 are the classical I and J of
    the quartic; 27 D6 = 4 q2^3 - q3^2 is its discriminant.

    Only the closed forms in picard_closed_forms depend on the sign of q3.
    """
    a, b, c = Fraction(a), Fraction(b), Fraction(c)
    q2 = a * a + 12 * c
    q3 = 72 * a * c - 27 * b * b - 2 * a ** 3
    d6 = (4 * q2 ** 3 - q3 * q3) / 27
    return BinaryQuarticInvariants(q2, q3, d6)


def binary_quartic_invariants(quartic: BinaryForm) -> BinaryQuarticInvariants:
    """
    Raises:
        FormError: if the quartic is not of the shape x^4 + a x^2 z^2 + b x z^3 + c z^4
    """
    if quartic.degree != 4:
        raise FormError(f"Expected a binary quartic, got degree {quartic.degree}")
    leading, cubic, a, b, c = quartic.coefficients
    if leading != 1 or cubic != 0:
        raise FormError("Binary quartic must be monic without x^3 z term")
    return picard_invariants(a, b, c)


def picard_quartic(a, b, c) -> TernaryForm:
    """-x2^3 x3 + x1^4 + a x1^2 x3^2 + b x1 x3^3 + c x3^4."""
    return TernaryForm(4, {
        (0, 3, 1): -1,
        (4, 0, 0): 1,
        (2, 0, 2): Fraction(a),
        (1, 0, 3): Fraction(b),
        (0, 0, 4): Fraction(c),
    })


def picard_closed_forms(a, b, c) -> dict:
    """The Dixmier-Ohno values I9, J9, I18, J18, I27 of the Picard quartic."""
    a = Fraction(a)
    inv = picard_invariants(a, b, c)
    q2, q3, d6 = inv.q2, inv.q3, inv.d6
    return {
        'I9': const.PICARD_I9_SCALE * (8 * a * q3 + 81 * q2 ** 2),
        'J9': const.PICARD_I9_SCALE * (16 * a * q3 + 27 * q2 ** 2),
        'I18': const.PICARD_I18_SCALE * (108 * a ** 2 * q2 ** 3 + 33 * a * q3 * q2 ** 2
                                         + 8 * q2 ** 4 - 54 * d6 * q2),
        'J18': const.PICARD_J18_SCALE * (36 * a ** 2 * q2 ** 3 + 51 * a * q3 * q2 ** 2
                                         + 16 * q2 ** 4 - 108 * d6 * q2),
        'I27': const.PICARD_I27_SCALE * d6 ** 2,
    }
