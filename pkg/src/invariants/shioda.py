#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
Shioda invariants j2..j10 and the discriminant D14 of binary octics.

j2 is the transvectant (f, f)_8; j3..j7 are fixed polynomials in the
classical transvectant invariants, normalized so that they are the leading
terms of the iota invariants along Q0^2 + t G with b8(G) = f. j8..j10 are the
classical J8..J10.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Tuple

from ..core import constants as const
from ..forms.binary import BinaryForm, binary_discriminant_raw
from ..forms.ternary import FormError
from .calibration import recipes
from .octic import CLASSICAL_LABELS, classical_octic_invariants


@dataclass(frozen=True)
class ShiodaVector:
    values: Tuple[Fraction, ...]
    weights: Tuple[int, ...] = const.SHIODA_WEIGHTS

    def as_dict(self) -> Dict[str, Fraction]:
        return dict(zip(const.SHIODA_LABELS, self.values))

    def hsop(self) -> Tuple[Fraction, ...]:
        """(j2, ..., j7)"""
        return self.values[:const.SHIODA_HSOP_SIZE]


def _check_octic(f: BinaryForm) -> None:
    if f.degree != 8:
        raise FormError(f"Expected a binary octic, got degree {f.degree}")


def shioda(f: BinaryForm) -> ShiodaVector:
    _check_octic(f)
    classical = classical_octic_invariants(f)
    fits = {fit.label: fit for fit in recipes().shioda_fits}
    values = []
    for label, classical_label in zip(const.SHIODA_LABELS, CLASSICAL_LABELS):
        if label in fits:
            values.append(Fraction(fits[label].evaluate(classical)))
        else:
            values.append(Fraction(classical[classical_label]))
    return ShiodaVector(tuple(values))


def binary_octic_discriminant(f: BinaryForm) -> Fraction:
    """D14, zero iff f has a repeated root on P^1."""
    _check_octic(f)
    return recipes().d14_scale * binary_discriminant_raw(f)
