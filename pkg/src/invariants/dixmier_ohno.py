#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
The thirteen Dixmier-Ohno invariants of a ternary quartic.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Tuple

from ..core import constants as const
from ..forms.ternary import FormError, TernaryForm
from .calibration import double_conic_value, recipes
from .covariants import raw_invariants
from .discriminants import conic_discriminant, quartic_discriminant


logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class DixmierOhnoVector:
    """Values (I3, I6, I9, J9, I12, J12, I15, J15, I18, J18, I21, J21, I27)."""

    values: Tuple[Fraction, ...]
    weights: Tuple[int, ...] = const.DO_WEIGHTS

    def __post_init__(self):
        if len(self.values) != len(const.DO_LABELS):
            raise ValueError(f"Expected {len(const.DO_LABELS)} values, got {len(self.values)}")

    def __getitem__(self, label: str) -> Fraction:
        return self.values[const.DO_LABELS.index(label)]

    def as_dict(self) -> Dict[str, Fraction]:
        return dict(zip(const.DO_LABELS, self.values))

    def is_nullcone(self) -> bool:
        return not any(self.values)

    @classmethod
    def from_dict(cls, values: Dict[str, Fraction]) -> 'DixmierOhnoVector':
        return cls(tuple(Fraction(values[label]) for label in const.DO_LABELS))


def dixmier_ohno(form: TernaryForm) -> DixmierOhnoVector:
    """
    Dixmier-Ohno invariants of a quartic.

    Raises:
        FormError: if the form is not a quartic
    """
    if form.degree != 4:
        raise FormError(f"Dixmier-Ohno invariants need a quartic, got degree {form.degree}")

    values = recipes().evaluate(raw_invariants(form))
    values['I27'] = quartic_discriminant(form) * const.I27_SCALE
    logger.debug(f"Dixmier-Ohno invariants evaluated, I3 = {values['I3']}")
    return DixmierOhnoVector.from_dict(values)


def conic_square_invariants(conic: TernaryForm) -> DixmierOhnoVector:
    """Closed form of the invariants of Q^2, with I3(Q^2) = 5/36 D3(Q)^2."""
    if conic.degree != 2:
        raise FormError(f"Expected a conic, got degree {conic.degree}")
    i3 = const.I3_CONIC_FACTOR * conic_discriminant(conic) ** 2
    return DixmierOhnoVector(tuple(double_conic_value(label, i3) for label in const.DO_LABELS))
