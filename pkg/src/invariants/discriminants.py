#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
Discriminants of conics and quartics.

D27 of a ternary quartic is obtained from the Macaulay resultant of its
three partial derivatives: det of the Macaulay matrix divided by the
determinant of its extraneous minor.
"""

import logging
import random
from fractions import Fraction
from typing import List, Sequence

from ..core import constants as const
from ..forms.linalg import LinearMap, determinant
from ..forms.ternary import FormError, TernaryForm, monomial_index, monomials


logger = logging.getLogger(__name__)


class InvariantError(Exception):
    """Custom exception for invariant evaluation failures."""
    pass


class DegenerateMinorError(InvariantError):
    """Raised when the extraneous Macaulay minor vanishes for the given coordinates."""
    pass


def conic_discriminant(conic: TernaryForm) -> Fraction:
    """D3 = 4 * det of the symmetric matrix of the conic."""
    if conic.degree != 2:
        raise FormError(f"Expected a conic, got degree {conic.degree}")
    a = conic.coefficient((2, 0, 0))
    b = conic.coefficient((0, 2, 0))
    c = conic.coefficient((0, 0, 2))
    d = conic.coefficient((1, 1, 0))
    e = conic.coefficient((1, 0, 1))
    f = conic.coefficient((0, 1, 1))
    return 4 * a * b * c + d * e * f - a * f * f - b * e * e - c * d * d


def macaulay_resultant(polynomials: Sequence[TernaryForm]) -> Fraction:
    """
    Resultant of three ternary forms.

    Raises:
        DegenerateMinorError: when the extraneous minor is singular
    """
    if len(polynomials) != 3:
        raise FormError(f"Macaulay resultant needs three forms, got {len(polynomials)}")
    degrees = [f.degree for f in polynomials]
    total = sum(d - 1 for d in degrees) + 1
    basis = monomials(total)
    index = monomial_index(total)

    rows: List[List[Fraction]] = []
    reduced: List[int] = []
    for row_number, m in enumerate(basis):
        divisible = [i for i in range(3) if m[i] >= degrees[i]]
        chosen = divisible[0]
        shift = list(m)
        shift[chosen] -= degrees[chosen]
        row = [Fraction(0)] * len(basis)
        for exps, coeff in polynomials[chosen].terms.items():
            target = (exps[0] + shift[0], exps[1] + shift[1], exps[2] + shift[2])
            row[index[target]] = coeff
        rows.append(row)
        if len(divisible) >= 2:
            reduced.append(row_number)

    minor = [[rows[i][j] for j in reduced] for i in reduced]
    minor_det = determinant(minor)
    if minor_det == 0:
        raise DegenerateMinorError("Extraneous Macaulay minor vanishes")
    return determinant(rows) / minor_det


def _random_unimodular(rng: random.Random) -> LinearMap:
    """Product of a few elementary integer matrices; determinant 1."""
    result = LinearMap.identity(3)
    for _ in range(4):
        i, j = rng.sample(range(3), 2)
        rows = [[1 if r == c else 0 for c in range(3)] for r in range(3)]
        rows[i][j] = rng.choice([-2, -1, 1, 2])
        result = result @ LinearMap(rows)
    return result


def quartic_discriminant(form: TernaryForm) -> Fraction:
    """
    D27 of a ternary quartic; zero exactly when the curve is singular.

    Raises:
        FormError: for non-quartic input
        InvariantError: when no coordinate change gives a regular minor
    """
    if form.degree != 4:
        raise FormError(f"Expected a quartic, got degree {form.degree}")
    if form.is_zero():
        return Fraction(0)

    rng = random.Random(form.degree)
    candidate = form
    for attempt in range(const.MACAULAY_RETRIES):
        try:
            resultant = macaulay_resultant(candidate.gradient())
            return const.D27_RESULTANT_SCALE * resultant
        except DegenerateMinorError:
            logger.debug(f"Macaulay minor vanished (attempt {attempt + 1}), changing coordinates")
            candidate = form.act(_random_unimodular(rng))

    raise InvariantError("Could not find coordinates with a regular Macaulay minor")
