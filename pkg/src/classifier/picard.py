#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
Reduction of Picard curves -x2^3 x3 + x1^4 + a x1^2 x3^2 + b x1 x3^3 + c x3^4.

The curve has potentially good quartic reduction at p iff
6 v(2^3 3 a) >= v(D6) and 3 v(q2) >= v(3^3 D6), plus
3 v(a q3^3) >= 5 v(3^3 D6) when p = 3; otherwise the reduction is bad.
For p >= 5 this reads min(6 v(a), 3 v(c)) >= v(D6), and the twist
(x1 : x2 : x3) -> (P^3 x1 : P^4 x2 : x3) with v(P) = v(D6)/36 gives a
model with good reduction.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Tuple

from sympy import isprime

from ..core import constants as const
from ..invariants.binary_quartic import BinaryQuarticInvariants, picard_invariants
from ..invariants.hsop import UnsupportedPrimeError
from ..valuations.padic import ValOrInf, val_p
from .reduction import BAD, GOOD_QUARTIC, ClassificationError, ReductionType, SingularCurveError


logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PicardStableModel:
    """Twist exponent e = v(D6)/36 and the coefficients of the twisted model."""

    exponent: Fraction
    map_exponents: Tuple[Fraction, Fraction, Fraction]
    coefficients: Optional[Tuple[Fraction, Fraction, Fraction]]

    @property
    def extension_required(self) -> bool:
        return self.exponent.denominator != 1


@dataclass(frozen=True)
class PicardReport:
    prime: int
    reduction: ReductionType
    coefficients: Tuple[Fraction, Fraction, Fraction]
    invariants: BinaryQuarticInvariants
    v_a: ValOrInf
    v_q2: ValOrInf
    v_d6: ValOrInf
    inequalities: Tuple[Tuple[str, bool], ...]
    corollary_good: Optional[bool] = None
    stable_model: Optional[PicardStableModel] = None


def picard_stable_model(a, b, c, p: int) -> PicardStableModel:
    """Twisted model of a Picard curve with potentially good reduction at p >= 5."""
    d6 = picard_invariants(a, b, c).d6
    exponent = val_p(d6, p) / const.PICARD_TWIST_DENOMINATOR
    map_exponents = tuple(Fraction(k) * exponent for k in const.PICARD_MAP_EXPONENTS)
    coefficients = None
    if exponent.denominator == 1:
        coefficients = tuple(
            Fraction(value) / Fraction(p) ** int(shift * exponent)
            for value, shift in zip((a, b, c), const.PICARD_COEFFICIENT_SHIFTS)
        )
    return PicardStableModel(exponent, map_exponents, coefficients)


def picard_classify(a, b, c, p: int) -> PicardReport:
    """
    Raises:
        UnsupportedPrimeError: for p = 2
        SingularCurveError: when D6 = 0
        ClassificationError: if p is not prime
    """
    if not isprime(p):
        raise ClassificationError(f"{p} is not a prime")
    if p == 2:
        raise UnsupportedPrimeError("Picard criterion needs p != 2")

    a, b, c = Fraction(a), Fraction(b), Fraction(c)
    invariants = picard_invariants(a, b, c)
    if invariants.d6 == 0:
        raise SingularCurveError("D6 vanishes: the Picard quartic is singular")

    v_d6 = val_p(invariants.d6, p)
    v_27d6 = val_p(27 * invariants.d6, p)
    v_q2 = val_p(invariants.q2, p)
    inequalities = [
        ('6 v(24 a) >= v(D6)', 6 * val_p(24 * a, p) >= v_d6),
        ('3 v(q2) >= v(27 D6)', 3 * v_q2 >= v_27d6),
    ]
    if p == 3:
        logger.info("Picard criterion at p = 3 is pure valuation arithmetic; no HSOP backs it")
        inequalities.append(
            ('3 v(a q3^3) >= 5 v(27 D6)', 3 * val_p(a * invariants.q3 ** 3, p) >= 5 * v_27d6)
        )

    good = all(holds for _, holds in inequalities)
    corollary = None
    stable = None
    if p >= 5:
        corollary = min(6 * val_p(a, p), 3 * val_p(c, p)) >= v_d6
        if good:
            stable = picard_stable_model(a, b, c, p)

    logger.debug(f"Picard ({a}, {b}, {c}) at p={p}: {'good' if good else 'bad'}")
    return PicardReport(
        prime=p,
        reduction=GOOD_QUARTIC if good else BAD,
        coefficients=(a, b, c),
        invariants=invariants,
        v_a=val_p(a, p),
        v_q2=v_q2,
        v_d6=v_d6,
        inequalities=tuple(inequalities),
        corollary_good=corollary,
        stable_model=stable,
    )
