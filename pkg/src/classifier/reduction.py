#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
Potential reduction type of a plane quartic at a prime.

A quartic has potentially good quartic reduction iff the normalized
valuation of D27 with respect to a list of invariants containing a HSOP is
0. Otherwise it has potentially good hyperelliptic reduction iff
v_DO(I3) = 0, v_DO(I27) > 0 and v_iota(I3^5 I27) = 0; in every remaining
case the reduction is bad.
"""

import logging
from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from sympy import isprime

from ..core import constants as const
from ..forms.arithmetic import PrimeFieldElement, primitive_at, reduce_mod_p
from ..forms.ternary import FormError, TernaryForm
from ..invariants.dixmier_ohno import DixmierOhnoVector, dixmier_ohno
from ..invariants.hsop import UnsupportedPrimeError, hsop_catalog
from ..invariants.iota import IotaVector, iota
from ..toggle.models import (ToggleError, detect_toggle, good_toggle_check,
                             octic_reduction_test)
from ..valuations.padic import ValOrInf, val_p
from ..valuations.weighted import (WeightedValuationPoint, min_slope, normalized_valuation,
                                   weight_zero_residue)


logger = logging.getLogger(__name__)

I3_INDEX = const.DO_LABELS.index('I3')


class ClassificationError(Exception):
    """Custom exception for classification failures."""
    pass


class SingularCurveError(ClassificationError):
    """Raised when D27 vanishes."""
    pass


@dataclass(frozen=True)
class ReductionType:
    kind: str
    reason: Optional[str] = None

    def __str__(self):
        return f"{self.kind}({self.reason})" if self.reason else self.kind


GOOD_QUARTIC = ReductionType(const.REDUCTION_GOOD_QUARTIC)
GOOD_HYPERELLIPTIC = ReductionType(const.REDUCTION_GOOD_HYPERELLIPTIC)
BAD = ReductionType(const.REDUCTION_BAD)


def unsupported(reason: str) -> ReductionType:
    return ReductionType(const.REDUCTION_UNSUPPORTED, reason)


# ===== Report pieces =====

@dataclass(frozen=True)
class ResidueEquation:
    """v((lhs - coefficient * I3^k) / I3^k); the equation holds mod p when positive."""

    label: str
    valuation: ValOrInf

    @property
    def holds(self) -> bool:
        return self.valuation > 0


@dataclass(frozen=True)
class ToggleLocusResult:
    in_locus: bool
    mismatches: Tuple[str, ...]
    residue_equations: Tuple[ResidueEquation, ...]


@dataclass(frozen=True)
class SpecialFiberPoint:
    """
    A point of weighted projective space over F_p given by weight-zero
    residues r_i = x_i^(w_k) / x_k^(w_i) against an anchor slot k of minimal
    slope.
    """

    prime: int
    weights: Tuple[int, ...]
    anchor: int
    residues: Tuple[PrimeFieldElement, ...]

    @classmethod
    def from_values(cls, values: Sequence, weights: Sequence[int], p: int) -> 'SpecialFiberPoint':
        point = WeightedValuationPoint(tuple(values), tuple(weights), p)
        slope = min_slope(point)
        anchor = next(k for k, s in enumerate(point.slopes()) if s == slope)
        w_k = point.weights[anchor]
        x_k = point.values[anchor]
        residues = tuple(
            reduce_mod_p(x ** w_k / x_k ** w, p) for x, w in zip(point.values, point.weights)
        )
        return cls(p, point.weights, anchor, residues)

    def equivalent(self, other: 'SpecialFiberPoint') -> bool:
        """Equality up to the weighted action, tested on cross ratios."""
        if self.prime != other.prime or self.weights != other.weights:
            return False
        if [bool(r) for r in self.residues] != [bool(r) for r in other.residues]:
            return False
        w = self.weights
        a, b = self.anchor, other.anchor
        for i in range(len(w)):
            for j in range(len(w)):
                lhs = self.residues[i] ** (w[j] * w[b]) * other.residues[j] ** (w[i] * w[a])
                rhs = other.residues[i] ** (w[j] * w[a]) * self.residues[j] ** (w[i] * w[b])
                if lhs != rhs:
                    return False
        return True


@dataclass(frozen=True)
class ToggleDiagnostic:
    s: int
    s_is_even: bool
    reference_conic: bool
    distinct_roots: Optional[bool]
    octic_valuation: Optional[ValOrInf]


@dataclass(frozen=True)
class ReductionReport:
    prime: int
    reduction: ReductionType
    do_vector: Optional[DixmierOhnoVector] = None
    iota_vector: Optional[IotaVector] = None
    do_valuations: Tuple[ValOrInf, ...] = ()
    iota_valuations: Tuple[ValOrInf, ...] = ()
    v_do_d27: Optional[ValOrInf] = None
    v_do_i3: Optional[ValOrInf] = None
    v_iota_i42: Optional[ValOrInf] = None
    toggle_locus: Optional[ToggleLocusResult] = None
    hsop: Dict[str, Fraction] = field(default_factory=dict)
    special_fiber: Optional[SpecialFiberPoint] = None
    toggle: Optional[ToggleDiagnostic] = None


# ===== Tests =====

def _check_prime(p: int) -> None:
    if not isprime(p):
        raise ClassificationError(f"{p} is not a prime")


def _do_point(do_vector: DixmierOhnoVector, p: int) -> WeightedValuationPoint:
    return WeightedValuationPoint.from_vector(do_vector, p)


def good_quartic_test(do_vector: DixmierOhnoVector, p: int) -> Tuple[bool, ValOrInf, Dict[str, Fraction]]:
    """
    (good, v_I(D27), HSOP values) with I the HSOP of characteristic p
    together with the Dixmier-Ohno list.

    Raises:
        UnsupportedPrimeError: for p in {2, 3}
        SingularCurveError: when D27 = 0
    """
    catalog = hsop_catalog(p)
    if do_vector['I27'] == 0:
        raise SingularCurveError("D27 vanishes: the quartic is singular")
    hsop_values = catalog.evaluate(do_vector)
    point = WeightedValuationPoint(
        tuple(hsop_values.values()) + do_vector.values,
        catalog.degrees + do_vector.weights,
        p,
    )
    valuation = normalized_valuation(point, do_vector['I27'], 27)
    logger.debug(f"p={p}: v_I(D27) = {valuation}")
    return valuation == 0, valuation, hsop_values


def toggle_locus_test(do_vector: DixmierOhnoVector, p: int) -> ToggleLocusResult:
    """
    Whether the reduction of the Dixmier-Ohno point is that of a double conic.

    Raises:
        UnsupportedPrimeError: for p in {2, 3, 5, 7}, where the double-conic
            ratios are not all p-integral
        ClassificationError: if v_DO(I3) > 0
    """
    if p in const.HYPERELLIPTIC_EXCLUDED_PRIMES:
        raise UnsupportedPrimeError(f"Toggle locus test unavailable at p = {p}")
    point = _do_point(do_vector, p)
    if normalized_valuation(point, do_vector['I3'], 3) != 0:
        raise ClassificationError("Toggle locus test needs v_DO(I3) = 0")

    mismatches = []
    for index, label in enumerate(const.DO_LABELS):
        if index == I3_INDEX:
            continue
        expected = reduce_mod_p(const.DOUBLE_CONIC_RATIOS[index], p)
        if weight_zero_residue(point, index, I3_INDEX) != expected:
            mismatches.append(label)

    equations = residue_equations(do_vector, p)
    logger.debug(f"p={p}: toggle locus mismatches {mismatches}")
    return ToggleLocusResult(not mismatches, tuple(mismatches), equations)


def residue_equations(do_vector: DixmierOhnoVector, p: int) -> Tuple[ResidueEquation, ...]:
    """Valuations of the six double-conic relations, scaled to weight zero."""
    v = do_vector.as_dict()
    I3 = v['I3']
    if I3 == 0:
        return ()
    relations = (
        ('I6', v['I6'], Fraction(1, 180), 2),
        ('I9', v['I9'], Fraction(49, 36), 3),
        ('J9', v['J9'], Fraction(49, 60), 3),
        ('I12', v['I12'], Fraction(343, 1620), 4),
        ('J12', v['J12'], Fraction(49, 36), 4),
        ('J15+9I15', v['J15'] + 9 * v['I15'], Fraction(2744, 675), 5),
    )
    return tuple(
        ResidueEquation(label, val_p((lhs - coefficient * I3 ** k) / I3 ** k, p))
        for label, lhs, coefficient, k in relations
    )


def hyperelliptic_test(do_vector: DixmierOhnoVector, iota_vector: IotaVector, p: int):
    """
    (good, v_DO(I3), v_DO(I27), v_iota(I3^5 I27)).

    Raises:
        UnsupportedPrimeError: for p in {2, 3, 5, 7}
    """
    if p in const.HYPERELLIPTIC_EXCLUDED_PRIMES:
        raise UnsupportedPrimeError(f"Hyperelliptic criterion unavailable at p = {p}")
    point = _do_point(do_vector, p)
    v_i3 = normalized_valuation(point, do_vector['I3'], 3)
    v_i27 = normalized_valuation(point, do_vector['I27'], 27)
    iota_point = WeightedValuationPoint(iota_vector.values, iota_vector.weights, p)
    v_i42 = normalized_valuation(iota_point, iota_vector.iota42, const.IOTA42_WEIGHT)
    good = v_i3 == 0 and v_i27 > 0 and v_i42 == 0
    logger.debug(f"p={p}: v_DO(I3)={v_i3}, v_DO(I27)={v_i27}, v_iota={v_i42}")
    return good, v_i3, v_i27, v_i42


def special_fiber_point(iota_vector: IotaVector, p: int) -> SpecialFiberPoint:
    """Shioda point (j2 : ... : j7) of the special fiber from (iota6 : ... : iota21)."""
    weights = tuple(w // 3 for w in iota_vector.weights)
    return SpecialFiberPoint.from_values(iota_vector.values, weights, p)


# ===== Classification =====

def classify_invariants(do_vector: DixmierOhnoVector, p: int, include_hsop: bool = False) -> ReductionReport:
    """
    Classify from precomputed Dixmier-Ohno invariants.

    Raises:
        ClassificationError: if p is not prime
        SingularCurveError: when D27 = 0
    """
    _check_prime(p)
    if p in const.HSOP_UNSUPPORTED_PRIMES:
        logger.info(f"p={p}: no HSOP catalog, reduction type unsupported")
        return ReductionReport(p, unsupported(const.REASON_NO_HSOP), do_vector)
    if do_vector['I27'] == 0:
        raise SingularCurveError("D27 vanishes: the quartic is singular")

    iota_vector = iota(do_vector)
    do_valuations = tuple(val_p(x, p) for x in do_vector.values)
    iota_valuations = tuple(val_p(x, p) for x in iota_vector.values)
    point = _do_point(do_vector, p)
    v_i3 = normalized_valuation(point, do_vector['I3'], 3)

    good, v_d27, hsop_values = good_quartic_test(do_vector, p)
    hyperelliptic_branch = p not in const.HYPERELLIPTIC_EXCLUDED_PRIMES
    locus = toggle_locus_test(do_vector, p) if v_i3 == 0 and hyperelliptic_branch else None

    common = dict(
        prime=p,
        do_vector=do_vector,
        iota_vector=iota_vector,
        do_valuations=do_valuations,
        iota_valuations=iota_valuations,
        v_do_d27=v_d27,
        v_do_i3=v_i3,
        toggle_locus=locus,
        hsop=hsop_values if include_hsop else {},
    )

    if good:
        logger.debug(f"p={p}: GoodQuartic")
        return ReductionReport(reduction=GOOD_QUARTIC, **common)

    if not hyperelliptic_branch:
        logger.info(f"p={p}: quartic test failed, hyperelliptic branch unavailable")
        return ReductionReport(reduction=unsupported(const.REASON_NO_HYPERELLIPTIC_BRANCH), **common)

    hyperelliptic, _, _, v_i42 = hyperelliptic_test(do_vector, iota_vector, p)
    if hyperelliptic:
        if locus is None or not locus.in_locus:
            raise ClassificationError(
                f"p={p}: hyperelliptic criterion holds outside the double-conic locus"
            )
        logger.debug(f"p={p}: GoodHyperelliptic")
        return ReductionReport(
            reduction=GOOD_HYPERELLIPTIC,
            v_iota_i42=v_i42,
            special_fiber=special_fiber_point(iota_vector, p),
            **common,
        )

    logger.debug(f"p={p}: Bad")
    return ReductionReport(reduction=BAD, v_iota_i42=v_i42, **common)


def _toggle_diagnostic(form: TernaryForm, p: int) -> Optional[ToggleDiagnostic]:
    try:
        model = detect_toggle(primitive_at(form, p), p)
    except ToggleError as e:
        logger.debug(f"p={p}: no toggle model ({e})")
        return None
    if model is None:
        return None
    if not model.reference_conic:
        return ToggleDiagnostic(model.s, model.s_is_even, False, None, None)
    fiber = good_toggle_check(model)
    octic_valuation = None
    if fiber.distinct_roots:
        octic_valuation = octic_reduction_test(fiber.octic, p).valuation
    return ToggleDiagnostic(model.s, model.s_is_even, True, fiber.distinct_roots, octic_valuation)


def _check_quartic(form: TernaryForm) -> None:
    if form.degree != 4:
        raise FormError(f"Expected a quartic, got degree {form.degree}")


def classify_many(form: TernaryForm, primes: Sequence[int], include_hsop: bool = False) -> List[ReductionReport]:
    """Classify one quartic at several primes, evaluating the invariants once."""
    _check_quartic(form)
    do_vector = dixmier_ohno(form)
    if do_vector['I27'] == 0:
        raise SingularCurveError("D27 vanishes: the quartic is singular")
    reports = []
    for p in primes:
        report = classify_invariants(do_vector, p, include_hsop)
        if report.reduction == GOOD_HYPERELLIPTIC:
            toggle = _toggle_diagnostic(form, p)
            if toggle is not None:
                report = replace(report, toggle=toggle)
        reports.append(report)
    return reports


def classify(form: TernaryForm, p: int, include_hsop: bool = False) -> ReductionReport:
    """
    GoodQuartic, GoodHyperelliptic, Bad or Unsupported for a smooth quartic at p.

    Raises:
        FormError: for non-quartic input
        SingularCurveError: when D27 = 0
    """
    return classify_many(form, [p], include_hsop)[0]


def special_fiber_shioda(form: TernaryForm, p: int) -> SpecialFiberPoint:
    """
    Shioda point of the special fiber of a quartic with potentially good
    hyperelliptic reduction.

    Raises:
        ClassificationError: when the reduction is not GoodHyperelliptic
    """
    report = classify(form, p)
    if report.reduction != GOOD_HYPERELLIPTIC:
        raise ClassificationError(f"Reduction at {p} is {report.reduction}, not hyperelliptic")
    return report.special_fiber
