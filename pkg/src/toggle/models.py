#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
Toggle models F = u Q^2 + p^s G of quartics whose reduction is a double conic.

When Q reduces to (a multiple of) Q0 = x2^2 - 4 x1 x3, the special fiber
of the hyperelliptic reduction is y^2 = b8(G) mod p.
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional

from sympy import Poly, symbols

from ..core import constants as const
from ..forms.arithmetic import is_p_integral, reduce_mod_p
from ..forms.binary import BinaryForm
from ..forms.modp import binary_has_distinct_roots, conic_square_root
from ..forms.ternary import REFERENCE_CONIC, TernaryForm
from ..invariants.discriminants import conic_discriminant, quartic_discriminant
from ..invariants.dixmier_ohno import dixmier_ohno
from ..invariants.iota import iota
from ..invariants.shioda import binary_octic_discriminant, shioda
from ..valuations.padic import INFINITY, ValOrInf, val_p
from ..valuations.weighted import WeightedValuationPoint, normalized_valuation
from .embedding import b8


logger = logging.getLogger(__name__)

_GENERATORS = symbols('x1 x2 x3')


class ToggleError(Exception):
    """Custom exception for invalid or unsupported toggle models."""
    pass


@dataclass(frozen=True)
class ToggleModel:
    """F = unit * conic^2 + prime^s * G with G integral and nonzero mod p."""

    conic: TernaryForm
    s: int
    G: TernaryForm
    prime: int
    unit: Fraction = Fraction(1)
    reference_conic: bool = True

    def __post_init__(self):
        if self.s < 1:
            raise ToggleError(f"Toggle exponent must be positive, got {self.s}")
        if self.G.is_zero():
            raise ToggleError("G must be nonzero")
        if not all(is_p_integral(c, self.prime) for c in self.G.terms.values()):
            raise ToggleError(f"G is not {self.prime}-integral")
        if all(c.numerator % self.prime == 0 for c in self.G.terms.values()):
            raise ToggleError(f"G vanishes modulo {self.prime}")
        if val_p(self.unit, self.prime) != 0:
            raise ToggleError(f"Unit {self.unit} is not a {self.prime}-adic unit")

    @property
    def s_is_even(self) -> bool:
        return self.s % 2 == 0

    def reconstruct(self) -> TernaryForm:
        return (self.conic * self.conic).scale(self.unit) + self.G.scale(Fraction(self.prime) ** self.s)


@dataclass(frozen=True)
class SpecialFiber:
    """y^2 = octic over F_p; octic coefficients are residues in [0, p)."""

    octic: BinaryForm
    prime: int
    distinct_roots: bool


# ===== Detection =====

def _poly_mod_p(form: TernaryForm, p: int) -> Poly:
    terms = {m: int(reduce_mod_p(c, p)) for m, c in form.terms.items()}
    return Poly.from_dict(terms or {(0, 0, 0): 0}, *_GENERATORS, modulus=p)


def _form_from_poly(poly: Poly, degree: int) -> TernaryForm:
    return TernaryForm(degree, {m: Fraction(int(c)) for m, c in poly.as_dict().items()})


def _symmetric_lift(form: TernaryForm, p: int) -> TernaryForm:
    def lift(c):
        r = int(reduce_mod_p(c, p))
        return Fraction(r - p if r > p // 2 else r)
    return form.map_coefficients(lift)


def _proportional_to_reference(q: TernaryForm, p: int) -> Optional[int]:
    """mu with q = mu Q0 mod p, or None."""
    anchor = (1, 0, 1)
    reference = REFERENCE_CONIC.coefficient(anchor)
    mu = reduce_mod_p(q.coefficient(anchor), p) / reduce_mod_p(reference, p)
    if not mu:
        return None
    for m in set(q.terms) | set(REFERENCE_CONIC.terms):
        if reduce_mod_p(q.coefficient(m), p) != mu * reduce_mod_p(REFERENCE_CONIC.coefficient(m), p):
            return None
    return int(mu)


def _split(form: TernaryForm, unit: Fraction, conic: TernaryForm, p: int):
    difference = form - (conic * conic).scale(unit)
    if difference.is_zero():
        raise ToggleError("The quartic is a scalar multiple of a conic square")
    r = min(val_p(c, p) for c in difference.terms.values())
    return int(r), difference.scale(Fraction(1, p) ** int(r))


def detect_toggle(form: TernaryForm, p: int) -> Optional[ToggleModel]:
    """
    Decompose F = u Q^2 + p^s G with Q a nondegenerate conic mod p and s maximal.

    F must be p-integral and p-primitive. Returns None when F mod p is not a
    multiple of the square of a nondegenerate conic. The conic is taken as Q0
    whenever it reduces to a multiple of Q0.

    Raises:
        ToggleError: for non-integral input, conic squares or p = 2
    """
    if p == 2:
        raise ToggleError("Toggle models in characteristic 2 are not supported")
    if not all(is_p_integral(c, p) for c in form.terms.values()):
        raise ToggleError(f"Quartic is not {p}-integral")

    root = conic_square_root(form, p)
    if root is None:
        return None
    q, scalar = root
    if not reduce_mod_p(conic_discriminant(q), p):
        logger.debug(f"Reduction mod {p} is the square of a degenerate conic")
        return None

    mu = _proportional_to_reference(q, p)
    if mu is not None:
        conic = REFERENCE_CONIC
        unit = Fraction(int(reduce_mod_p(scalar * mu * mu, p)))
    else:
        conic = _symmetric_lift(q, p)
        unit = Fraction(scalar)

    r, G = _split(form, unit, conic, p)

    # Absorb G mod (p, Q): (Q + p^r S)^2 = Q^2 + 2 p^r Q S + p^(2r) S^2
    bound = None
    while True:
        quotient, remainder = _poly_mod_p(G, p).div(_poly_mod_p(conic, p))
        if not remainder.is_zero:
            break
        if bound is None:
            discriminant = quartic_discriminant(form)
            if discriminant == 0:
                raise ToggleError("Singular quartic")
            bound = 4 * int(val_p(discriminant, p))
        if r > bound:
            logger.warning(f"Toggle absorption at p={p} stopped at exponent {r}")
            break
        correction = _symmetric_lift(_form_from_poly(quotient, 2), p).scale(
            Fraction(int(reduce_mod_p(1 / (2 * unit), p)))
        )
        conic = conic + correction.scale(Fraction(p) ** r)
        r, G = _split(form, unit, conic, p)
        logger.debug(f"Absorbed a conic multiple, exponent now {r}")

    model = ToggleModel(conic, r, G, p, unit, mu is not None)
    logger.debug(f"Toggle model at p={p}: s={r}, reference conic={model.reference_conic}")
    return model


# ===== Special fiber =====

def good_toggle_check(model: ToggleModel) -> SpecialFiber:
    """
    Reduce b8(G) mod p; the toggle is good when it has 8 distinct roots.

    Raises:
        ToggleError: if the conic does not reduce to a multiple of Q0
    """
    if not model.reference_conic:
        raise ToggleError("Special fiber needs a conic reducing to Q0")
    p = model.prime
    octic = b8(model.G).map_coefficients(lambda c: Fraction(int(reduce_mod_p(c, p))))
    distinct = binary_has_distinct_roots(octic, p)
    return SpecialFiber(octic, p, distinct)


# ===== Congruences =====

@dataclass(frozen=True)
class CongruenceMargin:
    label: str
    valuation: ValOrInf
    required: int

    @property
    def holds(self) -> bool:
        return self.valuation >= self.required


@dataclass(frozen=True)
class CongruenceReport:
    prime: int
    s: int
    margins: List[CongruenceMargin] = field(default_factory=list)

    @property
    def holds(self) -> bool:
        return all(m.holds for m in self.margins)


def congruence_suite(model: ToggleModel, max_index: int = 7) -> CongruenceReport:
    """
    Check p^(si) j_i(f) = iota_3i(F) + O(p^(s(i+1))) for i = 2..max_index and
    p^(14s) D14(f) = iota42(F) + O(p^(15s)), with f = b8(G).

    Raises:
        ToggleError: unless the conic is exactly Q0
    """
    if model.conic != REFERENCE_CONIC:
        raise ToggleError("Congruences are stated for the conic Q0")

    p, s = model.prime, model.s
    G = model.G.scale(1 / model.unit)
    form = REFERENCE_CONIC * REFERENCE_CONIC + G.scale(Fraction(p) ** s)
    f = b8(G)

    iotas = iota(dixmier_ohno(form))
    iota_values = iotas.as_dict()
    shioda_values = shioda(f).values

    margins = []
    for i in range(2, max_index + 1):
        lhs = Fraction(p) ** (s * i) * shioda_values[i - 2]
        rhs = iota_values[f"iota{3 * i}"]
        margins.append(CongruenceMargin(f"j{i}", val_p(lhs - rhs, p), s * (i + 1)))

    lhs = Fraction(p) ** (14 * s) * binary_octic_discriminant(f)
    margins.append(CongruenceMargin('D14', val_p(lhs - iotas.iota42, p), 15 * s))

    report = CongruenceReport(p, s, margins)
    logger.debug(f"Congruence suite p={p} s={s}: {'ok' if report.holds else 'failed'}")
    return report


# ===== Octic criterion =====

@dataclass(frozen=True)
class OcticReductionResult:
    valuation: ValOrInf
    prime: int

    @property
    def potentially_good(self) -> bool:
        return self.valuation == 0


def octic_reduction_test(f: BinaryForm, p: int) -> OcticReductionResult:
    """
    y^2 = f has potentially good reduction at p iff v_Sh(D14(f)) = 0 with
    Sh = (j2, ..., j7).

    Raises:
        ToggleError: for p = 2
    """
    if p == 2:
        raise ToggleError("The octic criterion needs odd residue characteristic")
    vector = shioda(f)
    point = WeightedValuationPoint(vector.hsop(), const.SHIODA_WEIGHTS[:const.SHIODA_HSOP_SIZE], p)
    discriminant = binary_octic_discriminant(f)
    if discriminant == 0:
        return OcticReductionResult(INFINITY, p)
    return OcticReductionResult(normalized_valuation(point, discriminant, 14), p)
