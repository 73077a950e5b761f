#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
Anchored calibration of the Dixmier-Ohno invariants.

Each invariant of degree d is carried by one published contraction
(covariants.PUBLISHED_CONTRACTIONS), scaled, plus whatever other raw
invariants of degree d and products of lower invariants the identities below
force. The coefficients are the solution of exact linear systems built from
identities the invariants must satisfy:

  * the values at the double conic Q0^2, Q0 = x2^2 - 4 x1 x3;
  * closed forms on Picard quartics -x2^3 x3 + x1^4 + a x1^2 x3^2 + ...;
  * orders of vanishing of the iota brackets along Q0^2 + t G for harmonic
    quartics G, computed with truncated power series in t;
  * the leading term j2 = (f,f)_8 of iota6 along the same family.

Every coefficient except the one of the published contraction is set to 0
when the identities allow it, so an invariant no identity constrains beyond
the double conic is a pure multiple of its contraction. A direction still
free after that is an error.

The Shioda invariants j3..j7, the scale of D14 and the scale of rho are
fitted the same way. Results are cached in memory and as JSON on disk.
"""

import json
import logging
import random
import threading
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Any, Callable, Dict, List, Mapping, Optional, Sequence, Tuple

import sympy

from ..core import constants as const
from ..core.settings import Settings
from ..forms.binary import BinaryForm, binary_discriminant_raw
from ..forms.linalg import rank, solve_consistent
from ..forms.series import TruncatedSeries, series_coefficients
from ..forms.ternary import REFERENCE_CONIC, REFERENCE_DUAL_CONIC, TernaryForm, monomials
from ..toggle.embedding import b8
from .binary_quartic import picard_closed_forms, picard_invariants, picard_quartic
from .covariants import (PUBLISHED_CONTRACTIONS, RAW_INVARIANTS_BY_DEGREE, CovariantChain,
                         raw_invariants)
from .discriminants import InvariantError, quartic_discriminant
from .iota import (BRACKET_LINEAR_TERMS, IOTA6_SCALE, bracket9, bracket12, bracket15,
                   bracket18, bracket21, iota_values)
from .octic import CLASSICAL_LABELS, CLASSICAL_WEIGHTS, classical_octic_invariants


logger = logging.getLogger(__name__)

Exponents = Tuple[int, ...]

LABEL_DEGREES: Dict[str, int] = dict(zip(const.DO_LABELS, const.DO_WEIGHTS))
SHIODA_FIT_LABELS = CLASSICAL_LABELS[:const.SHIODA_HSOP_SIZE]
SHIODA_FIT_WEIGHTS = CLASSICAL_WEIGHTS[:const.SHIODA_HSOP_SIZE]


class NormalizationError(InvariantError):
    """Raised when the anchor identities cannot be satisfied."""
    pass


# ===== Monomials in invariants =====

def weighted_monomials(weights: Sequence[int], degree: int, allowed: Sequence[bool]) -> List[Exponents]:
    """Exponent vectors e with sum e_i w_i = degree, using only allowed slots."""
    results: List[Exponents] = []

    def extend(position: int, remaining: int, prefix: List[int]):
        if position == len(weights):
            if remaining == 0:
                results.append(tuple(prefix))
            return
        if not allowed[position]:
            extend(position + 1, remaining, prefix + [0])
            return
        for exponent in range(remaining // weights[position], -1, -1):
            extend(position + 1, remaining - exponent * weights[position], prefix + [exponent])

    extend(0, degree, [])
    return results


def monomial_value(exponents: Exponents, labels: Sequence[str], values: Mapping[str, Any]):
    result = Fraction(1)
    for label, exponent in zip(labels, exponents):
        if exponent:
            result = result * values[label] ** exponent
    return result


# ===== Recipes =====

@dataclass(frozen=True)
class InvariantRecipe:
    """One invariant as sum(raw coefficients) + sum(monomial coefficients)."""

    label: str
    raw: Tuple[Tuple[str, Fraction], ...]
    products: Tuple[Tuple[Exponents, Fraction], ...]

    def evaluate(self, raw_values: Mapping[str, Any], known: Mapping[str, Any]):
        total = Fraction(0)
        for name, coeff in self.raw:
            if coeff:
                total = total + raw_values[name] * coeff
        for exponents, coeff in self.products:
            if coeff:
                total = total + monomial_value(exponents, const.CALIBRATED_LABELS, known) * coeff
        return total


@dataclass(frozen=True)
class ShiodaFit:
    """j_i as a polynomial in the classical invariants J2..J7."""

    label: str
    terms: Tuple[Tuple[Exponents, Fraction], ...]

    def evaluate(self, classical: Mapping[str, Any]):
        total = Fraction(0)
        for exponents, coeff in self.terms:
            if coeff:
                total = total + monomial_value(exponents, SHIODA_FIT_LABELS, classical) * coeff
        return total


@dataclass(frozen=True)
class InvariantRecipes:
    key: str
    recipes: Tuple[InvariantRecipe, ...]
    shioda_fits: Tuple[ShiodaFit, ...]
    rho_scale: Fraction
    d14_scale: Fraction

    def recipe(self, label: str) -> InvariantRecipe:
        for recipe in self.recipes:
            if recipe.label == label:
                return recipe
        raise KeyError(label)

    def evaluate(self, raw_values: Mapping[str, Any]) -> Dict[str, Any]:
        """Dixmier-Ohno values I3..J21 from raw invariant values."""
        values: Dict[str, Any] = {}
        for recipe in self.recipes:
            values[recipe.label] = recipe.evaluate(raw_values, values)
        return values

    def to_dict(self) -> Dict[str, Any]:
        return {
            'key': self.key,
            'recipes': [
                {
                    'label': r.label,
                    'raw': [[name, str(c)] for name, c in r.raw],
                    'products': [[list(e), str(c)] for e, c in r.products],
                }
                for r in self.recipes
            ],
            'shioda': [
                {'label': s.label, 'terms': [[list(e), str(c)] for e, c in s.terms]}
                for s in self.shioda_fits
            ],
            'rho_scale': str(self.rho_scale),
            'd14_scale': str(self.d14_scale),
        }

    @classmethod
    def from_dict(cls, data: Mapping[str, Any]) -> 'InvariantRecipes':
        return cls(
            key=data['key'],
            recipes=tuple(
                InvariantRecipe(
                    label=r['label'],
                    raw=tuple((name, Fraction(c)) for name, c in r['raw']),
                    products=tuple((tuple(e), Fraction(c)) for e, c in r['products']),
                )
                for r in data['recipes']
            ),
            shioda_fits=tuple(
                ShiodaFit(s['label'], tuple((tuple(e), Fraction(c)) for e, c in s['terms']))
                for s in data['shioda']
            ),
            rho_scale=Fraction(data['rho_scale']),
            d14_scale=Fraction(data['d14_scale']),
        )


# ===== Linear systems =====

@dataclass
class _Basis:
    label: str
    degree: int
    raw_names: Tuple[str, ...]
    products: Tuple[Exponents, ...]
    primary: str

    @property
    def size(self) -> int:
        return len(self.raw_names) + len(self.products)

    def values(self, sample: '_Sample') -> List[Any]:
        return ([sample.raw[name] for name in self.raw_names]
                + [monomial_value(e, const.CALIBRATED_LABELS, sample.values) for e in self.products])

    def conventions(self) -> List[Tuple[int, Fraction]]:
        """(index, value) pairs tried in order after the anchors; the primary stays free."""
        pure_power = tuple([self.degree // 3] + [0] * (len(const.CALIBRATED_LABELS) - 1))
        rules = [(k, Fraction(0)) for k, name in enumerate(self.raw_names) if name != self.primary]
        offset = len(self.raw_names)
        rules += [(offset + k, Fraction(0)) for k, e in enumerate(self.products) if e != pure_power]
        if pure_power in self.products:
            rules.append((offset + self.products.index(pure_power), Fraction(0)))
        return rules

    def to_recipe(self, coefficients: Sequence[Fraction], label: Optional[str] = None) -> InvariantRecipe:
        split = len(self.raw_names)
        return InvariantRecipe(
            label=label or self.label,
            raw=tuple(zip(self.raw_names, coefficients[:split])),
            products=tuple(zip(self.products, coefficients[split:])),
        )


class _System:
    """Exact linear system over the concatenated coefficients of several bases."""

    def __init__(self, bases: Sequence[_Basis]):
        self.bases = {b.label: b for b in bases}
        self.offsets: Dict[str, int] = {}
        position = 0
        for basis in bases:
            self.offsets[basis.label] = position
            position += basis.size
        self.size = position
        self.rows: List[List[Fraction]] = []
        self.rhs: List[Fraction] = []

    def add(self, blocks: Mapping[str, Sequence[Fraction]], rhs) -> None:
        row = [Fraction(0)] * self.size
        for label, coefficients in blocks.items():
            start = self.offsets[label]
            for k, value in enumerate(coefficients):
                row[start + k] = Fraction(value)
        self.rows.append(row)
        self.rhs.append(Fraction(rhs))

    def solve(self) -> Dict[str, List[Fraction]]:
        labels = ', '.join(self.bases)
        logger.debug(f"Solving anchors for {labels}: {len(self.rows)} rows, {self.size} unknowns")
        if solve_consistent(self.rows, self.rhs) is None:
            raise NormalizationError(f"Anchor identities for {labels} are inconsistent")

        rows, rhs = list(self.rows), list(self.rhs)
        for label, basis in self.bases.items():
            for index, value in basis.conventions():
                unit = [Fraction(0)] * self.size
                unit[self.offsets[label] + index] = Fraction(1)
                if solve_consistent(rows + [unit], rhs + [value]) is not None:
                    rows.append(unit)
                    rhs.append(value)

        free = self.size - rank(rows)
        if free:
            raise NormalizationError(f"Anchor identities leave {free} direction(s) of {labels} free")

        solution = solve_consistent(rows, rhs)
        return {
            label: solution[self.offsets[label]:self.offsets[label] + basis.size]
            for label, basis in self.bases.items()
        }


# ===== Samples =====

@dataclass
class _Sample:
    form: TernaryForm
    raw: Dict[str, Any]
    values: Dict[str, Any]
    octic: Optional[BinaryForm] = None
    classical: Optional[Dict[str, Fraction]] = None


def harmonic_part(form: TernaryForm) -> TernaryForm:
    """
    Component of a quartic killed by d2^2 - d1 d3.

    Quartics split as harmonic quartics plus Q0 * conics; b8 only sees the
    harmonic part.
    """
    basis = monomials(2)
    images = [REFERENCE_DUAL_CONIC.apply_operator(REFERENCE_CONIC * TernaryForm.monomial(m)).dense()
              for m in basis]
    matrix = [[images[j][i] for j in range(len(basis))] for i in range(len(basis))]
    target = REFERENCE_DUAL_CONIC.apply_operator(form).dense()
    coefficients = solve_consistent(matrix, target)
    if coefficients is None:
        raise NormalizationError("Harmonic projection failed")
    return form - REFERENCE_CONIC * TernaryForm.from_coefficients(2, coefficients)


def double_conic_value(label: str, i3: Fraction) -> Fraction:
    """Value of an invariant at Q^2 in terms of I3(Q^2)."""
    index = const.DO_LABELS.index(label)
    return const.DOUBLE_CONIC_RATIOS[index] * i3 ** (const.DO_WEIGHTS[index] // 3)


class Calibrator:
    """Solves the recipe coefficients stage by stage."""

    def __init__(self, settings: Settings):
        self.settings = settings
        self.rng = random.Random(settings.seed)
        self.precision = const.SLICE_PRECISION
        self.logger = logging.getLogger(__name__)
        self.recipes: Dict[str, InvariantRecipe] = {}

        self.reference: Optional[_Sample] = None
        self.slices: List[_Sample] = []
        self.picards: List[Tuple[Tuple[int, int, int], _Sample]] = []

    # ----- sample generation -----

    def _random_quartic(self) -> TernaryForm:
        bound = const.SAMPLE_COEFFICIENT_BOUND
        return TernaryForm.from_coefficients(
            4, [self.rng.randint(-bound, bound) for _ in range(const.QUARTIC_SLOTS)]
        )

    def _build_samples(self) -> None:
        square = REFERENCE_CONIC * REFERENCE_CONIC
        self.reference = _Sample(square, raw_invariants(square), {})

        while len(self.slices) < self.settings.slice_samples:
            direction = harmonic_part(self._random_quartic())
            octic = b8(direction)
            classical = classical_octic_invariants(octic)
            if direction.is_zero() or not classical['J2']:
                continue
            family = TernaryForm(4, {
                m: TruncatedSeries([square.coefficient(m), direction.coefficient(m)], self.precision)
                for m in monomials(4)
            })
            self.slices.append(_Sample(family, raw_invariants(family), {}, octic, classical))
            self.logger.debug(f"Slice sample {len(self.slices)} ready")

        seen = set()
        bound = const.PICARD_SAMPLE_BOUND
        while len(self.picards) < self.settings.picard_samples:
            triple = tuple(self.rng.randint(-bound, bound) for _ in range(3))
            if triple in seen or picard_invariants(*triple).d6 == 0:
                continue
            seen.add(triple)
            form = picard_quartic(*triple)
            self.picards.append((triple, _Sample(form, raw_invariants(form), {})))

    def _all_samples(self) -> List[_Sample]:
        return [self.reference] + self.slices + [s for _, s in self.picards]

    # ----- helpers -----

    def _basis(self, label: str, degree: Optional[int] = None, primary: Optional[str] = None) -> _Basis:
        degree = degree or LABEL_DEGREES[label]
        primary = primary or PUBLISHED_CONTRACTIONS[label]
        allowed = [LABEL_DEGREES[name] < degree and name in self.recipes for name in const.CALIBRATED_LABELS]
        products = tuple(
            e for e in weighted_monomials(const.DO_WEIGHTS[:-1], degree, allowed) if sum(e) >= 2
        )
        return _Basis(label, degree, RAW_INVARIANTS_BY_DEGREE[degree], products, primary)

    def _record(self, recipe: InvariantRecipe) -> None:
        self.recipes[recipe.label] = recipe
        for sample in self._all_samples():
            sample.values[recipe.label] = recipe.evaluate(sample.raw, sample.values)
        self.logger.debug(f"Recipe {recipe.label}: {sum(1 for _, c in recipe.raw if c)} raw terms, "
                          f"{sum(1 for _, c in recipe.products if c)} products")

    def _reference_rows(self, system: _System, basis: _Basis, target_label: Optional[str] = None,
                        target: Optional[Fraction] = None) -> None:
        i3 = self.reference.values['I3']
        value = target if target is not None else double_conic_value(target_label or basis.label, i3)
        system.add({basis.label: basis.values(self.reference)}, value)

    def _picard_rows(self, system: _System, basis: _Basis) -> None:
        for triple, sample in self.picards:
            system.add({basis.label: basis.values(sample)}, picard_closed_forms(*triple)[basis.label])

    def _bracket_rows(self, system: _System, bases: Sequence[_Basis], bracket: Callable,
                      multipliers: Mapping[str, int], orders: int) -> None:
        zero = TruncatedSeries.constant(0, self.precision)
        for sample in self.slices:
            values = dict(sample.values)
            for basis in bases:
                values[basis.label] = zero
            if 'W15' in multipliers:
                values['I15'] = zero
                values['J15'] = zero
            known = bracket(values)
            basis_values = {b.label: b.values(sample) for b in bases}
            for j in range(orders):
                blocks = {
                    b.label: [multipliers[b.label] * series_coefficients(v, self.precision)[j]
                              for v in basis_values[b.label]]
                    for b in bases
                }
                system.add(blocks, -known.coefficient(j))

    # ----- stages -----

    def _stage_i3(self) -> None:
        raw = self.reference.raw['r3']
        if not raw:
            raise NormalizationError("Degree-3 raw invariant vanishes on the double conic")
        scale = const.I3_OF_REFERENCE_SQUARE / raw
        self._record(InvariantRecipe('I3', (('r3', scale),), ()))

    def _stage_i6(self) -> None:
        basis = self._basis('I6')
        system = _System([basis])
        self._reference_rows(system, basis)
        for sample in self.slices:
            i3_squared = sample.values['I3'] * sample.values['I3']
            coefficients = [IOTA6_SCALE * (-180) * series_coefficients(v, self.precision)[2]
                            for v in basis.values(sample)]
            system.add({'I6': coefficients}, sample.classical['J2'] - IOTA6_SCALE * i3_squared.coefficient(2))
        self._record(basis.to_recipe(system.solve()['I6']))

    def _stage_degree9(self) -> None:
        bases = [self._basis('I9'), self._basis('J9')]
        system = _System(bases)
        for basis in bases:
            self._reference_rows(system, basis)
            self._picard_rows(system, basis)
        self._bracket_rows(system, bases, bracket9, BRACKET_LINEAR_TERMS['bracket9'], 3)
        self._bracket_rows(system, bases, bracket12, BRACKET_LINEAR_TERMS['bracket12'], 4)
        solution = system.solve()
        for basis in bases:
            self._record(basis.to_recipe(solution[basis.label]))

    def _stage_degree12(self) -> None:
        i12 = self._basis('I12')
        system = _System([i12])
        self._reference_rows(system, i12)
        self._bracket_rows(system, [i12], bracket18, BRACKET_LINEAR_TERMS['bracket18'], 6)
        i12_coefficients = system.solve()['I12']

        j12 = self._basis('J12')
        system = _System([j12])
        self._reference_rows(system, j12)
        self._bracket_rows(system, [j12], bracket15, BRACKET_LINEAR_TERMS['bracket15'], 5)
        j12_coefficients = system.solve()['J12']

        self._record(i12.to_recipe(i12_coefficients))
        self._record(j12.to_recipe(j12_coefficients))

    def _stage_degree15(self) -> None:
        i15 = self._basis('I15')
        system = _System([i15])
        self._reference_rows(system, i15)
        i15_coefficients = system.solve()['I15']

        # W = 9 I15 + J15 is what the iota21 bracket sees
        combined = self._basis('W15', degree=15, primary=PUBLISHED_CONTRACTIONS['J15'])
        system = _System([combined])
        i3 = self.reference.values['I3']
        self._reference_rows(system, combined,
                             target=9 * double_conic_value('I15', i3) + double_conic_value('J15', i3))
        self._bracket_rows(system, [combined], bracket21, BRACKET_LINEAR_TERMS['bracket21'], 7)
        w_coefficients = system.solve()['W15']

        j15_coefficients = [w - 9 * c for w, c in zip(w_coefficients, i15_coefficients)]
        self._record(i15.to_recipe(i15_coefficients))
        self._record(combined.to_recipe(j15_coefficients, label='J15'))

    def _stage_degree18(self) -> None:
        solved = {}
        for label in ('I18', 'J18'):
            basis = self._basis(label)
            system = _System([basis])
            self._reference_rows(system, basis)
            self._picard_rows(system, basis)
            solved[label] = basis.to_recipe(system.solve()[label])
        for label in ('I18', 'J18'):
            self._record(solved[label])

    def _stage_degree21(self) -> None:
        solved = {}
        for label in ('I21', 'J21'):
            basis = self._basis(label)
            system = _System([basis])
            self._reference_rows(system, basis)
            solved[label] = basis.to_recipe(system.solve()[label])
        for label in ('I21', 'J21'):
            self._record(solved[label])

    # ----- secondary fits -----

    def _check_discriminant_sign(self) -> None:
        for triple, sample in self.picards:
            computed = quartic_discriminant(sample.form) * const.I27_SCALE
            expected = picard_closed_forms(*triple)['I27']
            if computed != expected:
                raise NormalizationError(
                    f"Discriminant normalization disagrees on Picard sample {triple}: {computed} vs {expected}"
                )
        self.logger.debug(f"Discriminant normalization checked on {len(self.picards)} Picard samples")

    def _fit_shioda(self) -> Tuple[ShiodaFit, ...]:
        fits = [ShiodaFit('j2', (((1, 0, 0, 0, 0, 0), Fraction(1)),))]
        iota_series = [iota_values(sample.values) for sample in self.slices]

        for weight in range(3, 8):
            basis = weighted_monomials(SHIODA_FIT_WEIGHTS, weight, [True] * len(SHIODA_FIT_WEIGHTS))
            rows, rhs = [], []
            for sample, series in zip(self.slices, iota_series):
                rows.append([monomial_value(e, SHIODA_FIT_LABELS, sample.classical) for e in basis])
                rhs.append(series[f"iota{3 * weight}"].coefficient(weight))
            coefficients = solve_consistent(rows, rhs)
            if coefficients is None:
                raise NormalizationError(f"Shioda invariant j{weight} does not fit the iota expansion")
            fits.append(ShiodaFit(f"j{weight}", tuple(zip(basis, coefficients))))
            self.logger.debug(f"Fitted j{weight} over {len(basis)} monomials")
        return tuple(fits)

    def _fit_d14(self) -> Fraction:
        square = REFERENCE_CONIC * REFERENCE_CONIC
        direction = TernaryForm(4, {(4, 0, 0): 1, (0, 0, 4): 1})
        t = sympy.Symbol('t')
        points = []
        for node in range(1, const.D14_INTERPOLATION_NODES + 1):
            value = quartic_discriminant(square + direction.scale(node))
            points.append((node, sympy.Rational(value.numerator, value.denominator)))
        polynomial = sympy.Poly(sympy.interpolate(points, t), t, domain=sympy.QQ)
        coefficients = [Fraction(int(c.p), int(c.q)) for c in
                        (sympy.Rational(c) for c in reversed(polynomial.all_coeffs()))]
        coefficients += [Fraction(0)] * (const.D14_INTERPOLATION_NODES - len(coefficients))

        if any(coefficients[:14]):
            raise NormalizationError("D27 does not vanish to order 14 along the double conic")

        i3 = const.I3_OF_REFERENCE_SQUARE
        target = const.IOTA42_SCALE * i3 ** 5 * const.I27_SCALE * coefficients[14]
        raw = binary_discriminant_raw(b8(direction))
        if not raw:
            raise NormalizationError("Raw octic discriminant of x^8 + z^8 vanishes")
        return target / raw

    def _fit_rho(self) -> Fraction:
        raw = CovariantChain(self.reference.form).rho
        target = REFERENCE_DUAL_CONIC.scale(const.RHO_REFERENCE_SCALE)
        anchor = raw.coefficient((0, 2, 0))
        if not anchor:
            raise NormalizationError("Raw rho vanishes on the double conic")
        scale = target.coefficient((0, 2, 0)) / anchor
        if raw.scale(scale) != target:
            raise NormalizationError("Raw rho of the double conic is not a multiple of the dual conic")
        return scale

    # ----- driver -----

    def run(self) -> InvariantRecipes:
        self.logger.info(f"Calibrating invariants (seed {self.settings.seed}, "
                         f"{self.settings.slice_samples} slice / {self.settings.picard_samples} Picard samples)")
        self._build_samples()

        stages = [
            ('I3', self._stage_i3),
            ('I6', self._stage_i6),
            ('I9, J9', self._stage_degree9),
            ('I12, J12', self._stage_degree12),
            ('I15, J15', self._stage_degree15),
            ('I18, J18', self._stage_degree18),
            ('I21, J21', self._stage_degree21),
        ]
        for name, stage in stages:
            stage()
            self.logger.info(f"Calibrated {name}")

        self._check_discriminant_sign()
        shioda_fits = self._fit_shioda()
        d14_scale = self._fit_d14()
        rho_scale = self._fit_rho()
        self.logger.info("Calibration complete")

        return InvariantRecipes(
            key=self.settings.calibration_key(),
            recipes=tuple(self.recipes[label] for label in const.CALIBRATED_LABELS),
            shioda_fits=shioda_fits,
            rho_scale=rho_scale,
            d14_scale=d14_scale,
        )


# ===== Cache =====

_RECIPE_CACHE: Dict[str, InvariantRecipes] = {}
_RECIPE_LOCK = threading.Lock()
_active_settings: Optional[Settings] = None


def _cache_file(settings: Settings) -> Path:
    return settings.get_cache_path() / f"{settings.calibration_key()}.json"


def _load_from_disk(settings: Settings) -> Optional[InvariantRecipes]:
    path = _cache_file(settings)
    if not path.exists():
        return None
    try:
        with open(path, 'r', encoding='utf-8') as f:
            recipes = InvariantRecipes.from_dict(json.load(f))
        logger.info(f"Loaded calibrated invariants from {path}")
        return recipes
    except (OSError, ValueError, KeyError, TypeError) as e:
        logger.warning(f"Ignoring unreadable calibration cache {path}: {e}")
        return None


def _store_on_disk(settings: Settings, recipes: InvariantRecipes) -> None:
    path = _cache_file(settings)
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        with open(path, 'w', encoding='utf-8') as f:
            json.dump(recipes.to_dict(), f, indent=1, sort_keys=True)
        logger.debug(f"Stored calibrated invariants in {path}")
    except OSError as e:
        logger.warning(f"Could not write calibration cache {path}: {e}")


def calibrate(settings: Optional[Settings] = None) -> InvariantRecipes:
    """Calibrated recipes for the given settings, from memory, disk or a fresh run."""
    settings = settings or _active_settings or Settings()
    key = settings.calibration_key()
    with _RECIPE_LOCK:
        if key in _RECIPE_CACHE:
            return _RECIPE_CACHE[key]

        recipes = _load_from_disk(settings) if settings.cache_enabled else None
        if recipes is None:
            recipes = Calibrator(settings).run()
            if settings.cache_enabled:
                _store_on_disk(settings, recipes)

        _RECIPE_CACHE[key] = recipes
        return recipes


def use_settings(settings: Settings) -> None:
    """Select the settings used by recipes()."""
    global _active_settings
    _active_settings = settings


def recipes() -> InvariantRecipes:
    """Process-wide recipes used by the invariant functions."""
    return calibrate(_active_settings)


def preload(settings: Settings, recipes_data: Dict[str, Any]) -> None:
    """Install recipes solved elsewhere, e.g. in a parent process."""
    use_settings(settings)
    loaded = InvariantRecipes.from_dict(recipes_data)
    with _RECIPE_LOCK:
        _RECIPE_CACHE[settings.calibration_key()] = loaded
