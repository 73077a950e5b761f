#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
Homogeneous systems of parameters for ternary quartics, per residue
characteristic.

Every entry is a polynomial in the Dixmier-Ohno invariants, so a catalog
evaluates on a DixmierOhnoVector without touching the quartic again.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Dict, Mapping, Tuple

from ..core import constants as const
from .discriminants import InvariantError


Evaluator = Callable[[Mapping[str, Fraction]], Fraction]


class UnsupportedPrimeError(InvariantError):
    """Raised for residue characteristics without an implemented catalog."""
    pass


@dataclass(frozen=True)
class HsopEntry:
    label: str
    degree: int
    evaluate: Evaluator


@dataclass(frozen=True)
class HsopCatalogEntry:
    """The HSOP used in residue characteristic `selector`."""

    selector: str
    entries: Tuple[HsopEntry, ...]

    @property
    def labels(self) -> Tuple[str, ...]:
        return tuple(e.label for e in self.entries)

    @property
    def degrees(self) -> Tuple[int, ...]:
        return tuple(e.degree for e in self.entries)

    def evaluate(self, do_vector) -> Dict[str, Fraction]:
        values = do_vector.as_dict()
        return {e.label: e.evaluate(values) for e in self.entries}


def _slot(label: str) -> HsopEntry:
    degree = const.DO_WEIGHTS[const.DO_LABELS.index(label)]
    return HsopEntry(label, degree, lambda v: v[label])


def _i9_minus_j9(v):
    return v['I9'] - v['J9']


def _i9_char5(v):
    return (v['J9'] + 3 * v['I9']) / 5


def _j15_char5(v):
    I3, I6, I9, J9 = v['I3'], v['I6'], v['I9'], v['J9']
    I12, J12, I15, J15 = v['I12'], v['J12'], v['I15'], v['J15']
    cubic = (-64 * I3 ** 3 * I6 - 24 * I3 * I6 ** 2 + 39 * I3 * I12 - 11 * I3 * J12
             + 42 * I6 * I9 - 21 * I6 * J9 - 1143 * I15 + J15)
    quartic = 253 * I3 ** 2 * I9 - 79 * I3 ** 2 * J9
    return Fraction(cubic) / 5 ** 3 + Fraction(quartic) / 5 ** 4


_GENERIC = tuple(_slot(label) for label in ('I3', 'I6', 'I9', 'I12', 'I15', 'I18', 'I27'))

_EXCEPTIONAL = (
    _slot('I3'), _slot('I6'), HsopEntry('I9-J9', 9, _i9_minus_j9),
    _slot('I12'), _slot('I15'), _slot('I18'), _slot('I27'),
)

_CHARACTERISTIC_5 = (
    _slot('I3'), _slot('I6'), HsopEntry('I9^(5)', 9, _i9_char5),
    _slot('I12'), HsopEntry('J15^(5)', 15, _j15_char5), _slot('I18'), _slot('I27'),
)


def hsop_catalog(p: int) -> HsopCatalogEntry:
    """
    HSOP for residue characteristic p (0 for characteristic zero).

    Raises:
        UnsupportedPrimeError: for p in {2, 3}
    """
    if p in const.HSOP_UNSUPPORTED_PRIMES:
        raise UnsupportedPrimeError(f"No HSOP catalog for characteristic {p}")
    if p == 5:
        return HsopCatalogEntry('5', _CHARACTERISTIC_5)
    if p in const.HSOP_EXCEPTIONAL_PRIMES:
        return HsopCatalogEntry('exceptional', _EXCEPTIONAL)
    if p == 0:
        return HsopCatalogEntry('0', _GENERIC)
    return HsopCatalogEntry('generic', _GENERIC)
