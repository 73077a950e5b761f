#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
Computations over the prime field F_p: conic-square detection for quartics
and the distinct-root test for binary forms.
"""

import logging
from typing import Dict, Optional, Tuple

from sympy import Poly, Symbol

from .arithmetic import reduce_mod_p
from .binary import BinaryForm
from .ternary import FormError, Monomial, TernaryForm, monomials


logger = logging.getLogger(__name__)


def _residues(form: TernaryForm, p: int) -> Dict[Monomial, int]:
    reduced = {}
    for m, c in form.terms.items():
        r = reduce_mod_p(c, p).residue
        if r:
            reduced[m] = r
    return reduced


def _square_mod_p(q: Dict[Monomial, int], p: int) -> Dict[Monomial, int]:
    square: Dict[Monomial, int] = {}
    for m1, c1 in q.items():
        for m2, c2 in q.items():
            key = (m1[0] + m2[0], m1[1] + m2[1], m1[2] + m2[2])
            square[key] = (square.get(key, 0) + c1 * c2) % p
    return {m: c for m, c in square.items() if c}


def _leading(terms: Dict[Monomial, int], degree: int) -> Optional[Monomial]:
    for m in monomials(degree):
        if m in terms:
            return m
    return None


def conic_square_root(form: TernaryForm, p: int) -> Optional[Tuple[TernaryForm, int]]:
    """
    Decide whether a quartic is c * q^2 over F_p.

    Returns (q, c) with q monic at its leading monomial (canonical order)
    and coefficients in [0, p), or None. Degenerate conics are allowed.

    Raises:
        FormError: for p = 2 or non-quartic input
    """
    if p == 2:
        raise FormError("Conic square roots are not supported in characteristic 2")
    if form.degree != 4:
        raise FormError(f"Expected a quartic, got degree {form.degree}")

    target = _residues(form, p)
    leading = _leading(target, 4)
    if leading is None:
        return None
    if any(e % 2 for e in leading):
        return None

    scalar = target[leading]
    inverse_scalar = pow(scalar, -1, p)
    normalized = {m: c * inverse_scalar % p for m, c in target.items()}

    root_leading = tuple(e // 2 for e in leading)
    root = {root_leading: 1}
    inverse_two = pow(2, -1, p)

    # Peel one monomial of q per step, highest first
    for _ in range(len(monomials(2))):
        square = _square_mod_p(root, p)
        remainder = {
            m: (normalized.get(m, 0) - square.get(m, 0)) % p
            for m in set(normalized) | set(square)
        }
        remainder = {m: c for m, c in remainder.items() if c}
        if not remainder:
            q = TernaryForm(2, root)
            logger.debug(f"Quartic is {scalar} * ({q})^2 mod {p}")
            return q, scalar
        top = _leading(remainder, 4)
        quotient = tuple(a - b for a, b in zip(top, root_leading))
        if min(quotient) < 0 or quotient in root:
            return None
        if monomials(2).index(quotient) <= monomials(2).index(root_leading):
            return None
        root[quotient] = remainder[top] * inverse_two % p

    return None


def binary_has_distinct_roots(form: BinaryForm, p: int) -> bool:
    """
    True when the reduction of a binary form mod p has deg f distinct roots
    on the projective line over the algebraic closure of F_p.
    """
    residues = [reduce_mod_p(c, p).residue for c in form.coefficients]
    if not any(residues):
        return False

    # f = z^k * h with h(1, 0) != 0; (1:0) is a root of multiplicity k
    multiplicity_at_z_zero = next(i for i, r in enumerate(residues) if r)
    if multiplicity_at_z_zero > 1:
        return False

    # Remaining roots are those of f(x, 1); leading zeros are stripped
    x = Symbol('x')
    affine = Poly(residues, x, modulus=p)
    return affine.is_sqf
