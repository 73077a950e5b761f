#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
Covariants and contravariants of ternary quartics, and the raw invariants
built from them.

Contravariants are obtained from invariants of binary forms: the value of
a contravariant at a dual point u is an invariant of the restriction of F to
the line u = 0. Restricting to lines through explicit point pairs and
interpolating on a unisolvent grid gives the contravariant exactly.

All routines are generic in the coefficient ring (Fractions or truncated
series).
"""

import logging
from fractions import Fraction
from functools import lru_cache
from itertools import permutations
from math import comb
from typing import Any, Callable, Dict, List, Sequence, Tuple

from ..forms.binary import BinaryForm
from ..forms.linalg import inverse
from ..forms.ternary import FormError, TernaryForm, monomials


logger = logging.getLogger(__name__)

# Raw invariant names grouped by degree.
RAW_INVARIANTS_BY_DEGREE: Dict[int, Tuple[str, ...]] = {
    3: ('r3',),
    6: ('r6a', 'r6b'),
    9: ('r9a', 'r9b', 'r9c'),
    12: ('r12a', 'r12b', 'r12c', 'r12d', 'r12e'),
    15: ('r15a', 'r15b', 'r15c', 'r15d', 'r15e'),
    18: ('r18a', 'r18b', 'r18c', 'r18d', 'r18e', 'r18f', 'r18g'),
    21: ('r21a', 'r21b', 'r21c', 'r21d', 'r21e'),
}

# The contraction carrying each Dixmier-Ohno invariant: <sigma, F>, <psi, H>,
# <tau, rho>, <xi, rho>, det rho, <tau, eta>, det tau, det xi,
# <adj rho, adj tau>, <adj rho, adj xi>, det eta and (tau, adj rho, adj rho).
# Calibration scales it and adds only the terms the anchor identities force.
PUBLISHED_CONTRACTIONS: Dict[str, str] = {
    'I3': 'r3',
    'I6': 'r6a',
    'I9': 'r9a',
    'J9': 'r9b',
    'I12': 'r12a',
    'J12': 'r12b',
    'I15': 'r15a',
    'J15': 'r15b',
    'I18': 'r18a',
    'J18': 'r18b',
    'I21': 'r21a',
    'J21': 'r21b',
}


# ===== Binary quartic invariants =====

def _binomial_normalized(f: BinaryForm) -> List[Any]:
    return [c / comb(f.degree, i) for i, c in enumerate(f.coefficients)]


def quartic_invariant_i(f: BinaryForm):
    """i = a0 a4 - 4 a1 a3 + 3 a2^2 on binomially normalized coefficients."""
    a0, a1, a2, a3, a4 = _binomial_normalized(f)
    return a0 * a4 - a1 * a3 * 4 + a2 * a2 * 3


def quartic_invariant_j(f: BinaryForm):
    """Catalecticant determinant of a binary quartic."""
    a0, a1, a2, a3, a4 = _binomial_normalized(f)
    return (a0 * (a2 * a4 - a3 * a3)
            - a1 * (a1 * a4 - a3 * a2)
            + a2 * (a1 * a3 - a2 * a2))


# ===== Interpolation of contravariants =====

def _grid(order: int) -> List[Tuple[int, int]]:
    return [(a, b) for a in range(order + 1) for b in range(order + 1 - a)]


@lru_cache(maxsize=None)
def _interpolation_inverse(order: int) -> Tuple[Tuple[Fraction, ...], ...]:
    """Inverse of the matrix [a^j b^k] on the grid a + b <= order."""
    basis = monomials(order)
    grid = _grid(order)
    matrix = [[Fraction(a) ** m[1] * Fraction(b) ** m[2] for m in basis] for (a, b) in grid]
    return tuple(tuple(row) for row in inverse(matrix))


def contravariant_from_lines(form: TernaryForm, binary_invariant: Callable[[BinaryForm], Any],
                             order: int) -> TernaryForm:
    """
    Dual form C with C(1, a, b) = binary_invariant(form restricted to that line).

    The line with dual coordinates (1, a, b) is spanned by p = (a, -1, 0) and
    q = (b, 0, -1), whose cross product is exactly (1, a, b).
    """
    grid = _grid(order)
    values = []
    for a, b in grid:
        restriction = form.restrict_to_line((a, -1, 0), (b, 0, -1))
        values.append(binary_invariant(restriction))

    solver = _interpolation_inverse(order)
    coefficients = []
    for row in solver:
        total = Fraction(0)
        for weight, value in zip(row, values):
            if weight:
                total = total + value * weight
        coefficients.append(total)
    return TernaryForm.from_coefficients(order, coefficients, dual=True)


# ===== Quadrics =====

class SymmetricMatrix3:
    """Symmetric 3x3 matrix of a (dual) conic: A_ii = c_ii, A_ij = c_ij / 2."""

    __slots__ = ('entries', 'dual')

    def __init__(self, entries: Sequence[Sequence[Any]], dual: bool = False):
        self.entries = [list(row) for row in entries]
        self.dual = dual

    @classmethod
    def from_form(cls, form: TernaryForm) -> 'SymmetricMatrix3':
        if form.degree != 2:
            raise FormError(f"Expected a conic, got degree {form.degree}")
        entries = [[Fraction(0)] * 3 for _ in range(3)]
        for m, c in form.terms.items():
            indices = [i for i in range(3) for _ in range(m[i])]
            i, j = indices
            if i == j:
                entries[i][i] = c
            else:
                entries[i][j] = c / 2
                entries[j][i] = c / 2
        return cls(entries, dual=form.dual)

    def to_form(self) -> TernaryForm:
        terms = {}
        for i in range(3):
            for j in range(i, 3):
                exps = [0, 0, 0]
                exps[i] += 1
                exps[j] += 1
                value = self.entries[i][j]
                terms[tuple(exps)] = value if i == j else value * 2
        return TernaryForm(2, terms, dual=self.dual)

    def adjugate(self) -> 'SymmetricMatrix3':
        m = self.entries
        cofactors = [[Fraction(0)] * 3 for _ in range(3)]
        for i in range(3):
            for j in range(3):
                r = [k for k in range(3) if k != i]
                c = [k for k in range(3) if k != j]
                minor = m[r[0]][c[0]] * m[r[1]][c[1]] - m[r[0]][c[1]] * m[r[1]][c[0]]
                cofactors[j][i] = minor if (i + j) % 2 == 0 else -minor
        return SymmetricMatrix3(cofactors, dual=not self.dual)

    def det(self):
        return mixed_determinant(self, self, self) / 6


def _det_columns(c1, c2, c3):
    return (c1[0] * (c2[1] * c3[2] - c2[2] * c3[1])
            - c2[0] * (c1[1] * c3[2] - c1[2] * c3[1])
            + c3[0] * (c1[1] * c2[2] - c1[2] * c2[1]))


def mixed_determinant(a: SymmetricMatrix3, b: SymmetricMatrix3, c: SymmetricMatrix3):
    """Polarized determinant: sum over permutations of det with columns from a, b, c."""
    columns = []
    for matrix in (a, b, c):
        columns.append([[matrix.entries[row][col] for row in range(3)] for col in range(3)])
    ca, cb, cc = columns
    total = Fraction(0)
    for first, second, third in permutations((ca, cb, cc)):
        total = total + _det_columns(first[0], second[1], third[2])
    return total


def hessian(form: TernaryForm) -> TernaryForm:
    """Determinant of the matrix of second partial derivatives."""
    second = [[form.derivative(i).derivative(j) for j in range(3)] for i in range(3)]
    (a, b, c), (d, e, f), (g, h, k) = second
    return a * (e * k - f * h) - b * (d * k - f * g) + c * (d * h - e * g)


# ===== Covariant chain =====

class CovariantChain:
    """
    The covariants and contravariants of one quartic, computed lazily.

    sigma, psi: contravariants of degree 2 / 3 and order 4 / 6.
    rho: contravariant conic of degree 4; tau, xi: covariant conics of
    degree 5; eta: contravariant conic of degree 7.
    """

    def __init__(self, form: TernaryForm):
        if form.degree != 4:
            raise FormError(f"Expected a quartic, got degree {form.degree}")
        self.form = form
        self._cache: Dict[str, Any] = {}

    def _memo(self, key: str, builder: Callable[[], Any]):
        if key not in self._cache:
            self._cache[key] = builder()
        return self._cache[key]

    @property
    def hessian(self) -> TernaryForm:
        return self._memo('hessian', lambda: hessian(self.form))

    @property
    def sigma(self) -> TernaryForm:
        return self._memo('sigma', lambda: contravariant_from_lines(self.form, quartic_invariant_i, 4))

    @property
    def psi(self) -> TernaryForm:
        return self._memo('psi', lambda: contravariant_from_lines(self.form, quartic_invariant_j, 6).scale(6))

    @property
    def rho(self) -> TernaryForm:
        return self._memo('rho', lambda: self.form.apply_operator(self.psi))

    @property
    def tau(self) -> TernaryForm:
        return self._memo('tau', lambda: self.rho.apply_operator(self.form))

    @property
    def xi(self) -> TernaryForm:
        return self._memo('xi', lambda: self.sigma.apply_operator(self.hessian))

    @property
    def eta(self) -> TernaryForm:
        return self._memo('eta', lambda: self.xi.apply_operator(self.sigma))

    def quadric(self, name: str) -> SymmetricMatrix3:
        return self._memo(f"matrix_{name}", lambda: SymmetricMatrix3.from_form(getattr(self, name)))

    def adjugate(self, name: str) -> SymmetricMatrix3:
        return self._memo(f"adjugate_{name}", lambda: self.quadric(name).adjugate())

    def adjugate_form(self, name: str) -> TernaryForm:
        return self._memo(f"adjugate_form_{name}", lambda: self.adjugate(name).to_form())


def _pair(covariant: TernaryForm, contravariant: TernaryForm):
    return contravariant.contract(covariant)


def raw_invariants_of_degree(chain: CovariantChain, degree: int) -> Dict[str, Any]:
    """Raw invariants of one degree from an existing chain."""
    F, H = chain.form, chain.hessian
    q = chain.quadric
    adj = chain.adjugate
    adj_form = chain.adjugate_form
    mixed = mixed_determinant

    if degree == 3:
        return {'r3': chain.sigma.contract(F)}
    if degree == 6:
        sigma_squared = chain.sigma * chain.sigma
        return {
            'r6a': chain.psi.contract(H),
            'r6b': sigma_squared.contract(F * F),
        }
    if degree == 9:
        return {
            'r9a': _pair(chain.tau, chain.rho),
            'r9b': _pair(chain.xi, chain.rho),
            'r9c': (chain.psi * chain.sigma).contract(F * H),
        }
    if degree == 12:
        sigma_squared = chain.sigma * chain.sigma
        return {
            'r12a': q('rho').det(),
            'r12b': _pair(chain.tau, chain.eta),
            'r12c': _pair(chain.xi, chain.eta),
            'r12d': sigma_squared.contract(H * chain.tau),
            'r12e': sigma_squared.contract(H * chain.xi),
        }
    if degree == 15:
        return {
            'r15a': q('tau').det(),
            'r15b': q('xi').det(),
            'r15c': _pair(adj_form('rho'), chain.eta),
            'r15d': mixed(q('tau'), q('tau'), q('xi')),
            'r15e': mixed(q('tau'), q('xi'), q('xi')),
        }
    if degree == 18:
        return {
            'r18a': _pair(adj_form('rho'), adj_form('tau')),
            'r18b': _pair(adj_form('rho'), adj_form('xi')),
            'r18c': _pair(adj_form('eta'), chain.rho),
            'r18d': mixed(q('rho'), q('eta'), q('eta')),
            'r18e': mixed(q('tau'), q('xi'), adj('rho')),
            'r18f': mixed(q('tau'), q('tau'), adj('rho')),
            'r18g': mixed(q('xi'), q('xi'), adj('rho')),
        }
    if degree == 21:
        return {
            'r21a': q('eta').det(),
            'r21b': mixed(q('tau'), adj('rho'), adj('rho')),
            'r21c': mixed(q('xi'), adj('rho'), adj('rho')),
            'r21d': mixed(q('rho'), q('eta'), adj('tau')),
            'r21e': mixed(q('rho'), q('eta'), adj('xi')),
        }
    raise FormError(f"No raw invariants of degree {degree}")


def raw_invariants(form: TernaryForm, max_degree: int = 21) -> Dict[str, Any]:
    """All raw invariants of a quartic up to the given degree."""
    chain = CovariantChain(form)
    values: Dict[str, Any] = {}
    for degree in sorted(RAW_INVARIANTS_BY_DEGREE):
        if degree > max_degree:
            break
        values.update(raw_invariants_of_degree(chain, degree))
    return values
