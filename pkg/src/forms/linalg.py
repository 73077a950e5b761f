#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
Exact linear algebra over Q on top of sympy's DomainMatrix.

Matrices enter and leave as nested sequences of Fractions; sympy domain
elements never escape this module.
"""

import logging
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from sympy.polys.domains import QQ
from sympy.polys.matrices import DomainMatrix


logger = logging.getLogger(__name__)

Rows = Sequence[Sequence[Fraction]]


class SingularMatrixError(ArithmeticError):
    """Raised when inverting a matrix with zero determinant."""
    pass


def to_domain(value) -> 'QQ.dtype':
    value = Fraction(value)
    return QQ(value.numerator, value.denominator)


def from_domain(element) -> Fraction:
    rational = QQ.to_sympy(element)
    return Fraction(int(rational.p), int(rational.q))


def domain_matrix(rows: Rows) -> DomainMatrix:
    n_rows = len(rows)
    n_cols = len(rows[0]) if n_rows else 0
    return DomainMatrix([[to_domain(v) for v in row] for row in rows], (n_rows, n_cols), QQ)


def determinant(rows: Rows) -> Fraction:
    """Exact determinant of a square rational matrix."""
    if not rows:
        return Fraction(1)
    return from_domain(domain_matrix(rows).det())


def inverse(rows: Rows) -> List[List[Fraction]]:
    """Exact inverse of a square rational matrix."""
    if determinant(rows) == 0:
        raise SingularMatrixError("Matrix is singular")
    inv = domain_matrix(rows).inv()
    return [[from_domain(v) for v in row] for row in inv.to_list()]


def rank(rows: Rows) -> int:
    if not rows:
        return 0
    return domain_matrix(rows).rank()


def solve_consistent(rows: Rows, rhs: Sequence[Fraction]) -> Optional[List[Fraction]]:
    """
    Solve rows * x = rhs exactly.

    Free variables are set to zero. Returns None when the system is
    inconsistent.
    """
    n_cols = len(rows[0]) if rows else 0
    augmented = [list(row) + [value] for row, value in zip(rows, rhs)]
    if not augmented:
        return [Fraction(0)] * n_cols

    reduced, pivots = domain_matrix(augmented).rref()
    if n_cols in pivots:
        return None

    table = reduced.to_list()
    solution = [Fraction(0)] * n_cols
    for row_index, column in enumerate(pivots):
        solution[column] = from_domain(table[row_index][n_cols])
    return solution


class LinearMap:
    """
    Square matrix with rational entries acting on column vectors.

    Used for the GL2 / GL3 actions on forms; immutable.
    """

    __slots__ = ('rows',)

    def __init__(self, rows: Rows):
        size = len(rows)
        if any(len(row) != size for row in rows):
            raise ValueError(f"LinearMap needs a square matrix, got {rows!r}")
        self.rows: Tuple[Tuple[Fraction, ...], ...] = tuple(
            tuple(Fraction(v) for v in row) for row in rows
        )

    @classmethod
    def identity(cls, size: int) -> 'LinearMap':
        return cls([[1 if i == j else 0 for j in range(size)] for i in range(size)])

    @classmethod
    def diagonal(cls, *entries) -> 'LinearMap':
        size = len(entries)
        return cls([[entries[i] if i == j else 0 for j in range(size)] for i in range(size)])

    @property
    def size(self) -> int:
        return len(self.rows)

    def det(self) -> Fraction:
        return determinant(self.rows)

    def is_invertible(self) -> bool:
        return self.det() != 0

    def inverse(self) -> 'LinearMap':
        return LinearMap(inverse(self.rows))

    def transpose(self) -> 'LinearMap':
        return LinearMap([list(column) for column in zip(*self.rows)])

    def apply(self, vector: Sequence[Fraction]) -> Tuple[Fraction, ...]:
        return tuple(sum((a * Fraction(b) for a, b in zip(row, vector)), Fraction(0)) for row in self.rows)

    def __matmul__(self, other: 'LinearMap') -> 'LinearMap':
        columns = list(zip(*other.rows))
        return LinearMap([
            [sum((a * b for a, b in zip(row, column)), Fraction(0)) for column in columns]
            for row in self.rows
        ])

    def __eq__(self, other):
        if not isinstance(other, LinearMap):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        body = ', '.join('[' + ', '.join(str(v) for v in row) + ']' for row in self.rows)
        return f"LinearMap([{body}])"
