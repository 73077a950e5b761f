#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
The SL2-equivariant bridge between ternary and binary forms.

b_{2d}(F) = F(x^2, 2xz, z^2) sends forms of degree d to binary forms of
degree 2d, and h: GL2 -> GL3 satisfies b(F.h(T)) = b(F).T. The image of h
on SL2 stabilizes the conic Q0 = x2^2 - 4 x1 x3.
"""

from fractions import Fraction

from ..forms.binary import BinaryForm
from ..forms.linalg import LinearMap
from ..forms.ternary import FormError, TernaryForm, substitute_linear


def b_map(form: TernaryForm) -> BinaryForm:
    """F(x^2, 2xz, z^2) as a binary form of degree 2 deg F."""
    degree = form.degree
    # x1 -> x^2, x2 -> 2 x z, x3 -> z^2, over the quadratic monomials (x^2, xz, z^2)
    images = [(1, 0, 0), (0, 2, 0), (0, 0, 1)]
    quadratic = substitute_linear(form.terms, degree, images, 3)
    coefficients = [Fraction(0)] * (2 * degree + 1)
    for (_, xz, zz), coeff in quadratic.items():
        index = xz + 2 * zz
        coefficients[index] = coefficients[index] + coeff
    return BinaryForm(2 * degree, coefficients)


def b8(form: TernaryForm) -> BinaryForm:
    """The octic attached to a ternary quartic."""
    if form.degree != 4:
        raise FormError(f"b8 needs a quartic, got degree {form.degree}")
    return b_map(form)


def h_embed(transform: LinearMap) -> LinearMap:
    """
    [[a,b],[c,d]] -> [[a^2, ab, b^2], [2ac, ad+bc, 2bd], [c^2, cd, d^2]].

    This is the matrix for the column action F.T(x) = F(T x); written for
    row vectors it reads [[a^2, 2ab, b^2], [ac, ad+bc, bd], [c^2, 2cd, d^2]]
    (transpose of the above with b and c exchanged). det h(T) = det(T)^3.
    """
    if transform.size != 2:
        raise FormError(f"h_embed needs a 2x2 matrix, got size {transform.size}")
    (a, b), (c, d) = transform.rows
    return LinearMap([
        [a * a, a * b, b * b],
        [2 * a * c, a * d + b * c, 2 * b * d],
        [c * c, c * d, d * d],
    ])


def h_embed_row_convention(transform: LinearMap) -> LinearMap:
    """The same embedding written for row vectors: h(T^t)^t."""
    return h_embed(transform.transpose()).transpose()
