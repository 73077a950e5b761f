#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
Classical transvectant invariants J2 .. J10 of a binary octic.
"""

from typing import Any, Dict

from ..forms.binary import BinaryForm, binary_transvectant
from ..forms.ternary import FormError

CLASSICAL_LABELS = ('J2', 'J3', 'J4', 'J5', 'J6', 'J7', 'J8', 'J9', 'J10')
CLASSICAL_WEIGHTS = (2, 3, 4, 5, 6, 7, 8, 9, 10)


def _scalar(form: BinaryForm):
    if form.degree != 0:
        raise FormError(f"Expected a constant form, got degree {form.degree}")
    return form.coefficients[0]


def classical_octic_invariants(f: BinaryForm) -> Dict[str, Any]:
    """
    J2 = (f,f)_8, J3 = (f,g)_8, J4 = (k,k)_4, J5 = (m,k)_4, J6 = (k,h)_4,
    J7 = (m,h)_4, J8 = (p,h)_4, J9 = (n,h)_4, J10 = (q,h)_4 with
    g = (f,f)_4, k = (f,f)_6, h = (k,k)_2, m = (f,k)_4, n = (f,h)_4,
    p = (g,k)_4, q = (g,h)_4.
    """
    if f.degree != 8:
        raise FormError(f"Expected a binary octic, got degree {f.degree}")

    g = binary_transvectant(f, f, 4)
    k = binary_transvectant(f, f, 6)
    h = binary_transvectant(k, k, 2)
    m = binary_transvectant(f, k, 4)
    n = binary_transvectant(f, h, 4)
    p = binary_transvectant(g, k, 4)
    q = binary_transvectant(g, h, 4)

    return {
        'J2': _scalar(binary_transvectant(f, f, 8)),
        'J3': _scalar(binary_transvectant(f, g, 8)),
        'J4': _scalar(binary_transvectant(k, k, 4)),
        'J5': _scalar(binary_transvectant(m, k, 4)),
        'J6': _scalar(binary_transvectant(k, h, 4)),
        'J7': _scalar(binary_transvectant(m, h, 4)),
        'J8': _scalar(binary_transvectant(p, h, 4)),
        'J9': _scalar(binary_transvectant(n, h, 4)),
        'J10': _scalar(binary_transvectant(q, h, 4)),
    }
