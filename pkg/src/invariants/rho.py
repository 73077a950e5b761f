#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
The contravariant rho of degree 4 and order 2.
"""

from ..forms.ternary import FormError, TernaryForm
from .calibration import recipes
from .covariants import CovariantChain


def rho(form: TernaryForm) -> TernaryForm:
    """
    Dual conic rho(F) in v1, v2, v3, normalized so that
    rho(Q0^2) = -2^12 5 7 / 9 (v2^2 - v1 v3).

    rho(F.T) = det(T)^6 rho(F)(T^-t v).
    """
    if form.degree != 4:
        raise FormError(f"rho needs a quartic, got degree {form.degree}")
    return CovariantChain(form).rho.scale(recipes().rho_scale)
