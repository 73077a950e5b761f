#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
Input Validation Utilities for Quartic Reduction
Parsing and validation of curve inputs, primes and file paths.
"""

import os
import re
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Any, Dict, List, Mapping, Optional, Sequence, Union
import logging

import psutil
import sympy
from sympy import Poly, Symbol
from sympy.polys.polyerrors import BasePolynomialError, CoercionFailed
from sympy.parsing.sympy_parser import (convert_xor, parse_expr,
                                        standard_transformations)
from tokenize import TokenError

from ..core import constants as const
from ..forms.ternary import TernaryForm


logger = logging.getLogger(__name__)

_SYMBOLS = tuple(Symbol(name) for name in const.TERNARY_VARIABLES)
_LOCALS = {alias: _SYMBOLS[index] for alias, index in const.VARIABLE_ALIASES.items()}
_ALLOWED_CHARACTERS = re.compile(r"[0-9a-z+\-*/^() \t]")
_IDENTIFIER = re.compile(r"[a-z][a-z0-9]*")


class ValidationError(Exception):
    """Custom exception for validation errors, optionally carrying a character position."""

    def __init__(self, message: str, position: Optional[int] = None):
        super().__init__(message if position is None else f"{message} (at position {position})")
        self.position = position


@dataclass(frozen=True)
class CurveInput:
    """A parsed quartic with an optional label."""

    form: TernaryForm
    label: Optional[str] = None


class CurveValidator:
    """Parse quartics given as expressions in x, y, z or as 15 coefficients."""

    @staticmethod
    def _scan(text: str) -> None:
        """Reject unknown characters, unknown identifiers and unbalanced parentheses."""
        open_positions: List[int] = []
        for position, char in enumerate(text):
            if not _ALLOWED_CHARACTERS.fullmatch(char):
                raise ValidationError(f"Unexpected character {char!r}", position)
            if char == '(':
                open_positions.append(position)
            elif char == ')':
                if not open_positions:
                    raise ValidationError("Unmatched closing parenthesis", position)
                open_positions.pop()
        if open_positions:
            raise ValidationError("Unclosed parenthesis", open_positions[-1])

        for match in _IDENTIFIER.finditer(text):
            if match.group() not in const.VARIABLE_ALIASES:
                raise ValidationError(f"Unknown variable {match.group()!r}", match.start())

    @classmethod
    def parse_expression(cls, text: str) -> TernaryForm:
        """
        Parse a homogeneous quartic such as "x^3*y + y^3*z + z^3*x".

        Raises:
            ValidationError: If the text does not describe a ternary quartic form
        """
        if not text or not text.strip():
            raise ValidationError("Empty curve expression")
        cls._scan(text)

        try:
            expression = parse_expr(
                text,
                local_dict=dict(_LOCALS),
                transformations=standard_transformations + (convert_xor,),
            )
            polynomial = Poly(sympy.expand(expression), *_SYMBOLS, domain=sympy.QQ)
        except (SyntaxError, TokenError) as e:
            offset = getattr(e, 'offset', None)
            raise ValidationError(f"Cannot parse expression: {e}", offset - 1 if offset else None)
        except (BasePolynomialError, CoercionFailed, TypeError, ValueError) as e:
            raise ValidationError(f"Not a polynomial with rational coefficients: {e}")

        if polynomial.is_zero:
            raise ValidationError("The zero polynomial is not a curve")
        if not polynomial.is_homogeneous:
            raise ValidationError("Curve expression is not homogeneous")
        if polynomial.total_degree() != 4:
            raise ValidationError(f"Expected a quartic, got degree {polynomial.total_degree()}")

        terms = {
            monomial: Fraction(int(coeff.p), int(coeff.q))
            for monomial, coeff in polynomial.as_dict().items()
        }
        return TernaryForm(4, terms)

    @staticmethod
    def parse_coefficient(value: Any, index: int) -> Fraction:
        if isinstance(value, bool):
            raise ValidationError(f"Coefficient {index} must be a rational number, got {value!r}")
        if isinstance(value, int):
            return Fraction(value)
        if isinstance(value, str):
            try:
                return Fraction(value.strip())
            except (ValueError, ZeroDivisionError):
                pass
        raise ValidationError(f"Coefficient {index} must be an integer or 'num/den', got {value!r}")

    @classmethod
    def parse_coefficients(cls, values: Sequence[Any]) -> TernaryForm:
        """
        Parse the 15 coefficients of a quartic in graded-lex order
        x1^4, x1^3 x2, x1^3 x3, x1^2 x2^2, ..., x3^4.

        Raises:
            ValidationError: On wrong length or non-rational entries
        """
        if len(values) != const.QUARTIC_SLOTS:
            raise ValidationError(
                f"Expected {const.QUARTIC_SLOTS} coefficients, got {len(values)}"
            )
        coefficients = [cls.parse_coefficient(v, i) for i, v in enumerate(values)]
        if not any(coefficients):
            raise ValidationError("The zero polynomial is not a curve")
        return TernaryForm.from_coefficients(4, coefficients)

    @classmethod
    def parse_curve(cls, curve: Union[str, Sequence[Any]]) -> TernaryForm:
        if isinstance(curve, str):
            return cls.parse_expression(curve)
        if isinstance(curve, (list, tuple)):
            return cls.parse_coefficients(curve)
        raise ValidationError(f"Curve must be an expression or a coefficient list, got {type(curve).__name__}")

    @classmethod
    def parse_input(cls, record: Mapping[str, Any]) -> CurveInput:
        """Parse a batch record {"curve": ..., "label": ...}."""
        if 'curve' not in record:
            raise ValidationError("Record has no 'curve' field")
        label = record.get('label')
        if label is not None and not isinstance(label, str):
            raise ValidationError("Label must be a string")
        return CurveInput(cls.parse_curve(record['curve']), label)


class PrimeValidator:
    """Validation for prime lists."""

    @staticmethod
    def validate_prime(value: Any) -> int:
        if isinstance(value, bool) or not isinstance(value, int):
            try:
                value = int(str(value).strip())
            except ValueError:
                raise ValidationError(f"Prime must be an integer, got {value!r}")
        if not sympy.isprime(value):
            raise ValidationError(f"{value} is not a prime")
        return value

    @classmethod
    def validate_primes(cls, values: Sequence[Any]) -> List[int]:
        """
        Raises:
            ValidationError: If the list is empty or an entry is not prime
        """
        if not values:
            raise ValidationError("At least one prime is required")
        primes = [cls.validate_prime(v) for v in values]
        for p in primes:
            if p in const.HSOP_UNSUPPORTED_PRIMES:
                logger.warning(f"p = {p} has no HSOP catalog; the result will be Unsupported")
        return primes

    @classmethod
    def parse_prime_list(cls, text: str) -> List[int]:
        """Parse "11,13" or "11 13"."""
        return cls.validate_primes([part for part in re.split(r"[,\s]+", text.strip()) if part])


class FileValidator:
    """Validation utilities for file paths."""

    @staticmethod
    def validate_input_path(input_path: str) -> Path:
        """
        Raises:
            ValidationError: If the file is missing or unreadable
        """
        path = Path(input_path)
        if not path.exists():
            raise ValidationError(f"Input file not found: {input_path}")
        if not path.is_file():
            raise ValidationError(f"Input path is not a file: {input_path}")
        if not os.access(path, os.R_OK):
            raise ValidationError(f"Cannot read input file: {input_path}")
        return path

    @staticmethod
    def validate_config_path(config_path: str) -> Path:
        path = Path(config_path)

        if path.exists() and not path.is_file():
            raise ValidationError(f"Config path is not a file: {config_path}")

        if path.exists() and not os.access(path, os.R_OK):
            raise ValidationError(f"Cannot read config file: {config_path}")

        return path


def validate_processing_environment() -> Dict[str, Any]:
    """
    Validate the computation environment.

    Returns:
        Dictionary with environment validation results
    """
    results = {
        'sympy_version': sympy.__version__,
        'memory_available_gb': 0,
        'physical_cores': psutil.cpu_count(logical=False) or 1,
        'warnings': []
    }

    memory_gb = psutil.virtual_memory().available / (1024 ** 3)
    results['memory_available_gb'] = memory_gb
    if memory_gb < 1:
        results['warnings'].append("Low available memory - calibration may be slow")

    return results
