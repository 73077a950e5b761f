"""Parsing of curve expressions, coefficient arrays, primes and paths."""

from fractions import Fraction

import pytest

from src.forms.ternary import REFERENCE_CONIC, TernaryForm
from src.utils.validation import (CurveValidator, FileValidator, PrimeValidator, ValidationError,
                                  validate_processing_environment)


class TestExpressions:

    def test_klein(self, klein_quartic):
        assert klein_quartic == TernaryForm(4, {(3, 1, 0): 1, (0, 3, 1): 1, (1, 0, 3): 1})

    def test_rational_coefficients(self):
        form = CurveValidator.parse_expression("x^4/3 + y^4 - 5/2*z^4")
        assert form.coefficient((4, 0, 0)) == Fraction(1, 3)
        assert form.coefficient((0, 0, 4)) == Fraction(-5, 2)

    def test_expands_products(self, reference_square):
        assert CurveValidator.parse_expression("(y^2 - 4*x*z)^2") == reference_square

    def test_indexed_aliases(self):
        assert CurveValidator.parse_expression("x1^4 + x2^4 + x3^4") == \
            CurveValidator.parse_expression("x^4 + y^4 + z^4")

    def test_unclosed_parenthesis(self):
        with pytest.raises(ValidationError) as info:
            CurveValidator.parse_expression("(x^4 + y^4 + z^4")
        assert info.value.position == 0

    def test_unmatched_closing(self):
        with pytest.raises(ValidationError) as info:
            CurveValidator.parse_expression("x^4 + y^4) + z^4")
        assert info.value.position == 9

    def test_unknown_variable(self):
        with pytest.raises(ValidationError) as info:
            CurveValidator.parse_expression("x^4 + w^4")
        assert info.value.position == 6

    @pytest.mark.parametrize('text', [
        "x^4 + y^3",
        "x^3 + y^3 + z^3",
        "0*x^4",
        "",
        "x^4 + + ",
    ])
    def test_rejected(self, text):
        with pytest.raises(ValidationError):
            CurveValidator.parse_expression(text)


class TestCoefficients:

    def test_reference_square(self, reference_square):
        values = [0, 0, 0, 0, 0, 16, 0, -8, 0, 0, 1, 0, 0, 0, 0]
        assert CurveValidator.parse_coefficients(values) == reference_square
        assert reference_square == REFERENCE_CONIC * REFERENCE_CONIC

    def test_string_rationals(self):
        form = CurveValidator.parse_coefficients(["1/2"] + [0] * 13 + ["3"])
        assert form.coefficient((4, 0, 0)) == Fraction(1, 2)
        assert form.coefficient((0, 0, 4)) == 3

    @pytest.mark.parametrize('values', [
        [1] * 14,
        [0] * 15,
        [True] + [0] * 14,
        [1.5] + [0] * 14,
        ["a"] + [0] * 14,
    ])
    def test_rejected(self, values):
        with pytest.raises(ValidationError):
            CurveValidator.parse_coefficients(values)

    def test_record(self):
        parsed = CurveValidator.parse_input({'curve': "x^4 + y^4 + z^4", 'label': 'fermat'})
        assert parsed.label == 'fermat'
        with pytest.raises(ValidationError):
            CurveValidator.parse_input({'label': 'missing'})
        with pytest.raises(ValidationError):
            CurveValidator.parse_input({'curve': "x^4 + y^4 + z^4", 'label': 3})
        with pytest.raises(ValidationError):
            CurveValidator.parse_curve(42)


class TestPrimes:

    def test_list(self):
        assert PrimeValidator.parse_prime_list("11,13 101") == [11, 13, 101]

    @pytest.mark.parametrize('value', [1, 15, "abc", True, -7])
    def test_rejected(self, value):
        with pytest.raises(ValidationError):
            PrimeValidator.validate_prime(value)

    def test_empty(self):
        with pytest.raises(ValidationError):
            PrimeValidator.validate_primes([])

    def test_small_primes_accepted(self):
        assert PrimeValidator.validate_primes([2, 3]) == [2, 3]


class TestFiles:

    def test_missing(self, tmp_path):
        with pytest.raises(ValidationError):
            FileValidator.validate_input_path(str(tmp_path / 'absent.ndjson'))

    def test_directory(self, tmp_path):
        with pytest.raises(ValidationError):
            FileValidator.validate_input_path(str(tmp_path))
        with pytest.raises(ValidationError):
            FileValidator.validate_config_path(str(tmp_path))

    def test_config_may_be_absent(self, tmp_path):
        path = tmp_path / 'settings.yaml'
        assert FileValidator.validate_config_path(str(path)) == path


def test_environment_report():
    report = validate_processing_environment()
    assert report['physical_cores'] >= 1
    assert isinstance(report['warnings'], list)
