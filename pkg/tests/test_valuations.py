"""p-adic and weighted valuations."""

from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from src.forms.arithmetic import PrimeFieldElement
from src.valuations.padic import INFINITY, is_infinite, min_valuation, val_p
from src.valuations.weighted import (ValuationError, WeightedValuationPoint, min_slope,
                                     minimal_residues, normalized_valuation, ratio_residue,
                                     ratio_valuation, weight_zero_residue)

IOTA_WEIGHTS = (6, 9, 12, 15, 18, 21)
DO_WEIGHTS = (3, 6, 9, 9, 12, 12, 15, 15, 18, 18, 21, 21, 27)

nonzero = st.integers(min_value=-10 ** 6, max_value=10 ** 6).filter(bool)


class TestPadic:

    def test_rational(self):
        assert val_p(Fraction(98, 5), 7) == 2
        assert val_p(Fraction(5, 49), 7) == -2

    def test_zero(self):
        assert is_infinite(val_p(0, 11))

    def test_min(self):
        assert min_valuation([INFINITY, Fraction(3)]) == 3
        assert is_infinite(min_valuation([]))

    @given(nonzero, nonzero)
    def test_multiplicative(self, a, b):
        assert val_p(a * b, 5) == val_p(a, 5) + val_p(b, 5)


class TestNormalizedValuation:

    def test_discriminant_slope(self):
        values = [1] * 12 + [13 ** 6]
        point = WeightedValuationPoint(tuple(values), DO_WEIGHTS, 13)
        assert normalized_valuation(point, 13 ** 6, 27) == Fraction(6, 27)

    def test_iota_slope(self):
        point = WeightedValuationPoint((13, 13 ** 2, 13 ** 2, 13 ** 3, 13 ** 3, 13 ** 3), IOTA_WEIGHTS, 13)
        assert min_slope(point) == Fraction(1, 7)
        assert normalized_valuation(point, 13 ** 6, 42) == 0

    def test_zero_y(self):
        point = WeightedValuationPoint((1, 0), (1, 2), 5)
        assert is_infinite(normalized_valuation(point, 0, 3))

    def test_zero_point(self):
        point = WeightedValuationPoint((0, 0), (1, 2), 5)
        with pytest.raises(ValuationError):
            min_slope(point)
        with pytest.raises(ValuationError):
            normalized_valuation(point, 0, 3)

    def test_weight_mismatch(self):
        with pytest.raises(ValuationError):
            WeightedValuationPoint((1, 2), (1,), 5)

    @given(st.lists(nonzero, min_size=3, max_size=3), nonzero, st.integers(min_value=-3, max_value=3),
           st.sampled_from([2, 3, 5]))
    def test_rescaling_invariance(self, values, y, k, unit):
        weights = (2, 3, 4)
        p = 7
        scale = Fraction(p) ** k * unit
        point = WeightedValuationPoint(tuple(values), weights, p)
        moved = WeightedValuationPoint(tuple(v * scale ** w for v, w in zip(values, weights)), weights, p)
        assert normalized_valuation(point, y, 6) == normalized_valuation(moved, y * scale ** 6, 6)

    @given(st.lists(nonzero, min_size=3, max_size=3), nonzero)
    def test_non_negative(self, values, y):
        point = WeightedValuationPoint(tuple(values), (1, 2, 3), 3)
        assert normalized_valuation(point, y, 4) >= 0


class TestResidues:

    def test_minimal_residues(self):
        point = WeightedValuationPoint((5 * 2, 25 * 3), (1, 2), 5)
        assert minimal_residues(point) == (PrimeFieldElement(5, 2), PrimeFieldElement(5, 3))

    def test_minimal_residues_need_extension(self):
        point = WeightedValuationPoint((5, 1), (2, 4), 5)
        assert minimal_residues(point) == (PrimeFieldElement(5, 0), PrimeFieldElement(5, 1))
        point = WeightedValuationPoint((5, 25), (2, 3), 5)
        assert minimal_residues(point) is None

    def test_weight_zero_residue(self):
        point = WeightedValuationPoint((3, 2), (3, 6), 7)
        assert weight_zero_residue(point, 1, 0) == PrimeFieldElement(7, 2) / 9

    def test_ratio_residue_needs_unit(self):
        point = WeightedValuationPoint((7, 2), (3, 6), 7)
        with pytest.raises(ValuationError):
            ratio_residue(point, 1, 0)

    def test_ratio_not_integral(self):
        point = WeightedValuationPoint((3, Fraction(1, 7)), (3, 6), 7)
        with pytest.raises(ValuationError):
            weight_zero_residue(point, 1, 0)

    def test_ratio_valuation(self):
        point = WeightedValuationPoint((7, 7 ** 3), (3, 6), 7)
        assert ratio_valuation(point, 1, 0) == 1

    def test_weight_divisibility(self):
        point = WeightedValuationPoint((1, 1), (2, 3), 7)
        with pytest.raises(ValuationError):
            weight_zero_residue(point, 1, 0)
