"""Reduction types of plane quartics and of Picard curves."""

from fractions import Fraction

import pytest

from src.classifier.picard import picard_classify, picard_stable_model
from src.classifier.reduction import (BAD, GOOD_HYPERELLIPTIC, GOOD_QUARTIC, ClassificationError,
                                      SingularCurveError, SpecialFiberPoint, classify,
                                      classify_invariants, classify_many, special_fiber_shioda,
                                      good_quartic_test, hyperelliptic_test, toggle_locus_test)
from src.core import constants as const
from src.forms.binary import BinaryForm
from src.forms.linalg import LinearMap
from src.forms.ternary import REFERENCE_CONIC
from src.invariants.dixmier_ohno import DixmierOhnoVector, dixmier_ohno
from src.invariants.hsop import UnsupportedPrimeError
from src.invariants.iota import iota
from src.invariants.shioda import shioda
from src.utils.validation import CurveValidator

# 11-adic valuations (0, 0, 0, 1, 0, 0, 2, 0, 1, 0, 0, 0, 9) with iota6 a unit
BAD_PATTERN = DixmierOhnoVector(tuple(Fraction(x) for x in (
    1, 1, 1, 11, 1, 1, 121, 1, 11, 1, 1, 1, 11 ** 9,
)))


class TestQuartics:

    def test_cartan(self, cartan_quartic):
        reports = classify_many(cartan_quartic, [11, 13, 101])
        assert [r.reduction for r in reports] == [GOOD_QUARTIC, GOOD_HYPERELLIPTIC, GOOD_QUARTIC]
        at_13 = reports[1]
        assert at_13.v_do_d27 == Fraction(2, 9)
        assert at_13.v_do_i3 == 0
        assert at_13.v_iota_i42 == 0
        assert at_13.toggle_locus.in_locus
        assert at_13.special_fiber is not None

    def test_cartan_good_quartic_valuation(self, cartan_quartic):
        report = classify(cartan_quartic, 11)
        assert report.v_do_d27 == 0
        assert report.special_fiber is None

    def test_double_conic_toggle(self, toggle_quartic):
        report = classify(toggle_quartic, 11)
        assert report.reduction == GOOD_HYPERELLIPTIC
        assert report.toggle is not None
        assert report.toggle.s == 4
        assert report.toggle.s_is_even
        assert report.toggle.reference_conic
        assert report.toggle.distinct_roots

    def test_twisted_double_conic(self, toggle_quartic):
        # diag(1/11, 1, 11) carries this model to the toggle quartic
        form = CurveValidator.parse_expression("(y^2 - 4*x*z)^2 + 214358881*x^4 + z^4")
        report = classify(form, 11)
        assert report.reduction == GOOD_HYPERELLIPTIC
        assert report.do_vector == classify(toggle_quartic, 11).do_vector

    def test_picard_quartic_agrees_with_fast_path(self):
        form = CurveValidator.parse_expression("-y^3*z + x^4 + 11*x^2*z^2 + 1331*z^4")
        assert classify(form, 11).reduction == BAD
        assert picard_classify(11, 0, 1331, 11).reduction == BAD

    def test_fermat(self, fermat_quartic):
        for report in classify_many(fermat_quartic, [11, 13]):
            assert report.reduction == GOOD_QUARTIC

    def test_synthetic_bad_pattern(self):
        report = classify_invariants(BAD_PATTERN, 11)
        assert report.reduction == BAD
        assert report.do_valuations == tuple(
            Fraction(v) for v in (0, 0, 0, 1, 0, 0, 2, 0, 1, 0, 0, 0, 9)
        )
        assert report.v_iota_i42 == Fraction(9, 42)

    def test_hsop_included(self, fermat_quartic):
        assert classify(fermat_quartic, 11, include_hsop=True).hsop
        assert classify(fermat_quartic, 11).hsop == {}

    def test_small_prime_unsupported(self, fermat_quartic):
        report = classify(fermat_quartic, 3)
        assert report.reduction.kind == const.REDUCTION_UNSUPPORTED
        assert report.reduction.reason == const.REASON_NO_HSOP

    def test_characteristic_five_unit_i3(self):
        # v(I3) = 0 while some double-conic ratios have 5 in the denominator
        report = classify_invariants(DixmierOhnoVector((Fraction(1),) * 13), 5)
        assert report.reduction.kind == const.REDUCTION_UNSUPPORTED
        assert report.reduction.reason == const.REASON_NO_HYPERELLIPTIC_BRANCH
        assert report.v_do_i3 == 0
        assert report.toggle_locus is None

    def test_singular(self):
        with pytest.raises(SingularCurveError):
            classify(CurveValidator.parse_expression("x^4 + y^4"), 11)

    def test_not_prime(self, fermat_quartic):
        with pytest.raises(ClassificationError):
            classify(fermat_quartic, 15)

    def test_special_fiber(self, toggle_quartic):
        octic = BinaryForm(8, [1, 0, 0, 0, 0, 0, 0, 0, 1])
        expected = SpecialFiberPoint.from_values(shioda(octic).hsop(), (2, 3, 4, 5, 6, 7), 11)
        assert special_fiber_shioda(toggle_quartic, 11).equivalent(expected)

    def test_special_fiber_needs_hyperelliptic(self, fermat_quartic):
        with pytest.raises(ClassificationError):
            special_fiber_shioda(fermat_quartic, 11)

    @pytest.mark.slow
    def test_cartan_special_fiber(self, cartan_quartic):
        # y^2 = x^7 - 1
        octic = BinaryForm(8, [0, 1, 0, 0, 0, 0, 0, 0, -1])
        expected = SpecialFiberPoint.from_values(shioda(octic).hsop(), (2, 3, 4, 5, 6, 7), 13)
        assert special_fiber_shioda(cartan_quartic, 13).equivalent(expected)

    def test_unit_determinant_invariance(self, fermat_quartic):
        transform = LinearMap([[1, 1, 0], [0, 2, 1], [1, 0, 1]])
        moved = fermat_quartic.act(transform).scale(3)
        for p in (11, 13):
            before, after = classify(fermat_quartic, p), classify(moved, p)
            assert after.reduction == before.reduction
            assert after.v_do_d27 == before.v_do_d27


class TestCriteria:

    def test_good_quartic(self, cartan_quartic):
        do_vector = dixmier_ohno(cartan_quartic)
        good, valuation, hsop_values = good_quartic_test(do_vector, 11)
        assert good and valuation == 0 and hsop_values
        good, valuation, _ = good_quartic_test(do_vector, 13)
        assert not good
        assert valuation == Fraction(6, 27)

    def test_good_quartic_needs_catalog(self, cartan_quartic):
        with pytest.raises(UnsupportedPrimeError):
            good_quartic_test(dixmier_ohno(cartan_quartic), 3)

    def test_hyperelliptic(self, cartan_quartic):
        do_vector = dixmier_ohno(cartan_quartic)
        good, v_i3, v_i27, v_i42 = hyperelliptic_test(do_vector, iota(do_vector), 13)
        assert good
        assert (v_i3, v_i27, v_i42) == (0, Fraction(2, 9), 0)

    def test_hyperelliptic_excluded_primes(self, cartan_quartic):
        do_vector = dixmier_ohno(cartan_quartic)
        for p in (5, 7):
            with pytest.raises(UnsupportedPrimeError):
                hyperelliptic_test(do_vector, iota(do_vector), p)


class TestToggleLocus:

    def test_double_conic_point(self):
        assert toggle_locus_test(dixmier_ohno(REFERENCE_CONIC * REFERENCE_CONIC), 11).in_locus

    def test_bad_pattern(self):
        result = toggle_locus_test(BAD_PATTERN, 11)
        assert not result.in_locus
        assert 'J9' in result.mismatches

    @pytest.mark.parametrize('p', [5, 7])
    def test_small_primes_unavailable(self, p):
        with pytest.raises(UnsupportedPrimeError):
            toggle_locus_test(DixmierOhnoVector((Fraction(1),) * 13), p)


class TestPicard:

    def test_good(self):
        report = picard_classify(0, 0, 1, 11)
        assert report.reduction == GOOD_QUARTIC
        assert report.invariants.q2 == 12
        assert report.invariants.q3 == 0
        assert report.invariants.d6 == 256
        assert report.corollary_good

    def test_bad(self):
        report = picard_classify(11, 0, 11 ** 3, 11)
        assert report.v_d6 == 7
        assert report.reduction == BAD
        assert not report.corollary_good

    def test_singular(self):
        with pytest.raises(SingularCurveError):
            picard_classify(1, 0, 0, 11)

    def test_singular_square(self):
        # (x^2 - z^2)^2 - y^3 z is singular although a c != 0
        with pytest.raises(SingularCurveError):
            picard_classify(-2, 0, 1, 11)

    def test_characteristic_two(self):
        with pytest.raises(UnsupportedPrimeError):
            picard_classify(0, 0, 1, 2)

    def test_corollary_agrees(self, rng):
        checked = 0
        while checked < 25:
            p = rng.choice([5, 7, 11, 13])
            a, b, c = (rng.randint(-3, 3) * p ** rng.randint(0, 4) for _ in range(3))
            try:
                report = picard_classify(a, b, c, p)
            except SingularCurveError:
                continue
            assert report.corollary_good == (report.reduction == GOOD_QUARTIC), (a, b, c, p)
            checked += 1

    def test_stable_model(self):
        report = picard_classify(0, 0, 11 ** 12, 11)
        assert report.reduction == GOOD_QUARTIC
        model = report.stable_model
        assert model.exponent == 1
        assert not model.extension_required
        assert model.map_exponents == (3, 4, 0)
        assert model.coefficients == (0, 0, 1)

    def test_stable_model_needs_extension(self):
        model = picard_stable_model(0, 0, 11, 11)
        assert model.extension_required
        assert model.coefficients is None
