"""The b8 map, toggle models, their special fibers and the congruence suite."""

from fractions import Fraction

import pytest

from src.forms.binary import BinaryForm
from src.forms.linalg import LinearMap
from src.forms.ternary import REFERENCE_CONIC, TernaryForm
from src.toggle.embedding import b8, h_embed, h_embed_row_convention
from src.toggle.models import (ToggleError, ToggleModel, congruence_suite, detect_toggle,
                               good_toggle_check, octic_reduction_test)

from .conftest import random_conic, random_form, random_special_linear_2

X8_PLUS_Z8 = BinaryForm(8, [1, 0, 0, 0, 0, 0, 0, 0, 1])


class TestEmbedding:

    def test_kernel(self, rng):
        for _ in range(10):
            assert b8(REFERENCE_CONIC * random_conic(rng)).is_zero()

    def test_equivariance(self, rng):
        for _ in range(10):
            form = random_form(rng, 4)
            t = random_special_linear_2(rng)
            assert b8(form.act(h_embed(t))) == b8(form).act(t)

    def test_stabilizes_reference_conic(self, rng):
        for _ in range(10):
            t = random_special_linear_2(rng)
            assert REFERENCE_CONIC.act(h_embed(t)) == REFERENCE_CONIC

    def test_determinant(self):
        t = LinearMap([[2, 1], [3, 5]])
        assert h_embed(t).det() == t.det() ** 3

    def test_row_convention(self):
        a, b, c, d = 2, 3, 5, 7
        expected = LinearMap([[a * a, 2 * a * b, b * b], [a * c, a * d + b * c, b * d],
                              [c * c, 2 * c * d, d * d]])
        assert h_embed_row_convention(LinearMap([[a, b], [c, d]])) == expected

    def test_monomial_image(self):
        assert b8(TernaryForm(4, {(4, 0, 0): 1, (0, 0, 4): 1})) == X8_PLUS_Z8


class TestDetection:

    def test_double_conic_toggle(self, toggle_quartic):
        model = detect_toggle(toggle_quartic, 11)
        assert model.conic == REFERENCE_CONIC
        assert model.s == 4
        assert model.unit == 1
        assert model.reference_conic
        assert model.G == TernaryForm(4, {(4, 0, 0): 1, (0, 0, 4): 1})
        assert model.s_is_even
        assert model.reconstruct() == toggle_quartic

    def test_special_fiber(self, toggle_quartic):
        fiber = good_toggle_check(detect_toggle(toggle_quartic, 11))
        assert fiber.octic == X8_PLUS_Z8
        assert fiber.distinct_roots

    def test_not_a_double_conic(self, fermat_quartic):
        assert detect_toggle(fermat_quartic, 11) is None

    def test_scaled_conic(self):
        # 3 Q0^2 + 13 x1^4: the unit is absorbed, the conic stays Q0
        form = (REFERENCE_CONIC * REFERENCE_CONIC).scale(3) + TernaryForm(4, {(4, 0, 0): 13})
        model = detect_toggle(form, 13)
        assert model.conic == REFERENCE_CONIC
        assert model.unit == 3
        assert model.s == 1

    def test_non_integral(self, toggle_quartic):
        with pytest.raises(ToggleError):
            detect_toggle(toggle_quartic.scale(Fraction(1, 11)), 11)

    def test_characteristic_two(self, toggle_quartic):
        with pytest.raises(ToggleError):
            detect_toggle(toggle_quartic, 2)


class TestToggleModel:

    def test_exponent_positive(self):
        with pytest.raises(ToggleError):
            ToggleModel(REFERENCE_CONIC, 0, TernaryForm(4, {(4, 0, 0): 1}), 11)

    def test_g_nonzero_mod_p(self):
        with pytest.raises(ToggleError):
            ToggleModel(REFERENCE_CONIC, 1, TernaryForm(4, {(4, 0, 0): 11}), 11)

    def test_unit(self):
        with pytest.raises(ToggleError):
            ToggleModel(REFERENCE_CONIC, 1, TernaryForm(4, {(4, 0, 0): 1}), 11, unit=Fraction(22))

    def test_special_fiber_needs_reference_conic(self):
        conic = TernaryForm(2, {(2, 0, 0): 1, (0, 2, 0): 1, (0, 0, 2): 1})
        model = ToggleModel(conic, 1, TernaryForm(4, {(4, 0, 0): 1}), 11, reference_conic=False)
        with pytest.raises(ToggleError):
            good_toggle_check(model)


@pytest.mark.slow
class TestCongruences:

    @pytest.mark.parametrize('p', [11, 13])
    @pytest.mark.parametrize('s', [1, 2])
    def test_margins(self, rng, p, s):
        G = random_form(rng, 4, 4)
        while all(c.numerator % p == 0 for c in G.terms.values()):
            G = random_form(rng, 4, 4)
        report = congruence_suite(ToggleModel(REFERENCE_CONIC, s, G, p))
        assert [m.label for m in report.margins] == ['j2', 'j3', 'j4', 'j5', 'j6', 'j7', 'D14']
        assert report.holds, [(m.label, m.valuation, m.required) for m in report.margins]

    def test_needs_reference_conic(self):
        conic = TernaryForm(2, {(2, 0, 0): 1, (0, 2, 0): 1, (0, 0, 2): 1})
        model = ToggleModel(conic, 1, TernaryForm(4, {(4, 0, 0): 1}), 11, reference_conic=False)
        with pytest.raises(ToggleError):
            congruence_suite(model)


class TestOcticCriterion:

    def test_good(self):
        assert octic_reduction_test(X8_PLUS_Z8, 11).potentially_good

    def test_repeated_root(self):
        result = octic_reduction_test(BinaryForm(8, [0, 0, 1, 0, 0, 0, 0, 0, 1]), 11)
        assert not result.potentially_good

    def test_characteristic_two(self):
        with pytest.raises(ToggleError):
            octic_reduction_test(X8_PLUS_Z8, 2)
