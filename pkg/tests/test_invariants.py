"""Discriminants, Dixmier-Ohno invariants, iota, rho, Shioda and HSOP catalogs."""

from fractions import Fraction

import pytest

from src.core import constants as const
from src.forms.binary import BinaryForm
from src.forms.ternary import REFERENCE_CONIC, TernaryForm
from src.invariants.covariants import SymmetricMatrix3
from src.invariants.binary_quartic import (binary_quartic_invariants, picard_closed_forms,
                                           picard_invariants, picard_quartic)
from src.invariants.discriminants import conic_discriminant, quartic_discriminant
from src.invariants.dixmier_ohno import DixmierOhnoVector, conic_square_invariants, dixmier_ohno
from src.forms.linalg import rank
from src.invariants.hsop import UnsupportedPrimeError, hsop_catalog
from src.invariants.iota import iota
from src.invariants.rho import rho
from src.invariants.shioda import binary_octic_discriminant, shioda
from src.forms.ternary import FormError

from .conftest import random_conic, random_form, random_matrix, random_special_linear_3

PICARD_TRIPLES = [(1, 2, 3), (-2, 5, 7), (Fraction(1, 2), -3, 4), (3, 0, -5)]


def held_out_picard_triple(rng):
    """A Picard triple outside the integer box calibration samples from."""
    while True:
        triple = tuple(Fraction(rng.randint(-9, 9), rng.choice([1, 2, 3])) for _ in range(3))
        outside = any(x.denominator != 1 or abs(x) > const.PICARD_SAMPLE_BOUND for x in triple)
        if outside and picard_invariants(*triple).d6 != 0:
            return triple


class TestDiscriminants:

    def test_reference_conic(self):
        assert conic_discriminant(REFERENCE_CONIC) == -16

    def test_fermat(self, fermat_quartic):
        assert abs(quartic_discriminant(fermat_quartic)) == 2 ** 40

    @pytest.mark.parametrize('a, b, c', [(1, 1, 1), (2, -1, 3), (Fraction(1, 2), 5, -7)])
    def test_diagonal_closed_form(self, a, b, c):
        # gradient (4a x^3, 4b y^3, 4c z^3) has resultant (64 abc)^9
        form = TernaryForm(4, {(4, 0, 0): a, (0, 4, 0): b, (0, 0, 4): c})
        assert quartic_discriminant(form) == -2 ** 40 * (Fraction(a) * b * c) ** 9

    def test_picard_closed_form(self, rng):
        for _ in range(20):
            a, b, c = (rng.randint(-6, 6) for _ in range(3))
            d6 = picard_invariants(a, b, c).d6
            assert quartic_discriminant(picard_quartic(a, b, c)) == 3 ** 9 * d6 ** 2

    def test_special_linear_invariance(self, rng):
        form = random_form(rng, 4, 3)
        moved = form.act(random_special_linear_3(rng))
        assert quartic_discriminant(moved) == quartic_discriminant(form)

    def test_singular_quartic(self):
        # node at (0 : 0 : 1)
        form = TernaryForm(4, {(2, 0, 2): 1, (0, 2, 2): -1, (4, 0, 0): 1, (0, 4, 0): 3, (3, 1, 0): 1})
        assert quartic_discriminant(form) == 0

    def test_cartan_discriminant(self, cartan_quartic):
        assert quartic_discriminant(cartan_quartic) == -13 ** 6


class TestDixmierOhno:

    def test_reference_square(self, reference_square):
        values = dixmier_ohno(reference_square)
        assert values['I3'] == const.I3_OF_REFERENCE_SQUARE
        assert values == conic_square_invariants(REFERENCE_CONIC)

    @pytest.mark.slow
    def test_conic_squares(self, rng):
        for _ in range(100):
            conic = random_conic(rng)
            values = dixmier_ohno(conic * conic)
            assert values == conic_square_invariants(conic)
            assert values['I3'] == Fraction(5, 36) * conic_discriminant(conic) ** 2

    @pytest.mark.parametrize('a, b, c', PICARD_TRIPLES)
    def test_picard_closed_forms(self, a, b, c):
        values = dixmier_ohno(picard_quartic(a, b, c))
        expected = picard_closed_forms(a, b, c)
        for label in ('I9', 'J9', 'I18', 'J18', 'I27'):
            assert values[label] == expected[label]
        q2 = picard_invariants(a, b, c).q2
        assert const.PICARD_Q2_SQUARED_SCALE * (2 * values['I9'] - values['J9']) == q2 ** 2

    @pytest.mark.slow
    def test_held_out_picard_triples(self, rng):
        for _ in range(200):
            triple = held_out_picard_triple(rng)
            values = dixmier_ohno(picard_quartic(*triple))
            expected = picard_closed_forms(*triple)
            for label in ('I9', 'J9', 'I18', 'J18', 'I27'):
                assert values[label] == expected[label], (triple, label)
            for label in ('I3', 'I6', 'I12', 'J12', 'I15', 'J15', 'I21', 'J21'):
                assert values[label] == 0, (triple, label)

    @pytest.mark.slow
    def test_nullcone(self, rng):
        for _ in range(20):
            # triple point at (0 : 0 : 1): no x3^2, x3^3, x3^4 terms
            form = random_form(rng, 4)
            form = TernaryForm(4, {m: c for m, c in form.terms.items() if m[2] <= 1})
            assert dixmier_ohno(form).is_nullcone()

    def test_weighted_equivariance(self, rng):
        form = random_form(rng, 4, 3)
        t = random_matrix(rng, bound=2)
        det = t.det()
        original = dixmier_ohno(form)
        moved = dixmier_ohno(form.act(t))
        for value, image, weight in zip(original.values, moved.values, original.weights):
            assert image == det ** (4 * weight // 3) * value

    @pytest.mark.slow
    def test_special_linear_invariance(self, rng):
        for _ in range(5):
            form = random_form(rng, 4, 3)
            moved = form.act(random_special_linear_3(rng))
            assert dixmier_ohno(moved) == dixmier_ohno(form)

    def test_degree_21_invariants_independent(self, rng):
        rows = []
        for _ in range(3):
            values = dixmier_ohno(random_form(rng, 4, 3))
            rows.append([values['I21'], values['J21'], values['I3'] ** 7])
        assert rank(rows) == 3

    def test_vector_length(self):
        with pytest.raises(ValueError):
            DixmierOhnoVector((1, 2, 3))

    def test_rejects_cubic(self):
        with pytest.raises(FormError):
            dixmier_ohno(TernaryForm(3, {(3, 0, 0): 1}))


class TestQuadrics:

    def test_adjugate_inverts(self, rng):
        for _ in range(10):
            matrix = SymmetricMatrix3.from_form(random_conic(rng))
            adj = matrix.adjugate()
            det = matrix.det()
            for i in range(3):
                for j in range(3):
                    entry = sum(matrix.entries[i][k] * adj.entries[k][j] for k in range(3))
                    assert entry == (det if i == j else 0)

    def test_adjugate_of_rank_one(self):
        # x^2 has every 2x2 minor zero
        adj = SymmetricMatrix3.from_form(TernaryForm(2, {(2, 0, 0): 1})).adjugate()
        assert all(isinstance(e, Fraction) and e == 0 for row in adj.entries for e in row)
        assert adj.dual


class TestIota:

    def test_double_conic_is_zero(self):
        vector = iota(conic_square_invariants(REFERENCE_CONIC))
        assert not any(vector.values)
        assert vector.iota42 == 0

    def test_cartan_valuations(self, cartan_quartic):
        from src.valuations.padic import val_p

        vector = iota(dixmier_ohno(cartan_quartic))
        assert tuple(val_p(v, 13) for v in vector.values) == (1, 2, 2, 3, 3, 3)


class TestRho:

    def test_reference_square(self, reference_square):
        scale = const.RHO_REFERENCE_SCALE
        expected = TernaryForm(2, {(0, 2, 0): scale, (1, 0, 1): -scale}, dual=True)
        assert rho(reference_square) == expected

    def test_klein_vanishes(self, klein_quartic):
        assert rho(klein_quartic).is_zero()

    def test_equivariance(self, rng):
        form = random_form(rng, 4, 3)
        t = random_matrix(rng, bound=2)
        expected = rho(form).act(t.inverse().transpose()).scale(t.det() ** const.RHO_WEIGHT)
        assert rho(form.act(t)) == expected


class TestShioda:

    def test_j2_is_classical(self):
        f = BinaryForm(8, [1, 0, 0, 0, 0, 0, 0, 0, 1])
        from src.invariants.octic import classical_octic_invariants

        assert shioda(f).values[0] == classical_octic_invariants(f)['J2']

    def test_discriminant_detects_repeated_roots(self):
        assert binary_octic_discriminant(BinaryForm(8, [0, 0, 1, 0, 0, 0, 0, 0, 1])) == 0
        assert binary_octic_discriminant(BinaryForm(8, [1, 0, 0, 0, 0, 0, 0, 0, 1])) != 0

    def test_rejects_sextic(self):
        with pytest.raises(FormError):
            shioda(BinaryForm(6, [1, 0, 0, 0, 0, 0, 1]))


class TestBinaryQuartic:

    def test_picard_invariants(self):
        inv = picard_invariants(0, 0, 1)
        assert (inv.q2, inv.q3, inv.d6) == (12, 0, 256)

    def test_classical_invariants(self):
        # x^4 + x^2 + 1 has discriminant 144
        inv = picard_invariants(1, 0, 1)
        assert (inv.q2, inv.q3, inv.d6) == (13, 70, 144)

    def test_square_is_singular(self):
        # (x^2 - z^2)^2
        inv = picard_invariants(-2, 0, 1)
        assert inv.q2 == 16
        assert inv.d6 == 0

    def test_shape_check(self):
        with pytest.raises(FormError):
            binary_quartic_invariants(BinaryForm(4, [2, 0, 1, 0, 1]))

    def test_from_binary_form(self):
        assert binary_quartic_invariants(BinaryForm(4, [1, 0, 0, 0, 1])) == picard_invariants(0, 0, 1)


class TestHsopCatalog:

    @pytest.mark.parametrize('p', [11, 13, 101])
    def test_generic(self, p):
        assert hsop_catalog(p).labels == ('I3', 'I6', 'I9', 'I12', 'I15', 'I18', 'I27')

    @pytest.mark.parametrize('p', [7, 19, 47, 277, 523])
    def test_exceptional(self, p):
        catalog = hsop_catalog(p)
        assert catalog.labels == ('I3', 'I6', 'I9-J9', 'I12', 'I15', 'I18', 'I27')
        assert catalog.degrees == (3, 6, 9, 12, 15, 18, 27)

    def test_characteristic_five(self):
        assert hsop_catalog(5).labels == ('I3', 'I6', 'I9^(5)', 'I12', 'J15^(5)', 'I18', 'I27')

    def test_characteristic_zero(self):
        assert hsop_catalog(0).selector == '0'

    @pytest.mark.parametrize('p', [2, 3])
    def test_unsupported(self, p):
        with pytest.raises(UnsupportedPrimeError):
            hsop_catalog(p)

    def test_evaluate(self):
        values = hsop_catalog(7).evaluate(conic_square_invariants(REFERENCE_CONIC))
        i3 = const.I3_OF_REFERENCE_SQUARE
        assert values['I9-J9'] == (Fraction(49, 36) - Fraction(49, 60)) * i3 ** 3
