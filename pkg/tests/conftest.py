"""Shared fixtures: example quartics, seeded generators and calibrated recipes."""

import random
from fractions import Fraction

import pytest

from src.core.settings import Settings
from src.forms.linalg import LinearMap
from src.forms.ternary import REFERENCE_CONIC, TernaryForm, monomials
from src.invariants import calibration
from src.utils.validation import CurveValidator


NONSPLIT_CARTAN_13 = ("(y + z)*x^3 - (2*y^2 + z*y)*x^2 + (y^3 - z*y^2 + 2*z^2*y - z^3)*x"
        " - 2*z^2*y^2 + 3*z^3*y")


@pytest.fixture(scope='session')
def test_settings(tmp_path_factory):
    return Settings(cache_dir=str(tmp_path_factory.mktemp('recipes')), show_progress=False,
                    batch_workers=1)


@pytest.fixture(scope='session', autouse=True)
def calibrated(test_settings):
    """Calibrate once per session into a private cache directory."""
    calibration.use_settings(test_settings)
    return calibration.calibrate(test_settings)


@pytest.fixture
def rng():
    return random.Random(4242)


@pytest.fixture
def reference_square():
    return REFERENCE_CONIC * REFERENCE_CONIC


@pytest.fixture
def cartan_quartic():
    return CurveValidator.parse_expression(NONSPLIT_CARTAN_13)


@pytest.fixture
def toggle_quartic():
    return CurveValidator.parse_expression("(y^2 - 4*x*z)^2 + 14641*(x^4 + z^4)")


@pytest.fixture
def klein_quartic():
    return CurveValidator.parse_expression("x^3*y + y^3*z + z^3*x")


@pytest.fixture
def fermat_quartic():
    return CurveValidator.parse_expression("x^4 + y^4 + z^4")


def random_form(rng: random.Random, degree: int, bound: int = 5) -> TernaryForm:
    return TernaryForm.from_coefficients(
        degree, [rng.randint(-bound, bound) for _ in monomials(degree)]
    )


def random_conic(rng: random.Random) -> TernaryForm:
    from src.invariants.discriminants import conic_discriminant

    while True:
        conic = random_form(rng, 2, 4)
        if conic_discriminant(conic) != 0:
            return conic


def random_matrix(rng: random.Random, size: int = 3, bound: int = 3) -> LinearMap:
    while True:
        matrix = LinearMap([[rng.randint(-bound, bound) for _ in range(size)] for _ in range(size)])
        if matrix.is_invertible():
            return matrix


def random_special_linear_2(rng: random.Random) -> LinearMap:
    """[[a, b], [c, d]] with ad - bc = 1."""
    while True:
        a, b, c = (Fraction(rng.randint(-4, 4)) for _ in range(3))
        if a != 0:
            return LinearMap([[a, b], [c, (1 + b * c) / a]])


@pytest.fixture
def config_file(test_settings, tmp_path):
    """The session settings written as YAML, for commands that read --config."""
    path = tmp_path / 'settings.yaml'
    test_settings.save_to_file(path)
    return path


def random_special_linear_3(rng: random.Random) -> LinearMap:
    """Product of elementary integer matrices; determinant 1."""
    result = LinearMap.identity(3)
    for _ in range(4):
        i, j = rng.sample(range(3), 2)
        rows = [[1 if r == c else 0 for c in range(3)] for r in range(3)]
        rows[i][j] = rng.choice([-2, -1, 1, 2])
        result = result @ LinearMap(rows)
    return result
