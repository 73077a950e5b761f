#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
Constants Module for Quartic Reduction
Centralized definitions for invariant labels, weights and the closed-form
values the classifier compares against.
"""

from fractions import Fraction

# ===== Form Layout Constants =====

TERNARY_VARIABLES = ('x1', 'x2', 'x3')
DUAL_VARIABLES = ('v1', 'v2', 'v3')
BINARY_VARIABLES = ('x', 'z')

# Expression aliases accepted by the parser
VARIABLE_ALIASES = {
    'x': 0, 'y': 1, 'z': 2,
    'x1': 0, 'x2': 1, 'x3': 2,
}

QUARTIC_SLOTS = 15
OCTIC_SLOTS = 9

# ===== Dixmier-Ohno Constants =====

DO_LABELS = (
    'I3', 'I6', 'I9', 'J9', 'I12', 'J12', 'I15', 'J15',
    'I18', 'J18', 'I21', 'J21', 'I27',
)
DO_WEIGHTS = (3, 6, 9, 9, 12, 12, 15, 15, 18, 18, 21, 21, 27)

# Labels produced by the calibrated recipes (I27 comes from the discriminant)
CALIBRATED_LABELS = DO_LABELS[:-1]

# I3 of the squared reference conic x2^2 - 4 x1 x3
I3_OF_REFERENCE_SQUARE = Fraction(320, 9)

# Ratios DO_d(Q^2) / I3(Q^2)^(d/3) for any conic Q
DOUBLE_CONIC_RATIOS = (
    Fraction(1),
    Fraction(1, 180),
    Fraction(49, 36),
    Fraction(49, 60),
    Fraction(343, 1620),
    Fraction(49, 36),
    Fraction(1715, 3888),
    Fraction(343, 3600),
    Fraction(2401, 3888),
    Fraction(2401, 10800),
    Fraction(2401, 1620),
    Fraction(2401, 720),
    Fraction(0),
)

# I3(Q^2) = 5/36 * D3(Q)^2
I3_CONIC_FACTOR = Fraction(5, 36)

# 2^40 * I27 = D27
I27_SCALE = Fraction(1, 2 ** 40)

# D27 = D27_RESULTANT_SCALE * Res(dF/dx1, dF/dx2, dF/dx3)
D27_RESULTANT_SCALE = Fraction(-1, 4 ** 7)

# ===== Iota Constants =====

IOTA_LABELS = ('iota6', 'iota9', 'iota12', 'iota15', 'iota18', 'iota21')
IOTA_WEIGHTS = (6, 9, 12, 15, 18, 21)
IOTA42_WEIGHT = 42
IOTA42_SCALE = Fraction(3 ** 10, 2 ** 18 * 5 ** 5)

# ===== Shioda Constants =====

SHIODA_LABELS = ('j2', 'j3', 'j4', 'j5', 'j6', 'j7', 'j8', 'j9', 'j10')
SHIODA_WEIGHTS = (2, 3, 4, 5, 6, 7, 8, 9, 10)

# Sub-list (j2, ..., j7) used for the octic reduction test
SHIODA_HSOP_SIZE = 6

# ===== Contravariant Constants =====

# rho(Q0^2) = RHO_REFERENCE_SCALE * (v2^2 - v1 v3)
RHO_REFERENCE_SCALE = Fraction(-(2 ** 12) * 5 * 7, 9)

# rho(F.T) = det(T)^RHO_WEIGHT * T^-1 . rho(F)
RHO_WEIGHT = 6

# ===== HSOP Constants =====

HSOP_EXCEPTIONAL_PRIMES = (7, 19, 47, 277, 523)
HSOP_UNSUPPORTED_PRIMES = (2, 3)

# ===== Classification Constants =====

# Primes where the hyperelliptic branch is unavailable
HYPERELLIPTIC_EXCLUDED_PRIMES = (2, 3, 5, 7)

REDUCTION_GOOD_QUARTIC = 'GoodQuartic'
REDUCTION_GOOD_HYPERELLIPTIC = 'GoodHyperelliptic'
REDUCTION_BAD = 'Bad'
REDUCTION_UNSUPPORTED = 'Unsupported'

REASON_NO_HSOP = 'no-hsop-catalog'
REASON_NO_HYPERELLIPTIC_BRANCH = 'hyperelliptic-branch-unavailable'

# ===== Picard Constants =====

# I9 = 2^-12 3^-4 (8 a q3 + 81 q2^2), J9 = 2^-12 3^-4 (16 a q3 + 27 q2^2)
PICARD_I9_SCALE = Fraction(1, 2 ** 12 * 3 ** 4)
PICARD_I18_SCALE = Fraction(1, 2 ** 23 * 3 ** 6)
PICARD_J18_SCALE = Fraction(1, 2 ** 23 * 3 ** 7)
PICARD_I27_SCALE = Fraction(3 ** 9, 2 ** 40)

# q2^2 = 2^12 * 3 / 5 * (2 I9 - J9)
PICARD_Q2_SQUARED_SCALE = Fraction(2 ** 12 * 3, 5)

# Stable model twist: p^(v(D6)/36), coordinates scaled by (3e, 4e, 0)
PICARD_TWIST_DENOMINATOR = 36
PICARD_COEFFICIENT_SHIFTS = (6, 9, 12)
PICARD_MAP_EXPONENTS = (3, 4, 0)

# ===== Calibration Constants =====

RECIPE_VERSION = '2'

DEFAULT_CALIBRATION_SEED = 20170
DEFAULT_SLICE_SAMPLES = 6
DEFAULT_PICARD_SAMPLES = 12
MIN_SLICE_SAMPLES = 4
MIN_PICARD_SAMPLES = 12

# Truncation order of the t-series along Q0^2 + t G
SLICE_PRECISION = 8

# Coefficient range of random sample forms
SAMPLE_COEFFICIENT_BOUND = 3
PICARD_SAMPLE_BOUND = 5

# Interpolation nodes t = 1..N for the degree-28 D27 slice polynomial
D14_INTERPOLATION_NODES = 28

# Coordinate changes tried when the Macaulay minor vanishes
MACAULAY_RETRIES = 8

# ===== Default Settings =====

DEFAULT_PRIMES = (11, 13)
DEFAULT_CACHE_DIR = '~/.cache/quartic-reduction'
DEFAULT_SHOW_PROGRESS = True

# ===== Serialization Constants =====

SCHEMA_VERSION = 1
INFINITY_TOKEN = 'inf'

# ===== Exit Codes =====

EXIT_SUCCESS = 0
EXIT_FAILURE = 1
EXIT_PARSE_ERROR = 2
EXIT_SINGULAR_CURVE = 3
EXIT_UNSUPPORTED_PRIME = 4
EXIT_INTERRUPTED = 130

# ===== Logging Constants =====

LOG_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'
LOG_DATE_FORMAT = '%Y-%m-%d %H:%M:%S'
DEFAULT_LOG_FILE = 'quartic_reduction.log'
