"""JSON documents for reports and invariants."""

import json
import math
from fractions import Fraction

import pytest

from src.classifier.picard import picard_classify
from src.classifier.reduction import classify, classify_many
from src.core import constants as const
from src.forms.ternary import REFERENCE_DUAL_CONIC
from src.utils.serialization import (SerializationError, dumps, error_to_dict, form_to_dict,
                                     picard_report_from_dict, picard_report_to_dict,
                                     rational_from_json, rational_to_json,
                                     reduction_report_from_dict, reduction_report_to_dict,
                                     valuation_from_json, valuation_to_json)


class TestScalars:

    def test_rational(self):
        assert rational_to_json(Fraction(-2, 9)) == {'num': '-2', 'den': '9'}
        assert rational_from_json({'num': '-2', 'den': '9'}) == Fraction(-2, 9)

    def test_large_rational_stays_exact(self):
        value = Fraction(11 ** 40, 3)
        assert rational_from_json(json.loads(dumps(rational_to_json(value)))) == value

    def test_infinity(self):
        assert valuation_to_json(math.inf) == const.INFINITY_TOKEN
        assert valuation_from_json(const.INFINITY_TOKEN) == math.inf
        assert valuation_to_json(None) is None

    @pytest.mark.parametrize('data', [{}, {'num': 'x', 'den': '1'}, {'num': '1', 'den': '0'}, None])
    def test_malformed(self, data):
        with pytest.raises(SerializationError):
            rational_from_json(data)


class TestReductionReports:

    def test_certificate_round_trip(self, cartan_quartic):
        for report in classify_many(cartan_quartic, [11, 13], include_hsop=True):
            doc = reduction_report_to_dict(report, certificate=True)
            restored = reduction_report_from_dict(json.loads(dumps(doc)))
            assert restored.reduction == report.reduction
            assert restored.do_vector == report.do_vector
            assert restored.special_fiber == report.special_fiber
            assert reduction_report_to_dict(restored, certificate=True) == doc

    def test_summary_fields(self, fermat_quartic):
        doc = reduction_report_to_dict(classify(fermat_quartic, 11), certificate=False)
        assert doc['schema'] == const.SCHEMA_VERSION
        assert doc['type'] == const.REDUCTION_GOOD_QUARTIC
        assert doc['v_do_d27'] == {'num': '0', 'den': '1'}
        assert 'dixmier_ohno' not in doc
        assert 'hsop' not in doc

    def test_toggle_section(self, toggle_quartic):
        doc = reduction_report_to_dict(classify(toggle_quartic, 11))
        assert doc['toggle']['s'] == 4
        assert doc['toggle']['distinct_roots'] is True
        assert 'special_fiber' in doc

    def test_schema_mismatch(self, fermat_quartic):
        doc = reduction_report_to_dict(classify(fermat_quartic, 11))
        doc['schema'] = const.SCHEMA_VERSION + 1
        with pytest.raises(SerializationError):
            reduction_report_from_dict(doc)

    def test_missing_field(self, fermat_quartic):
        doc = reduction_report_to_dict(classify(fermat_quartic, 11))
        del doc['prime']
        with pytest.raises(SerializationError):
            reduction_report_from_dict(doc)


class TestPicardReports:

    def test_round_trip(self):
        report = picard_classify(0, 0, 11 ** 12, 11)
        assert picard_report_from_dict(json.loads(dumps(picard_report_to_dict(report)))) == report

    def test_bad_round_trip(self):
        report = picard_classify(11, 0, 11 ** 3, 11)
        doc = picard_report_to_dict(report)
        assert 'stable_model' not in doc
        assert picard_report_from_dict(doc) == report


def test_dual_form_names():
    assert form_to_dict(REFERENCE_DUAL_CONIC) == {
        'v1*v3': {'num': '-1', 'den': '1'},
        'v2^2': {'num': '1', 'den': '1'},
    }


def test_error_document():
    assert error_to_dict('parse', 'bad', 2) == {
        'schema': const.SCHEMA_VERSION,
        'error': {'kind': 'parse', 'message': 'bad', 'line': 2},
    }


def test_dumps_is_compact_and_sorted():
    assert dumps({'b': 1, 'a': [1, 2]}) == '{"a":[1,2],"b":1}'
