#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
JSON documents for reports.

Rationals are {"num": "...", "den": "..."} with decimal strings, valuations
are rationals or "inf". Every document carries the schema version. Key
order is fixed so output is byte-deterministic.
"""

import json
from fractions import Fraction
from typing import Any, Dict, List, Optional

from ..classifier.picard import PicardReport, PicardStableModel
from ..classifier.reduction import (ReductionReport, ReductionType, ResidueEquation,
                                    SpecialFiberPoint, ToggleDiagnostic, ToggleLocusResult)
from ..core import constants as const
from ..forms.arithmetic import PrimeFieldElement
from ..forms.ternary import TernaryForm, monomials
from ..invariants.binary_quartic import BinaryQuarticInvariants
from ..invariants.dixmier_ohno import DixmierOhnoVector
from ..invariants.iota import IotaVector
from ..valuations.padic import INFINITY, is_infinite


class SerializationError(Exception):
    """Custom exception for malformed documents."""
    pass


# ===== Scalars =====

def rational_to_json(value) -> Dict[str, str]:
    value = Fraction(value)
    return {'num': str(value.numerator), 'den': str(value.denominator)}


def rational_from_json(data: Any) -> Fraction:
    try:
        return Fraction(int(data['num']), int(data['den']))
    except (KeyError, TypeError, ValueError, ZeroDivisionError) as e:
        raise SerializationError(f"Malformed rational {data!r}: {e}")


def valuation_to_json(value):
    if value is None:
        return None
    if is_infinite(value):
        return const.INFINITY_TOKEN
    return rational_to_json(value)


def valuation_from_json(data):
    if data is None:
        return None
    if data == const.INFINITY_TOKEN:
        return INFINITY
    return rational_from_json(data)


def _labelled(labels, values) -> Dict[str, Any]:
    return {label: rational_to_json(v) for label, v in zip(labels, values)}


def _unlabelled(labels, data) -> tuple:
    return tuple(rational_from_json(data[label]) for label in labels)


def _residues_to_json(residues) -> List[int]:
    return [int(r) for r in residues]


# ===== Reduction reports =====

def reduction_report_to_dict(report: ReductionReport, certificate: bool = True) -> Dict[str, Any]:
    """Report as a JSON-ready dict; without certificate only the verdict and main valuations."""
    doc: Dict[str, Any] = {
        'schema': const.SCHEMA_VERSION,
        'prime': report.prime,
        'type': report.reduction.kind,
        'reason': report.reduction.reason,
        'v_do_d27': valuation_to_json(report.v_do_d27),
        'v_do_i3': valuation_to_json(report.v_do_i3),
        'v_iota_i42': valuation_to_json(report.v_iota_i42),
        'toggle_locus': None if report.toggle_locus is None else report.toggle_locus.in_locus,
    }
    if report.hsop:
        doc['hsop'] = {label: rational_to_json(v) for label, v in report.hsop.items()}
    if report.special_fiber is not None:
        fiber = report.special_fiber
        doc['special_fiber'] = {
            'weights': list(fiber.weights),
            'anchor': fiber.anchor,
            'residues': _residues_to_json(fiber.residues),
        }
    if not certificate:
        return doc

    if report.do_vector is not None:
        doc['dixmier_ohno'] = _labelled(const.DO_LABELS, report.do_vector.values)
    if report.iota_vector is not None:
        doc['iota'] = _labelled(const.IOTA_LABELS, report.iota_vector.values)
        doc['iota42'] = rational_to_json(report.iota_vector.iota42)
    doc['do_valuations'] = [valuation_to_json(v) for v in report.do_valuations]
    doc['iota_valuations'] = [valuation_to_json(v) for v in report.iota_valuations]
    if report.toggle_locus is not None:
        doc['toggle_locus_detail'] = {
            'mismatches': list(report.toggle_locus.mismatches),
            'residue_equations': [
                {'label': e.label, 'valuation': valuation_to_json(e.valuation)}
                for e in report.toggle_locus.residue_equations
            ],
        }
    if report.toggle is not None:
        t = report.toggle
        doc['toggle'] = {
            's': t.s,
            's_is_even': t.s_is_even,
            'reference_conic': t.reference_conic,
            'distinct_roots': t.distinct_roots,
            'octic_valuation': valuation_to_json(t.octic_valuation),
        }
    return doc


def reduction_report_from_dict(doc: Dict[str, Any]) -> ReductionReport:
    """
    Inverse of reduction_report_to_dict for certificate documents.

    Raises:
        SerializationError: On schema mismatch or malformed fields
    """
    if doc.get('schema') != const.SCHEMA_VERSION:
        raise SerializationError(f"Unsupported schema version {doc.get('schema')!r}")
    try:
        p = doc['prime']
        do_vector = None
        if 'dixmier_ohno' in doc:
            do_vector = DixmierOhnoVector(_unlabelled(const.DO_LABELS, doc['dixmier_ohno']))
        iota_vector = None
        if 'iota' in doc:
            iota_vector = IotaVector(_unlabelled(const.IOTA_LABELS, doc['iota']),
                                     rational_from_json(doc['iota42']))
        locus = None
        if doc.get('toggle_locus') is not None:
            detail = doc.get('toggle_locus_detail', {})
            locus = ToggleLocusResult(
                doc['toggle_locus'],
                tuple(detail.get('mismatches', ())),
                tuple(ResidueEquation(e['label'], valuation_from_json(e['valuation']))
                      for e in detail.get('residue_equations', ())),
            )
        fiber = None
        if 'special_fiber' in doc:
            f = doc['special_fiber']
            fiber = SpecialFiberPoint(p, tuple(f['weights']), f['anchor'],
                                      tuple(PrimeFieldElement(p, r) for r in f['residues']))
        toggle = None
        if 'toggle' in doc:
            t = doc['toggle']
            toggle = ToggleDiagnostic(t['s'], t['s_is_even'], t['reference_conic'],
                                      t['distinct_roots'], valuation_from_json(t['octic_valuation']))
        return ReductionReport(
            prime=p,
            reduction=ReductionType(doc['type'], doc.get('reason')),
            do_vector=do_vector,
            iota_vector=iota_vector,
            do_valuations=tuple(valuation_from_json(v) for v in doc.get('do_valuations', ())),
            iota_valuations=tuple(valuation_from_json(v) for v in doc.get('iota_valuations', ())),
            v_do_d27=valuation_from_json(doc.get('v_do_d27')),
            v_do_i3=valuation_from_json(doc.get('v_do_i3')),
            v_iota_i42=valuation_from_json(doc.get('v_iota_i42')),
            toggle_locus=locus,
            hsop={label: rational_from_json(v) for label, v in doc.get('hsop', {}).items()},
            special_fiber=fiber,
            toggle=toggle,
        )
    except (KeyError, TypeError, ValueError) as e:
        raise SerializationError(f"Malformed report document: {e}")


# ===== Picard reports =====

def picard_report_to_dict(report: PicardReport) -> Dict[str, Any]:
    a, b, c = report.coefficients
    doc: Dict[str, Any] = {
        'schema': const.SCHEMA_VERSION,
        'prime': report.prime,
        'type': report.reduction.kind,
        'coefficients': {'a': rational_to_json(a), 'b': rational_to_json(b), 'c': rational_to_json(c)},
        'q2': rational_to_json(report.invariants.q2),
        'q3': rational_to_json(report.invariants.q3),
        'd6': rational_to_json(report.invariants.d6),
        'v_a': valuation_to_json(report.v_a),
        'v_q2': valuation_to_json(report.v_q2),
        'v_d6': valuation_to_json(report.v_d6),
        'inequalities': [{'condition': name, 'holds': holds} for name, holds in report.inequalities],
        'corollary_good': report.corollary_good,
    }
    if report.stable_model is not None:
        model = report.stable_model
        doc['stable_model'] = {
            'exponent': rational_to_json(model.exponent),
            'map_exponents': [rational_to_json(e) for e in model.map_exponents],
            'extension_required': model.extension_required,
            'coefficients': None if model.coefficients is None
            else [rational_to_json(x) for x in model.coefficients],
        }
    return doc


def picard_report_from_dict(doc: Dict[str, Any]) -> PicardReport:
    if doc.get('schema') != const.SCHEMA_VERSION:
        raise SerializationError(f"Unsupported schema version {doc.get('schema')!r}")
    try:
        coefficients = tuple(rational_from_json(doc['coefficients'][k]) for k in ('a', 'b', 'c'))
        stable = None
        if 'stable_model' in doc:
            m = doc['stable_model']
            stable = PicardStableModel(
                rational_from_json(m['exponent']),
                tuple(rational_from_json(e) for e in m['map_exponents']),
                None if m['coefficients'] is None
                else tuple(rational_from_json(x) for x in m['coefficients']),
            )
        return PicardReport(
            prime=doc['prime'],
            reduction=ReductionType(doc['type']),
            coefficients=coefficients,
            invariants=BinaryQuarticInvariants(rational_from_json(doc['q2']),
                                               rational_from_json(doc['q3']),
                                               rational_from_json(doc['d6'])),
            v_a=valuation_from_json(doc['v_a']),
            v_q2=valuation_from_json(doc['v_q2']),
            v_d6=valuation_from_json(doc['v_d6']),
            inequalities=tuple((i['condition'], i['holds']) for i in doc['inequalities']),
            corollary_good=doc.get('corollary_good'),
            stable_model=stable,
        )
    except (KeyError, TypeError, ValueError) as e:
        raise SerializationError(f"Malformed Picard document: {e}")


# ===== Invariant dumps =====

def monomial_name(exponents, names) -> str:
    factors = [name if e == 1 else f"{name}^{e}" for name, e in zip(names, exponents) if e]
    return "*".join(factors) or "1"


def form_to_dict(form: TernaryForm) -> Dict[str, Any]:
    """Nonzero coefficients keyed by monomial, e.g. {"v1*v3": ..., "v2^2": ...}."""
    names = form.variable_names()
    return {
        monomial_name(m, names): rational_to_json(form.coefficient(m))
        for m in monomials(form.degree) if form.coefficient(m) != 0
    }


def invariants_to_dict(do_vector: DixmierOhnoVector, iota_vector: IotaVector,
                       rho_form: TernaryForm, d27: Fraction) -> Dict[str, Any]:
    return {
        'schema': const.SCHEMA_VERSION,
        'dixmier_ohno': _labelled(const.DO_LABELS, do_vector.values),
        'iota': _labelled(const.IOTA_LABELS, iota_vector.values),
        'iota42': rational_to_json(iota_vector.iota42),
        'rho': form_to_dict(rho_form),
        'd27': rational_to_json(d27),
    }


def error_to_dict(kind: str, message: str, line: Optional[int] = None) -> Dict[str, Any]:
    doc = {'schema': const.SCHEMA_VERSION, 'error': {'kind': kind, 'message': message}}
    if line is not None:
        doc['error']['line'] = line
    return doc


def dumps(document: Any) -> str:
    """Compact deterministic JSON, one document per line."""
    return json.dumps(document, sort_keys=True, separators=(',', ':'), ensure_ascii=True)
