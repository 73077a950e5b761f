"""Batch evaluation of NDJSON records."""

import io
import json
from dataclasses import replace
from pathlib import Path

import pytest

from src.utils.worker import BatchWorker, WorkerError

DATA = Path(__file__).resolve().parent.parent / 'data'

FERMAT = json.dumps({'label': 'fermat', 'curve': 'x^4 + y^4 + z^4', 'primes': [11]})
KLEIN = json.dumps({'label': 'klein', 'curve': 'x^3*y + y^3*z + z^3*x', 'primes': [11]})


def _documents(worker, lines, **kwargs):
    return [json.loads(line) for line in worker.run(lines, **kwargs)]


class TestBatchWorker:

    def test_empty_input(self, test_settings):
        assert list(BatchWorker(test_settings).run([])) == []
        assert list(BatchWorker(test_settings).run(['', '   \n'])) == []

    def test_malformed_line_is_reported_inline(self, test_settings):
        docs = _documents(BatchWorker(test_settings), [FERMAT, '{"curve": "x^4 + (", ', KLEIN])
        assert [d.get('line') for d in docs[::2]] == [1, 3]
        assert docs[1]['error']['kind'] == 'parse'
        assert docs[1]['error']['line'] == 2
        assert docs[2]['label'] == 'klein'

    def test_error_kinds(self, test_settings):
        lines = [
            json.dumps({'curve': 'x^4 + y^4'}),
            json.dumps({'curve': 'x^4 + y^4 + z^4', 'primes': [15]}),
            json.dumps(['not', 'an', 'object']),
        ]
        docs = _documents(BatchWorker(test_settings), lines)
        assert [d['error']['kind'] for d in docs] == ['singular-curve', 'parse', 'parse']

    def test_blank_lines_keep_numbering(self, test_settings):
        docs = _documents(BatchWorker(test_settings), [FERMAT, '', KLEIN])
        assert [d['line'] for d in docs] == [1, 3]

    def test_default_primes(self, test_settings):
        settings = replace(test_settings, default_primes=[13])
        line = json.dumps({'curve': 'x^4 + y^4 + z^4'})
        doc = _documents(BatchWorker(settings), [line])[0]
        assert [r['prime'] for r in doc['reports']] == [13]

    def test_certificate_flag(self, test_settings):
        plain = _documents(BatchWorker(test_settings), [FERMAT])[0]
        full = _documents(BatchWorker(test_settings), [FERMAT], certificate=True)[0]
        assert 'dixmier_ohno' not in plain['reports'][0]
        assert 'dixmier_ohno' in full['reports'][0]

    def test_stream(self, test_settings):
        output = io.StringIO()
        assert BatchWorker(test_settings).run_to_stream([FERMAT, KLEIN], output) == 2
        assert output.getvalue().count('\n') == 2

    def test_invalid_worker_count(self, test_settings):
        with pytest.raises(WorkerError):
            BatchWorker(test_settings, workers=0)


@pytest.mark.slow
class TestCorpus:

    def test_expected_types(self, test_settings):
        expected = json.loads((DATA / 'golden' / 'expected_types.json').read_text(encoding='utf-8'))
        with open(DATA / 'corpus.ndjson', encoding='utf-8') as f:
            docs = _documents(BatchWorker(test_settings), f)
        assert len(docs) == len(expected)
        for doc in docs:
            types = {str(r['prime']): r['type'] for r in doc['reports']}
            assert types == expected[doc['label']], doc['label']

    def test_deterministic_across_worker_counts(self, test_settings):
        lines = (DATA / 'corpus.ndjson').read_text(encoding='utf-8').splitlines()
        serial = list(BatchWorker(test_settings, workers=1).run(lines, certificate=True))
        parallel = list(BatchWorker(test_settings, workers=2).run(lines, certificate=True))
        assert serial == parallel
