#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
Batch Worker for Quartic Reduction
Ordered evaluation of NDJSON curve records with progress reporting and
per-line error handling.
"""

import json
import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Any, Dict, Iterable, Iterator, List, Optional, Sequence, TextIO

from tqdm import tqdm

from ..classifier.reduction import SingularCurveError, classify_many
from ..core.settings import Settings
from ..invariants import calibration
from ..invariants.hsop import UnsupportedPrimeError
from .serialization import dumps, error_to_dict, reduction_report_to_dict
from .validation import CurveValidator, PrimeValidator, ValidationError


logger = logging.getLogger(__name__)


class WorkerError(Exception):
    """Custom exception for batch worker errors."""
    pass


ERROR_KINDS = (
    (ValidationError, 'parse'),
    (SingularCurveError, 'singular-curve'),
    (UnsupportedPrimeError, 'unsupported-prime'),
)


@dataclass(frozen=True)
class BatchJob:
    """One non-blank input line together with the evaluation flags."""

    line: int
    text: str
    default_primes: Sequence[int]
    include_hsop: bool
    certificate: bool


def error_kind(error: Exception) -> str:
    for error_type, kind in ERROR_KINDS:
        if isinstance(error, error_type):
            return kind
    return 'internal'


def evaluate_record(record: Dict[str, Any], default_primes: Sequence[int],
                    include_hsop: bool, certificate: bool) -> Dict[str, Any]:
    """
    Classify one batch record {"curve": ..., "label": ..., "primes": [...]}.

    Raises:
        ValidationError: On malformed records
        SingularCurveError: When the quartic is singular
    """
    if not isinstance(record, dict):
        raise ValidationError("Each line must hold a JSON object")
    curve = CurveValidator.parse_input(record)
    primes = record.get('primes', default_primes)
    if not isinstance(primes, list) and not isinstance(primes, tuple):
        raise ValidationError("'primes' must be a list")
    primes = PrimeValidator.validate_primes(list(primes))

    reports = classify_many(curve.form, primes, include_hsop)
    return {
        'label': curve.label,
        'reports': [reduction_report_to_dict(r, certificate) for r in reports],
    }


def evaluate_job(job: BatchJob) -> str:
    """Serialized output line for one job; errors become inline error objects."""
    try:
        try:
            record = json.loads(job.text)
        except json.JSONDecodeError as e:
            raise ValidationError(f"Invalid JSON: {e.msg}", e.pos)
        document = evaluate_record(record, job.default_primes, job.include_hsop, job.certificate)
        document['line'] = job.line
        return dumps(document)
    except (ValidationError, SingularCurveError, UnsupportedPrimeError) as e:
        logger.warning(f"Line {job.line}: {e}")
        return dumps(error_to_dict(error_kind(e), str(e), job.line))
    except Exception as e:
        logger.error(f"Line {job.line}: unexpected error: {e}", exc_info=True)
        return dumps(error_to_dict('internal', str(e), job.line))


def _initialize_process(settings: Settings, recipes_data: Dict[str, Any]) -> None:
    calibration.preload(settings, recipes_data)


class BatchWorker:
    """
    Evaluate NDJSON curve records, optionally across worker processes.

    Output order matches input order regardless of the worker count. Blank
    lines are skipped.
    """

    def __init__(self, settings: Optional[Settings] = None, workers: Optional[int] = None):
        self.settings = settings or Settings()
        self.workers = workers if workers is not None else self.settings.batch_workers
        if self.workers < 1:
            raise WorkerError(f"Worker count must be positive, got {self.workers}")
        self.logger = logging.getLogger(__name__)

    def jobs(self, lines: Iterable[str], include_hsop: bool, certificate: bool) -> List[BatchJob]:
        primes = tuple(self.settings.default_primes)
        return [
            BatchJob(number, text.strip(), primes, include_hsop, certificate)
            for number, text in enumerate(lines, start=1)
            if text.strip()
        ]

    def run(self, lines: Iterable[str], include_hsop: bool = False,
            certificate: bool = False) -> Iterator[str]:
        """Yield one output line per non-blank input line, in input order."""
        jobs = self.jobs(lines, include_hsop, certificate)
        if not jobs:
            return

        recipes = calibration.calibrate(self.settings)
        progress = tqdm(total=len(jobs), desc="Classifying", unit="curve",
                        disable=not self.settings.show_progress)
        self.logger.info(f"Batch of {len(jobs)} records with {self.workers} worker(s)")

        try:
            if self.workers == 1 or len(jobs) == 1:
                for job in jobs:
                    yield evaluate_job(job)
                    progress.update(1)
                return

            with ProcessPoolExecutor(
                max_workers=min(self.workers, len(jobs)),
                initializer=_initialize_process,
                initargs=(self.settings, recipes.to_dict()),
            ) as executor:
                # map yields in submission order
                for output in executor.map(evaluate_job, jobs):
                    yield output
                    progress.update(1)
        finally:
            progress.close()

    def run_to_stream(self, lines: Iterable[str], output: TextIO, include_hsop: bool = False,
                      certificate: bool = False) -> int:
        """Write the batch output to a stream; returns the number of lines written."""
        written = 0
        for line in self.run(lines, include_hsop, certificate):
            output.write(line + '\n')
            written += 1
        output.flush()
        return written
