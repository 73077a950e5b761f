#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
Quartic Reduction - Command-Line Entry Point
Reduction types of plane quartics over p-adic fields from their invariants.

Commands:
- invariants: Dixmier-Ohno invariants, iota, rho and D27 of a quartic
- classify:   reduction type at each requested prime
- picard:     reduction of Picard curves from (a, b, c)
- batch:      NDJSON records, one report line per input line
"""

import argparse
import json
import logging
import os
import sys
from pathlib import Path
from typing import List, Optional, Sequence

from dotenv import load_dotenv

from src.classifier.picard import picard_classify
from src.classifier.reduction import ClassificationError, SingularCurveError, classify_many
from src.core import constants as const
from src.core.settings import ConfigManager, Settings
from src.forms.ternary import TernaryForm
from src.invariants import calibration
from src.invariants.dixmier_ohno import dixmier_ohno
from src.invariants.hsop import UnsupportedPrimeError
from src.invariants.iota import iota
from src.invariants.rho import rho
from src.utils.serialization import (dumps, invariants_to_dict,
                                     picard_report_to_dict, reduction_report_to_dict)
from src.utils.validation import (CurveValidator, FileValidator, PrimeValidator,
                                  ValidationError, validate_processing_environment)
from src.utils.worker import BatchWorker


def setup_logging(log_level: str = "INFO", log_to_file: bool = False,
                  log_file: str = const.DEFAULT_LOG_FILE) -> None:
    """
    Configure application logging. Console output goes to stderr; stdout
    carries command output only.

    Args:
        log_level: Logging level (DEBUG, INFO, WARNING, ERROR)
        log_to_file: Whether to log to file
        log_file: Log file name
    """
    numeric_level = getattr(logging, log_level.upper(), logging.WARNING)
    formatter = logging.Formatter(const.LOG_FORMAT, const.LOG_DATE_FORMAT)
    root_logger = logging.getLogger()

    if not root_logger.handlers:
        console_handler = logging.StreamHandler(sys.stderr)
        console_handler.setLevel(numeric_level)
        console_handler.setFormatter(formatter)
        root_logger.addHandler(console_handler)

        if log_to_file:
            try:
                file_handler = logging.FileHandler(log_file, encoding='utf-8')
                file_handler.setLevel(numeric_level)
                file_handler.setFormatter(formatter)
                root_logger.addHandler(file_handler)
            except OSError as e:
                print(f"Warning: Could not create log file {log_file}: {e}", file=sys.stderr)

        root_logger.setLevel(numeric_level)
    else:
        root_logger.setLevel(numeric_level)
        for handler in root_logger.handlers:
            handler.setLevel(numeric_level)

    logging.getLogger(__name__).debug(
        f"Logging initialized - Level: {log_level}, File: {'Yes' if log_to_file else 'No'}"
    )


def load_environment_config() -> dict:
    """
    Load configuration from environment variables, reading .env first.

    Returns:
        Dictionary with environment configuration
    """
    env_file = Path.cwd() / '.env'
    if env_file.exists():
        load_dotenv(env_file)

    return {
        'log_level': os.getenv('LOG_LEVEL', 'WARNING'),
        'log_to_file': os.getenv('LOG_TO_FILE', 'false').lower() == 'true',
        'log_file': os.getenv('LOG_FILE', const.DEFAULT_LOG_FILE),
    }


def load_application_settings(config_path: Optional[str] = None) -> Settings:
    """
    Load settings from an explicit YAML file or from config/settings.yaml.

    Raises:
        ValidationError: If an explicit config path is unusable
    """
    logger = logging.getLogger(__name__)
    if config_path:
        path = FileValidator.validate_config_path(config_path)
        try:
            return Settings.load_from_file(path)
        except ValueError as e:
            raise ValidationError(str(e))

    try:
        settings = ConfigManager(Path.cwd() / 'config').get_settings()
        logger.debug("Settings loaded from config/settings.yaml")
        return settings
    except ValueError as e:
        logger.warning(f"Could not load settings file, using defaults: {e}")
        return Settings()


# ===== Argument Parsing =====

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog='quartic-reduction',
        description="Reduction types of plane quartics from their invariants.",
    )
    parser.add_argument('--config', help="YAML settings file (default: config/settings.yaml)")
    parser.add_argument('--log-level', help="DEBUG, INFO, WARNING or ERROR")
    subparsers = parser.add_subparsers(dest='command', required=True)

    curve_help = ("quartic as an expression in x, y, z (e.g. 'x^3*y + y^3*z + z^3*x') "
                  "or a JSON array of 15 coefficients")

    invariants_parser = subparsers.add_parser('invariants', help="Dixmier-Ohno invariants, iota, rho, D27")
    invariants_parser.add_argument('curve', help=curve_help)
    invariants_parser.add_argument('--json', action='store_true', help="emit a JSON document")

    classify_parser = subparsers.add_parser('classify', help="reduction type at each prime")
    classify_parser.add_argument('curve', help=curve_help)
    _add_report_flags(classify_parser)

    picard_parser = subparsers.add_parser('picard', help="Picard curve -y^3 z + x^4 + a x^2 z^2 + b x z^3 + c z^4")
    for name in ('a', 'b', 'c'):
        picard_parser.add_argument(name, help="rational coefficient, e.g. 11 or 3/4")
    picard_parser.add_argument('-p', '--primes', help="comma or space separated primes")
    picard_parser.add_argument('--json', action='store_true', help="emit JSON documents")

    batch_parser = subparsers.add_parser('batch', help="NDJSON records {curve, label, primes}")
    batch_parser.add_argument('input', help="input file, '-' for stdin")
    batch_parser.add_argument('--workers', type=int, help="worker processes (default from settings)")
    batch_parser.add_argument('--hsop', action='store_true', help="include the HSOP values used")
    batch_parser.add_argument('--certificate', action='store_true', help="include all intermediate valuations")

    return parser


def _add_report_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument('-p', '--primes', help="comma or space separated primes")
    parser.add_argument('--json', action='store_true', help="emit JSON documents")
    parser.add_argument('--hsop', action='store_true', help="include the HSOP values used")
    parser.add_argument('--certificate', action='store_true', help="include all intermediate valuations")


def parse_curve_argument(text: str) -> TernaryForm:
    if text.lstrip().startswith('['):
        try:
            values = json.loads(text)
        except json.JSONDecodeError as e:
            raise ValidationError(f"Invalid coefficient array: {e.msg}", e.pos)
        return CurveValidator.parse_coefficients(values)
    return CurveValidator.parse_expression(text)


def resolve_primes(text: Optional[str], settings: Settings) -> List[int]:
    if text:
        return PrimeValidator.parse_prime_list(text)
    return PrimeValidator.validate_primes(settings.default_primes)


# ===== Human-Readable Output =====

def _format_valuation(value) -> str:
    if value is None:
        return '-'
    return str(value)


def format_reports_table(reports) -> str:
    header = f"{'p':>6}  {'type':<18} {'v_DO(D27)':>10} {'v_DO(I3)':>9} {'v_iota(I42)':>12}  reason"
    lines = [header]
    for r in reports:
        lines.append(
            f"{r.prime:>6}  {r.reduction.kind:<18} {_format_valuation(r.v_do_d27):>10} "
            f"{_format_valuation(r.v_do_i3):>9} {_format_valuation(r.v_iota_i42):>12}  "
            f"{r.reduction.reason or ''}".rstrip()
        )
    return '\n'.join(lines)


def format_invariants(form: TernaryForm) -> str:
    do_vector = dixmier_ohno(form)
    iota_vector = iota(do_vector)
    lines = [f"{label:>6} = {value}" for label, value in zip(const.DO_LABELS, do_vector.values)]
    lines += [f"{label:>6} = {value}" for label, value in zip(const.IOTA_LABELS, iota_vector.values)]
    lines.append(f"{'iota42':>6} = {iota_vector.iota42}")
    lines.append(f"{'D27':>6} = {do_vector['I27'] / const.I27_SCALE}")
    lines.append(f"{'rho':>6} = {rho(form).to_expression()}")
    return '\n'.join(lines)


# ===== Commands =====

def cmd_invariants(args, settings: Settings) -> int:
    form = parse_curve_argument(args.curve)
    if args.json:
        do_vector = dixmier_ohno(form)
        document = invariants_to_dict(do_vector, iota(do_vector), rho(form),
                                      do_vector['I27'] / const.I27_SCALE)
        print(dumps(document))
    else:
        print(format_invariants(form))
    return const.EXIT_SUCCESS


def cmd_classify(args, settings: Settings) -> int:
    form = parse_curve_argument(args.curve)
    primes = resolve_primes(args.primes, settings)
    include_hsop = args.hsop or settings.include_hsop
    certificate = args.certificate or settings.certificate

    reports = classify_many(form, primes, include_hsop)
    if args.json:
        for report in reports:
            print(dumps(reduction_report_to_dict(report, certificate)))
    else:
        print(format_reports_table(reports))
        if include_hsop:
            for report in reports:
                for label, value in report.hsop.items():
                    print(f"  p={report.prime} {label} = {value}")
    return const.EXIT_SUCCESS


def cmd_picard(args, settings: Settings) -> int:
    a, b, c = (CurveValidator.parse_coefficient(v, i) for i, v in enumerate((args.a, args.b, args.c)))
    primes = resolve_primes(args.primes, settings)
    for p in primes:
        report = picard_classify(a, b, c, p)
        if args.json:
            print(dumps(picard_report_to_dict(report)))
            continue
        line = f"p={p}: {report.reduction.kind}  v(D6)={_format_valuation(report.v_d6)}"
        if report.stable_model is not None:
            model = report.stable_model
            line += f"  twist e={model.exponent}"
            if model.extension_required:
                line += " (ramified extension)"
        print(line)
    return const.EXIT_SUCCESS


def cmd_batch(args, settings: Settings) -> int:
    worker = BatchWorker(settings, args.workers)
    include_hsop = args.hsop or settings.include_hsop
    certificate = args.certificate or settings.certificate

    if args.input == '-':
        worker.run_to_stream(sys.stdin, sys.stdout, include_hsop, certificate)
        return const.EXIT_SUCCESS

    path = FileValidator.validate_input_path(args.input)
    with open(path, 'r', encoding='utf-8') as f:
        worker.run_to_stream(f, sys.stdout, include_hsop, certificate)
    return const.EXIT_SUCCESS


COMMANDS = {
    'invariants': cmd_invariants,
    'classify': cmd_classify,
    'picard': cmd_picard,
    'batch': cmd_batch,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    """
    Main entry point.

    Returns:
        Exit code (0 success, 2 parse error, 3 singular curve, 4 unsupported prime)
    """
    env_config = load_environment_config()
    args = build_parser().parse_args(argv)
    setup_logging(
        log_level=args.log_level or env_config['log_level'],
        log_to_file=env_config['log_to_file'],
        log_file=env_config['log_file'],
    )
    logger = logging.getLogger(__name__)

    try:
        settings = load_application_settings(args.config)
        environment = validate_processing_environment()
        for warning in environment['warnings']:
            logger.warning(f"Environment: {warning}")
        calibration.use_settings(settings)
        return COMMANDS[args.command](args, settings)

    except ValidationError as e:
        print(f"error: {e}", file=sys.stderr)
        return const.EXIT_PARSE_ERROR

    except SingularCurveError as e:
        print(f"error: singular curve: {e}", file=sys.stderr)
        return const.EXIT_SINGULAR_CURVE

    except UnsupportedPrimeError as e:
        print(f"error: unsupported prime: {e}", file=sys.stderr)
        return const.EXIT_UNSUPPORTED_PRIME

    except KeyboardInterrupt:
        print("\nInterrupted", file=sys.stderr)
        return const.EXIT_INTERRUPTED

    except ClassificationError as e:
        print(f"error: {e}", file=sys.stderr)
        return const.EXIT_FAILURE

    except Exception as e:
        logger.critical(f"Fatal error: {e}", exc_info=True)
        return const.EXIT_FAILURE


if __name__ == "__main__":
    sys.exit(main())
