#!/usr/bin/env python3
"""
Self-dual operads classifier
Main entry point for the application
"""
import argparse
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import List, Optional

from loguru import logger

from config.settings import CLASSIFICATION, GROEBNER, LOGGING, LOGS_DIR, OUTPUT
from src.algebra import MonomialOrder, OrderKind, VariableSet
from src.classification import PipelineConfig, run_classification
from src.errors import OperadError, UsageError
from src.groebner import STRATEGIES, groebner_basis
from src.operads import (
    QuadraticSpace, catalog, check_all_duals, check_dual_pair, loday_dual, rank_pair,
)
from src.reporting import (
    render_catalog_entry, render_classification, render_dual, render_dual_checks,
    render_groebner, to_json,
)
from src.storage import Mode, matrix_to_dict, read_ideal_file, read_matrix_file

_EMPTY = VariableSet(())


@dataclass
class RunConfig:
    """Command plus flags, defaults from config/settings.py"""
    command: str
    order_kind: str = GROEBNER["order"]
    ranking: Optional[str] = None
    output_format: str = OUTPUT["format"]
    parallelism: int = CLASSIFICATION["jobs"]
    strategy: Optional[str] = None


def configure_logging(level: Optional[str] = None):
    logger.remove()
    logger.add(sys.stderr, format=LOGGING["format"], level=level or LOGGING["level"])
    if LOGGING["file_enabled"]:
        logger.add(
            str(LOGS_DIR / LOGGING["file_pattern"]),
            rotation=LOGGING["rotation"],
            retention=LOGGING["retention"],
            level="DEBUG",
        )


def _emit(text: str):
    sys.stdout.write(text + "\n")


def run_dual(matrix_file: Path, config: RunConfig) -> int:
    """Koszul dual of a relation matrix file"""
    logger.info(f"Computing dual of {matrix_file}...")
    M = read_matrix_file(matrix_file)
    R = QuadraticSpace.from_matrix(M)
    dual = loday_dual(R)
    order = MonomialOrder(OrderKind(config.order_kind), M.variables)
    r, s = rank_pair(R)
    if config.output_format == "json":
        data = matrix_to_dict(dual.matrix, order, dual.labels)
        data.update({"rank": r, "dualRank": s})
        _emit(to_json(data))
    else:
        _emit(render_dual(R, dual, order))
    return 0


def run_groebner(ideal_file: Path, config: RunConfig) -> int:
    """Reduced Gröbner basis of an ideal file"""
    logger.info(f"Computing Gröbner basis of {ideal_file}...")
    generators, order = read_ideal_file(ideal_file, config.order_kind, _ranking_arg(config.ranking))
    strategy = config.strategy or "staged"
    result = groebner_basis(generators, order, strategy, config.parallelism)
    if config.output_format == "json":
        _emit(to_json(result.to_dict()))
    else:
        _emit(render_groebner(result))
    return 0


def run_classify(mode: str, case_id: Optional[int], config: RunConfig) -> int:
    """Classification of the nonassociative, associative or one-operation cases"""
    pipeline = PipelineConfig(
        order=config.order_kind,
        ranking=config.ranking or GROEBNER["ranking"],
        strategy=config.strategy or GROEBNER["strategy"],
    )
    summary = run_classification(
        Mode(mode), case_id, pipeline, jobs=config.parallelism, progress=config.output_format == "text"
    )
    if config.output_format == "json":
        _emit(to_json(summary.to_dict()))
    else:
        _emit(render_classification(summary))
    return 0


def run_catalog(name: Optional[str], check_all: bool, config: RunConfig) -> int:
    """One catalog entry, or every dual pairing"""
    order = MonomialOrder(OrderKind(config.order_kind), _EMPTY)
    if check_all:
        checks = check_all_duals()
        if config.output_format == "json":
            _emit(to_json([c.to_dict() for c in checks]))
        else:
            _emit(render_dual_checks(checks))
        return 0 if all(c.verified for c in checks) else 3

    if not name:
        raise UsageError("catalog needs a NAME or --check-all-duals")
    entry = catalog(name)
    verified = check_dual_pair(entry.name, entry.expected_dual_name) if entry.expected_dual_name else None
    if config.output_format == "json":
        data = entry.to_dict()
        data["dualVerified"] = verified
        _emit(to_json(data))
    else:
        _emit(render_catalog_entry(entry, verified, order))
    return 0


class _ArgumentParser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _ArgumentParser(description="Koszul duals, Gröbner bases and self-duality classification")
    parser.add_argument("--log-level", default=None, help="Log level on stderr (default from settings)")
    subparsers = parser.add_subparsers(dest="command", help="Commands")

    def add_format(p):
        p.add_argument("--format", choices=["text", "json"], default=OUTPUT["format"], help="Output format")

    # Dual command
    dual_parser = subparsers.add_parser("dual", help="Koszul dual of a relation matrix")
    dual_parser.add_argument("--matrix", required=True, type=Path, help="Matrix file (.json or comma text)")
    add_format(dual_parser)

    # Groebner command
    gb_parser = subparsers.add_parser("groebner", help="Reduced Gröbner basis of an ideal file")
    gb_parser.add_argument("--ideal", required=True, type=Path, help="Ideal JSON file")
    gb_parser.add_argument("--order", choices=[k.value for k in OrderKind], default=None)
    gb_parser.add_argument("--ranking", default=None, help="Variables from greatest to least, comma-separated")
    gb_parser.add_argument("--strategy", choices=STRATEGIES, default="staged")
    gb_parser.add_argument("--jobs", type=int, default=1, help="Workers for the S-polynomials of a stage")
    add_format(gb_parser)

    # Classify command
    cl_parser = subparsers.add_parser("classify", help="Run a classification")
    cl_parser.add_argument("mode", choices=[m.value for m in Mode])
    cl_parser.add_argument("--case", type=int, default=None, help="Single case id")
    cl_parser.add_argument("--jobs", type=int, default=CLASSIFICATION["jobs"], help="Worker processes")
    cl_parser.add_argument("--order", choices=[k.value for k in OrderKind], default=GROEBNER["order"])
    cl_parser.add_argument("--ranking", default=None, help="Ranking scheme: column-major, reverse or a list")
    cl_parser.add_argument("--strategy", choices=STRATEGIES, default=None)
    add_format(cl_parser)

    # Catalog command
    cat_parser = subparsers.add_parser("catalog", help="Named operads")
    cat_parser.add_argument("name", nargs="?", default=None)
    cat_parser.add_argument("--check-all-duals", action="store_true", help="Verify every dual pairing")
    add_format(cat_parser)

    return parser


def _ranking_arg(value: Optional[str]) -> Optional[List[str]]:
    if not value:
        return None
    return [v.strip() for v in value.split(",") if v.strip()]


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        configure_logging(args.log_level)
        if not args.command:
            parser.print_help(sys.stderr)
            return 1

        config = RunConfig(command=args.command, output_format=args.format)
        if args.command == "dual":
            return run_dual(args.matrix, config)

        if args.command == "groebner":
            config.order_kind = args.order
            config.ranking = args.ranking
            config.strategy = args.strategy
            config.parallelism = args.jobs
            return run_groebner(args.ideal, config)

        if args.command == "classify":
            config.order_kind = args.order
            config.strategy = args.strategy
            config.parallelism = args.jobs
            config.ranking = args.ranking
            return run_classify(args.mode, args.case, config)

        if args.command == "catalog":
            return run_catalog(args.name, args.check_all_duals, config)

    except OperadError as e:
        logger.error(f"{type(e).__name__}: {e}")
        return e.exit_code
    return 1


if __name__ == "__main__":
    sys.exit(main())
