"""Command-line front door for every pipeline of the laboratory.

Usage:
    equichordal-lab series --order 6 --c symbolic --format tex
    equichordal-lab refute --format record
    equichordal-lab crosscheck --c 7/10 --order 10 --xs 0.02,0.04,0.06

Module Information:
    - Filename: cli.py
    - Module: cli
    - Location: src/equichordal_lab/

Key Concepts:
    - argparse collects flags, a pydantic RunConfig validates them per command
    - Exit codes: 0 success, 1 verification failure, 2 usage error
    - c is exact (a fraction or decimal string) for the algebra commands
"""

from __future__ import annotations

import argparse
from fractions import Fraction
import pathlib
from typing import Literal

from pydantic import BaseModel, ConfigDict, Field, ValidationError, field_validator, model_validator

from . import emitters
from .coefficient_cache import solve_coefficients_cached
from .crosscheck import crosscheck
from .dynamics import MapParams, PlanePoint, project_pi, trace_invariant_curve
from .errors import EquichordalError, MapDomainError, UsageError
from .refutation import refutation_report
from .settings import DEFAULT_MAX_ITER, DEFAULT_TOL, IMAGE_DEFECT_TOL
from .symmetry import check_invariance
from .utils_logger import init_logger, logger

Command = Literal["series", "invariance", "refute", "trace", "fiber", "crosscheck"]
OutputFormat = Literal["csv", "tex", "record"]

SYMBOLIC_COMMANDS = {"series", "invariance", "refute"}
DYNAMICS_COMMANDS = {"trace", "fiber", "crosscheck"}
DEFAULT_XS: tuple[float, ...] = (0.02, 0.04, 0.06)

EXIT_OK, EXIT_VERIFICATION, EXIT_USAGE = 0, 1, 2


def parse_rational(text: str) -> Fraction:
    """'7/10', '0.7' or '1e-1' as an exact rational."""
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"Not a rational number: {text!r}") from exc


class RunConfig(BaseModel):
    """Validated flags of one invocation."""

    model_config = ConfigDict(frozen=True)

    command: Command
    order: int = Field(default=10, ge=2)
    c: str = "symbolic"
    format: OutputFormat = "csv"
    out: pathlib.Path | None = None
    cache: pathlib.Path | None = None
    tol: float = Field(default=DEFAULT_TOL, gt=0)
    max_iter: int = Field(default=DEFAULT_MAX_ITER, ge=1)
    xs: tuple[float, ...] = DEFAULT_XS
    y0: str = "0"
    log_level: str = "INFO"

    @field_validator("c")
    @classmethod
    def _c_is_symbolic_or_rational(cls, value: str) -> str:
        value = value.strip()
        if value == "symbolic":
            return value
        c = parse_rational(value)
        if not 0 < c < 1:
            raise ValueError(f"c must lie in (0, 1), got {value}")
        return value

    @field_validator("xs")
    @classmethod
    def _xs_not_empty(cls, value: tuple[float, ...]) -> tuple[float, ...]:
        if not value:
            raise ValueError("--xs needs at least one value")
        return value

    @model_validator(mode="after")
    def _c_fits_command(self) -> RunConfig:
        if self.command in {"invariance", "refute"} and self.c != "symbolic":
            raise ValueError(f"{self.command} works on the symbolic table; drop --c or pass symbolic")
        if self.command == "refute" and self.order < 6:
            raise ValueError("refute needs --order 6 or more")
        if self.command in DYNAMICS_COMMANDS:
            if self.c == "symbolic":
                raise ValueError(f"{self.command} needs a numeric --c")
            c = parse_rational(self.c)
            if c == Fraction(1, 2):
                raise ValueError(f"{self.command} needs c != 1/2")
            if not abs(self.y0_value) < min(c, 1 - c):
                raise ValueError(f"--y0 must satisfy |y0| < min(c, 1 - c) = {min(c, 1 - c)}")
        if self.command in {"trace", "fiber"} and self.format == "tex":
            raise ValueError(f"{self.command} exports csv or record only")
        return self

    @property
    def c_value(self) -> Fraction | None:
        return None if self.c == "symbolic" else parse_rational(self.c)

    @property
    def y0_value(self) -> Fraction:
        return parse_rational(self.y0)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="equichordal-lab",
        description="Exact Taylor data, symmetry checks and planar-map dynamics "
        "for the equichordal functional equation.",
    )
    parser.add_argument("command", choices=sorted(SYMBOLIC_COMMANDS | DYNAMICS_COMMANDS))
    parser.add_argument("--order", type=int, default=10, help="Truncation order N (default 10).")
    parser.add_argument("--c", default=None, help="'symbolic', or a rational such as 7/10 or 0.7.")
    parser.add_argument("--format", choices=["csv", "tex", "record"], default="csv")
    parser.add_argument("--out", type=pathlib.Path, default=None, help="Output file (default stdout).")
    parser.add_argument("--cache", type=pathlib.Path, default=None, help="Coefficient cache CSV.")
    parser.add_argument("--tol", type=float, default=DEFAULT_TOL)
    parser.add_argument("--max-iter", dest="max_iter", type=int, default=DEFAULT_MAX_ITER)
    parser.add_argument("--xs", default=None, help="Comma-separated abscissae, e.g. 0.02,0.04,0.06.")
    parser.add_argument("--y0", default="0", help="Fiber label y0.")
    parser.add_argument("--log-level", dest="log_level", default="INFO")
    return parser


def _parse_xs(text: str | None) -> tuple[float, ...]:
    if text is None:
        return DEFAULT_XS
    try:
        return tuple(float(tok) for tok in text.split(",") if tok.strip())
    except ValueError as exc:
        raise UsageError(f"--xs must be comma-separated numbers, got {text!r}") from exc


def config_from_args(args: argparse.Namespace) -> RunConfig:
    c = args.c
    if c is None:
        c = "7/10" if args.command in DYNAMICS_COMMANDS else "symbolic"
    return RunConfig(
        command=args.command,
        order=args.order,
        c=c,
        format=args.format,
        out=args.out,
        cache=args.cache,
        tol=args.tol,
        max_iter=args.max_iter,
        xs=_parse_xs(args.xs),
        y0=args.y0,
        log_level=args.log_level.upper(),
    )


# ---------------------------------------------------------------------
# COMMANDS
# ---------------------------------------------------------------------


def _render(config: RunConfig, csv_text, tex_text, record) -> str:
    if config.format == "csv":
        return csv_text()
    if config.format == "tex":
        return tex_text()
    return emitters.to_json(record())


def run_series(config: RunConfig) -> int:
    table = solve_coefficients_cached(config.order, config.c_value, config.cache)
    text = _render(
        config,
        lambda: emitters.frame_to_csv(emitters.coefficients_frame(table)),
        lambda: emitters.coefficients_tex(table),
        lambda: emitters.coefficients_record(table),
    )
    emitters.write_output(text, config.out)
    return EXIT_OK


def run_invariance(config: RunConfig) -> int:
    table = solve_coefficients_cached(config.order, None, config.cache)
    report = check_invariance(table)
    text = _render(
        config,
        lambda: emitters.frame_to_csv(emitters.invariance_frame(report)),
        lambda: emitters.invariance_tex(report),
        lambda: emitters.invariance_record(report),
    )
    emitters.write_output(text, config.out)
    if not report.all_invariant:
        logger.error("Some a_n are not invariant under c -> 1 - c")
        return EXIT_VERIFICATION
    return EXIT_OK


def run_refute(config: RunConfig) -> int:
    table = solve_coefficients_cached(config.order, None, config.cache)
    verdict = refutation_report(table)
    if config.format == "record":
        text = emitters.to_json(emitters.verdict_record(verdict))
    else:
        text = emitters.verdict_text(verdict)
    emitters.write_output(text, config.out)
    if not verdict.refuted:
        logger.error("a_6(c) - a_6(1 - c) is not identically zero; no refutation")
        return EXIT_VERIFICATION
    return EXIT_OK


def run_trace(config: RunConfig) -> int:
    params = MapParams(float(config.c_value))
    start = PlanePoint(config.xs[0], float(config.y0_value))
    diag = project_pi(start, params, config.tol, config.max_iter)
    if config.format == "record":
        text = emitters.to_json(emitters.trajectory_record(diag))
    else:
        text = emitters.frame_to_csv(emitters.trajectory_frame(diag))
    emitters.write_output(text, config.out)
    if not diag.converged:
        logger.warning(f"Trajectory from ({start.x}, {start.y}) ended {diag.status}")
    return EXIT_OK


def run_fiber(config: RunConfig) -> int:
    params = MapParams(float(config.c_value))
    samples = trace_invariant_curve(
        params, float(config.y0_value), config.xs, config.tol, max_iter=config.max_iter
    )
    frame = emitters.fiber_frame(samples)
    if config.format == "record":
        text = emitters.to_json({"samples": frame.to_dict(orient="records")})
    else:
        text = emitters.frame_to_csv(frame)
    emitters.write_output(text, config.out)
    failed = [s.x for s in samples if s.error is not None]
    off_fiber = [
        s.x for s in samples if s.image_defect is not None and s.image_defect > IMAGE_DEFECT_TOL
    ]
    if failed or off_fiber:
        logger.error(
            f"Fiber over y0 = {config.y0}: {len(failed)} samples failed, "
            f"{len(off_fiber)} images off the opposite fiber (x = {failed + off_fiber})"
        )
        return EXIT_VERIFICATION
    return EXIT_OK


def run_crosscheck(config: RunConfig) -> int:
    c = config.c_value
    table = None
    if config.y0_value == 0:
        table = solve_coefficients_cached(config.order, c, config.cache)
    report = crosscheck(
        c, config.order, config.xs, config.y0_value,
        table=table, tol=config.tol, max_iter=config.max_iter,
    )
    text = _render(
        config,
        lambda: emitters.frame_to_csv(report.rows),
        lambda: emitters.crosscheck_tex(report),
        lambda: emitters.crosscheck_record(report),
    )
    emitters.write_output(text, config.out)
    if not report.passed:
        logger.error(f"Series and dynamics disagree: K = {report.fitted_K:.3e} > {report.bound:g}")
        return EXIT_VERIFICATION
    return EXIT_OK


COMMANDS = {
    "series": run_series,
    "invariance": run_invariance,
    "refute": run_refute,
    "trace": run_trace,
    "fiber": run_fiber,
    "crosscheck": run_crosscheck,
}


# ---------------------------------------------------------------------
# ENTRY POINT
# ---------------------------------------------------------------------


def run(argv: list[str] | None = None) -> int:
    """Parse, validate and execute one command; return the exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code in (0, None) else EXIT_USAGE

    try:
        config = config_from_args(args)
    except (ValidationError, UsageError) as exc:
        parser.print_usage()
        logger.error(f"Invalid arguments: {exc}")
        return EXIT_USAGE

    init_logger(config.log_level)
    logger.info(f"Running {config.command} (order {config.order}, c = {config.c})")
    try:
        return COMMANDS[config.command](config)
    except (UsageError, MapDomainError) as exc:
        logger.error(f"Usage error in {config.command}: {exc}")
        return EXIT_USAGE
    except EquichordalError as exc:
        logger.error(f"{config.command} failed: {exc}")
        return EXIT_VERIFICATION


def main() -> int:
    return run()


if __name__ == "__main__":
    raise SystemExit(main())

__all__ = ["RunConfig", "build_parser", "config_from_args", "main", "parse_rational", "run"]
