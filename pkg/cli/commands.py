"""
Binrec Commands

One handler per subcommand. Handlers take a validated RunConfig and an
output stream, write their table or JSON document, and return the exit
code: 0 when everything passed, 1 when a check or invariant failed.
"""

import logging
import math
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Any, Callable, Dict, List, Optional, TextIO, Tuple

from config import settings
from combinatorics import decomposition_summary, enumerate_signatures
from exact_core import format_rational
from pattern_dynamics import locus_phase, s_sequence, shape_scan
from recursion_engine import a_sequence, basic_format, binomial_format
from spectral import (
    angle_trace,
    dominant_moduli,
    eigenpairs,
    embed,
    growth_rate,
    log_ratios,
    tan_regime_check,
)
from verification import ALL_CHECKS, CheckParams, Report, run_check
from cli.output import OutputFormat, Table, emit

logger = logging.getLogger("binrec.cli")


class Command(Enum):
    """Subcommands of the binrec CLI."""
    COMPUTE = "compute"
    FORMATS = "formats"
    ENUMERATE = "enumerate"
    VERIFY = "verify"
    SHAPES = "shapes"
    SPECTRAL = "spectral"
    GROWTH = "growth"
    PLOTDATA = "plotdata"


# Commands that need x in (-1, 0)
SPECTRAL_COMMANDS = {Command.SHAPES, Command.SPECTRAL, Command.GROWTH, Command.PLOTDATA}

DEFAULT_X = Fraction(-1, 2)


@dataclass
class RunConfig:
    """Parsed command line for one run."""

    command: Command
    x: Optional[Fraction] = None
    n: Optional[int] = None
    n_range: Optional[Tuple[int, int]] = None
    output: OutputFormat = OutputFormat.TABLE
    as_float: bool = False
    cap: Optional[int] = None
    seed: Optional[int] = None
    only: List[str] = field(default_factory=list)
    growth: Optional[Tuple[int, int]] = None
    log_level: str = "WARNING"

    def __post_init__(self):
        if self.x is None and self.command in SPECTRAL_COMMANDS:
            self.x = DEFAULT_X

    @property
    def effective_seed(self) -> int:
        return settings.seed if self.seed is None else self.seed

    def indices(self, default_lo: int, default_hi: int) -> Tuple[int, int]:
        """(lo, hi) from --range, else (default_lo, --n), else the defaults."""
        if self.n_range is not None:
            return self.n_range
        if self.n is not None:
            return default_lo, self.n
        return default_lo, default_hi

    def validate(self) -> List[str]:
        """Validate the configuration and return a list of usage errors."""
        errors = []

        if self.command is Command.COMPUTE and self.x is None:
            errors.append("compute needs --x")

        if self.x is not None and self.x == 0:
            errors.append("x must be nonzero")

        if self.command in SPECTRAL_COMMANDS and self.x is not None and not -1 < self.x < 0:
            errors.append(f"{self.command.value} needs -1 < x < 0, got {format_rational(self.x)}")

        if self.n is not None and self.n < 1:
            errors.append(f"--n must be at least 1, got {self.n}")

        for name, bounds in (("--range", self.n_range), ("--growth", self.growth)):
            if bounds is not None and not 1 <= bounds[0] <= bounds[1]:
                errors.append(f"{name} needs 1 <= LO <= HI, got {bounds[0]}:{bounds[1]}")

        unknown = [name for name in self.only if name not in ALL_CHECKS]
        if unknown:
            errors.append(f"unknown checks: {', '.join(unknown)}")

        if self.cap is not None and self.cap < 2:
            errors.append("--cap must be at least 2")

        return errors

    def to_dict(self) -> Dict[str, Any]:
        return {
            "x": format_rational(self.x) if self.x is not None else None,
            "n": self.n,
            "range": list(self.n_range) if self.n_range else None,
            "float": self.as_float,
            "cap": self.cap,
            "seed": self.effective_seed,
            "only": list(self.only),
            "growth": list(self.growth) if self.growth else None,
        }


def _float(value: Fraction) -> float:
    try:
        return float(value)
    except OverflowError:
        return math.copysign(math.inf, value)


def _pairs(mapping: Dict[int, int]) -> str:
    return ";".join(f"{k}:{v}" for k, v in sorted(mapping.items()))


def _payload(cfg: RunConfig, **extra: Any) -> Dict[str, Any]:
    return {"command": cfg.command.value, "params": cfg.to_dict(), **extra}


# =============================================================================
# SEQUENCE COMMANDS
# =============================================================================

def cmd_compute(cfg: RunConfig, out: TextIO) -> int:
    """Print a_n for the requested indices, exactly or as floats."""
    lo, hi = cfg.indices(1, 10)
    values = a_sequence(cfg.x, hi)

    if cfg.as_float:
        table = Table(("n", "a_n"))
        for n in range(lo, hi + 1):
            table.add(n, _float(values[n - 1]))
    else:
        table = Table(("n", "a_n_num", "a_n_den"))
        for n in range(lo, hi + 1):
            table.add(n, values[n - 1].numerator, values[n - 1].denominator)

    rows = [
        {"n": n, "a_n": _float(values[n - 1]) if cfg.as_float else format_rational(values[n - 1])}
        for n in range(lo, hi + 1)
    ]
    emit(table, cfg.output, out, _payload(cfg, rows=rows))
    return 0


def cmd_formats(cfg: RunConfig, out: TextIO) -> int:
    """Basic and binomial formats of a_n."""
    n = cfg.n if cfg.n is not None else 6
    lo, hi = cfg.n_range if cfg.n_range is not None else (n, n)
    table = Table(("n", "format", "r", "coefficient"))
    documents = []
    for k in range(lo, hi + 1):
        basic, binom = basic_format(k), binomial_format(k)
        for r, c in sorted(basic.xi.items()):
            table.add(k, "basic", r, c)
        for r, c in sorted(binom.prim.items()):
            table.add(k, "binomial", r, c)
        documents.append({"n": k, "basic": basic.to_dict()["xi"],
                          "binomial": binom.to_dict()["prim"]})
    emit(table, cfg.output, out, _payload(cfg, formats=documents))
    return 0


def cmd_enumerate(cfg: RunConfig, out: TextIO) -> int:
    """Signature, pattern and array counts from brute-force enumeration."""
    n = cfg.n if cfg.n is not None else 6
    lo, hi = cfg.n_range if cfg.n_range is not None else (n, n)
    table = Table(("n", "signatures", "components", "arrays", "canonical",
                   "primitive_by_weight", "dimension_histogram"))
    summaries = []
    for k in range(max(lo, 2), hi + 1):
        summary = decomposition_summary(k, cfg.cap)
        signatures = len(enumerate_signatures(k))
        table.add(k, signatures, summary.components, summary.total_arrays,
                  summary.canonical_count, _pairs(summary.primitive_by_weight()),
                  _pairs(summary.dimension_histogram))
        summaries.append({"signatures": signatures, **summary.to_dict()})
    emit(table, cfg.output, out, _payload(cfg, summaries=summaries))
    return 0


# =============================================================================
# VERIFICATION AND SHAPES
# =============================================================================

def cmd_verify(cfg: RunConfig, out: TextIO) -> int:
    """Run the invariant battery (all checks, or the --only selection)."""
    names = cfg.only or list(ALL_CHECKS)
    params = CheckParams(x=cfg.x, n=cfg.n, cap=cfg.cap, seed=cfg.effective_seed)
    report = Report(command=cfg.command.value, params=cfg.to_dict())
    for name in names:
        report.checks.append(run_check(name, params))

    table = Table(("name", "status", "detail"))
    for check in report.checks:
        table.add(check.name, check.status.value, check.detail)
    emit(table, cfg.output, out, report.to_dict())

    if not report.ok:
        logger.warning(f"{len(report.failed())} of {len(report.checks)} checks failed")
    return 0 if report.ok else 1


def cmd_shapes(cfg: RunConfig, out: TextIO) -> int:
    """Shape events of S_n for each n in the range, with violations."""
    lo, hi = cfg.indices(6, 16)
    scan = shape_scan(cfg.x, hi, max(lo, 6))

    def show(locus) -> str:
        return f"({locus.a},{locus.b}) {locus.kind}" if locus else ""

    violated = {v.n for v in scan.violations}
    table = Table(("n", "sign_change", "extreme", "inflection", "zero_count", "z_n", "status"))
    for report in scan.reports:
        change = report.sign_change_locus
        extreme = show(report.extreme_locus) or ("boundary" if report.boundary_extreme else "")
        inflection = show(report.inflection_locus) or (
            "boundary" if report.boundary_inflection else ""
        )
        phase = format_rational(locus_phase(change.a, report.n)) if change else ""
        table.add(report.n, show(change), extreme, inflection, report.zero_count, phase,
                  "fail" if report.n in violated else "pass")

    emit(table, cfg.output, out, _payload(
        cfg,
        reports=[r.to_dict() for r in scan.reports],
        violations=[v.to_dict() for v in scan.violations],
    ))
    return 0 if scan.ok else 1


# =============================================================================
# SPECTRAL COMMANDS
# =============================================================================

def cmd_spectral(cfg: RunConfig, out: TextIO) -> int:
    """Projection angles of s_n onto the dominant eigenspace and the regime check."""
    lo, hi = cfg.indices(50, 300)
    trace = angle_trace(cfg.x, hi, lo)
    regimes = tan_regime_check(trace, cfg.x)
    if not regimes.verified:
        logger.warning(f"no step above the regime threshold {regimes.threshold:.4g}")
    lam, mu = dominant_moduli(cfg.x)

    table = Table(("n", "theta", "tan_theta", "proj_norm", "perp_norm", "parseval_gap"))
    for r in trace.records:
        table.add(r.n, r.theta, r.tan_theta, r.proj_norm, r.perp_norm, r.parseval_gap)

    payload = _payload(cfg, eigenpairs=[p.to_dict() for p in eigenpairs(cfg.x)])
    payload.update({"lambda": lam, "mu": mu})
    payload["trace"] = [r.to_dict() for r in trace.records]
    payload["regimes"] = regimes.to_dict()
    emit(table, cfg.output, out, payload)
    return 0 if regimes.ok else 1


def cmd_growth(cfg: RunConfig, out: TextIO) -> int:
    """Least-squares slope of log(|a_n|/(n-1)!) against log(lambda)."""
    lo, hi = cfg.n_range if cfg.n_range is not None else (150, 300)
    fit = growth_rate(cfg.x, lo, hi)
    table = Table(("x", "n_lo", "n_hi", "slope", "predicted", "relative_error"))
    table.add(format_rational(cfg.x), fit.n_lo, fit.n_hi, fit.slope, fit.predicted,
              fit.relative_error)
    emit(table, cfg.output, out, _payload(cfg, fit=fit.to_dict()))
    return 0


def cmd_plotdata(cfg: RunConfig, out: TextIO) -> int:
    """
    Plot data: (j/(n-1), s_n) per step of s_n, or with --growth LO:HI one
    row per n with theta_n, tan(theta_n) and log r_n.
    """
    if cfg.growth is not None:
        lo, hi = cfg.growth
        trace = angle_trace(cfg.x, hi, lo)
        logs = dict(log_ratios(cfg.x, lo, hi))
        table = Table(("n", "theta_n", "tan_theta_n", "log_r_n"))
        for r in trace.records:
            table.add(r.n, r.theta, r.tan_theta, logs.get(r.n, ""))
    else:
        n = cfg.n if cfg.n is not None else 16
        if n < 2:
            raise ValueError(f"plot data needs n >= 2, got {n}")
        step = embed(s_sequence(cfg.x, n))
        table = Table(("u", "s_n"))
        for j, value in enumerate(step.values, start=1):
            table.add(j / (n - 1), _float(value))
    emit(table, cfg.output, out)
    return 0


HANDLERS: Dict[Command, Callable[[RunConfig, TextIO], int]] = {
    Command.COMPUTE: cmd_compute,
    Command.FORMATS: cmd_formats,
    Command.ENUMERATE: cmd_enumerate,
    Command.VERIFY: cmd_verify,
    Command.SHAPES: cmd_shapes,
    Command.SPECTRAL: cmd_spectral,
    Command.GROWTH: cmd_growth,
    Command.PLOTDATA: cmd_plotdata,
}
