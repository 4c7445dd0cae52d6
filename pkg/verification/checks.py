"""
Invariant Battery

Each check cross-examines two or more pipelines and returns a CheckResult;
none of them raises on a failed comparison. Checks are registered by name
in ALL_CHECKS and selected with `verify --only NAME`.

Sizes default to the ranges the acceptance runs use; --n and --x override
them where a check has a natural n or x, and --cap bounds every
enumeration.
"""

import logging
import math
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Dict, List, Optional, Sequence

from config import settings
from combinatorics import (
    EnumerationCapError,
    arrays_by_weight,
    check_component,
    decomposition_summary,
    enumerate_patterns,
    enumerate_signatures,
    hypercube_decomposition,
    hypercube_facts_check,
    monotone_path_count,
    nondecreasing_pattern_path_bijection,
    pattern_weight_polynomial,
    primitive_counts,
    reflection_check,
)
from exact_core import format_rational
from pattern_dynamics import finite_difference_check, iter_s_sequences, shape_scan
from recursion_engine import (
    a_sequence,
    basic_format,
    basic_polynomial,
    binomial_format,
    catalan,
    factorial_bound_violations,
    nzc_sequence,
)
from spectral import (
    AngleTrace,
    angle_trace,
    apply_A_n,
    eigen_residual,
    eigenpairs,
    embed,
    exp_check,
    growth_rate,
    hilbert_schmidt_gap,
    norm_ratio_trace,
    staircase_measure,
    tan_regime_check,
)
from verification.report import CheckResult, CheckStatus

logger = logging.getLogger("binrec.verification")

SHAPE_XS = (Fraction(-1, 10), Fraction(-1, 2), Fraction(-9, 10))
DYNAMICS_XS = (Fraction(-1, 10), Fraction(-1, 2), Fraction(-9, 10), Fraction(1), Fraction(-2))


@dataclass
class CheckParams:
    """Overrides shared by all checks; None means the check's own default."""

    x: Optional[Fraction] = None
    n: Optional[int] = None
    cap: Optional[int] = None
    seed: int = 0

    @property
    def enumeration_cap(self) -> int:
        return settings.enumeration_cap if self.cap is None else self.cap

    @property
    def path_cap(self) -> int:
        return settings.path_cap if self.cap is None else self.cap

    def n_or(self, default: int) -> int:
        return default if self.n is None else self.n

    def xs_or(self, defaults: Sequence[Fraction]) -> List[Fraction]:
        return list(defaults) if self.x is None else [self.x]


def _random_rationals(seed: int, count: int) -> List[Fraction]:
    rng = random.Random(seed)
    values = []
    while len(values) < count:
        numerator = rng.randint(-9, 9)
        if numerator:
            values.append(Fraction(numerator, rng.randint(1, 9)))
    return values


# =============================================================================
# RECURSION ENGINE
# =============================================================================

def check_formats(params: CheckParams) -> CheckResult:
    """Basic format, binomial format, descent DP and exact evaluation agree."""
    sweep = 40
    oracle_n = min(params.n_or(10), params.enumeration_cap)
    xs = _random_rationals(params.seed, 20)
    failures = []

    for n in range(1, sweep + 1):
        basic = basic_format(n)
        binom = binomial_format(n)
        if basic.xi.get(n) != math.factorial(n - 1):
            failures.append(f"xi_{n} != {n - 1}!")
        if binom.count(n) != catalan(n):
            failures.append(f"P({n},{n}) != C_{n}")
        if binom.total() != math.factorial(n - 1):
            failures.append(f"sum P({n},r) != {n - 1}!")
        if primitive_counts(n) != binom.prim:
            failures.append(f"descent DP differs from back-substitution at n={n}")

    for x in xs:
        values = a_sequence(x, sweep)
        for n in range(1, sweep + 1):
            exact = values[n - 1]
            if basic_format(n).evaluate(x) != exact or binomial_format(n).evaluate(x) != exact:
                failures.append(f"formats disagree with the recursion at n={n}, x={x}")

    for n in range(2, oracle_n + 1):
        by_descents: Dict[int, int] = {}
        for pattern in enumerate_patterns(n, params.enumeration_cap):
            r = n - len(pattern.descents())
            by_descents[r] = by_descents.get(r, 0) + 1
        if by_descents != binomial_format(n).prim:
            failures.append(f"pattern enumeration differs from P({n},r)")

    return CheckResult.from_failures(
        "formats", failures,
        f"n <= {sweep} over {len(xs)} random x; enumeration oracle n <= {oracle_n}",
    )


def check_signed_catalan(params: CheckParams) -> CheckResult:
    """a_n(-1) = (-1)^n C_n."""
    n_max = params.n_or(25)
    values = a_sequence(-1, n_max)
    failures = [
        f"a_{k}(-1) = {values[k - 1]}"
        for k in range(1, n_max + 1)
        if values[k - 1] != (-1) ** k * catalan(k)
    ]
    return CheckResult.from_failures(
        "signed_catalan", failures, f"a_n(-1) = (-1)^n C_n for n <= {n_max}"
    )


def check_factorial_bounds(params: CheckParams) -> CheckResult:
    """a_n > (n-1)! x^n for x > 0 and |a_n| > (n-1)! |1+x|^n for x < -1."""
    n_max = params.n_or(30)
    xs = [Fraction(1), Fraction(2), Fraction(1, 2), Fraction(-2), Fraction(-3, 2)]
    if params.x is not None and not -1 <= params.x <= 0:
        xs = [params.x]
    failures = []
    for x in xs:
        bad = factorial_bound_violations(x, n_max)
        if bad:
            failures.append(f"x={format_rational(x)} fails at n={bad[:5]}")
    return CheckResult.from_failures(
        "factorial_bounds", failures, f"{len(xs)} values of x, n <= {n_max}"
    )


# =============================================================================
# COMBINATORICS
# =============================================================================

def check_signatures(params: CheckParams) -> CheckResult:
    """Signature counts follow A002083 and array counts regroup into xi_r."""
    n_max = params.n_or(20)
    nzc = nzc_sequence(n_max)
    failures = []
    for n in range(1, n_max + 1):
        signatures = enumerate_signatures(n)
        if len(signatures) != nzc[n - 1]:
            failures.append(f"{len(signatures)} signatures for n={n}, expected {nzc[n - 1]}")
        if arrays_by_weight(n) != basic_format(n).xi:
            failures.append(f"array counts by weight differ from xi for n={n}")
    return CheckResult.from_failures("signatures", failures, f"n <= {n_max}")


def check_hypercubes(params: CheckParams) -> CheckResult:
    """Components of the split/merge graph are hypercubes, one per pattern."""
    n_max = min(params.n_or(10), params.enumeration_cap)
    structural_n = min(n_max, 6)
    failures = []

    for n in range(2, n_max + 1):
        summary = decomposition_summary(n, params.enumeration_cap)
        arrays = basic_format(n)
        if summary.components != math.factorial(n - 1):
            failures.append(f"{summary.components} components for n={n}")
        if summary.canonical_count != math.factorial(n - 1):
            failures.append(f"{summary.canonical_count} canonical arrays for n={n}")
        if summary.total_arrays != arrays.total():
            failures.append(f"{summary.total_arrays} arrays for n={n}, expected {arrays.total()}")
        if summary.arrays_by_weight != arrays.xi:
            failures.append(f"component weights differ from xi for n={n}")
        if summary.primitive_by_weight() != binomial_format(n).prim:
            failures.append(f"primitive weights differ from P({n},r)")
        if pattern_weight_polynomial(n, params.enumeration_cap) != basic_polynomial(n):
            failures.append(f"pattern weight polynomial differs from a_{n}")

    for n in range(2, structural_n + 1):
        for component in hypercube_decomposition(n, params.enumeration_cap):
            ok, reason = check_component(component)
            if not ok:
                failures.append(f"n={n} pattern {component.pattern}: {reason}")

    for dim in range(1, 5):
        record = hypercube_facts_check(dim)
        if not record.passed:
            failures.append(f"H_{dim}: {record.details.get('failures')}")

    return CheckResult.from_failures(
        "hypercubes", failures,
        f"totals n <= {n_max}, structure n <= {structural_n}, H_1..H_4 facts",
    )


def check_lattice_paths(params: CheckParams) -> CheckResult:
    """Brute-force path counts, reflection bijection and pattern-path bijection."""
    cap = params.path_cap
    limit = min(params.n_or(12), cap)
    failures = []
    for n in range(1, limit + 1):
        count = monotone_path_count(n, cap)
        if count != catalan(n + 1):
            failures.append(f"{count} non-crossing paths to ({n},{n})")
        if n <= 8:
            record = reflection_check(n, cap)
            if not record.passed:
                failures.append(f"reflection fails for n={n}")
        record = nondecreasing_pattern_path_bijection(n, cap)
        if not record.passed:
            failures.append(f"pattern-path bijection fails for n={n}")
    return CheckResult.from_failures("lattice_paths", failures, f"n <= {limit}")


# =============================================================================
# PATTERN DYNAMICS
# =============================================================================

def check_dynamics(params: CheckParams) -> CheckResult:
    """S_n recovers a_n, obeys the difference relation and the endpoint identity."""
    n_max = params.n_or(200)
    failures = []
    for x in params.xs_or(DYNAMICS_XS):
        values = a_sequence(x, n_max)
        previous = None
        for s in iter_s_sequences(x, n_max):
            if s.total() != values[s.n - 1]:
                failures.append(f"sum S_{s.n} != a_{s.n} at x={x}")
            if s.n >= 3 and s.value(0) * x != s.value(s.n - 1) * (1 + x):
                failures.append(f"endpoint identity fails for S_{s.n} at x={x}")
            if previous is not None and not finite_difference_check(previous, s):
                failures.append(f"difference relation fails for S_{s.n} at x={x}")
            previous = s
    return CheckResult.from_failures("dynamics", failures, f"n <= {n_max}")


def check_shapes(params: CheckParams) -> CheckResult:
    """Shape properties of S_n for x in (-1, 0)."""
    n_max = params.n_or(200)
    failures = []
    for x in params.xs_or(SHAPE_XS):
        scan = shape_scan(x, n_max)
        failures.extend(
            f"x={format_rational(v.x)} n={v.n} {v.clause}: {v.detail}" for v in scan.violations
        )
    return CheckResult.from_failures("shapes", failures, f"6 <= n <= {n_max}")


# =============================================================================
# SPECTRAL
# =============================================================================

def check_operator_gap(params: CheckParams) -> CheckResult:
    """Staircase measure 1/n exactly, Hilbert-Schmidt gap under 1/sqrt(n)."""
    n_max = params.n_or(1000)
    failures = [
        f"measure of the staircase for n={n} is {staircase_measure(n)}"
        for n in range(2, n_max + 1)
        if staircase_measure(n) != Fraction(1, n)
    ]
    for n in (10, 50, 100):
        hs = hilbert_schmidt_gap(n)
        if hs > 1 / math.sqrt(n) + 1e-6:
            failures.append(f"HS gap {hs:.6g} above 1/sqrt({n})")
    return CheckResult.from_failures(
        "operator_gap", failures, f"measure for n <= {n_max}, HS norm at 10, 50, 100"
    )


def check_eigen(params: CheckParams) -> CheckResult:
    """exp(-1/lambda_m) = x/y and small eigen-residuals of T."""
    failures = []
    for x in params.xs_or(SHAPE_XS):
        pairs = eigenpairs(x, range(-3, 4))
        for pair in pairs:
            if exp_check(pair) > 1e-12:
                failures.append(f"exp check m={pair.m} x={x}: {exp_check(pair):.2e}")
            if -2 <= pair.m <= 1 and eigen_residual(pair) > 1e-8:
                failures.append(f"residual m={pair.m} x={x}: {eigen_residual(pair):.2e}")
        moduli = {p.m: abs(p.lambda_m) for p in pairs}
        if not moduli[0] > moduli[1] or not math.isclose(moduli[0], moduli[-1]):
            failures.append(f"dominant pair ordering fails at x={x}")
    return CheckResult.from_failures("eigen", failures, "m in [-3, 3]")


def check_commuting_diagram(params: CheckParams) -> CheckResult:
    """A_n applied to s_n equals s_{n+1}, and the integral of s_n is a_n/(n-1)!."""
    n_max = params.n_or(50)
    failures = []
    for x in params.xs_or(SHAPE_XS):
        values = a_sequence(x, n_max)
        previous = None
        for s in iter_s_sequences(x, n_max):
            step = embed(s)
            if step.integral() != values[s.n - 1] / math.factorial(s.n - 1):
                failures.append(f"integral of s_{s.n} != a_n/(n-1)! at x={x}")
            if previous is not None and apply_A_n(embed(previous), previous.n, x) != step:
                failures.append(f"A_{previous.n} s_{previous.n} != s_{s.n} at x={x}")
            previous = s
    return CheckResult.from_failures("commuting_diagram", failures, f"n <= {n_max}")


def check_angles(params: CheckParams) -> CheckResult:
    """theta_n decreases, Parseval holds, and tan(theta_n) follows the two regimes."""
    x = params.x if params.x is not None else Fraction(-1, 2)
    n_hi = params.n_or(400)
    failures = []

    trace = angle_trace(x, n_hi, 50)
    by_n = trace.by_n()
    if 300 <= n_hi and not by_n[300].theta < by_n[50].theta:
        failures.append(f"theta_300 = {by_n[300].theta:.4g} not below theta_50")
    for record in trace.records:
        if record.parseval_gap > 1e-10:
            failures.append(f"Parseval gap {record.parseval_gap:.2e} at n={record.n}")
        if abs(math.sin(record.theta) ** 2 + math.cos(record.theta) ** 2 - 1) > 1e-12:
            failures.append(f"sin^2 + cos^2 != 1 at n={record.n}")

    window = AngleTrace(x=trace.x, records=[r for r in trace.records if r.n >= 200])
    regimes = tan_regime_check(window, x)
    failures.extend(
        f"n={v.n} regime {v.regime}: tan {v.tan_next:.4g} >= {v.bound:.4g}"
        for v in regimes.violations
    )
    if not regimes.verified:
        failures.append(f"no regime step above the threshold {regimes.threshold:.4g}")
    return CheckResult.from_failures(
        "angles", failures,
        f"x={format_rational(x)}, {regimes.checked} regime steps checked, "
        f"{regimes.skipped} below threshold",
    )


def check_growth(params: CheckParams) -> CheckResult:
    """Slope of log(|a_n|/(n-1)!) within 2% of log(lambda)."""
    x = params.x if params.x is not None else Fraction(-1, 2)
    fit = growth_rate(x, 150, max(params.n_or(300), 160))
    status = CheckStatus.PASS if fit.relative_error < 0.02 else CheckStatus.FAIL
    return CheckResult(
        "growth", status,
        f"x={format_rational(x)} slope {fit.slope:.5f} vs log(lambda) {fit.predicted:.5f} "
        f"({100 * fit.relative_error:.2f}%)",
    )


def check_norm_ratio(params: CheckParams) -> CheckResult:
    """||s_n||_1 / ||s_n||_inf stays above the configured floor."""
    x = params.x if params.x is not None else Fraction(-1, 2)
    n_max = params.n_or(300)
    records = norm_ratio_trace(x, 20, n_max)
    lowest = min(records, key=lambda r: r.ratio)
    floor = settings.norm_ratio_floor
    status = CheckStatus.PASS if lowest.ratio > floor else CheckStatus.FAIL
    return CheckResult(
        "norm_ratio", status,
        f"min ratio {lowest.ratio:.4f} at n={lowest.n} (floor {floor})",
    )


# =============================================================================
# REGISTRY
# =============================================================================

ALL_CHECKS: Dict[str, Callable[[CheckParams], CheckResult]] = {
    "formats": check_formats,
    "signed_catalan": check_signed_catalan,
    "factorial_bounds": check_factorial_bounds,
    "signatures": check_signatures,
    "hypercubes": check_hypercubes,
    "lattice_paths": check_lattice_paths,
    "dynamics": check_dynamics,
    "shapes": check_shapes,
    "operator_gap": check_operator_gap,
    "eigen": check_eigen,
    "commuting_diagram": check_commuting_diagram,
    "angles": check_angles,
    "growth": check_growth,
    "norm_ratio": check_norm_ratio,
}


def get_check(name: str) -> Callable[[CheckParams], CheckResult]:
    """Get a check by name."""
    if name not in ALL_CHECKS:
        raise KeyError(f"unknown check '{name}'; choose from {', '.join(ALL_CHECKS)}")
    return ALL_CHECKS[name]


def list_checks() -> List[dict]:
    """List all registered checks with their one-line description."""
    return [
        {"id": name, "description": (check.__doc__ or "").strip().splitlines()[0]}
        for name, check in ALL_CHECKS.items()
    ]


def run_check(name: str, params: CheckParams) -> CheckResult:
    """
    Run one check, turning contract errors into a FAIL result.

    EnumerationCapError and other ValueErrors mean the requested size or x
    is outside what the check supports; they are reported, not raised.
    Any other exception is a bug in a pipeline and is reported as an error
    so the remaining checks still run.
    """
    check = get_check(name)
    try:
        result = check(params)
    except (EnumerationCapError, ValueError) as e:
        logger.warning(f"check {name} could not run: {e}")
        result = CheckResult(name, CheckStatus.FAIL, f"not run: {e}")
    except Exception as e:
        logger.exception(f"check {name} crashed")
        result = CheckResult(name, CheckStatus.FAIL, f"error: {type(e).__name__}: {e}")
    logger.info(f"check {name}: {result.status.value}")
    return result
