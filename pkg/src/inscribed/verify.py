"""Cross-verification suites behind ``inscribed verify``.

Every check compares an ``actual`` value against an ``expected`` one and
passes when ``|actual - expected| <= tolerance``.  Counting checks (numbers
of identity failures) expect 0 with tolerance 0.
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass, field
from typing import Callable, Dict, List, Optional

import numpy as np

from . import closed_forms, dilog, montecarlo, quadrature
from .predicates import TWO_PI, contains_xy, cross_xy, orientation_xy, side_of_xy

SUITES = ("predicates", "dilog", "quadrature", "montecarlo")

# r in {0.05, 0.10, ..., 0.95}
R_GRID = tuple(round(0.05 * k, 2) for k in range(1, 20))
R_GRID_DERIVATIVE = tuple(round(0.1 * k, 1) for k in range(1, 10))
DEGENERACY_CUTOFF = 1e-9


@dataclass
class Check:
    name: str
    expected: float
    actual: float
    tolerance: float
    passed: bool = field(init=False)

    def __post_init__(self) -> None:
        self.passed = bool(abs(self.actual - self.expected) <= self.tolerance)

    def to_json(self) -> dict:
        d = asdict(self)
        d["pass"] = d.pop("passed")
        return d


@dataclass
class VerificationReport:
    checks: List[Check] = field(default_factory=list)

    @property
    def overall_pass(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_json(self) -> dict:
        return {"checks": [c.to_json() for c in self.checks], "overall_pass": self.overall_pass}


class _Collector:
    def __init__(self, tol_override: Optional[float]) -> None:
        self.tol_override = tol_override
        self.checks: List[Check] = []

    def add(self, name: str, expected: float, actual: float, tolerance: float) -> None:
        if self.tol_override is not None:
            tolerance = self.tol_override
        self.checks.append(Check(name, float(expected), float(actual), float(tolerance)))


# -- predicates -----------------------------------------------------------------


def predicate_identity_failures(n: int = 10**6, seed: int = 0, radius: float = 0.999) -> Dict[str, int]:
    """Count violations of the indicator relations on ``n`` random configurations.

    A, B, C are uniform on the circle, X uniform in the disk of the given
    radius.  Configurations with any relevant cross product below 1e-9 in
    magnitude are discarded; ``"used"`` reports how many remained.
    """
    rng = np.random.default_rng(seed)
    ta, tb, tc = (rng.uniform(0.0, TWO_PI, n) for _ in range(3))
    ax, ay, bx, by, cx, cy = np.cos(ta), np.sin(ta), np.cos(tb), np.sin(tb), np.cos(tc), np.sin(tc)
    rho = radius * np.sqrt(rng.uniform(0.0, 1.0, n))
    phi = rng.uniform(0.0, TWO_PI, n)
    xx, xy = rho * np.cos(phi), rho * np.sin(phi)

    crosses = [
        cross_xy(xx, xy, ax, ay, bx, by),
        cross_xy(xx, xy, bx, by, cx, cy),
        cross_xy(xx, xy, cx, cy, ax, ay),
        cross_xy(cx, cy, ax, ay, bx, by),
        cross_xy(ax, ay, xx, xy, cx, cy),
        cross_xy(bx, by, xx, xy, cx, cy),
    ]
    keep = np.ones(n, dtype=bool)
    for c in crosses:
        keep &= np.abs(c) > DEGENERACY_CUTOFF
    ax, ay, bx, by, cx, cy, xx, xy = (v[keep] for v in (ax, ay, bx, by, cx, cy, xx, xy))

    r_ab = side_of_xy(xx, xy, ax, ay, bx, by).astype(np.int64)
    r_bc = side_of_xy(xx, xy, bx, by, cx, cy).astype(np.int64)
    r_ca = side_of_xy(xx, xy, cx, cy, ax, ay).astype(np.int64)
    orient = orientation_xy(ax, ay, bx, by, cx, cy).astype(np.int64)
    inside = contains_xy(ax, ay, bx, by, cx, cy, xx, xy).astype(np.int64)

    rel1 = (2 * inside + 1) * orient != r_ab + r_bc + r_ca
    rel2 = orient != side_of_xy(cx, cy, ax, ay, bx, by)
    rel3 = 2 * inside != (
        r_ab * side_of_xy(cx, cy, ax, ay, bx, by)
        - side_of_xy(ax, ay, xx, xy, cx, cy).astype(np.int64) * side_of_xy(bx, by, xx, xy, cx, cy)
    )
    anti = side_of_xy(xx, xy, bx, by, ax, ay).astype(np.int64) != -r_ab
    return {
        "used": int(keep.sum()),
        "relation1": int(rel1.sum()),
        "relation2": int(rel2.sum()),
        "relation3": int(rel3.sum()),
        "antisymmetry": int(anti.sum()),
    }


def chord_side_mean(n: int = 10**6, seed: int = 0, r: float = 0.5):
    """Mean and standard error of ``side_of(X, A, B)`` over uniform A, B."""
    rng = np.random.default_rng(seed)
    ta, tb = rng.uniform(0.0, TWO_PI, n), rng.uniform(0.0, TWO_PI, n)
    s = side_of_xy(r, 0.0, np.cos(ta), np.sin(ta), np.cos(tb), np.sin(tb)).astype(float)
    return float(s.mean()), float(s.std(ddof=1) / math.sqrt(n))


def _suite_predicates(col: _Collector, n: int, seed: int) -> None:
    counts = predicate_identity_failures(n, seed)
    for key in ("relation1", "relation2", "relation3", "antisymmetry"):
        col.add(f"{key}_failures", 0, counts[key], 0)
    mean, se = chord_side_mean(n, seed)
    col.add("chord_side_zero_mean", 0.0, mean, 5.0 * se)


# -- dilog and closed forms -----------------------------------------------------


def _suite_dilog(col: _Collector, seed: int) -> None:
    li2 = dilog.li2
    col.add("li2_zero", 0.0, li2(0.0), 0.0)
    col.add("li2_one", math.pi**2 / 6, li2(1.0), 1e-13)

    rng = np.random.default_rng(seed)
    refl = max(
        abs(li2(x) + li2(1 - x) - (math.pi**2 / 6 - math.log(x) * math.log(1 - x)))
        for x in rng.uniform(0.01, 0.99, 100)
    )
    col.add("reflection_max_residual", 0.0, refl, 1e-12)
    inv = max(
        abs(li2(x) + li2(1 / x) + math.pi**2 / 6 + 0.5 * math.log(-x) ** 2)
        for x in rng.uniform(-100.0, -1.01, 100)
    )
    col.add("inversion_max_residual", 0.0, inv, 1e-12)
    landen = max(abs(li2(x) - dilog.li2_landen(x)) for x in np.linspace(-1.0, -0.5, 51))
    col.add("duplication_vs_landen_max", 0.0, landen, 1e-13)

    grid = np.linspace(-10.0, 1.0, 1101)
    vals = np.array([li2(x) for x in grid])
    col.add("li2_monotone_violations", 0, int(np.sum(np.diff(vals) <= 0.0)), 0)

    worst = max(
        abs(li2(x) - dilog.li2_integral_oracle(x, 1e-11).value) for x in np.linspace(-2.0, 1.0, 50)
    )
    col.add("li2_vs_integral_max", 0.0, worst, 1e-10)

    col.add("p_contain_at_0", 0.25, closed_forms.p_contain(0.0), 1e-12)
    col.add("p_contain_at_1", 0.0, closed_forms.p_contain(1.0), 1e-12)
    col.add("three_circle_constant", 0.3871287106, closed_forms.three_circle_probability(), 1e-9)
    ps = np.array([closed_forms.p_contain(r) for r in np.linspace(0.0, 1.0, 101)])
    col.add("p_contain_monotone_violations", 0, int(np.sum(np.diff(ps) >= 0.0)), 0)
    col.add("chord_cdf_at_1", 1.0, closed_forms.chord_cdf(1.0), 1e-15)


# -- quadrature -----------------------------------------------------------------


def _suite_quadrature(col: _Collector, seed: int) -> None:
    rng = np.random.default_rng(seed)
    r = rng.uniform(0.0, 0.999, 10**4)
    th = rng.uniform(0.0, TWO_PI, 10**4)
    dual = np.max(np.abs(quadrature.arc_difference_geometric(r, th) - quadrature.arc_difference(r, th)))
    col.add("arc_difference_dual_route_max", 0.0, dual, 1e-10)

    honest = 0
    for r in R_GRID:
        exact = math.pi * dilog.li2(r * r)
        res = quadrature.arg_square_integral(r, 1e-10)
        honest += abs(res.value - exact) <= res.abs_error_estimate
        col.add(f"I_equals_pi_li2[r={r:.2f}]", exact, res.value, 1e-8)
    col.add("error_estimate_honesty", 1.0, honest / len(R_GRID), 0.05)

    for r in R_GRID:
        col.add(
            f"p_from_integral[r={r:.2f}]",
            closed_forms.p_contain(r),
            quadrature.p_from_integral(r, 1e-10),
            1e-8,
        )
    for r in R_GRID:
        col.add(
            f"dif_square_identity[r={r:.2f}]",
            (1.0 - 4.0 * closed_forms.p_contain(r)) / 3.0,
            quadrature.dif_square_integral(r, 1e-10).value,
            1e-8,
        )
    for r in R_GRID_DERIVATIVE:
        col.add(
            f"dI_dr_identity[r={r:.1f}]",
            -2.0 * math.pi * math.log1p(-r * r) / r,
            quadrature.arg_square_integral_derivative(r, 1e-9).value,
            1e-7,
        )
    h = 1e-4
    fd = (
        quadrature.arg_square_integral(0.5 + h, 1e-12).value
        - quadrature.arg_square_integral(0.5 - h, 1e-12).value
    ) / (2 * h)
    col.add("dI_dr_central_difference[r=0.5]", quadrature.arg_square_integral_derivative(0.5, 1e-9).value, fd, 1e-5)


# -- Monte Carlo ----------------------------------------------------------------


def _gate(col: _Collector, name: str, est: montecarlo.McEstimate, expected: float) -> None:
    col.add(name, expected, est.p_hat, 5.0 * est.std_err)


def _suite_montecarlo(col: _Collector, trials: int, seed: int, workers: Optional[int]) -> None:
    for r in (0.0, 0.3, 0.5, 0.8):
        est = montecarlo.simulate_triangle(r, trials, seed, workers)
        _gate(col, f"triangle[r={r}]", est, closed_forms.p_contain(r))
    chords = montecarlo.simulate_chords((0.3, 0.6, 0.9), trials, seed, workers)
    for est in chords:
        _gate(col, f"chords[r={est.params['r']}]", est, closed_forms.chord_cdf(est.params["r"]))
    attempts = chords[0].diagnostics["attempts"]
    acc = trials / attempts
    col.add("chord_acceptance_rate", 1.0 / 3.0, acc, 5.0 * math.sqrt(acc * (1 - acc) / attempts))

    ab, bc = montecarlo.simulate_three_circles(trials, seed, workers)
    p = closed_forms.three_circle_probability()
    _gate(col, "three_circles[AB]", ab, p)
    _gate(col, "three_circles[BC]", bc, p)
    combined = math.hypot(ab.std_err, bc.std_err)
    col.add("three_circles[AB-BC]", 0.0, ab.p_hat - bc.p_hat, 5.0 * combined)


def run_suite(
    suite: str = "all",
    tol_overrides: Optional[Dict[str, float]] = None,
    trials: int = 10**6,
    seed: int = 0,
    workers: Optional[int] = None,
    predicate_samples: int = 10**6,
) -> VerificationReport:
    """Run one suite (or ``"all"``).

    ``tol_overrides`` maps a suite name, or ``"*"`` for every suite, to a
    tolerance that replaces the defaults of all checks in that suite.
    """
    names = SUITES if suite == "all" else (suite,)
    unknown = [n for n in names if n not in SUITES]
    if unknown:
        raise ValueError(f"unknown suite {unknown[0]!r}; choose from all, {', '.join(SUITES)}")
    tol_overrides = tol_overrides or {}
    runners: Dict[str, Callable[[_Collector], None]] = {
        "predicates": lambda c: _suite_predicates(c, predicate_samples, seed),
        "dilog": lambda c: _suite_dilog(c, seed),
        "quadrature": lambda c: _suite_quadrature(c, seed),
        "montecarlo": lambda c: _suite_montecarlo(c, trials, seed, workers),
    }
    report = VerificationReport()
    for name in names:
        col = _Collector(tol_overrides.get(name, tol_overrides.get("*")))
        runners[name](col)
        for check in col.checks:
            check.name = f"{name}.{check.name}"
        report.checks.extend(col.checks)
    return report
