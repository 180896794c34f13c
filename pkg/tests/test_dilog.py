import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from inscribed.dilog import ZETA2, _series, li2, li2_integral_oracle, li2_landen

# partial sum of sum 0.25**n / n**2 over n <= 40 (math.fsum); remainder < 2e-28
LI2_QUARTER = 0.2676526390827326


def test_endpoints():
    assert li2(0.0) == 0.0
    assert abs(li2(1.0) - math.pi**2 / 6) < 1e-13
    assert li2(1.0) == pytest.approx(1.6449340668482264, abs=1e-15)


def test_quarter():
    assert li2(0.25) == pytest.approx(0.2676526, abs=3e-7)
    assert abs(li2(0.25) - LI2_QUARTER) < 1e-15


def test_minus_one():
    assert li2(-1.0) == pytest.approx(-math.pi**2 / 12, abs=1e-15)


def test_half():
    expected = math.pi**2 / 12 - 0.5 * math.log(2) ** 2
    assert li2(0.5) == pytest.approx(expected, abs=1e-15)


def test_minus_sqrt2_matches_oracle():
    x = -math.sqrt(2)
    res = li2_integral_oracle(x, 1e-11)
    assert abs(li2(x) - res.value) <= 1e-11 + 1e-13


def test_outside_branch():
    with pytest.raises(ValueError, match="outside real branch"):
        li2(1.0000001)
    with pytest.raises(ValueError, match="outside real branch"):
        li2_integral_oracle(2.0)
    with pytest.raises(ValueError):
        li2(float("nan"))


def test_oracle_trivial_and_one():
    assert li2_integral_oracle(0.0, 1e-12).value == 0.0
    res = li2_integral_oracle(1.0, 1e-12)
    assert abs(res.value - math.pi**2 / 6) <= 1e-12
    assert res.abs_error_estimate >= 0.0


def test_oracle_budget_error_carries_best():
    from inscribed.integrate import QuadratureError

    with pytest.raises(QuadratureError) as info:
        li2_integral_oracle(-50.0, 1e-15, max_panels=2)
    assert info.value.best.value < 0.0


def test_oracle_grid():
    worst = max(abs(li2(x) - li2_integral_oracle(x, 1e-11).value) for x in np.linspace(-2, 1, 50))
    assert worst < 1e-10


@pytest.mark.parametrize("x", [0.5, -0.5, 0.3, -0.01, 1e-5])
def test_series_respects_tail_bound(x):
    n = 400
    reference = math.fsum(x**k / k**2 for k in range(1, n))
    ax = abs(x)
    got = _series(x)
    # stopping rule keeps the discarded tail under half an ulp of the sum
    assert abs(got - reference) <= 4 * 2.0**-53 * abs(reference) + ax ** n


@given(st.floats(0.01, 0.99))
def test_reflection(x):
    lhs = li2(x) + li2(1 - x)
    assert abs(lhs - (ZETA2 - math.log(x) * math.log(1 - x))) < 1e-12


@given(st.floats(-100.0, -1.01))
def test_inversion(x):
    assert abs(li2(x) + li2(1 / x) + ZETA2 + 0.5 * math.log(-x) ** 2) < 1e-12


@given(st.floats(-1.0, -0.5))
def test_duplication_agrees_with_landen(x):
    assert abs(li2(x) - li2_landen(x)) < 1e-13
    assert abs(li2(-x) - (-li2(x) + 0.5 * li2(x * x))) < 1e-13


def test_monotone():
    vals = [li2(x) for x in np.linspace(-10.0, 1.0, 2001)]
    assert all(b > a for a, b in zip(vals, vals[1:]))
