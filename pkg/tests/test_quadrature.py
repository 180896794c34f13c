import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from inscribed.closed_forms import p_contain
from inscribed.dilog import li2
from inscribed.predicates import UnitCirclePoint, side_of
from inscribed.quadrature import (
    arc_difference,
    arc_difference_geometric,
    arg_square_integral,
    arg_square_integral_derivative,
    dif_square_integral,
    p_from_integral,
)

LI2_QUARTER = 0.2676526390827326
GRID = [round(0.05 * k, 2) for k in range(1, 20)]


def arc_difference_sampled(r, theta, n=4000):
    """Brute force: mean of side_of(A, X -> C) over n equally spaced A."""
    c = UnitCirclePoint(theta)
    ts = (np.arange(n) + 0.5) * (2 * math.pi / n)
    return sum(side_of((math.cos(t), math.sin(t)), (r, 0.0), c) for t in ts) / n


@pytest.mark.parametrize("fn", [arc_difference, arc_difference_geometric])
def test_arc_difference_examples(fn):
    assert fn(0.0, 1.234) == pytest.approx(0.0, abs=1e-15)
    assert fn(0.5, 0.0) == pytest.approx(0.0, abs=1e-15)
    assert abs(fn(0.5, math.pi / 2)) == pytest.approx(0.2951672353008665, abs=1e-10)
    assert fn(0.9, math.pi) == pytest.approx(0.0, abs=1e-12)
    assert abs(fn(0.9, math.pi / 2)) == pytest.approx(0.46652458328685176, abs=1e-10)


def test_arc_difference_sign_against_sampling():
    # right arc of X -> C for X=(0.5,0), C=(0,1) is the small cap near (1,0)
    assert arc_difference(0.5, math.pi / 2) < 0
    for r, th in [(0.5, math.pi / 2), (0.7, 4.0), (0.3, 2.5)]:
        assert arc_difference(r, th) == pytest.approx(arc_difference_sampled(r, th), abs=2e-3)


def test_arc_difference_accepts_point():
    assert arc_difference(0.5, UnitCirclePoint(math.pi / 2)) == arc_difference(0.5, math.pi / 2)


def test_arc_difference_range_error():
    with pytest.raises(ValueError):
        arc_difference(1.0, 0.3)
    with pytest.raises(ValueError):
        arc_difference_geometric(-0.1, 0.3)


@given(st.floats(0.0, 0.999), st.floats(0.0, 2 * math.pi, exclude_max=True))
def test_dual_route(r, th):
    d = arc_difference(r, th)
    assert abs(d - arc_difference_geometric(r, th)) < 1e-10
    assert -1.0 < d < 1.0


def test_dual_route_bulk():
    rng = np.random.default_rng(7)
    r, th = rng.uniform(0, 0.999, 10**4), rng.uniform(0, 2 * math.pi, 10**4)
    assert np.max(np.abs(arc_difference(r, th) - arc_difference_geometric(r, th))) < 1e-10


def test_arg_square_integral_examples():
    assert arg_square_integral(0.0).value == 0.0
    assert arg_square_integral(0.5, 1e-10).value == pytest.approx(math.pi * LI2_QUARTER, abs=1e-10)
    assert arg_square_integral(0.5, 1e-10).value == pytest.approx(0.8408556, abs=1e-7)
    assert abs(arg_square_integral(0.95, 1e-10).value - math.pi * li2(0.9025)) < 1e-8


@pytest.mark.parametrize("r", GRID)
def test_arg_square_identity(r):
    res = arg_square_integral(r, 1e-10)
    assert abs(res.value - math.pi * li2(r * r)) < 1e-8
    assert res.abs_error_estimate >= 0.0 and res.evaluations >= 16


def test_error_estimate_honesty():
    ok = 0
    for r in GRID:
        res = arg_square_integral(r, 1e-10)
        ok += abs(res.value - math.pi * li2(r * r)) <= res.abs_error_estimate
    assert ok / len(GRID) >= 0.95


def test_derivative_examples():
    assert arg_square_integral_derivative(0.5, 1e-9).value == pytest.approx(
        -4 * math.pi * math.log(0.75), abs=1e-7
    )
    assert abs(arg_square_integral_derivative(1e-3, 1e-9).value) < 1e-2
    with pytest.raises(ValueError):
        arg_square_integral_derivative(0.0)


@pytest.mark.parametrize("r", [round(0.1 * k, 1) for k in range(1, 10)])
def test_derivative_identity(r):
    res = arg_square_integral_derivative(r, 1e-9)
    assert abs(res.value + 2 * math.pi * math.log(1 - r * r) / r) < 1e-7


def test_derivative_central_difference():
    h = 1e-4
    fd = (arg_square_integral(0.5 + h, 1e-12).value - arg_square_integral(0.5 - h, 1e-12).value) / (2 * h)
    assert abs(fd - arg_square_integral_derivative(0.5, 1e-9).value) < 1e-5


def test_p_from_integral():
    assert p_from_integral(0.0) == 0.25
    assert abs(p_from_integral(0.5) - p_contain(0.5)) < 1e-8
    assert abs(p_from_integral(0.9) - p_contain(0.9)) < 1e-8


@pytest.mark.parametrize("r", GRID)
def test_dif_square_identity(r):
    assert abs(dif_square_integral(r, 1e-10).value - (1 - 4 * p_contain(r)) / 3) < 1e-8


def test_dif_square_trend():
    assert dif_square_integral(0.0).value == 0.0
    vals = [dif_square_integral(r).value for r in np.linspace(0, 0.99, 34)]
    assert all(b > a for a, b in zip(vals, vals[1:]))
    assert vals[-1] < 1 / 3
