"""Closed-form probabilities expressed through the dilogarithm."""

from __future__ import annotations

import math

from .dilog import li2


def _check_unit_interval(r: float, name: str = "r") -> float:
    r = float(r)
    if not 0.0 <= r <= 1.0:
        raise ValueError(f"{name} must lie in [0, 1], got {r!r}")
    return r


def p_contain(r: float) -> float:
    """Probability that a random inscribed triangle contains a point at distance ``r``.

    The three vertices are independent and uniform on the unit circle; the
    point is at distance ``r`` from the center.  The value falls from 1/4 at
    the center to 0 on the circle.
    """
    r = _check_unit_interval(r)
    return 0.25 - 3.0 / (2.0 * math.pi**2) * li2(r * r)


def chord_cdf(r: float) -> float:
    """``P(|Z| <= r)`` for the crossing point ``Z`` of two random chords.

    Two chords are drawn with uniform endpoints, conditioned on crossing.
    """
    r = _check_unit_interval(r)
    return 6.0 / math.pi**2 * li2(r * r)


def three_circle_probability() -> float:
    """Chance that line AB (or BC) meets the third of three tangent unit circles.

    A is uniform on the left circle, B and C on the middle one; both lines
    have the same probability.
    """
    ln2 = math.log(2.0)
    s = math.sqrt(2.0)
    inner = 0.375 * ln2 * ln2 + li2(-s) + 3.0 * li2(1.0 / s)
    return 0.75 - 2.0 / math.pi**2 * inner
