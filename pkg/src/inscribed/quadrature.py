"""Integral representations of the containment probability.

With the query point at ``X = (r, 0)`` and a circle point ``C = e^{i theta}``,
the line XC splits the circle into two arcs.  Their signed, normalised
difference is ``(2/pi) * arg(1 - r e^{i theta})`` and the containment
probability is an integral of its square over ``theta``.  The functions here
evaluate those integrals numerically; the closed forms they should agree
with live in :mod:`inscribed.closed_forms`.
"""

from __future__ import annotations

import math

import numpy as np

from .integrate import QuadResult, gauss_legendre
from .predicates import TWO_PI, UnitCirclePoint, side_of_xy

DEFAULT_MAX_PANELS = 1 << 14


def _check_interior(r):
    arr = np.asarray(r, dtype=float)
    if not np.all((arr >= 0.0) & (arr < 1.0)):
        raise ValueError(f"r must lie in [0, 1), got {r!r}")
    return float(arr) if arr.ndim == 0 else arr


def _angle(c):
    if isinstance(c, UnitCirclePoint):
        return c.theta
    return np.mod(np.asarray(c, dtype=float), TWO_PI)


def _as_output(v):
    return float(v) if np.ndim(v) == 0 else v


def arg_one_minus(r: float, theta):
    """``arg(1 - r e^{i theta})``, which lies in ``(-pi/2, pi/2)`` for ``r < 1``."""
    return np.arctan2(-r * np.sin(theta), 1.0 - r * np.cos(theta))


def arc_difference(r, c):
    """Normalised signed arc difference for the line through ``(r, 0)`` and ``c``.

    Equals ``mu(right arc) - mu(left arc)`` relative to the directed line
    ``X -> C``.  ``c`` is a :class:`UnitCirclePoint` or an angle; ``r`` and
    the angle broadcast as numpy arrays.

    The magnitude is ``(2/pi) |arg(1 - r e^{i theta})|``.  The sign comes from
    probing the antipode ``-C``, which lies on the larger arc's side since it
    is on the diameter through ``C``.
    """
    r = _check_interior(r)
    theta = _angle(c)
    cx, cy = np.cos(theta), np.sin(theta)
    mag = (2.0 / math.pi) * np.abs(arg_one_minus(r, theta))
    sign = side_of_xy(-cx, -cy, r, 0.0, cx, cy)
    return _as_output(sign * mag)


def arc_difference_geometric(r, c):
    """Same quantity as :func:`arc_difference`, by explicit construction.

    Intersects line XC with the circle again at ``N``, measures the
    counterclockwise arc from ``C`` to ``N``, and decides which side of the
    directed line it is on by testing its midpoint.
    """
    r = _check_interior(r)
    theta = _angle(c)
    cx, cy = np.cos(theta), np.sin(theta)
    dx, dy = r - cx, -cy
    # |C + t d|^2 = 1 has roots t = 0 and t = -2 C.d / |d|^2
    t = -2.0 * (cx * dx + cy * dy) / (dx * dx + dy * dy)
    nx, ny = cx + t * dx, cy + t * dy
    ccw = np.mod(np.arctan2(ny, nx) - theta, TWO_PI)
    mid = theta + 0.5 * ccw
    probe = side_of_xy(np.cos(mid), np.sin(mid), r, 0.0, cx, cy)
    right = np.where(probe > 0, ccw, TWO_PI - ccw)
    return _as_output(right / math.pi - 1.0)


def arg_square_integral(r: float, tol: float = 1e-10, max_panels: int = DEFAULT_MAX_PANELS) -> QuadResult:
    """``integral_0^{2pi} arg(1 - r e^{i theta})^2 dtheta``; equals ``pi * Li2(r^2)``."""
    r = _check_interior(r)
    return gauss_legendre(lambda th: arg_one_minus(r, th) ** 2, 0.0, TWO_PI, tol, max_panels)


def arg_square_integral_derivative(
    r: float, tol: float = 1e-9, max_panels: int = DEFAULT_MAX_PANELS
) -> QuadResult:
    """r-derivative of :func:`arg_square_integral`, differentiated under the integral.

    Should equal ``-2 pi ln(1 - r^2) / r``.
    """
    r = _check_interior(r)
    if r == 0.0:
        raise ValueError("derivative is evaluated on 0 < r < 1")

    def integrand(th):
        kernel = np.sin(th) / (1.0 + r * r - 2.0 * r * np.cos(th))
        return -2.0 * kernel * arg_one_minus(r, th)

    return gauss_legendre(integrand, 0.0, TWO_PI, tol, max_panels)


def p_from_integral(r: float, tol: float = 1e-10) -> float:
    """Containment probability computed from :func:`arg_square_integral`."""
    return 0.25 - 3.0 / (2.0 * math.pi**3) * arg_square_integral(r, tol).value


def dif_square_integral(r: float, tol: float = 1e-10, max_panels: int = DEFAULT_MAX_PANELS) -> QuadResult:
    """Mean of ``arc_difference(r, C)^2`` over a uniform circle point ``C``.

    Should equal ``(1 - 4 P(r)) / 3`` where ``P`` is the containment probability.
    """
    r = _check_interior(r)
    return gauss_legendre(
        lambda th: arc_difference(r, th) ** 2 / TWO_PI, 0.0, TWO_PI, tol, max_panels
    )
