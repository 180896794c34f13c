"""Orientation predicates on the closed unit disk.

Conventions: the plane has y pointing up, a point is to the *right* of the
directed line ``a -> b`` when ``cross(b - a, q - a) < 0``.  A point lying on
the line counts as right, so every predicate is a total function returning
``+1`` or ``-1``.  "On the line" means ``|cross| <= ON_LINE_TOL``, a few ulps
at unit-disk scale, so that e.g. the center is on the diameter from angle 0
to angle ``math.pi`` even though ``math.sin(math.pi) != 0``.

The scalar functions take :class:`UnitCirclePoint`, :class:`PlanePoint` or
plain ``(x, y)`` pairs.  The ``*_xy`` kernels take coordinate arrays and are
what the Monte Carlo engine and the bulk property checks use.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import IntEnum
from typing import Tuple, Union

import numpy as np

TWO_PI = 2.0 * math.pi
ON_LINE_TOL = 2.0**-50


class DegenerateError(ValueError):
    """Raised when a line or triangle is defined by coinciding points."""


class Sign(IntEnum):
    POSITIVE = 1
    NEGATIVE = -1


@dataclass(frozen=True)
class UnitCirclePoint:
    """A point on the unit circle, stored as its angle in ``[0, 2*pi)``."""

    theta: float

    def __post_init__(self) -> None:
        if not math.isfinite(self.theta):
            raise ValueError(f"angle must be finite, got {self.theta!r}")
        t = math.fmod(self.theta, TWO_PI)
        if t < 0.0:
            t += TWO_PI
        if t >= TWO_PI:  # fmod of a tiny negative angle can round up to 2*pi
            t = 0.0
        object.__setattr__(self, "theta", t)

    @property
    def xy(self) -> Tuple[float, float]:
        return (math.cos(self.theta), math.sin(self.theta))


@dataclass(frozen=True)
class PlanePoint:
    x: float
    y: float

    def __post_init__(self) -> None:
        if not (math.isfinite(self.x) and math.isfinite(self.y)):
            raise ValueError(f"coordinates must be finite, got ({self.x!r}, {self.y!r})")

    @property
    def xy(self) -> Tuple[float, float]:
        return (self.x, self.y)


PointLike = Union[UnitCirclePoint, PlanePoint, Tuple[float, float]]


def as_xy(p: PointLike) -> Tuple[float, float]:
    if isinstance(p, (UnitCirclePoint, PlanePoint)):
        return p.xy
    x, y = p
    return (float(x), float(y))


def _same(a: PointLike, b: PointLike) -> bool:
    if isinstance(a, UnitCirclePoint) and isinstance(b, UnitCirclePoint):
        return a.theta == b.theta
    return as_xy(a) == as_xy(b)


# -- array kernels ----------------------------------------------------------


def cross_xy(qx, qy, ax, ay, bx, by):
    """``cross(b - a, q - a)``; positive when q is left of ``a -> b``."""
    return (bx - ax) * (qy - ay) - (by - ay) * (qx - ax)


def side_of_xy(qx, qy, ax, ay, bx, by):
    """Vectorised :func:`side_of` returning an ``int8`` array of +-1."""
    c = cross_xy(qx, qy, ax, ay, bx, by)
    return np.where(c > ON_LINE_TOL, -1, 1).astype(np.int8)


def orientation_xy(ax, ay, bx, by, cx, cy):
    """Vectorised :func:`orientation`; inputs are assumed non-degenerate."""
    area2 = ax * (by - cy) + bx * (cy - ay) + cx * (ay - by)
    return np.where(area2 < 0.0, 1, -1).astype(np.int8)


def contains_xy(ax, ay, bx, by, cx, cy, xx, xy):
    """Vectorised :func:`contains`; inputs are assumed non-degenerate."""
    o = orientation_xy(ax, ay, bx, by, cx, cy)
    return (
        (side_of_xy(xx, xy, ax, ay, bx, by) == o)
        & (side_of_xy(xx, xy, bx, by, cx, cy) == o)
        & (side_of_xy(xx, xy, cx, cy, ax, ay) == o)
    )


# -- scalar predicates ------------------------------------------------------


def side_of(query: PointLike, frm: PointLike, to: PointLike) -> Sign:
    """+1 if ``query`` is right of or on the directed line ``frm -> to``, else -1."""
    if _same(frm, to):
        raise DegenerateError("degenerate directed line")
    qx, qy = as_xy(query)
    ax, ay = as_xy(frm)
    bx, by = as_xy(to)
    return Sign.NEGATIVE if cross_xy(qx, qy, ax, ay, bx, by) > ON_LINE_TOL else Sign.POSITIVE


def _check_triangle(a: PointLike, b: PointLike, c: PointLike) -> None:
    if _same(a, b) or _same(b, c) or _same(c, a):
        raise DegenerateError("degenerate triangle")


def orientation(a: PointLike, b: PointLike, c: PointLike) -> Sign:
    """+1 for a clockwise triangle (negative signed area), -1 for counterclockwise."""
    _check_triangle(a, b, c)
    ax, ay = as_xy(a)
    bx, by = as_xy(b)
    cx, cy = as_xy(c)
    area2 = ax * (by - cy) + bx * (cy - ay) + cx * (ay - by)  # shoelace
    return Sign.POSITIVE if area2 < 0.0 else Sign.NEGATIVE


def contains(a: PointLike, b: PointLike, c: PointLike, x: PointLike) -> bool:
    """Whether ``x`` lies inside triangle ``abc``.

    ``x`` is inside exactly when it sits on the same side of all three
    directed edges as the triangle's orientation says the interior does.
    """
    o = orientation(a, b, c)
    return side_of(x, a, b) == o and side_of(x, b, c) == o and side_of(x, c, a) == o


def check_relation1(a: PointLike, b: PointLike, c: PointLike, x: PointLike) -> bool:
    """``(2[x in abc] + 1) * orient(abc) == R(x,ab) + R(x,bc) + R(x,ca)``."""
    lhs = (2 * int(contains(a, b, c, x)) + 1) * orientation(a, b, c)
    rhs = side_of(x, a, b) + side_of(x, b, c) + side_of(x, c, a)
    return lhs == rhs


def check_relation2(a: PointLike, b: PointLike, c: PointLike) -> bool:
    """A triangle is clockwise iff its third vertex is right of the first edge."""
    return orientation(a, b, c) == side_of(c, a, b)


def check_relation3(a: PointLike, b: PointLike, c: PointLike, x: PointLike) -> bool:
    """``2[x in abc] == R(x,ab) R(c,ab) - R(a,xc) R(b,xc)``."""
    lhs = 2 * int(contains(a, b, c, x))
    rhs = side_of(x, a, b) * side_of(c, a, b) - side_of(a, x, c) * side_of(b, x, c)
    return lhs == rhs

