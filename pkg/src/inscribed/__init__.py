"""Random inscribed triangles, random chords and the dilogarithm."""

from .closed_forms import chord_cdf, p_contain, three_circle_probability
from .dilog import li2, li2_integral_oracle
from .integrate import QuadResult, QuadratureError
from .predicates import (
    DegenerateError,
    PlanePoint,
    Sign,
    UnitCirclePoint,
    contains,
    orientation,
    side_of,
)

__all__ = [
    "DegenerateError",
    "PlanePoint",
    "QuadResult",
    "QuadratureError",
    "Sign",
    "UnitCirclePoint",
    "chord_cdf",
    "contains",
    "li2",
    "li2_integral_oracle",
    "orientation",
    "p_contain",
    "side_of",
    "three_circle_probability",
]
