"""Real dilogarithm ``Li2(x)`` for ``x <= 1``.

The power series ``sum x**n / n**2`` is only used on ``|x| <= 1/2`` where it
converges at least like ``2**-n``.  Everything else is mapped into that disk
by functional equations:

* ``1/2 < x < 1``: reflection ``Li2(x) = pi^2/6 - ln(x) ln(1-x) - Li2(1-x)``
* ``-1 <= x < -1/2``: duplication ``Li2(x) = -Li2(-x) + Li2(x^2) / 2``
* ``x < -1``: inversion ``Li2(x) = -pi^2/6 - ln(-x)^2 / 2 - Li2(1/x)``

:func:`li2_integral_oracle` evaluates the defining integral by quadrature and
shares no code with the series path.
"""

from __future__ import annotations

import math

import numpy as np

from .integrate import QuadResult, QuadratureError, gauss_legendre

ZETA2 = math.pi**2 / 6.0
_EPS = 2.0**-53

# Truncation point for the x = 1 oracle integral in the t = -ln(1-u) variable.
_T_MAX = 48.0


def _series(x: float) -> float:
    """Partial sums of the defining series, ``|x| <= 1/2``.

    Stops once the tail bound ``|x|^(n+1) / ((n+1)^2 (1-|x|))`` drops below
    half an ulp of the running sum.
    """
    ax = abs(x)
    if ax == 0.0:
        return 0.0
    total = 0.0
    power = 1.0
    n = 0
    while True:
        n += 1
        power *= x
        total += power / (n * n)
        tail = ax ** (n + 1) / ((n + 1) ** 2 * (1.0 - ax))
        if tail <= _EPS * abs(total):
            return total


def li2(x: float) -> float:
    """Real dilogarithm, accurate to about ``1e-15`` relative."""
    x = float(x)
    if math.isnan(x):
        raise ValueError("li2 of NaN")
    if x > 1.0:
        raise ValueError(f"outside real branch: li2 needs x <= 1, got {x!r}")
    if x == 1.0:
        return ZETA2
    if x == 0.0:
        return 0.0
    if x < -1.0:
        return -ZETA2 - 0.5 * math.log(-x) ** 2 - li2(1.0 / x)
    if x < -0.5:
        return -li2(-x) + 0.5 * li2(x * x)
    if x <= 0.5:
        return _series(x)
    return ZETA2 - math.log(x) * math.log1p(-x) - _series(1.0 - x)


def li2_landen(x: float) -> float:
    """Li2 for ``x < 0`` via Landen's identity.

    ``Li2(x) = -Li2(x/(x-1)) - ln(1-x)^2 / 2``.  Kept as an alternative route
    over the range handled by duplication in :func:`li2`.
    """
    if not x < 0.0:
        raise ValueError(f"li2_landen needs x < 0, got {x!r}")
    return -li2(x / (x - 1.0)) - 0.5 * math.log1p(-x) ** 2


def _integrand_u(u: np.ndarray) -> np.ndarray:
    # -ln(1-u)/u, continuous extension 1 at u = 0
    with np.errstate(invalid="ignore", divide="ignore"):
        out = -np.log1p(-u) / u
    return np.where(u == 0.0, 1.0, out)


def _integrand_t(t: np.ndarray) -> np.ndarray:
    # after u = 1 - exp(-t): t / (e^t - 1), continuous extension 1 at t = 0
    with np.errstate(invalid="ignore", divide="ignore"):
        out = t / np.expm1(t)
    return np.where(t == 0.0, 1.0, out)


def _negated(res: QuadResult) -> QuadResult:
    return QuadResult(-res.value, res.abs_error_estimate, res.evaluations)


def li2_integral_oracle(x: float, tol: float = 1e-11, max_panels: int = 1 << 14) -> QuadResult:
    """``-integral_0^x ln(1-u)/u du`` by Gauss-Legendre quadrature.

    For ``0 < x <= 1`` the substitution ``u = 1 - exp(-t)`` removes the
    logarithmic endpoint singularity at ``u = 1``; the ``x = 1`` integral
    over ``[0, inf)`` is cut at ``t = 48`` and the discarded tail (under
    ``(T+1) e^-T``) is added to the error estimate.
    """
    x = float(x)
    if x > 1.0:
        raise ValueError(f"outside real branch: li2 needs x <= 1, got {x!r}")
    if x == 0.0:
        return QuadResult(0.0, 0.0, 1)
    if x < 0.0:
        try:
            res = gauss_legendre(_integrand_u, x, 0.0, tol, max_panels)
        except QuadratureError as exc:
            raise QuadratureError(str(exc), _negated(exc.best)) from None
        return _negated(res)
    upper = _T_MAX if x == 1.0 else -math.log1p(-x)
    tail = (_T_MAX + 1.0) * math.exp(-_T_MAX) if x == 1.0 else 0.0
    res = gauss_legendre(_integrand_t, 0.0, upper, tol, max_panels)
    return QuadResult(res.value, res.abs_error_estimate + tail, res.evaluations)
