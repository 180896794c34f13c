"""Deterministic Monte Carlo estimates of the closed-form probabilities.

Trials are processed in fixed-size chunks whose boundaries depend only on the
trial count, never on the number of workers.  Each chunk returns integer
counts, so the totals are identical however chunks are scheduled.
"""

from __future__ import annotations

import math
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import partial
from typing import Callable, Dict, List, Optional, Sequence, Tuple

import numpy as np

from .predicates import TWO_PI, contains_xy, cross_xy
from .rng import trial_keys, uniforms

CHUNK = 1 << 18

# ThreeCircleConfig: unit radius, centers collinear and pairwise tangent.
CIRCLE_RADIUS = 1.0
LEFT_CENTER = (-2.0, 0.0)
MIDDLE_CENTER = (0.0, 0.0)
RIGHT_CENTER = (2.0, 0.0)


@dataclass(frozen=True)
class McEstimate:
    experiment: str
    p_hat: float
    trials: int
    std_err: float
    seed: int
    params: Dict[str, float] = field(default_factory=dict)
    diagnostics: Dict[str, float] = field(default_factory=dict)

    @classmethod
    def from_count(cls, experiment, successes, trials, seed, params=None, diagnostics=None):
        p = successes / trials
        return cls(
            experiment=experiment,
            p_hat=p,
            trials=trials,
            std_err=math.sqrt(p * (1.0 - p) / trials),
            seed=seed,
            params=dict(params or {}),
            diagnostics=dict(diagnostics or {}),
        )

    def z_score(self, expected: float) -> Optional[float]:
        diff = self.p_hat - expected
        if self.std_err == 0.0:
            return 0.0 if diff == 0.0 else None
        return diff / self.std_err


def default_workers() -> int:
    return os.cpu_count() or 1


def _run_chunks(kernel: Callable, trials: int, seed: int, workers: Optional[int]) -> np.ndarray:
    if trials < 1:
        raise ValueError(f"trials must be >= 1, got {trials!r}")
    bounds = [(s, min(s + CHUNK, trials)) for s in range(0, trials, CHUNK)]
    job = partial(kernel, seed)
    workers = default_workers() if workers is None else workers
    if workers < 1:
        raise ValueError(f"workers must be >= 1, got {workers!r}")
    if workers == 1 or len(bounds) == 1:
        parts = [job(b) for b in bounds]
    else:
        with ProcessPoolExecutor(max_workers=min(workers, len(bounds))) as pool:
            parts = list(pool.map(job, bounds))
    total = np.zeros_like(parts[0])
    for p in parts:
        total += p
    return total


def _circle_xy(u: np.ndarray, center=(0.0, 0.0)) -> Tuple[np.ndarray, np.ndarray]:
    t = TWO_PI * u
    return center[0] + np.cos(t), center[1] + np.sin(t)


# -- triangle containing a point ------------------------------------------------


def _triangle_kernel(seed: int, bounds: Tuple[int, int], r: float, rotation: float) -> np.ndarray:
    keys = trial_keys(seed, *bounds)
    pts = []
    for k in range(3):
        t = TWO_PI * uniforms(keys, k) + rotation
        pts += [np.cos(t), np.sin(t)]
    inside = contains_xy(*pts, r, 0.0)
    return np.array([np.count_nonzero(inside)], dtype=np.int64)


def simulate_triangle(
    r: float, trials: int, seed: int = 0, workers: Optional[int] = None, rotation: float = 0.0
) -> McEstimate:
    """Fraction of random inscribed triangles containing ``(r, 0)``.

    ``rotation`` shifts all three vertex angles by a constant, which must not
    change the law of the estimate.
    """
    r = float(r)
    if not 0.0 <= r <= 1.0:
        raise ValueError(f"r must lie in [0, 1], got {r!r}")
    kernel = partial(_triangle_kernel, r=r, rotation=float(rotation))
    (hits,) = _run_chunks(kernel, trials, seed, workers)
    params = {"r": r}
    if rotation:
        params["rotation"] = float(rotation)
    return McEstimate.from_count("triangle", int(hits), trials, seed, params)


# -- crossing point of two random chords ----------------------------------------


def _chords_kernel(seed: int, bounds: Tuple[int, int], r_grid: Tuple[float, ...]) -> np.ndarray:
    keys = trial_keys(seed, *bounds)
    dist = np.empty(keys.shape[0])
    pending = np.arange(keys.shape[0])
    attempts = 0
    j = 0
    while pending.size:
        kk = keys[pending]
        p1x, p1y = _circle_xy(uniforms(kk, 4 * j))
        p2x, p2y = _circle_xy(uniforms(kk, 4 * j + 1))
        q1x, q1y = _circle_xy(uniforms(kk, 4 * j + 2))
        q2x, q2y = _circle_xy(uniforms(kk, 4 * j + 3))
        attempts += pending.size
        c1 = cross_xy(q1x, q1y, p1x, p1y, p2x, p2y)
        c2 = cross_xy(q2x, q2y, p1x, p1y, p2x, p2y)
        c3 = cross_xy(p1x, p1y, q1x, q1y, q2x, q2y)
        c4 = cross_xy(p2x, p2y, q1x, q1y, q2x, q2y)
        ok = (c1 * c2 < 0.0) & (c3 * c4 < 0.0)
        t = c3[ok] / (c3[ok] - c4[ok])
        zx = p1x[ok] + t * (p2x[ok] - p1x[ok])
        zy = p1y[ok] + t * (p2y[ok] - p1y[ok])
        # a crossing point is a convex combination of points on the circle
        dist[pending[ok]] = np.minimum(np.hypot(zx, zy), 1.0)
        pending = pending[~ok]
        j += 1
    counts = [np.count_nonzero(dist <= r) for r in r_grid]
    return np.array(counts + [attempts], dtype=np.int64)


def simulate_chords(
    r_grid: Sequence[float], trials: int, seed: int = 0, workers: Optional[int] = None
) -> List[McEstimate]:
    """Empirical CDF of the distance from the origin to the crossing of two chords.

    Each trial draws four uniform endpoints and retries (from the same
    stream) until the two open chords cross, so ``trials`` counts accepted
    pairs.  The acceptance rate is reported in ``diagnostics``.
    """
    grid = tuple(float(r) for r in r_grid)
    if not grid:
        raise ValueError("r_grid must not be empty")
    counts = _run_chunks(partial(_chords_kernel, r_grid=grid), trials, seed, workers)
    attempts = int(counts[-1])
    diag = {"acceptance_rate": trials / attempts, "attempts": attempts}
    return [
        McEstimate.from_count("chords", int(c), trials, seed, {"r": r}, diag)
        for r, c in zip(grid, counts[:-1])
    ]


# -- three tangent circles ------------------------------------------------------


def _line_meets_right_circle(px, py, qx, qy):
    """Closed test: tangent lines count as meeting the circle."""
    dist_num = np.abs(cross_xy(RIGHT_CENTER[0], RIGHT_CENTER[1], px, py, qx, qy))
    return dist_num <= CIRCLE_RADIUS * np.hypot(qx - px, qy - py)


def _three_circles_kernel(seed: int, bounds: Tuple[int, int]) -> np.ndarray:
    keys = trial_keys(seed, *bounds)
    hits_ab = hits_bc = resampled = 0
    pending = np.arange(keys.shape[0])
    j = 0
    while pending.size:
        kk = keys[pending]
        ax, ay = _circle_xy(uniforms(kk, 3 * j), LEFT_CENTER)
        bx, by = _circle_xy(uniforms(kk, 3 * j + 1), MIDDLE_CENTER)
        cx, cy = _circle_xy(uniforms(kk, 3 * j + 2), MIDDLE_CENTER)
        bad = ((ax == bx) & (ay == by)) | ((bx == cx) & (by == cy))
        ok = ~bad
        hits_ab += np.count_nonzero(_line_meets_right_circle(ax, ay, bx, by) & ok)
        hits_bc += np.count_nonzero(_line_meets_right_circle(bx, by, cx, cy) & ok)
        resampled += np.count_nonzero(bad)
        pending = pending[bad]
        j += 1
    return np.array([hits_ab, hits_bc, resampled], dtype=np.int64)


def simulate_three_circles(
    trials: int, seed: int = 0, workers: Optional[int] = None
) -> Tuple[McEstimate, McEstimate]:
    """Estimate P(line AB meets the right circle) and P(line BC meets it).

    A is uniform on the left circle, B and C on the middle one.  Trials with
    coinciding defining points are redrawn from the same stream.
    """
    ab, bc, resampled = _run_chunks(_three_circles_kernel, trials, seed, workers)
    diag = {"resampled": int(resampled)}
    return (
        McEstimate.from_count("three-circles", int(ab), trials, seed, {"line": "AB"}, diag),
        McEstimate.from_count("three-circles", int(bc), trials, seed, {"line": "BC"}, diag),
    )
