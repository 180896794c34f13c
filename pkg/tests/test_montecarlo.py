import itertools
import math

import numpy as np
import pytest

from inscribed.closed_forms import chord_cdf, p_contain, three_circle_probability
from inscribed.montecarlo import (
    CHUNK,
    McEstimate,
    _line_meets_right_circle,
    simulate_chords,
    simulate_three_circles,
    simulate_triangle,
)

TRIALS = 10**6


def crossing_probability_by_enumeration():
    """Two chords on four iid uniform points cross iff their endpoints interleave.

    All 24 circular orders are equally likely, so count interleaved ones.
    """
    hits = 0
    perms = list(itertools.permutations(range(4)))
    for order in perms:
        pos = {p: i for i, p in enumerate(order)}
        lo, hi = sorted((pos[0], pos[1]))
        hits += (lo < pos[2] < hi) != (lo < pos[3] < hi)
    return hits / len(perms)


def within(est, p, k=5.0):
    return abs(est.p_hat - p) <= k * est.std_err


def test_estimate_fields():
    est = McEstimate.from_count("x", 25, 100, 7)
    assert est.p_hat == 0.25 and est.std_err == pytest.approx(math.sqrt(0.25 * 0.75 / 100))
    assert est.z_score(0.25) == 0.0
    zero = McEstimate.from_count("x", 0, 10, 0)
    assert zero.std_err == 0.0 and zero.z_score(0.0) == 0.0 and zero.z_score(0.1) is None


@pytest.mark.parametrize("r", [0.0, 0.3, 0.5, 0.8])
def test_triangle_gate(r):
    est = simulate_triangle(r, TRIALS, seed=1, workers=1)
    assert est.trials == TRIALS and est.experiment == "triangle"
    assert within(est, p_contain(r))


def test_triangle_on_circle_never_contained():
    est = simulate_triangle(1.0, TRIALS, seed=0, workers=1)
    assert est.p_hat == 0.0


def test_triangle_rotation_invariance():
    a = simulate_triangle(0.5, TRIALS, seed=2, workers=1)
    b = simulate_triangle(0.5, TRIALS, seed=2, workers=1, rotation=1.2345)
    assert a.p_hat != b.p_hat
    assert abs(a.p_hat - b.p_hat) <= 5 * math.hypot(a.std_err, b.std_err)


def test_triangle_validation():
    with pytest.raises(ValueError):
        simulate_triangle(1.5, 10)
    with pytest.raises(ValueError):
        simulate_triangle(0.5, 0)
    with pytest.raises(ValueError):
        simulate_triangle(0.5, 10, workers=0)


def test_chords_gate_and_acceptance():
    ests = simulate_chords([0.3, 0.5, 0.6, 0.9, 1.0], TRIALS, seed=3, workers=1)
    for est in ests[:-1]:
        assert within(est, chord_cdf(est.params["r"]))
    assert ests[-1].p_hat == 1.0
    expected_rate = crossing_probability_by_enumeration()
    assert expected_rate == pytest.approx(1 / 3)
    attempts = ests[0].diagnostics["attempts"]
    rate = ests[0].diagnostics["acceptance_rate"]
    assert abs(rate - expected_rate) <= 5 * math.sqrt(expected_rate * (1 - expected_rate) / attempts)


def test_three_circles_gate():
    ab, bc = simulate_three_circles(TRIALS, seed=4, workers=1)
    p = three_circle_probability()
    assert within(ab, p) and within(bc, p)
    assert abs(ab.p_hat - bc.p_hat) <= 5 * math.hypot(ab.std_err, bc.std_err)
    assert (ab.params["line"], bc.params["line"]) == ("AB", "BC")


def test_tangent_line_counts_as_meeting():
    # y = 1 touches the right circle at (2, 1)
    assert _line_meets_right_circle(np.array(-2.0), np.array(1.0), np.array(0.0), np.array(1.0))
    assert not _line_meets_right_circle(np.array(-2.0), np.array(1.0), np.array(0.0), np.array(1.001))
    # through both tangency points: the center line
    assert _line_meets_right_circle(np.array(-1.0), np.array(0.0), np.array(1.0), np.array(0.0))


def test_worker_count_does_not_change_results():
    n = 2 * CHUNK + 12345
    one = simulate_triangle(0.4, n, seed=9, workers=1)
    three = simulate_triangle(0.4, n, seed=9, workers=3)
    assert one == three
    assert simulate_chords([0.5], n, seed=9, workers=1) == simulate_chords([0.5], n, seed=9, workers=2)
    assert simulate_three_circles(n, seed=9, workers=1) == simulate_three_circles(n, seed=9, workers=2)


def test_seed_changes_results():
    assert simulate_triangle(0.4, 10**5, seed=1).p_hat != simulate_triangle(0.4, 10**5, seed=2).p_hat
