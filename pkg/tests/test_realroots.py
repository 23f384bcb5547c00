import math

import numpy as np
import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from quatquad.realroots import (
    NoConvergence,
    ResolventCubic,
    bracket_hi,
    eval as cubic_eval,
    positive_root,
)

CUBIC_UNIT_B = ResolventCubic(3, 3, 2)  # z^3 + 6z^2 - 3z - 4
CUBIC_B5678 = ResolventCubic(140.5, 569.3125, -573)


def sign_changes(cubic, n=1000):
    zs = np.linspace(0, bracket_hi(cubic), n)
    fs = np.array([cubic_eval(cubic, z)[0] for z in zs])
    s = np.sign(fs)
    s = s[s != 0]
    return int(np.count_nonzero(s[1:] != s[:-1]))


def test_eval_examples():
    assert cubic_eval(CUBIC_UNIT_B, 1.0)[0] == 0
    assert cubic_eval(ResolventCubic(0, 0, 1), 0.0) == (-1.0, 0.0)
    # z = W^2 from the printed W = 3.871934
    f0 = abs(cubic_eval(CUBIC_B5678, 0.0)[0])
    assert abs(cubic_eval(CUBIC_B5678, 3.871934**2)[0]) <= 1e-3 * f0


def test_eval_derivative_against_finite_difference():
    c = ResolventCubic(-1.3, 2.2, 0.7)
    for z in (0.1, 1.0, 3.7):
        h = 1e-6
        fd = (cubic_eval(c, z + h)[0] - cubic_eval(c, z - h)[0]) / (2 * h)
        assert math.isclose(cubic_eval(c, z)[1], fd, rel_tol=1e-7)


def test_bracket_examples():
    c = ResolventCubic(0, 0, 1)
    assert bracket_hi(c) == 2
    assert cubic_eval(c, 2.0)[0] == 7
    assert bracket_hi(CUBIC_UNIT_B) == 7
    assert bracket_hi(CUBIC_B5678) >= 14.991873


@pytest.mark.parametrize(
    "cubic, expected",
    [(CUBIC_UNIT_B, 1.0), (ResolventCubic(0, 0, 1), 1.0)],
)
def test_positive_root_exact_cases(cubic, expected):
    assert abs(positive_root(cubic).z - expected) <= 1e-10


def test_positive_root_b5678():
    r = positive_root(CUBIC_B5678)
    assert abs(math.sqrt(r.z) - 3.871934) <= 1e-5
    assert r.z > 0


def test_positive_root_needs_nonzero_c():
    with pytest.raises(ValueError):
        positive_root(ResolventCubic(1, 0, 0))


def test_no_convergence_on_tiny_budget():
    with pytest.raises(NoConvergence):
        positive_root(ResolventCubic(1e6, 3, 7), tol=1e-16, max_iter=1)


def test_hypothesis_check():
    ResolventCubic(3, 3, 2).check_hypotheses()
    with pytest.raises(ValueError):
        ResolventCubic(-3, 1, 2).check_hypotheses()
    with pytest.raises(ValueError):
        ResolventCubic(3, 1, 0).check_hypotheses()


# (A, B, C) satisfying C != 0 and A < 0 => A^2 < 4B
abc = st.tuples(
    st.floats(-50, 50), st.floats(0, 2500), st.floats(-100, 100).filter(lambda c: abs(c) > 1e-3)
).filter(lambda t: t[0] >= 0 or t[0] ** 2 < 4 * t[1])


@given(abc)
def test_root_contract(t):
    cubic = ResolventCubic(*t)
    trace = []
    r = positive_root(cubic, trace=trace)
    assert r.z > 0
    f0 = cubic.C**2
    f, _ = cubic_eval(cubic, r.z)
    # either the residual or the step contract holds; check against a bisection oracle
    lo, hi = 0.0, bracket_hi(cubic)
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if cubic_eval(cubic, mid)[0] < 0:
            lo = mid
        else:
            hi = mid
    assert abs(r.z - lo) <= 1e-9 * max(1.0, lo) or abs(f) <= 1e-13 * max(1.0, f0)

    widths = [h - l for l, h, _, _ in trace]
    assert all(w2 <= w1 for w1, w2 in zip(widths, widths[1:]))
    for lo_, hi_, z, _ in trace:
        assert lo_ <= z <= hi_


@given(abc)
def test_unique_positive_sign_change(t):
    cubic = ResolventCubic(*t)
    assume(abs(cubic.C) > 1e-2)
    assert sign_changes(cubic) == 1
