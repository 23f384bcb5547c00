import numpy as np
import pytest
from hypothesis import strategies as st

from quatquad import AlgebraContext, Quaternion


def table_mul(ctx, p, q):
    """Product from the basis multiplication table, one basis pair at a time."""
    a, b = ctx.alpha, ctx.beta
    # table[i][j] = (coefficient, basis index) of e_i * e_j, e_0 = 1
    table = [
        [(1, 0), (1, 1), (1, 2), (1, 3)],
        [(1, 1), (a, 0), (1, 3), (a, 2)],
        [(1, 2), (-1, 3), (b, 0), (-b, 1)],
        [(1, 3), (-a, 2), (b, 1), (-a * b, 0)],
    ]
    out = [0.0] * 4
    for i, pi in enumerate(p):
        for j, qj in enumerate(q):
            coef, k = table[i][j]
            out[k] += coef * pi * qj
    return Quaternion(*out)


def random_ctx(rng, lo=-10.0, hi=-0.1):
    return AlgebraContext(*rng.uniform(lo, hi, 2))


def random_quat(rng, lim=10.0):
    return Quaternion(*rng.uniform(-lim, lim, 4))


def random_instances(seed, count, lim=10.0):
    rng = np.random.default_rng(seed)
    return [(random_ctx(rng), random_quat(rng, lim), random_quat(rng, lim)) for _ in range(count)]


def close(p, q, tol):
    return max(abs(u - v) for u, v in zip(p, q)) <= tol


def rel_close(p, q, rtol):
    scale = max(1.0, max(abs(v) for v in p), max(abs(v) for v in q))
    return close(p, q, rtol * scale)


finite = st.floats(-10, 10, allow_nan=False, allow_infinity=False)
quats = st.builds(Quaternion, finite, finite, finite, finite)
nonzero_param = st.one_of(st.floats(-10, -0.1), st.floats(0.1, 10))
contexts = st.builds(AlgebraContext, nonzero_param, nonzero_param)
division_contexts = st.builds(AlgebraContext, st.floats(-10, -0.1), st.floats(-10, -0.1))


@pytest.fixture
def hamilton():
    return AlgebraContext(-1.0, -1.0)


# one summary line per acceptance criterion, printed after the run
_acceptance = []


def pytest_runtest_logreport(report):
    if report.when == "call" and report.nodeid.split("::")[0].endswith("test_acceptance.py"):
        props = dict(report.user_properties)
        _acceptance.append((props.get("criterion", report.nodeid), report.outcome, props.get("detail", "")))


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.write_sep("=", "acceptance criteria")
    for name, outcome, detail in sorted(_acceptance):
        status = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"{status}  criterion {name}: {detail}")
