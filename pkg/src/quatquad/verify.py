"""Checks that don't go through the closed-form solver.

``residual`` substitutes a candidate root into x^2 + b x + c.
``oracle_solve`` treats the equation as four real polynomial equations in
the four coefficients of x and runs damped Newton from many random starts.
It is meant for testing only and makes no completeness promise.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .algebra import (
    AlgebraContext,
    Quaternion,
    norm_abs,
    add,
    mul,
    mul_arrays,
    norm,
)

ORACLE_SEED = 20240531
_BASIS = np.eye(4)


@dataclass(frozen=True)
class ResidualReport:
    residual: Quaternion
    residual_norm: float
    scale: float

    @property
    def relative(self) -> float:
        return self.residual_norm / self.scale


def residual_scale(ctx: AlgebraContext, b: Quaternion, c: Quaternion) -> float:
    return max(1.0, norm_abs(ctx, b) ** 2, norm_abs(ctx, c))


def residual(ctx: AlgebraContext, b: Quaternion, c: Quaternion, x: Quaternion) -> ResidualReport:
    r = add(add(mul(ctx, x, x), mul(ctx, b, x)), c)
    # equals n(r) in a division algebra, and stays >= 0 otherwise
    rn = norm(ctx, r) if ctx.is_division() else norm_abs(ctx, r)
    return ResidualReport(r, rn, residual_scale(ctx, b, c))


def _residual_map(ctx, X, b, c):
    return mul_arrays(ctx, X, X) + mul_arrays(ctx, b, X) + c


def _jacobian(ctx, X, b):
    # d/dx (x^2 + b x)[h] = x h + h x + b h, linear in h
    cols = [
        mul_arrays(ctx, X, e) + mul_arrays(ctx, e, X) + mul_arrays(ctx, b, e)
        for e in _BASIS
    ]
    return np.stack(cols, axis=-1)


def _magnitude(ctx, R):
    w = np.array([1.0, abs(ctx.alpha), abs(ctx.beta), abs(ctx.alpha * ctx.beta)])
    return (R * R) @ w


def _newton_step(J, F):
    try:
        return np.linalg.solve(J, -F[..., None])[..., 0]
    except np.linalg.LinAlgError:
        return -(np.linalg.pinv(J) @ F[..., None])[..., 0]


def oracle_solve(
    ctx: AlgebraContext,
    b: Quaternion,
    c: Quaternion,
    starts: int = 64,
    tol: float = 1e-20,
    *,
    seed: int = ORACLE_SEED,
    max_iter: int = 100,
    max_halvings: int = 40,
) -> list[Quaternion]:
    """Multi-start damped Newton on the real 4x4 residual system.

    Returns deduplicated points whose residual norm is at most
    ``tol * residual_scale``.
    """
    if not ctx.is_division():
        raise ValueError("oracle_solve needs a division algebra")
    bv, cv = b.as_array(), c.as_array()
    R = 2.0 * (1.0 + np.abs(bv).max() + np.abs(cv).max())
    rng = np.random.default_rng(seed)
    X = rng.uniform(-R, R, size=(starts, 4))
    scale = residual_scale(ctx, b, c)

    F = _residual_map(ctx, X, bv, cv)
    res = _magnitude(ctx, F)
    active = np.ones(starts, dtype=bool)

    for _ in range(max_iter):
        idx = np.flatnonzero(active & (res > 0))
        if idx.size == 0:
            break
        step = _newton_step(_jacobian(ctx, X[idx], bv), F[idx])
        # steps at roundoff level: take them and retire the point
        tiny = np.abs(step).max(axis=1) <= 1e-15 * np.maximum(1.0, np.abs(X[idx]).max(axis=1))
        if tiny.any():
            done = idx[tiny]
            X[done] += step[tiny]
            F[done] = _residual_map(ctx, X[done], bv, cv)
            res[done] = _magnitude(ctx, F[done])
            active[done] = False
            idx, step = idx[~tiny], step[~tiny]
            if idx.size == 0:
                continue
        lam = np.ones(idx.size)
        pending = np.ones(idx.size, dtype=bool)
        newX = X[idx].copy()
        newF = F[idx].copy()
        newres = res[idx].copy()
        for _ in range(max_halvings + 1):
            trial = X[idx] + lam[:, None] * step
            Ft = _residual_map(ctx, trial, bv, cv)
            rt = _magnitude(ctx, Ft)
            ok = pending & np.isfinite(rt) & (rt < res[idx])
            newX[ok], newF[ok], newres[ok] = trial[ok], Ft[ok], rt[ok]
            pending &= ~ok
            if not pending.any():
                break
            lam[pending] *= 0.5
        # no decrease: either converged to roundoff or stuck
        active[idx[pending]] = False
        X[idx], F[idx], res[idx] = newX, newF, newres

    good = X[res <= tol * scale]
    order = np.lexsort(good.T[::-1])
    found: list[Quaternion] = []
    for row in good[order]:
        q = Quaternion.from_seq(row)
        rtol = 1e-6 * max(1.0, q.supnorm())
        if not any(np.abs(row - f.as_array()).max() <= rtol for f in found):
            found.append(q)
    return found
