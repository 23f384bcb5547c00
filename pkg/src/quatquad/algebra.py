"""Arithmetic in the generalized quaternion algebra H(alpha, beta).

Basis (1, e1, e2, e3) with e1^2 = alpha, e2^2 = beta, e3 = e1 e2 and
e3^2 = -alpha*beta.  The algebra parameters are never stored on a
quaternion; every operation that depends on them takes an explicit
:class:`AlgebraContext`.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Iterator

import numpy as np


class NonInvertible(ArithmeticError):
    """Raised when inverting an element whose norm vanishes."""


# relative cutoff on |n(q)| against the sum of the absolute norm terms
INVERT_RTOL = 1e-12


@dataclass(frozen=True, slots=True)
class AlgebraContext:
    alpha: float
    beta: float

    def __post_init__(self):
        for name in ("alpha", "beta"):
            v = getattr(self, name)
            if not math.isfinite(v) or v == 0:
                raise ValueError(f"{name} must be finite and nonzero, got {v!r}")

    def is_division(self) -> bool:
        """True iff the norm form is positive definite (alpha, beta < 0)."""
        return self.alpha < 0 and self.beta < 0


HAMILTON = AlgebraContext(-1.0, -1.0)


@dataclass(frozen=True, slots=True)
class Quaternion:
    """q1 + q2 e1 + q3 e2 + q4 e3 with real coefficients.

    Supports ``+``, ``-``, negation and multiplication by a real scalar.
    Quaternion products need an algebra, so use :func:`mul`.
    """

    q1: float = 0.0
    q2: float = 0.0
    q3: float = 0.0
    q4: float = 0.0

    def __post_init__(self):
        for v in (self.q1, self.q2, self.q3, self.q4):
            if not math.isfinite(v):
                raise ValueError(f"quaternion coefficients must be finite, got {self!r}")

    @classmethod
    def from_seq(cls, values: Iterable[float]) -> "Quaternion":
        vals = [float(v) for v in values]
        if len(vals) != 4:
            raise ValueError(f"expected 4 coefficients, got {len(vals)}")
        return cls(*vals)

    @classmethod
    def real(cls, r: float) -> "Quaternion":
        return cls(float(r), 0.0, 0.0, 0.0)

    def __iter__(self) -> Iterator[float]:
        yield self.q1
        yield self.q2
        yield self.q3
        yield self.q4

    def as_tuple(self) -> tuple[float, float, float, float]:
        return (self.q1, self.q2, self.q3, self.q4)

    def as_array(self) -> np.ndarray:
        return np.array(self.as_tuple(), dtype=float)

    @property
    def re(self) -> float:
        return self.q1

    @property
    def im(self) -> "Quaternion":
        return Quaternion(0.0, self.q2, self.q3, self.q4)

    def supnorm(self) -> float:
        return max(abs(self.q1), abs(self.q2), abs(self.q3), abs(self.q4))

    def is_real(self, rtol: float = 1e-12) -> bool:
        """Imaginary sup-norm small relative to max(1, sup-norm of q)."""
        imag = max(abs(self.q2), abs(self.q3), abs(self.q4))
        return imag <= rtol * max(1.0, self.supnorm())

    def __add__(self, other):
        if isinstance(other, Quaternion):
            return add(self, other)
        if isinstance(other, (int, float)):
            return Quaternion(self.q1 + other, self.q2, self.q3, self.q4)
        return NotImplemented

    __radd__ = __add__

    def __neg__(self) -> "Quaternion":
        return Quaternion(-self.q1, -self.q2, -self.q3, -self.q4)

    def __sub__(self, other):
        if isinstance(other, (Quaternion, int, float)):
            return self + (-other)
        return NotImplemented

    def __rsub__(self, other):
        if isinstance(other, (int, float)):
            return (-self) + other
        return NotImplemented

    def __mul__(self, other):
        # scalar only; quaternion products depend on the algebra
        if isinstance(other, (int, float)):
            return scale(other, self)
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, float)):
            return scale(1.0 / other, self)
        return NotImplemented


ZERO = Quaternion()
ONE = Quaternion(1.0)
E1 = Quaternion(0.0, 1.0)
E2 = Quaternion(0.0, 0.0, 1.0)
E3 = Quaternion(0.0, 0.0, 0.0, 1.0)


def add(p: Quaternion, q: Quaternion) -> Quaternion:
    return Quaternion(p.q1 + q.q1, p.q2 + q.q2, p.q3 + q.q3, p.q4 + q.q4)


def scale(s: float, q: Quaternion) -> Quaternion:
    return Quaternion(s * q.q1, s * q.q2, s * q.q3, s * q.q4)


def mul(ctx: AlgebraContext, p: Quaternion, q: Quaternion) -> Quaternion:
    """Product p*q following the H(alpha, beta) multiplication table."""
    a, b = ctx.alpha, ctx.beta
    p1, p2, p3, p4 = p.q1, p.q2, p.q3, p.q4
    r1, r2, r3, r4 = q.q1, q.q2, q.q3, q.q4
    return Quaternion(
        p1 * r1 + a * p2 * r2 + b * p3 * r3 - a * b * p4 * r4,
        p1 * r2 + p2 * r1 - b * p3 * r4 + b * p4 * r3,
        p1 * r3 + a * p2 * r4 + p3 * r1 - a * p4 * r2,
        p1 * r4 + p2 * r3 - p3 * r2 + p4 * r1,
    )


def conj(q: Quaternion) -> Quaternion:
    return Quaternion(q.q1, -q.q2, -q.q3, -q.q4)


def norm(ctx: AlgebraContext, q: Quaternion) -> float:
    """The norm form n(q) = q * conj(q) (a squared magnitude)."""
    a, b = ctx.alpha, ctx.beta
    return q.q1 * q.q1 - a * q.q2 * q.q2 - b * q.q3 * q.q3 + a * b * q.q4 * q.q4


def norm_abs(ctx: AlgebraContext, q: Quaternion) -> float:
    """q1^2 + |alpha| q2^2 + |beta| q3^2 + |alpha beta| q4^2; equals n(q) in a division algebra."""
    a, b = abs(ctx.alpha), abs(ctx.beta)
    return q.q1 * q.q1 + a * q.q2 * q.q2 + b * q.q3 * q.q3 + a * b * q.q4 * q.q4


def trace(q: Quaternion) -> float:
    return 2.0 * q.q1


def inv(ctx: AlgebraContext, q: Quaternion) -> Quaternion:
    # work with q / |q|_sup so the norm neither underflows nor overflows
    s = q.supnorm()
    u = Quaternion(*(v / s for v in q)) if s > 0 else q
    n = norm(ctx, u)
    if abs(n) <= INVERT_RTOL * norm_abs(ctx, u):
        raise NonInvertible(f"{q} has vanishing norm {norm(ctx, q)!r} in H({ctx.alpha}, {ctx.beta})")
    return Quaternion(*(v / n / s for v in conj(u)))


def symm_product(ctx: AlgebraContext, q: Quaternion, r: Quaternion) -> Quaternion:
    """(qr + rq)/2.  Not scalar-valued in general."""
    return scale(0.5, add(mul(ctx, q, r), mul(ctx, r, q)))


def mul_arrays(ctx: AlgebraContext, p: np.ndarray, q: np.ndarray) -> np.ndarray:
    """Vectorized product over the last axis (length 4) of broadcastable arrays."""
    a, b = ctx.alpha, ctx.beta
    p = np.asarray(p, dtype=float)
    q = np.asarray(q, dtype=float)
    p1, p2, p3, p4 = p[..., 0], p[..., 1], p[..., 2], p[..., 3]
    r1, r2, r3, r4 = q[..., 0], q[..., 1], q[..., 2], q[..., 3]
    return np.stack(
        [
            p1 * r1 + a * p2 * r2 + b * p3 * r3 - a * b * p4 * r4,
            p1 * r2 + p2 * r1 - b * p3 * r4 + b * p4 * r3,
            p1 * r3 + a * p2 * r4 + p3 * r1 - a * p4 * r2,
            p1 * r4 + p2 * r3 - p3 * r2 + p4 * r1,
        ],
        axis=-1,
    )


def norm_arrays(ctx: AlgebraContext, q: np.ndarray) -> np.ndarray:
    q = np.asarray(q, dtype=float)
    w = np.array([1.0, -ctx.alpha, -ctx.beta, ctx.alpha * ctx.beta])
    return (q * q) @ w
