"""Positive root of the resolvent cubic z^3 + 2A z^2 + (A^2 - 4B) z - C^2.

When C != 0 (and A < 0 implies A^2 < 4B) the cubic has exactly one
positive root.  It is found with Newton iterations kept inside a sign
bracket; any Newton step that would leave the bracket is replaced by a
bisection step.
"""
from __future__ import annotations

from dataclasses import dataclass

DEFAULT_TOL = 1e-13
DEFAULT_MAX_ITER = 200

# derivatives smaller than this force a bisection step
_TINY_SLOPE = 1e-300


class NoConvergence(ArithmeticError):
    pass


@dataclass(frozen=True, slots=True)
class ResolventCubic:
    A: float
    B: float
    C: float

    @property
    def coefficients(self) -> tuple[float, float, float, float]:
        """Monic coefficients, highest degree first."""
        return (1.0, 2.0 * self.A, self.A * self.A - 4.0 * self.B, -self.C * self.C)

    def check_hypotheses(self) -> None:
        """Raise ValueError unless C != 0 and (A < 0 implies A^2 < 4B)."""
        if self.C == 0:
            raise ValueError("C must be nonzero for a unique positive root")
        if self.A < 0 and not self.A * self.A < 4.0 * self.B:
            raise ValueError(f"A < 0 requires A^2 < 4B (A={self.A}, B={self.B})")


@dataclass(frozen=True, slots=True)
class RootResult:
    z: float
    iterations: int
    residual: float


def eval(cubic: ResolventCubic, z: float) -> tuple[float, float]:
    """Value and derivative at z (Horner form)."""
    _, c2, c1, c0 = cubic.coefficients
    f = ((z + c2) * z + c1) * z + c0
    fp = (3.0 * z + 2.0 * c2) * z + c1
    return f, fp


def bracket_hi(cubic: ResolventCubic) -> float:
    """Cauchy bound: f(H) > 0, so [0, H] brackets the positive root."""
    _, c2, c1, c0 = cubic.coefficients
    return 1.0 + max(abs(c2), abs(c1), abs(c0))


def positive_root(
    cubic: ResolventCubic,
    tol: float = DEFAULT_TOL,
    max_iter: int = DEFAULT_MAX_ITER,
    trace: list | None = None,
) -> RootResult:
    """Safeguarded Newton iteration for the positive root.

    Stops when the step (or the bracket width) drops below
    ``tol * max(1, z)`` or ``f(z)`` is exactly zero.  If the budget runs out
    the result is still accepted when ``|f(z)| <= tol * max(1, |f(0)|)``;
    otherwise NoConvergence is raised.

    ``trace``, when given, receives ``(lo, hi, z, bisected)`` per iteration.
    """
    f0 = -cubic.C * cubic.C
    if f0 == 0:
        raise ValueError("C must be nonzero")
    lo, hi = 0.0, bracket_hi(cubic)
    z = 0.5 * (lo + hi)
    f, fp = eval(cubic, z)

    for it in range(1, max_iter + 1):
        if f == 0.0:
            return RootResult(z, it - 1, 0.0)
        if f < 0:
            lo = z
        else:
            hi = z

        bisected = abs(fp) < _TINY_SLOPE
        if not bisected:
            z_new = z - f / fp
            if not (lo < z_new < hi):
                bisected = True
        if bisected:
            z_new = 0.5 * (lo + hi)
        if trace is not None:
            trace.append((lo, hi, z_new, bisected))

        step = abs(z_new - z)
        z = z_new
        f, fp = eval(cubic, z)
        if step <= tol * max(1.0, z) or hi - lo <= tol * max(1.0, z):
            return RootResult(z, it, abs(f))

    if abs(f) <= tol * max(1.0, abs(f0)):
        return RootResult(z, max_iter, abs(f))
    raise NoConvergence(
        f"no convergence after {max_iter} iterations for {cubic} (z={z!r}, f={f!r})"
    )
