"""All solutions of x^2 + b x + c = 0 over a division algebra H(alpha, beta).

The equation is classified by whether b and c are real.  For real b, c
the classical formula applies (or, when b^2 < 4c, an infinite family of
roots).  Otherwise the substitution x = y - Re(b)/2 gives the reduced
equation y^2 + b'y + c' = 0 with b' = Im(b), whose roots are

    y = -(b' + W)^{-1} (c' - Y)

for the real pairs (W, Y) solving

    Y^2 - (A + W^2) Y + B = 0,    W^3 + (A - 2Y) W + C = 0,

where A = n(b') + 2 Re(c'), B = n(c'), C = 2 Re(conj(b') c').
Real b with non-real c goes through the same route (b' = 0).
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field

from .algebra import (
    AlgebraContext,
    Quaternion,
    conj,
    inv,
    mul,
    norm,
    scale,
)
from .realroots import DEFAULT_MAX_ITER, DEFAULT_TOL, ResolventCubic, positive_root
from .verify import residual

REAL_RTOL = 1e-12  # imaginary sup-norm cutoff for "real" coefficients
ZERO_RTOL = 1e-10  # C == 0 and A^2 == 4B cutoffs
Y_NEG_RTOL = 1e-12
DEDUP_RTOL = 1e-9


class SplitAlgebraUnsupported(ValueError):
    pass


class Case(enum.Enum):
    REAL_SPHERICAL = "real_spherical"  # b, c real, b^2 < 4c
    REAL_CLASSICAL = "real_classical"  # b, c real, b^2 >= 4c
    REAL_B_NONREAL_C = "real_b_nonreal_c"
    NONREAL_B = "nonreal_b"


@dataclass(frozen=True)
class ReducedEquation:
    t: float
    b_prime: Quaternion
    c_prime: Quaternion
    A: float
    B: float
    C: float
    # A^2 - 4B, evaluated in a cancellation-free arrangement
    disc: float


@dataclass(frozen=True)
class WYPair:
    W: float
    Y: float


@dataclass(frozen=True)
class Root:
    x: Quaternion
    residual_norm: float


@dataclass(frozen=True)
class Quadric:
    """Roots x = (-b + e e1 + f e2 + g e3)/2 with
    -alpha e^2 - beta f^2 + alpha beta g^2 = rhs."""

    b: float
    c: float
    rhs: float
    representative: Root

    def point(self, e: float, f: float, g: float) -> Quaternion:
        return Quaternion(-self.b / 2, e / 2, f / 2, g / 2)

    def constraint(self, ctx: AlgebraContext, e: float, f: float, g: float) -> float:
        """Constraint defect; zero for members of the family."""
        a, bt = ctx.alpha, ctx.beta
        return -a * e * e - bt * f * f + a * bt * g * g - self.rhs


@dataclass(frozen=True)
class SolutionSet:
    case: Case
    roots: tuple[Root, ...] = ()
    family: Quadric | None = None
    reduced: ReducedEquation | None = None
    pairs: tuple[WYPair, ...] = field(default=())

    @property
    def is_infinite(self) -> bool:
        return self.family is not None

    @property
    def solutions(self) -> list[Quaternion]:
        return [r.x for r in self.roots]


def reduce(ctx: AlgebraContext, b: Quaternion, c: Quaternion) -> ReducedEquation:
    t = b.q1 / 2
    b_prime = b.im
    c_prime = c - scale(t, b - t)
    nb = norm(ctx, b_prime)
    v = c_prime.im
    A = nb + 2 * c_prime.q1
    B = norm(ctx, c_prime)
    C = 2 * mul(ctx, conj(b_prime), c_prime).q1
    disc = nb * (nb + 4 * c_prime.q1) - 4 * norm(ctx, v)
    return ReducedEquation(t, b_prime, c_prime, A, B, C, disc)


def classify(ctx: AlgebraContext, b: Quaternion, c: Quaternion) -> Case:
    if not ctx.is_division():
        raise SplitAlgebraUnsupported(
            f"H({ctx.alpha}, {ctx.beta}) is not a division algebra; need alpha < 0 and beta < 0"
        )
    if not b.is_real(REAL_RTOL):
        return Case.NONREAL_B
    if not c.is_real(REAL_RTOL):
        return Case.REAL_B_NONREAL_C
    if _real_disc_is_zero(b.q1, c.q1) or b.q1 * b.q1 - 4 * c.q1 > 0:
        return Case.REAL_CLASSICAL
    return Case.REAL_SPHERICAL


def _real_disc_is_zero(b: float, c: float) -> bool:
    return abs(b * b - 4 * c) <= ZERO_RTOL * max(1.0, b * b, 4 * abs(c))


def c_is_zero(A: float, B: float, C: float, tol: float = ZERO_RTOL) -> bool:
    return abs(C) <= tol * max(1.0, abs(A), math.sqrt(max(B, 0.0)))


def disc_is_zero(A: float, B: float, disc: float, tol: float = ZERO_RTOL) -> bool:
    return abs(disc) <= tol * max(1.0, A * A, 4 * abs(B))


def resolve_wy(
    A: float,
    B: float,
    C: float,
    tol: float = ZERO_RTOL,
    *,
    disc: float | None = None,
    root_tol: float = DEFAULT_TOL,
    max_iter: int = DEFAULT_MAX_ITER,
) -> list[WYPair]:
    """Real solutions (W, Y), Y >= 0, of the (W, Y) system.

    ``tol`` is the relative cutoff for treating C and A^2 - 4B as zero.
    ``disc`` may supply a more accurate A^2 - 4B than the naive difference.
    """
    if disc is None:
        disc = A * A - 4 * B
    sqrtB = math.sqrt(max(B, 0.0))

    if not c_is_zero(A, B, C, tol):
        z = positive_root(ResolventCubic(A, B, C), root_tol, max_iter).z
        W = math.sqrt(z)
        # Y is nonnegative in exact arithmetic; cancellation can leave -eps
        floor = -Y_NEG_RTOL * max(1.0, abs(A), z)
        pairs = []
        for w in (W, -W):
            y = (w**3 + A * w + C) / (2 * w)
            pairs.append(WYPair(w, 0.0 if floor <= y < 0 else y))
        return pairs

    if disc_is_zero(A, B, disc, tol) and A >= 0:
        ys = [A / 2]
    elif disc > 0:
        s = math.sqrt(disc)
        ys = [(A + s) / 2, (A - s) / 2]
    else:
        # 2 sqrt(B) - A, rewritten to avoid cancellation when A > 0
        w2 = -disc / (2 * sqrtB + A) if A > 0 else 2 * sqrtB - A
        W = math.sqrt(max(w2, 0.0))
        return [WYPair(W, sqrtB), WYPair(-W, sqrtB)]

    cut = -Y_NEG_RTOL * max(1.0, abs(A))
    return [WYPair(0.0, max(y, 0.0)) for y in ys if y >= cut]


def assemble(ctx: AlgebraContext, red: ReducedEquation, wy: WYPair) -> Quaternion:
    """x = -t - (b' + W)^{-1} (c' - Y)."""
    y = mul(ctx, inv(ctx, red.b_prime + wy.W), red.c_prime - wy.Y)
    return -y - red.t


def assemble_expanded(ctx: AlgebraContext, red: ReducedEquation, wy: WYPair) -> Quaternion:
    """Same root as :func:`assemble`, written out component by component in
    terms of the original coefficients c = c' + t(b - t)."""
    a, bt = ctx.alpha, ctx.beta
    t, W, Y = red.t, wy.W, wy.Y
    _, b2, b3, b4 = red.b_prime
    # recover c from c'
    c1 = red.c_prime.q1 + t * t
    c2 = red.c_prime.q2 + t * b2
    c3 = red.c_prime.q3 + t * b3
    c4 = red.c_prime.q4 + t * b4

    m = W * W - a * b2 * b2 - bt * b3 * b3 + a * bt * b4 * b4
    if m == 0:
        raise ZeroDivisionError("b' + W has zero norm")
    x1 = -t - (
        W * c1 - Y * W - a * b2 * c2 - bt * b3 * c3 + a * bt * b4 * c4
        - t * (W * t - a * b2 * b2 - bt * b3 * b3 + a * bt * b4 * b4)
    ) / m
    x2 = -(W * c2 - b2 * c1 + b2 * Y + bt * b3 * c4 - bt * b4 * c3 - t * b2 * (W - t)) / m
    x3 = -(W * c3 - a * b2 * c4 - b3 * c1 + b3 * Y + a * b4 * c2 - t * b3 * (W - t)) / m
    x4 = -(W * c4 - b2 * c3 + b3 * c2 - b4 * c1 + b4 * Y - t * b4 * (W - t)) / m
    return Quaternion(x1, x2, x3, x4)


def _with_residual(ctx, b, c, x) -> Root:
    return Root(x, residual(ctx, b, c, x).residual_norm)


def solve_real_classical(b: float, c: float, ctx: AlgebraContext | None = None) -> SolutionSet:
    ctx = ctx or AlgebraContext(-1.0, -1.0)
    qb, qc = Quaternion.real(b), Quaternion.real(c)
    if _real_disc_is_zero(b, c):
        xs = [-b / 2]
    else:
        s = math.sqrt(b * b - 4 * c)
        # avoid cancellation in the smaller root
        big = -(b + math.copysign(s, b)) / 2 if b != 0 else s / 2
        xs = sorted([big, c / big], reverse=True)
    roots = tuple(_with_residual(ctx, qb, qc, Quaternion.real(x)) for x in xs)
    return SolutionSet(Case.REAL_CLASSICAL, roots)


def solve_real_spherical(ctx: AlgebraContext, b: float, c: float) -> SolutionSet:
    if not ctx.is_division():
        raise SplitAlgebraUnsupported("infinite root family needs a division algebra")
    rhs = 4 * c - b * b
    e = math.sqrt(rhs / -ctx.alpha)
    x = Quaternion(0.0 - b / 2, e / 2, 0.0, 0.0)
    rep = _with_residual(ctx, Quaternion.real(b), Quaternion.real(c), x)
    return SolutionSet(Case.REAL_SPHERICAL, (rep,), family=Quadric(b, c, rhs, rep))


def _same(p: Quaternion, q: Quaternion) -> bool:
    scale_ = max(1.0, p.supnorm(), q.supnorm())
    return all(abs(u - v) <= DEDUP_RTOL * scale_ for u, v in zip(p, q))


def dedup(xs: list[Quaternion]) -> list[Quaternion]:
    out: list[Quaternion] = []
    for x in xs:
        if not any(_same(x, y) for y in out):
            out.append(x)
    return out


def solve(
    ctx: AlgebraContext,
    b: Quaternion,
    c: Quaternion,
    *,
    root_tol: float = DEFAULT_TOL,
    max_iter: int = DEFAULT_MAX_ITER,
) -> SolutionSet:
    case = classify(ctx, b, c)
    red = reduce(ctx, b, c)

    if case is Case.REAL_SPHERICAL:
        return _attach(solve_real_spherical(ctx, b.q1, c.q1), red)
    if case is Case.REAL_CLASSICAL:
        return _attach(solve_real_classical(b.q1, c.q1, ctx), red)

    if case is Case.REAL_B_NONREAL_C:
        # b' = 0 exactly: C vanishes and A^2 - 4B = -4 n(Im c') < 0
        red = reduce(ctx, Quaternion.real(b.q1), c)
        red = ReducedEquation(red.t, red.b_prime, red.c_prime, red.A, red.B, 0.0, red.disc)

    pairs = resolve_wy(red.A, red.B, red.C, disc=red.disc, root_tol=root_tol, max_iter=max_iter)
    xs = dedup([assemble(ctx, red, wy) for wy in pairs])
    roots = tuple(_with_residual(ctx, b, c, x) for x in xs)
    return SolutionSet(case, roots, reduced=red, pairs=tuple(pairs))


def _attach(sol: SolutionSet, red: ReducedEquation) -> SolutionSet:
    return SolutionSet(sol.case, sol.roots, sol.family, red, sol.pairs)
