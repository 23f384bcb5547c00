"""Quadratic equations x^2 + b x + c = 0 over generalized quaternion algebras H(alpha, beta)."""
from .algebra import (
    E1,
    E2,
    E3,
    HAMILTON,
    ONE,
    ZERO,
    AlgebraContext,
    NonInvertible,
    Quaternion,
    add,
    conj,
    inv,
    mul,
    norm,
    scale,
    symm_product,
    trace,
)
from .realroots import NoConvergence, ResolventCubic, positive_root
from .sequences import PrecisionOverflow, SequenceKind, quaternion_term, scalar_term
from .solver import (
    Case,
    Quadric,
    ReducedEquation,
    SolutionSet,
    SplitAlgebraUnsupported,
    WYPair,
    classify,
    reduce,
    resolve_wy,
    solve,
)
from .verify import oracle_solve, residual

__version__ = "0.1.0"
