"""Integer-sequence quaternions S_n = s_n + s_{n+1} e1 + s_{n+2} e2 + s_{n+3} e3.

Fibonacci (0, 1), Lucas (2, 1) and Pell (0, 1, r = 2) follow their usual
seeds.  PELL_COMPANION is the half-companion Pell sequence 1, 1, 3, 7, 17,
41, ...; its quaternions (3 + 7e1 + 17e2 + 41e3, 8119 + 19601e1 + ...) are the
ones commonly tabulated as "Pell quaternions" P_{n+1}.
"""
from __future__ import annotations

import enum

from .algebra import Quaternion

_EXACT_LIMIT = 2**53


class PrecisionOverflow(OverflowError):
    pass


class SequenceKind(enum.Enum):
    FIBONACCI = "fib"
    PELL = "pell"
    LUCAS = "lucas"
    PELL_COMPANION = "pell-companion"

    @property
    def seeds(self) -> tuple[int, int]:
        return {SequenceKind.LUCAS: (2, 1), SequenceKind.PELL_COMPANION: (1, 1)}.get(self, (0, 1))

    @property
    def multiplier(self) -> int:
        return 2 if self in (SequenceKind.PELL, SequenceKind.PELL_COMPANION) else 1


def _terms(kind: SequenceKind, last: int) -> list[int]:
    if last < 0:
        raise ValueError(f"index must be nonnegative, got {last}")
    s0, s1 = kind.seeds
    r = kind.multiplier
    out = [s0, s1]
    while len(out) <= last:
        nxt = r * out[-1] + out[-2]
        if nxt > _EXACT_LIMIT:
            raise PrecisionOverflow(
                f"{kind.name.lower()} term {len(out)} = {nxt} is not exactly "
                "representable in double precision"
            )
        out.append(nxt)
    return out[: last + 1]


def max_index(kind: SequenceKind) -> int:
    """Largest n whose term is exactly representable as a double."""
    n = 1
    while True:
        try:
            _terms(kind, n + 1)
        except PrecisionOverflow:
            return n
        n += 1


def scalar_term(kind: SequenceKind, n: int) -> float:
    return float(_terms(kind, n)[n])


def quaternion_term(kind: SequenceKind, n: int) -> Quaternion:
    s = _terms(kind, n + 3)
    return Quaternion(*(float(v) for v in s[n : n + 4]))
