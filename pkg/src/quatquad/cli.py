"""Command-line front end.

    quatquad --alpha -1 --beta -1 --b 0,1,0,0 --c 1,0,1,0 [--verify] [--format json]
    quatquad --seq fib --n 3 --m 3 --alpha -1 --beta -1
    quatquad --batch requests.txt

Batch files hold one request per line, ``alpha beta b1,b2,b3,b4 c1,c2,c3,c4``;
blank lines and ``#`` comments are skipped.

Exit codes: 0 success, 2 usage error, 3 solver or verification failure.
"""
from __future__ import annotations

import argparse
import json
import re
import sys
from dataclasses import dataclass
from pathlib import Path

from .algebra import AlgebraContext, NonInvertible, Quaternion
from .realroots import DEFAULT_TOL, NoConvergence
from .sequences import PrecisionOverflow, SequenceKind, quaternion_term
from .solver import SolutionSet, SplitAlgebraUnsupported, solve
from .verify import ORACLE_SEED, oracle_solve, residual

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_SOLVER = 3

RESIDUAL_RTOL = 1e-8
ORACLE_MATCH_TOL = 1e-6


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class Request:
    alpha: float
    beta: float
    b: Quaternion
    c: Quaternion
    want_verify: bool = False
    output: str = "text"
    tol: float = DEFAULT_TOL
    label: str = ""

    @property
    def ctx(self) -> AlgebraContext:
        return AlgebraContext(self.alpha, self.beta)


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="quatquad", description="Solve x^2 + b x + c = 0 in H(alpha, beta).")
    # let "-1,0,0,0" and "-.5" through as values rather than option names
    p._negative_number_matcher = re.compile(r"^-\.?\d")
    p.add_argument("--alpha", type=float)
    p.add_argument("--beta", type=float)
    p.add_argument("--b", help="q1,q2,q3,q4")
    p.add_argument("--c", help="q1,q2,q3,q4")
    p.add_argument("--seq", choices=[k.value for k in SequenceKind])
    p.add_argument("--n", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--batch", type=Path)
    p.add_argument("--verify", action="store_true")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.add_argument("--tol", type=float, default=DEFAULT_TOL)
    return p


def parse_quaternion(text: str) -> Quaternion:
    parts = text.split(",")
    if len(parts) != 4:
        raise UsageError(f"expected 4 comma-separated numbers, got {text!r}")
    try:
        return Quaternion.from_seq(float(p) for p in parts)
    except ValueError as exc:
        raise UsageError(f"malformed quaternion {text!r}: {exc}") from None


def _check_algebra(alpha, beta, where="") -> None:
    if alpha is None or beta is None:
        raise UsageError(f"{where}--alpha and --beta are required")
    if not (alpha < 0 and beta < 0):
        raise UsageError(
            f"{where}alpha and beta must both be negative (division algebra), got {alpha}, {beta}"
        )


def parse_batch_line(line: str, lineno: int = 0) -> tuple[float, float, Quaternion, Quaternion]:
    fields = line.split()
    where = f"line {lineno}: " if lineno else ""
    if len(fields) != 4:
        raise UsageError(f"{where}expected 'alpha beta b1,b2,b3,b4 c1,c2,c3,c4', got {line!r}")
    try:
        alpha, beta = float(fields[0]), float(fields[1])
    except ValueError:
        raise UsageError(f"{where}malformed alpha/beta in {line!r}") from None
    _check_algebra(alpha, beta, where)
    return alpha, beta, parse_quaternion(fields[2]), parse_quaternion(fields[3])


def parse(argv: list[str]) -> list[Request]:
    """Turn command-line arguments into one request (or one per batch line)."""
    ns = _build_parser().parse_args(argv)
    common = dict(want_verify=ns.verify, output=ns.format, tol=ns.tol)
    if not ns.tol > 0:
        raise UsageError("--tol must be positive")

    if ns.batch is not None:
        if any(v is not None for v in (ns.b, ns.c, ns.seq)):
            raise UsageError("--batch cannot be combined with --b/--c/--seq")
        try:
            lines = ns.batch.read_text().splitlines()
        except OSError as exc:
            raise UsageError(f"cannot read batch file: {exc}") from None
        out = []
        for i, raw in enumerate(lines, 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            alpha, beta, b, c = parse_batch_line(line, i)
            out.append(Request(alpha, beta, b, c, label=f"line {i}", **common))
        return out

    _check_algebra(ns.alpha, ns.beta)
    if ns.seq is not None:
        if ns.b is not None or ns.c is not None:
            raise UsageError("--seq cannot be combined with --b/--c")
        if ns.n is None or ns.m is None:
            raise UsageError("--seq needs --n and --m")
        kind = SequenceKind(ns.seq)
        try:
            b, c = quaternion_term(kind, ns.n), quaternion_term(kind, ns.m)
        except (PrecisionOverflow, ValueError) as exc:
            raise UsageError(str(exc)) from None
        return [Request(ns.alpha, ns.beta, b, c, label=f"{ns.seq} n={ns.n} m={ns.m}", **common)]

    if ns.b is None or ns.c is None:
        raise UsageError("--b and --c are required (or use --seq / --batch)")
    return [Request(ns.alpha, ns.beta, parse_quaternion(ns.b), parse_quaternion(ns.c), **common)]


def format_quaternion(x: Quaternion) -> str:
    return f"{x.q1:.6f} {x.q2:+.6f} e_1{x.q3:+.6f} e_2{x.q4:+.6f} e_3"


def verify_solution(req: Request, sol: SolutionSet, seed: int = ORACLE_SEED) -> dict:
    """Residual check of every root plus oracle roots not matched by the solver."""
    ctx = req.ctx
    reports = [residual(ctx, req.b, req.c, x) for x in sol.solutions]
    residual_ok = all(r.residual_norm <= RESIDUAL_RTOL * r.scale for r in reports)
    unmatched = []
    if not sol.is_infinite:
        for q in oracle_solve(ctx, req.b, req.c, seed=seed):
            if not any(
                max(abs(u - v) for u, v in zip(q, x)) <= ORACLE_MATCH_TOL for x in sol.solutions
            ):
                unmatched.append(list(q))
    return {
        "residual_ok": residual_ok,
        "relative_residuals": [r.relative for r in reports],
        "oracle_seed": seed,
        "oracle_unmatched": unmatched,
        "ok": residual_ok and not unmatched,
    }


def render(sol: SolutionSet, fmt: str = "text", req: Request | None = None, check: dict | None = None) -> str:
    red = sol.reduced
    if fmt == "json":
        doc = {
            "case": sol.case.value,
            "A": red.A if red else None,
            "B": red.B if red else None,
            "C": red.C if red else None,
            "W": [p.W for p in sol.pairs],
            "Y": [p.Y for p in sol.pairs],
            "solutions": [list(r.x) for r in sol.roots],
            "residual_norms": [r.residual_norm for r in sol.roots],
        }
        if sol.family is not None:
            f = sol.family
            doc["family"] = {"b": f.b, "c": f.c, "rhs": f.rhs}
        if req is not None:
            doc.update(alpha=req.alpha, beta=req.beta, b=list(req.b), c=list(req.c))
        if check is not None:
            doc["verify"] = check
        return json.dumps(doc)

    lines = []
    if red is not None:
        lines += [f"C={red.C:.6f}", f"A={red.A:.6f}", f"B={red.B:.6f}"]
    ws = sorted({abs(p.W) for p in sol.pairs})
    if ws and ws != [0.0]:
        lines.append(f"W=±{ws[0]:.6f}")
    ys = [p.Y for p in sol.pairs]
    if len(set(ys)) == 1 and ys:
        lines.append(f"Y={ys[0]:.6f}")
    else:
        lines += [f"Y_{k}={y:.6f}" for k, y in enumerate(ys, 1)]
    if sol.family is not None:
        lines.append(
            f"infinite family: -alpha*e^2 - beta*f^2 + alpha*beta*g^2 = {sol.family.rhs:.6f}"
        )
        lines.append("x=(-b + e e_1 + f e_2 + g e_3)/2, representative:")
    for k, r in enumerate(sol.roots, 1):
        lines.append(f"x_{k}={format_quaternion(r.x)}")
    if check is not None:
        lines.append(
            "verify: "
            + ("ok" if check["ok"] else "FAILED")
            + " max relative residual="
            + f"{max(check['relative_residuals'], default=0.0):.3e}"
            + f" oracle unmatched={len(check['oracle_unmatched'])}"
        )
    return "\n".join(lines)


def run(req: Request) -> tuple[str, int]:
    try:
        sol = solve(req.ctx, req.b, req.c, root_tol=req.tol)
    except (SplitAlgebraUnsupported, NoConvergence, NonInvertible, ValueError) as exc:
        if req.output == "json":
            return json.dumps({"error": str(exc)}), EXIT_SOLVER
        return f"error: {exc}", EXIT_SOLVER
    check = verify_solution(req, sol) if req.want_verify else None
    code = EXIT_SOLVER if check is not None and not check["ok"] else EXIT_OK
    return render(sol, req.output, req, check), code


def main(argv: list[str] | None = None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    try:
        requests = parse(argv)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE

    status = EXIT_OK
    for req in requests:
        text, code = run(req)
        if len(requests) > 1 and req.output == "text":
            print(f"# {req.label}")
        print(text)
        status = max(status, code)
    return status


if __name__ == "__main__":
    sys.exit(main())
