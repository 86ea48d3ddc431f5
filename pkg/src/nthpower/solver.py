"""Real solutions for C given a, b.

For n = 2 the closed form ``C = a + b ± sqrt(2ab)`` applies.  For larger n
the expressions for C are implicit, so "the" solution is taken to be the
unique real root of ``F_n`` above ``max(a, b)``, found by bisection on a
sign-change bracket.  The implicit radical forms are then evaluated at that
root as a consistency check.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt

import mpmath
from mpmath import mpf

from .completion import complete_power, constraint_poly
from .errors import InvalidParams, NegativeRadicand, NoBracket, require_exponent
from .exact_core import poly_eval
from .triples import Branch

__all__ = [
    "PRECISION_DIGITS",
    "ClosedFormResult",
    "RealSolveResult",
    "solve_closed_n2",
    "solve_real",
    "fixed_point_residual",
    "relative_residual",
    "format_real",
]

PRECISION_DIGITS = 50
MAX_ITERATIONS = 10_000

_ctx = mpmath.mp.clone()
_ctx.dps = PRECISION_DIGITS


@dataclass(frozen=True)
class ClosedFormResult:
    a: int
    b: int
    branch: Branch
    value: mpf
    exact: int | None  # set when 2ab is a perfect square


@dataclass(frozen=True)
class RealSolveResult:
    n: int
    a: int
    b: int
    C_value: mpf
    residual: mpf
    bracket: tuple[mpf, mpf]
    iterations: int
    tol: float

    def to_record(self) -> dict:
        return {
            "n": str(self.n),
            "a": str(self.a),
            "b": str(self.b),
            "C_value": format_real(self.C_value),
            "residual": format_real(self.residual, 10),
            "bracket": [format_real(x) for x in self.bracket],
            "iterations": str(self.iterations),
            "tol": repr(self.tol),
        }


def format_real(x, digits: int = 40) -> str:
    """Decimal string with ``digits`` significant digits, trailing zeros kept."""
    return _ctx.nstr(_ctx.mpf(x), digits, strip_zeros=False)


def _check_ab(a: int, b: int) -> None:
    if a < 1 or b < 1:
        raise InvalidParams(f"a and b must be positive integers, got a={a}, b={b}")


def solve_closed_n2(a: int, b: int, branch: Branch | str = Branch.PLUS) -> ClosedFormResult:
    _check_ab(a, b)
    branch = Branch(branch)
    sign = 1 if branch is Branch.PLUS else -1
    r = isqrt(2 * a * b)
    exact = a + b + sign * r if r * r == 2 * a * b else None
    value = _ctx.mpf(a + b) + sign * _ctx.sqrt(2 * a * b) if exact is None else _ctx.mpf(exact)
    return ClosedFormResult(a, b, branch, value, exact)


def solve_real(n: int, a: int, b: int, tol: float = 1e-12) -> RealSolveResult:
    """Bisect ``F_n`` on ``[max(a, b), H]``.

    ``H`` doubles from ``a + b + 1`` until ``F_n(H) > 0``; iteration stops
    once ``(high - low) / low <= tol`` and the midpoint is returned.
    """
    require_exponent(n)
    _check_ab(a, b)
    if not tol > 0:
        raise ValueError(f"tol must be positive, got {tol}")
    f_n = constraint_poly(n)

    def F(x):
        return poly_eval(f_n, x, a, b)

    low = max(a, b)
    if F(low) >= 0:
        raise NoBracket(f"F_{n}({low}) >= 0 for a={a}, b={b}")
    high = a + b + 1
    while F(high) <= 0:
        low, high = high, 2 * high

    lo, hi = _ctx.mpf(low), _ctx.mpf(high)
    iterations = 0
    while (hi - lo) / lo > tol:
        if iterations >= MAX_ITERATIONS:
            raise ArithmeticError("bisection did not converge")
        mid = (lo + hi) / 2
        # F(lo) < 0 <= F(hi) throughout
        if F(mid) < 0:
            lo = mid
        else:
            hi = mid
        iterations += 1
    root = (lo + hi) / 2
    residual = F(root)
    return RealSolveResult(n, a, b, root, residual, (lo, hi), iterations, tol)


def relative_residual(result: RealSolveResult) -> mpf:
    """``|F_n(C)| / C^n`` at the returned root."""
    return abs(result.residual) / result.C_value**result.n


def fixed_point_residual(n: int, result: RealSolveResult) -> mpf:
    """``C - (a+b) - radical(C)`` at the solver's root.

    n = 3 uses ``(3ab(2C - (a+b)))^(1/3)``, n = 4 uses
    ``(2ab(6C^2 - 6C(a+b) + 2a^2 + 3ab + 2b^2))^(1/4)``; any other n uses
    ``(ab*P_n(C))^(1/n)``.  A negative radicand raises NegativeRadicand
    instead of picking a branch.
    """
    require_exponent(n)
    if result.n != n:
        raise ValueError(f"result was solved for n={result.n}, not n={n}")
    return radical_discrepancy(n, result.a, result.b, result.C_value)


def radical_discrepancy(n: int, a: int, b: int, C_value) -> mpf:
    Cv = _ctx.mpf(C_value)
    s = a + b
    if n == 3:
        radicand = 3 * a * b * (2 * Cv - s)
    elif n == 4:
        radicand = 2 * a * b * (6 * Cv**2 - 6 * Cv * s + (2 * a * a + 3 * a * b + 2 * b * b))
    else:
        radicand = a * b * poly_eval(complete_power(n).p_poly, Cv, a, b)
    if radicand < 0:
        raise NegativeRadicand(f"radicand {_ctx.nstr(radicand, 15)} < 0 at C={_ctx.nstr(Cv, 15)}")
    return Cv - s - _ctx.root(radicand, n)
