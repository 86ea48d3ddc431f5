"""Completing the n-th power.

Substituting ``A = C - a`` and ``B = C - b`` into ``C^n = A^n + B^n`` gives
the constraint polynomial ``F_n = (C-a)^n + (C-b)^n - C^n``.  For every n the
unconditional identity

    [C - (a+b)]^n - F_n = a*b*P_n

holds, and ``P_n`` is the bracketed factor the n = 2, 3, 4 derivations arrive
at (``2``, ``6C - 3a - 3b``, ``12C^2 - 12C(a+b) + 4a^2 + 6ab + 4b^2``).
Wherever ``F_n`` vanishes this reads ``[C - (a+b)]^n = ab*P_n``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb

from .errors import IdentityViolation, NotDivisibleByAB, require_exponent
from .exact_core import C, Monomial, Poly, a, b, poly_div_ab, poly_mul

__all__ = [
    "CompletionIdentity",
    "SignedPascalRow",
    "constraint_poly",
    "complete_power",
    "verify_master_identity",
    "pascal_row",
    "completion_terms",
    "format_pascal_table",
]

AB = a * b


@dataclass(frozen=True)
class CompletionIdentity:
    n: int
    p_poly: Poly
    verified: bool

    def to_record(self) -> dict:
        return {
            "n": str(self.n),
            "p_poly": str(self.p_poly),
            "terms": [str(t) for t in completion_terms(self.n)],
            "identity": f"[C - (a + b)]^{self.n} - F_{self.n} = a*b*({self.p_poly})",
            "verified": self.verified,
        }


@dataclass(frozen=True)
class SignedPascalRow:
    n: int
    coefficients: tuple[int, ...]
    applicable_terms: int

    def render(self) -> str:
        return " ".join(str(c) for c in self.coefficients)


@lru_cache(maxsize=None)
def constraint_poly(n: int) -> Poly:
    """``F_n = (C-a)^n + (C-b)^n - C^n``, expanded."""
    require_exponent(n)
    return (C - a) ** n + (C - b) ** n - C**n


@lru_cache(maxsize=None)
def complete_power(n: int) -> CompletionIdentity:
    """Divide ``[C-(a+b)]^n - F_n`` by ``ab`` and re-check the product."""
    require_exponent(n)
    lhs = (C - a - b) ** n - constraint_poly(n)
    try:
        p_n = poly_div_ab(lhs)
    except NotDivisibleByAB as exc:
        raise IdentityViolation(f"n={n}: completion is not a multiple of ab") from exc
    if poly_mul(AB, p_n) != lhs:
        raise IdentityViolation(f"n={n}: ab*P_n does not re-expand to the completion")
    return CompletionIdentity(n=n, p_poly=p_n, verified=True)


def _expand_trinomial_power(n: int) -> Poly:
    # (C - a - b)^n from the multinomial theorem, no repeated multiplication
    terms = {}
    for i in range(n + 1):
        for j in range(n - i + 1):
            k = n - i - j
            coeff = comb(n, i) * comb(n - i, j)
            terms[Monomial(i, j, k)] = -coeff if (j + k) % 2 else coeff
    return Poly(terms)


def _expand_constraint(n: int) -> Poly:
    terms: dict[Monomial, int] = {Monomial(n, 0, 0): 1}
    for k in range(1, n + 1):
        coeff = comb(n, k) * (-1) ** k
        terms[Monomial(n - k, k, 0)] = coeff
        terms[Monomial(n - k, 0, k)] = coeff
    return Poly(terms)


def verify_master_identity(n: int) -> bool:
    """True iff ``[C-(a+b)]^n - F_n - ab*P_n`` is the zero polynomial.

    Both ``[C-(a+b)]^n`` and ``F_n`` are rebuilt here from binomial and
    multinomial coefficients, independently of :func:`complete_power`.
    """
    require_exponent(n)
    p_n = complete_power(n).p_poly
    residue = _expand_trinomial_power(n) - _expand_constraint(n) - poly_mul(AB, p_n)
    return residue.is_zero()


def pascal_row(n: int) -> SignedPascalRow:
    require_exponent(n)
    row = tuple((-1) ** k * comb(n, k) for k in range(n + 1))
    return SignedPascalRow(n=n, coefficients=row, applicable_terms=n - 1)


def completion_terms(n: int) -> list[Poly]:
    """The ``n - 1`` summands of ``P_n`` in descending powers of C.

    Summand ``k`` (``k = 2..n``) is the signed binomial coefficient of
    row n at position k, times ``C^(n-k)``, times
    ``((a+b)^k - a^k - b^k) / ab``.
    """
    require_exponent(n)
    out = []
    for k in range(2, n + 1):
        inner = Poly({(0, j - 1, k - j - 1): comb(k, j) for j in range(1, k)})
        out.append(Poly.monomial((-1) ** k * comb(n, k), n - k) * inner)
    return out


def format_pascal_table(n_max: int) -> str:
    """Rows ``n = 2..n_max`` with the applicable-terms column.

    The last column repeats the entries at positions 2..n, the ones used to
    complete the power.
    """
    require_exponent(n_max)
    rows = [pascal_row(n) for n in range(2, n_max + 1)]
    width = max(len(r.render()) for r in rows)
    lines = [f"{'row':<{width}}  {'n':<6}  {'A':<5}  completing entries"]
    for r in rows:
        marked = " ".join(str(c) for c in r.coefficients[2:])
        lines.append(f"{r.render():<{width}}  n = {r.n:<2}  A = {r.applicable_terms:<1}  {marked}".rstrip())
    return "\n".join(lines) + "\n"
