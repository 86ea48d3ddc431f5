"""Checkable claims as predicates, plus a bounded search for C^n = A^n + B^n.

Every inequality is evaluated with exact integers or fractions.  Claims are
only ever tested on finite grids; a report saying ``holds`` means "no
counterexample in the stated domain" and nothing more.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable

from .completion import complete_power
from .errors import require_exponent
from .exact_core import poly_eval
from .triples import Branch, enumerate_triples

__all__ = [
    "CLAIM_IDS",
    "ClaimReport",
    "SearchReport",
    "Eq46Chain",
    "check_common_core",
    "derive_eq46_chain",
    "derive_eq46_coefficient",
    "check_eq63",
    "check_eq87",
    "check_eq89_grid",
    "eq89_quotient",
    "eq63_report",
    "eq87_report",
    "common_core_report",
    "eq46_report",
    "search_solutions",
    "residual",
]

CLAIM_IDS = ("common_core", "eq46_chain", "eq63_grid", "eq87_grid", "eq89_grid")

POSITIVE_ONLY_NOTE = "a and b restricted to positive integers; negative factors untested."


@dataclass
class ClaimReport:
    claim_id: str
    domain_tested: str
    counterexamples: list[dict] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)
    elapsed_ms: float | None = None

    @property
    def holds(self) -> bool:
        return not self.counterexamples

    def to_record(self, timing: bool = False) -> dict:
        rec = {
            "claim_id": self.claim_id,
            "domain": self.domain_tested,
            "holds": self.holds,
            "counterexamples": self.counterexamples,
            "notes": self.notes,
        }
        if timing and self.elapsed_ms is not None:
            rec["elapsed_ms"] = f"{self.elapsed_ms:.1f}"
        return rec


@dataclass
class SearchReport:
    n: int
    bound: int
    solutions: list[tuple[int, int, int]]
    candidates_checked: int
    elapsed_ms: float | None = None

    def to_record(self, timing: bool = False) -> dict:
        rec = {
            "n": str(self.n),
            "domain": f"1 <= A <= B < C <= {self.bound}",
            "bound": str(self.bound),
            "solutions": [[str(x) for x in s] for s in self.solutions],
            "candidates_checked": str(self.candidates_checked),
        }
        if timing and self.elapsed_ms is not None:
            rec["elapsed_ms"] = f"{self.elapsed_ms:.1f}"
        return rec


def _ms_since(t0: float) -> float:
    return (time.perf_counter() - t0) * 1000.0


def check_common_core(C: int, a: int, b: int) -> bool:
    return C > a + b


def common_core_report(M_max: int = 100) -> ClaimReport:
    """Every valid plus-branch triple has ``C - (a + b) = 2M > 0``."""
    t0 = time.perf_counter()
    report = ClaimReport("common_core", f"valid plus-branch triples, 1 <= M <= {M_max}")
    for rec in enumerate_triples(M_max, include_degenerate=False):
        p = rec.params
        if p.branch is Branch.PLUS and not (
            check_common_core(rec.C, p.a, p.b) and rec.C - (p.a + p.b) == 2 * p.M
        ):
            report.counterexamples.append({"M": str(p.M), "a": str(p.a), "b": str(p.b), "C": str(rec.C)})
    report.notes.append(POSITIVE_ONLY_NOTE)
    report.elapsed_ms = _ms_since(t0)
    return report


@dataclass(frozen=True)
class Eq46Chain:
    """Each intermediate of the n = 3 chain, as exact fractions.

    ``s`` stands for ``(a+b) / [C - (a+b)]``; values are coefficients of
    ``(a+b)`` or of ``[C - (a+b)]`` as noted per field.
    """

    lhs_over_3ab: Fraction       # 2ab / 3ab
    two_thirds_minus_two: Fraction
    s: Fraction
    core_over_sum: Fraction      # [C - (a+b)] = this * (a+b)
    c_over_sum: Fraction         # C = this * (a+b)


def derive_eq46_chain() -> Eq46Chain:
    # 2ab = 3ab * (2 + s)  =>  2/3 = 2 + s
    lhs = Fraction(2, 3)
    diff = lhs - 2
    s = diff
    # s * [C-(a+b)] = (a+b)  =>  [C-(a+b)] = (1/s) * (a+b)
    core = 1 / s
    c_coeff = 1 + core
    return Eq46Chain(lhs, diff, s, core, c_coeff)


def derive_eq46_coefficient() -> Fraction:
    return derive_eq46_chain().c_over_sum


def eq46_report() -> ClaimReport:
    chain = derive_eq46_chain()
    report = ClaimReport("eq46_chain", "symbolic in (a+b); exact rational replay")
    expected = {
        "lhs_over_3ab": Fraction(2, 3),
        "two_thirds_minus_two": Fraction(-4, 3),
        "s": Fraction(-4, 3),
        "core_over_sum": Fraction(-3, 4),
        "c_over_sum": Fraction(1, 4),
    }
    for name, want in expected.items():
        got = getattr(chain, name)
        if got != want:
            report.counterexamples.append({"step": name, "expected": str(want), "got": str(got)})
    report.notes.extend([
        "assumption (not validated): [C - (a+b)]^2 is set equal to 2ab inside the n = 3 relation.",
        f"result C = {chain.c_over_sum}*(a+b) < a+b for positive a, b, so the common-core condition fails.",
    ])
    return report


def _eq62_rhs(a: int, b: int) -> int:
    return 2 * a * b * (6 * (a + b + 1) + (2 * a * a + 3 * a * b + 2 * b * b))


def check_eq63(a: int, b: int) -> bool:
    """``2ab < 2ab*[6(a+b+1) + 2a^2 + 3ab + 2b^2]`` (the x = 1 substitution)."""
    return 2 * a * b < _eq62_rhs(a, b)


def check_eq87(a: int, b: int) -> bool:
    # the general-n section's n = 4 case, expanded from (a+b+1)^2 form
    s = a + b
    rhs = 2 * a * b * (6 * (s + 1) ** 2 - 6 * (s + 1) * s + (2 * a * a + 3 * a * b + 2 * b * b))
    return rhs > 2 * a * b


def _pair_report(claim_id: str, check, a_range: range, b_range: range) -> ClaimReport:
    t0 = time.perf_counter()
    report = ClaimReport(claim_id, f"a in [{a_range[0]}, {a_range[-1]}], b in [{b_range[0]}, {b_range[-1]}], x = 1")
    for a in a_range:
        for b in b_range:
            if not check(a, b):
                report.counterexamples.append({"a": str(a), "b": str(b)})
    report.notes.append(POSITIVE_ONLY_NOTE)
    report.notes.append("assumption (not validated): dividing by [C - (a+b)]^2 via matched fourth roots; only the evaluation is checked.")
    report.elapsed_ms = _ms_since(t0)
    return report


def eq63_report(a_range: range = range(1, 101), b_range: range = range(1, 101)) -> ClaimReport:
    return _pair_report("eq63_grid", check_eq63, a_range, b_range)


def eq87_report(a_range: range = range(1, 101), b_range: range = range(1, 101)) -> ClaimReport:
    return _pair_report("eq87_grid", check_eq87, a_range, b_range)


def eq89_quotient(n: int, a: int, b: int, x: int) -> Fraction:
    """``ab*P_n(C) / x^(n-2)`` at ``C = a + b + x``."""
    p_n = complete_power(n).p_poly
    return Fraction(a * b * poly_eval(p_n, a + b + x, a, b), x ** (n - 2))


def check_eq89_grid(
    n: int,
    a_range: Iterable[int] = range(1, 21),
    b_range: Iterable[int] = range(1, 21),
    x_range: Iterable[int] = range(1, 21),
) -> ClaimReport:
    """Test ``Q > 2ab`` at every grid point, Q as in :func:`eq89_quotient`."""
    require_exponent(n, 3)
    a_range, b_range, x_range = list(a_range), list(b_range), list(x_range)
    if not (a_range and b_range and x_range):
        raise ValueError("grid ranges must be non-empty")
    t0 = time.perf_counter()
    report = ClaimReport(
        "eq89_grid",
        f"n = {n}, a in [{min(a_range)}, {max(a_range)}], b in [{min(b_range)}, {max(b_range)}], "
        f"x in [{min(x_range)}, {max(x_range)}], C = a + b + x",
    )
    for a in a_range:
        for b in b_range:
            for x in x_range:
                q = eq89_quotient(n, a, b, x)
                if not q > 2 * a * b:
                    report.counterexamples.append(
                        {"a": str(a), "b": str(b), "x": str(x), "Q": str(q)}
                    )
    report.notes.append(POSITIVE_ONLY_NOTE)
    report.notes.append("finite grid only; no extrapolation to all C > a + b or all n.")
    report.elapsed_ms = _ms_since(t0)
    return report


def residual(n: int, A: int, B: int, C: int) -> int:
    return C**n - A**n - B**n


def _search_chunk(args: tuple[int, int, int]) -> tuple[list[tuple[int, int, int]], int]:
    n, c_lo, c_hi = args
    powers = [k**n for k in range(c_hi + 1)]
    found = []
    probes = 0
    for C in range(max(c_lo, 2), c_hi + 1):
        target = powers[C]
        lo, hi = 1, C - 1
        while lo <= hi:
            probes += 1
            s = powers[lo] + powers[hi]
            if s == target:
                found.append((lo, hi, C))
                lo += 1
                hi -= 1
            elif s < target:
                lo += 1
            else:
                hi -= 1
    return found, probes


def search_solutions(n: int, bound: int, jobs: int = 1) -> SearchReport:
    """All ``1 <= A <= B < C <= bound`` with ``A^n + B^n = C^n``.

    Two-pointer scan per hypotenuse over precomputed n-th powers.  With
    ``jobs > 1`` the C-range is split across processes; the merged report
    is identical for any job count.
    """
    require_exponent(n)
    if bound < 2:
        raise ValueError(f"bound must be >= 2, got {bound}")
    t0 = time.perf_counter()
    jobs = max(1, jobs)
    edges = [2 + (bound - 1) * i // jobs for i in range(jobs + 1)]
    chunks = [(n, edges[i], edges[i + 1] - 1) for i in range(jobs) if edges[i] <= edges[i + 1] - 1]
    if jobs == 1:
        parts = [_search_chunk(c) for c in chunks]
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            parts = list(pool.map(_search_chunk, chunks))
    solutions = sorted((s for found, _ in parts for s in found), key=lambda t: (t[2], t[0]))
    for A, B, C in solutions:
        if residual(n, A, B, C) != 0:
            raise AssertionError(f"search produced a non-solution {(A, B, C)}")
    return SearchReport(n, bound, [tuple(s) for s in solutions],
                        sum(p for _, p in parts), _ms_since(t0))
