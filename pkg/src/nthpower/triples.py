"""Integer solutions of C^2 = A^2 + B^2 from the M-parameterization.

Pick ``M >= 1``, split ``2*M^2 = a*b`` into positive factors ``a < b`` and
take ``C = a + b + 2M`` (plus branch), ``A = C - a``, ``B = C - b``.  The
minus branch ``C = a + b - 2M`` is computed too but always leaves a
non-positive leg, so its records are marked degenerate.

Only positive factor pairs are used; negative pairs also satisfy
``ab = 2M^2`` but fall outside the solution set considered here.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from enum import Enum
from math import gcd, isqrt

from .errors import InvalidParams, NotATriple, NotRepresentable

__all__ = [
    "Branch",
    "TripleParams",
    "Triple",
    "GenerationRecord",
    "factor_pairs",
    "generate",
    "enumerate_triples",
    "recover_params",
    "euclid_oracle",
    "records_to_csv",
    "CSV_HEADER",
]

CSV_HEADER = ("M", "a", "b", "branch", "A", "B", "C", "valid")


class Branch(str, Enum):
    PLUS = "plus"
    MINUS = "minus"


@dataclass(frozen=True)
class TripleParams:
    M: int
    a: int
    b: int
    branch: Branch = Branch.PLUS


@dataclass(frozen=True, order=True)
class Triple:
    A: int
    B: int
    C: int

    @property
    def primitive(self) -> bool:
        return gcd(self.A, self.B, self.C) == 1

    def canonical(self) -> Triple:
        """Larger leg first, as in (4, 3, 5)."""
        return self if self.A >= self.B else Triple(self.B, self.A, self.C)

    def sort_key(self) -> tuple[int, int, int]:
        return (self.C, self.A, self.B)


@dataclass(frozen=True)
class GenerationRecord:
    params: TripleParams
    A: int
    B: int
    C: int
    degenerate_reason: str | None = None

    @property
    def valid(self) -> bool:
        return self.degenerate_reason is None

    @property
    def triple(self) -> Triple | None:
        return Triple(self.A, self.B, self.C) if self.valid else None

    def csv_row(self) -> tuple[str, ...]:
        p = self.params
        return (str(p.M), str(p.a), str(p.b), p.branch.value,
                str(self.A), str(self.B), str(self.C), "true" if self.valid else "false")

    def to_record(self) -> dict:
        p = self.params
        return {
            "params": {"M": str(p.M), "a": str(p.a), "b": str(p.b), "branch": p.branch.value},
            "triple": None if not self.valid else {
                "A": str(self.A), "B": str(self.B), "C": str(self.C),
                "primitive": self.triple.primitive,
            },
            "legs": {"A": str(self.A), "B": str(self.B), "C": str(self.C)},
            "valid": self.valid,
            "degenerate_reason": self.degenerate_reason,
        }


def _divisors(n: int) -> list[int]:
    small, large = [], []
    for d in range(1, isqrt(n) + 1):
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
    return small + large[::-1]


def factor_pairs(M: int) -> list[tuple[int, int]]:
    """All ``(a, b)`` with ``a < b`` and ``a*b == 2*M**2``, ascending in a."""
    if M < 1:
        raise InvalidParams(f"M must be positive, got {M}")
    target = 2 * M * M
    # 2M^2 is never a perfect square, so a == b cannot occur
    return [(d, target // d) for d in _divisors(target) if d * d < target]


def generate(params: TripleParams) -> GenerationRecord:
    M, a, b = params.M, params.a, params.b
    if M < 1 or a < 1 or b < 1 or a * b != 2 * M * M:
        raise InvalidParams(f"need positive M, a, b with a*b = 2*M^2, got {params}")
    shift = 2 * M if params.branch is Branch.PLUS else -2 * M
    C = a + b + shift
    A, B = C - a, C - b
    if A <= 0 or B <= 0:
        return GenerationRecord(params, A, B, C, degenerate_reason="non-positive leg")
    if A * A + B * B != C * C:
        raise AssertionError(f"generated legs fail the Pythagorean check: {params}")
    return GenerationRecord(params, A, B, C)


def enumerate_triples(M_max: int, include_degenerate: bool = True) -> list[GenerationRecord]:
    """Records for ``M = 1..M_max``, ascending M then a, plus before minus."""
    out = []
    for M in range(1, M_max + 1):
        for a, b in factor_pairs(M):
            for branch in (Branch.PLUS, Branch.MINUS):
                rec = generate(TripleParams(M, a, b, branch))
                if rec.valid or include_degenerate:
                    out.append(rec)
    return out


def recover_params(t: Triple) -> TripleParams:
    """Invert the parameterization: ``a = C - A``, ``b = C - B``, ``M = sqrt(ab/2)``.

    The legs are put in canonical order first so that ``a < b``.
    """
    A, B, C = t.A, t.B, t.C
    if min(A, B, C) < 1 or A * A + B * B != C * C:
        raise NotATriple(f"{(A, B, C)} does not satisfy A^2 + B^2 = C^2")
    A, B = max(A, B), min(A, B)
    a, b = C - A, C - B
    prod = a * b
    M = isqrt(prod // 2)
    if prod % 2 or 2 * M * M != prod:
        raise NotRepresentable(f"(C-A)(C-B)/2 = {prod}/2 is not a perfect square")
    return TripleParams(M, a, b, Branch.PLUS)


def euclid_oracle(C_max: int) -> list[Triple]:
    """Every triple with hypotenuse <= C_max, via k*(m^2-n^2, 2mn, m^2+n^2)."""
    found = set()
    m = 2
    while m * m + 1 <= C_max:
        for n in range(1, m):
            if (m - n) % 2 == 0 or gcd(m, n) != 1:
                continue
            x, y, z = m * m - n * n, 2 * m * n, m * m + n * n
            k = 1
            while k * z <= C_max:
                found.add(Triple(k * x, k * y, k * z).canonical())
                k += 1
        m += 1
    return sorted(found, key=Triple.sort_key)


def records_to_csv(records: list[GenerationRecord]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    writer.writerows(r.csv_row() for r in records)
    return buf.getvalue()
