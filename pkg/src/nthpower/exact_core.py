"""Exact integers, rationals and sparse polynomials in the variables C, a, b.

Python's ``int`` is the big integer type and :class:`fractions.Fraction` the
exact rational; this module adds the decimal codecs for both and the
:class:`Poly` type that carries every symbolic expansion in the package.

Monomials are exponent triples ``(degC, degA, degB)``.  Canonical order is
descending lexicographic on that triple, so ``C`` dominates ``a`` dominates
``b`` and rendering is deterministic::

    >>> str((C - a) ** 2)
    'C^2 - 2*C*a + a^2'
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator, Mapping
from fractions import Fraction
from typing import Any, NamedTuple, Union

from .errors import NotDivisibleByAB

__all__ = [
    "Monomial",
    "Poly",
    "C",
    "a",
    "b",
    "ONE",
    "ZERO",
    "poly_add",
    "poly_mul",
    "poly_pow",
    "poly_eval",
    "poly_div_ab",
    "parse_int",
    "render_int",
    "parse_rational",
    "render_rational",
]

VARIABLES = ("C", "a", "b")


class Monomial(NamedTuple):
    degC: int = 0
    degA: int = 0
    degB: int = 0

    @property
    def degree(self) -> int:
        return self.degC + self.degA + self.degB

    def __mul__(self, other: Monomial) -> Monomial:  # type: ignore[override]
        return Monomial(self.degC + other.degC, self.degA + other.degA, self.degB + other.degB)

    def swap_ab(self) -> Monomial:
        return Monomial(self.degC, self.degB, self.degA)

    def render(self) -> str:
        parts = []
        for name, e in zip(VARIABLES, self):
            if e == 1:
                parts.append(name)
            elif e > 1:
                parts.append(f"{name}^{e}")
        return "*".join(parts)


Scalar = Union[int, "Poly"]


class Poly:
    """Immutable sparse polynomial with integer coefficients.

    Zero coefficients are never stored and terms are kept in canonical
    order, so structural equality is plain tuple equality.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[tuple[int, int, int], int] | Iterable[tuple[tuple[int, int, int], int]] = ()):
        acc: dict[Monomial, int] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for mono, coeff in items:
            if not isinstance(coeff, int):
                raise TypeError(f"coefficients must be int, got {type(coeff).__name__}")
            mono = Monomial(*mono)
            if min(mono) < 0:
                raise ValueError(f"negative exponent in {mono}")
            acc[mono] = acc.get(mono, 0) + coeff
        self._terms = tuple(sorted(((m, c) for m, c in acc.items() if c), reverse=True))
        self._hash: int | None = None

    @classmethod
    def _from_dict(cls, acc: dict[Monomial, int]) -> Poly:
        # trusted fast path: keys already Monomial, values already int
        p = cls.__new__(cls)
        p._terms = tuple(sorted(((m, c) for m, c in acc.items() if c), reverse=True))
        p._hash = None
        return p

    @classmethod
    def constant(cls, value: int) -> Poly:
        return cls({(0, 0, 0): value})

    @classmethod
    def monomial(cls, coeff: int, degC: int = 0, degA: int = 0, degB: int = 0) -> Poly:
        return cls({(degC, degA, degB): coeff})

    # -- inspection ---------------------------------------------------------

    @property
    def terms(self) -> tuple[tuple[Monomial, int], ...]:
        return self._terms

    def as_dict(self) -> dict[Monomial, int]:
        return dict(self._terms)

    def coefficient(self, degC: int = 0, degA: int = 0, degB: int = 0) -> int:
        return self.as_dict().get(Monomial(degC, degA, degB), 0)

    def is_zero(self) -> bool:
        return not self._terms

    def degree_in_C(self) -> int:
        return max((m.degC for m, _ in self._terms), default=-1)

    def total_degree(self) -> int:
        return max((m.degree for m, _ in self._terms), default=-1)

    def swap_ab(self) -> Poly:
        return Poly._from_dict({m.swap_ab(): c for m, c in self._terms})

    def __iter__(self) -> Iterator[tuple[Monomial, int]]:
        return iter(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other: Scalar) -> Poly:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return poly_add(self, other)

    __radd__ = __add__

    def __neg__(self) -> Poly:
        return Poly._from_dict({m: -c for m, c in self._terms})

    def __sub__(self, other: Scalar) -> Poly:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return poly_add(self, -other)

    def __rsub__(self, other: Scalar) -> Poly:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return poly_add(other, -self)

    def __mul__(self, other: Scalar) -> Poly:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return poly_mul(self, other)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> Poly:
        return poly_pow(self, k)

    def __call__(self, C_val: Any, a_val: Any, b_val: Any) -> Any:
        return poly_eval(self, C_val, a_val, b_val)

    # -- comparison / rendering ---------------------------------------------

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int) and not isinstance(other, bool):
            other = Poly.constant(other)
        if not isinstance(other, Poly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self._terms)
        return self._hash

    def __repr__(self) -> str:
        return f"Poly({str(self)!r})"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        out = []
        for i, (mono, coeff) in enumerate(self._terms):
            body = mono.render()
            mag = abs(coeff)
            if not body:
                text = str(mag)
            elif mag == 1:
                text = body
            else:
                text = f"{mag}*{body}"
            if i == 0:
                out.append(f"-{text}" if coeff < 0 else text)
            else:
                out.append(f"{'-' if coeff < 0 else '+'} {text}")
        return " ".join(out)


def _coerce(value: Any) -> Poly:
    if isinstance(value, Poly):
        return value
    if isinstance(value, int) and not isinstance(value, bool):
        return Poly.constant(value)
    return NotImplemented


ZERO = Poly()
ONE = Poly.constant(1)
C = Poly.monomial(1, 1, 0, 0)
a = Poly.monomial(1, 0, 1, 0)
b = Poly.monomial(1, 0, 0, 1)
_AB = Monomial(0, 1, 1)


def poly_add(p: Poly, q: Poly) -> Poly:
    acc = dict(p._terms)
    for m, c in q._terms:
        acc[m] = acc.get(m, 0) + c
    return Poly._from_dict(acc)


def poly_mul(p: Poly, q: Poly) -> Poly:
    acc: dict[Monomial, int] = {}
    get = acc.get
    for (c1, a1, b1), x in p._terms:
        for (c2, a2, b2), y in q._terms:
            m = Monomial(c1 + c2, a1 + a2, b1 + b2)
            acc[m] = get(m, 0) + x * y
    return Poly._from_dict(acc)


def poly_pow(p: Poly, k: int) -> Poly:
    """Exact ``p**k``; ``p**0`` is 1 (including for the zero polynomial)."""
    if not isinstance(k, int) or k < 0:
        raise ValueError(f"exponent must be a non-negative integer, got {k!r}")
    # The bases we raise are 2-3 term binomials/trinomials, where
    # multiplying by the base each step beats squaring dense intermediates.
    result = ONE
    for _ in range(k):
        result = poly_mul(result, p)
    return result


def poly_eval(p: Poly, C_val: Any, a_val: Any, b_val: Any) -> Any:
    """Evaluate ``p`` at a point.

    Integer arguments give an exact integer; any ring-like values (Fraction,
    mpmath reals) work the same way.
    """
    cache: dict[tuple[int, int], Any] = {}

    def power(idx: int, base: Any, e: int) -> Any:
        key = (idx, e)
        if key not in cache:
            cache[key] = base**e
        return cache[key]

    total: Any = 0
    for (dc, da, db), coeff in p._terms:
        total += coeff * power(0, C_val, dc) * power(1, a_val, da) * power(2, b_val, db)
    return total


def poly_div_ab(p: Poly) -> Poly:
    """Return ``q`` with ``p == a*b*q``.

    Raises :class:`NotDivisibleByAB` when some monomial lacks an ``a`` or a
    ``b`` factor.
    """
    acc = {}
    for m, c in p._terms:
        if m.degA < 1 or m.degB < 1:
            raise NotDivisibleByAB(f"term {Poly({m: c})} has no a*b factor")
        acc[Monomial(m.degC, m.degA - 1, m.degB - 1)] = c
    return Poly._from_dict(acc)


def parse_int(text: str) -> int:
    return int(text.strip())


def render_int(value: int) -> str:
    return str(value)


def parse_rational(text: str) -> Fraction:
    return Fraction(text.strip())


def render_rational(value: Fraction) -> str:
    """``"n"`` for integers, ``"n/d"`` otherwise."""
    return str(value)
