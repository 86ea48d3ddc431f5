"""Exact verification of power-completion identities, M-parameterized
Pythagorean triples and bounded searches for A^n + B^n = C^n."""

from .completion import (
    CompletionIdentity,
    SignedPascalRow,
    complete_power,
    completion_terms,
    constraint_poly,
    pascal_row,
    verify_master_identity,
)
from .exact_core import C, Poly, a, b, poly_add, poly_div_ab, poly_eval, poly_mul, poly_pow
from .triples import Branch, Triple, TripleParams, enumerate_triples, euclid_oracle, generate, recover_params

__version__ = "0.1.0"
