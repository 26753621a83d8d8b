"""Exact arithmetic kernel: finite fields, sparse polynomials, jets,
Groebner bases with elimination, univariate factorization."""

from .field import (
    FieldContext,
    FieldError,
    SizeLimitError,
    Embedding,
    embed_field,
    extend_field,
    is_prime,
    make_field,
    u_factor,
    u_roots,
)
from .poly import Jet, ParseError, Poly, PolyError, parse_poly, poly_expr
from .groebner import (
    INFINITE,
    BudgetError,
    GroebnerError,
    Inconclusive,
    MonomialOrder,
    eliminate,
    groebner,
    leading_term,
    normal_form,
    quotient_dimension,
)


def univariate_factor(f: Poly, seed: int = 0):
    """Factor a univariate Poly into monic irreducible Polys.

    Returns (leading coefficient, [(factor, multiplicity), ...]); the
    product of the factors to their multiplicities times the leading
    coefficient reconstructs f.
    """
    if f.is_zero():
        raise PolyError("cannot factor the zero polynomial")
    name, coeffs = f.to_univariate()
    lead, facs = u_factor(f.field, coeffs, seed)
    out = [(Poly.from_univariate(f.field, f.vars, name, list(g)), m)
           for g, m in facs]
    return lead, out


__all__ = [
    "FieldContext", "FieldError", "SizeLimitError", "Embedding",
    "embed_field", "extend_field", "is_prime", "make_field",
    "u_factor", "u_roots",
    "Jet", "ParseError", "Poly", "PolyError", "parse_poly", "poly_expr",
    "INFINITE", "BudgetError", "GroebnerError", "Inconclusive",
    "MonomialOrder", "eliminate", "groebner", "leading_term", "normal_form",
    "quotient_dimension", "univariate_factor",
]
