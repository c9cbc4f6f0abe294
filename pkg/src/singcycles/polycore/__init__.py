"""Exact rationals, sparse polynomials, monomial orders and the text parser."""
from .division import poly_divmod
from .orders import (
    DS,
    GREVLEX,
    GRLEX,
    LEX,
    Monomial,
    MonomialOrder,
    block_order,
    compare_monomials,
)
from .parser import parse_poly
from .poly import Poly, PolyRing, Rational, to_rational

DEFAULT_PRIME = 32003


def ring(names, order=GREVLEX, grading=None) -> PolyRing:
    """Shorthand: ``ring("x y z")`` or ``ring(["x", "y"])``."""
    if isinstance(names, str):
        names = names.replace(",", " ").split()
    return PolyRing(tuple(names), order, grading)


__all__ = [
    "DEFAULT_PRIME",
    "DS",
    "GREVLEX",
    "GRLEX",
    "LEX",
    "Monomial",
    "MonomialOrder",
    "Poly",
    "PolyRing",
    "Rational",
    "block_order",
    "compare_monomials",
    "parse_poly",
    "poly_divmod",
    "ring",
    "to_rational",
]
