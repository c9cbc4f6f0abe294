"""Groebner and standard bases, ideal arithmetic and enumerative invariants."""
from .hilbert_data import HilbertData, hilbert_data, kpoly_multidegree
from .ideal import (
    INFINITE,
    Ideal,
    eliminate,
    fresh_name,
    groebner_basis,
    ideal_quotient,
    intersect,
    intersect_all,
    iterated_quotient_saturation,
    krull_dimension,
    mora_normal_form,
    saturation,
    standard_basis,
    vsdim_quotient,
)
from .stats import collect_stats

__all__ = [
    "INFINITE",
    "HilbertData",
    "Ideal",
    "collect_stats",
    "eliminate",
    "fresh_name",
    "groebner_basis",
    "hilbert_data",
    "ideal_quotient",
    "intersect",
    "intersect_all",
    "iterated_quotient_saturation",
    "kpoly_multidegree",
    "krull_dimension",
    "mora_normal_form",
    "saturation",
    "standard_basis",
    "vsdim_quotient",
]
