"""Characteristic-class calculus: Rees ideals, limit cycles, Segre and CSM classes."""
from .classes import (
    SIGN_TABLE,
    Ambient,
    ChernIntegrand,
    CycleClass,
    SegreClass,
    cycle_class,
    sign,
)
from .csm import CSMResult, csm_projective_hypersurface, pushforward_over_one_plus
from .graph import (
    GraphLimit,
    LagrangianLimit,
    graph_limit_cycle,
    lagrangian_specialisation,
    total_transform_prime_class,
)
from .ohmoto import mu_total_oracle, mu_total_via_Z, ohmoto_Z_ideal, rational_points
from .rees import rees_by_elimination, rees_graph_ideal
from .segre import (
    blowup_fibre_integral,
    blowup_of_jacobian,
    chi_at_point,
    mu_at_point,
    normal_cone_closure,
    segre_class_fibre,
    segre_class_fibre_by_blowup,
    sigma_f_ideal,
    total_transform_ideal,
)

__all__ = [
    "SIGN_TABLE",
    "Ambient",
    "CSMResult",
    "ChernIntegrand",
    "CycleClass",
    "GraphLimit",
    "LagrangianLimit",
    "SegreClass",
    "blowup_fibre_integral",
    "blowup_of_jacobian",
    "chi_at_point",
    "csm_projective_hypersurface",
    "cycle_class",
    "graph_limit_cycle",
    "lagrangian_specialisation",
    "mu_at_point",
    "mu_total_oracle",
    "mu_total_via_Z",
    "normal_cone_closure",
    "ohmoto_Z_ideal",
    "pushforward_over_one_plus",
    "rational_points",
    "rees_by_elimination",
    "rees_graph_ideal",
    "segre_class_fibre",
    "segre_class_fibre_by_blowup",
    "sigma_f_ideal",
    "sign",
    "total_transform_ideal",
    "total_transform_prime_class",
]
