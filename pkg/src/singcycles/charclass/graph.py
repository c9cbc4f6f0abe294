"""Flat limits of graphs: the graph deformation and the Lagrangian specialisation."""
from __future__ import annotations

from dataclasses import dataclass

from ..errors import MultipleSingularFibres
from ..idealeng import Ideal, fresh_name
from ..idealeng.ideal import saturate_by_element
from ..polycore import GREVLEX, Poly, PolyRing
from ..singlocal import discriminant_ideal, jacobian_matrix
from .classes import Ambient, CycleClass, cycle_class
from .rees import fibre_names, rees_graph_ideal
from .segre import _hypersurface


@dataclass(frozen=True)
class GraphLimit:
    dominant: CycleClass
    residual: CycleClass
    total: CycleClass

    def conserved(self) -> bool:
        return (self.dominant + self.residual).coefficients == self.total.coefficients


@dataclass(frozen=True)
class LagrangianLimit:
    cone_part: CycleClass
    cylinder_part: CycleClass
    limit: CycleClass


def _special_fibre(I: Ideal, s: str, target: PolyRing) -> Ideal:
    """Saturate by the parameter, then set it to zero."""
    sat = saturate_by_element(I, I.ring.gen(s))
    sub = {s: target.zero()}
    return Ideal(target, [g.substitute(sub, target) for g in sat.generators])


def _f(f) -> Poly:
    return _hypersurface(f)[0]


def graph_limit_cycle(f) -> GraphLimit:
    """Classes in C^m x P^m of Bl_Y M, P(C_Y M + 1) and the limit of the graphs.

    The graph of s.df : T*C -> T*M in P(T*M + f*T*C) is (s b_i - f_i a); its
    limit as s -> 0 is computed by saturating by s and setting s = 0.
    """
    f = _f(f)
    src = f.ring
    m = src.nvars
    partials = jacobian_matrix([f])[0]
    bs = fibre_names(src, m, "b")
    alpha = fresh_name(PolyRing(src.variables + bs), "alpha")
    amb = Ambient(src.variables, bs + (alpha,))
    ring = amb.ring()
    g = [p.change_ring(ring) for p in partials]
    a = ring.gen(alpha)

    if all(p.is_zero() for p in partials):
        raise ValueError("constant function: the graph construction is degenerate")
    rees, _ = rees_graph_ideal(partials, bs)
    dom_ideal = Ideal(ring, [p.change_ring(ring) for p in rees.generators] + [a])
    dominant = cycle_class(dom_ideal, amb, m, "Bl_Y M")

    Y = Ideal(src, partials)
    if Y.is_unit():
        residual = CycleClass.zero(amb, m, "P(C_Y M + 1)")
    else:
        res_ideal = Ideal(ring, [p.change_ring(ring) for p in rees.generators] + g)
        residual = cycle_class(res_ideal, amb, m, "P(C_Y M + 1)")

    s = fresh_name(ring, "s")
    fam_ring = PolyRing((s,) + ring.variables, GREVLEX)
    S = fam_ring.gen(s)
    fam = Ideal(fam_ring, [S * fam_ring.gen(b) - gi.change_ring(fam_ring) * fam_ring.gen(alpha)
                           for b, gi in zip(bs, g)])
    total = cycle_class(_special_fibre(fam, s, ring), amb, m, "M_inf")
    return GraphLimit(dominant, residual, total)


def _is_power_of_w(D: Ideal) -> bool:
    if D.is_unit():
        return True
    gens = D.groebner()
    if len(gens) != 1:
        return False
    terms = gens[0].terms
    return len(terms) == 1


def lagrangian_specialisation(f, check_discriminant: bool = True) -> LagrangianLimit:
    """Limit of the conormal family of {s y + f = 0} at s = 0, in C^(m+1) x P^m.

    The family ideal holds s y + f, the syzygies s b_i - f_i a and
    f_j b_i - f_i b_j of (s, df); it is saturated by s and s is set to 0.
    ``cylinder_part`` is the saturation by y (components not over y = 0) and
    ``cone_part`` is the rest.
    """
    f = _f(f)
    src = f.ring
    if check_discriminant and not _is_power_of_w(discriminant_ideal(f)):
        raise MultipleSingularFibres(f"{f} has singular fibres other than f = 0")
    m = src.nvars
    partials = jacobian_matrix([f])[0]
    taken = PolyRing(src.variables)
    y = fresh_name(taken, "y")
    bs = fibre_names(PolyRing(src.variables + (y,)), m, "b")
    alpha = fresh_name(PolyRing(src.variables + (y,) + bs), "alpha")
    amb = Ambient(src.variables + (y,), (alpha,) + bs)
    ring = amb.ring()
    s = fresh_name(ring, "s")
    big = PolyRing((s,) + ring.variables, GREVLEX)
    S, Yv, A = big.gen(s), big.gen(y), big.gen(alpha)
    fb = f.change_ring(big)
    g = [p.change_ring(big) for p in partials]
    B = [big.gen(b) for b in bs]
    gens = [S * Yv + fb]
    gens += [S * Bi - gi * A for Bi, gi in zip(B, g)]
    for i in range(m):
        for j in range(i + 1, m):
            r = g[j] * B[i] - g[i] * B[j]
            if not r.is_zero():
                gens.append(r)
    L = _special_fibre(Ideal(big, gens), s, ring)
    limit = cycle_class(L, amb, m, "limit")
    cyl = saturate_by_element(L, ring.gen(y))
    cylinder = cycle_class(cyl, amb, m, "X' x C")
    return LagrangianLimit(limit - cylinder, cylinder, limit)


def total_transform_prime_class(f) -> CycleClass:
    """[X'] for Y' = (f, df) in C^m x P^m, the f-coordinate first; dimension m - 1."""
    f = _f(f)
    src = f.ring
    m = src.nvars
    partials = jacobian_matrix([f])[0]
    names = fibre_names(src, m + 1, "c")
    rees, amb = rees_graph_ideal([f] + partials, names)
    ring = amb.ring()
    X = rees + Ideal(ring, [f.change_ring(ring)])
    return cycle_class(X, amb, m - 1, "X'")
