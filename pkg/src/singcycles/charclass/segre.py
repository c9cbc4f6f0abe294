"""Segre classes of fibres and the local invariants chi(z), mu(z).

The Segre class of a fibre Z = B cap ({z0} x P^N) in B is computed from the
normal cone C_Z B.  Deforming to the normal cone, z = z0 + s k, saturating by
s and setting s = 0 gives the cone inside {z0} x P^N x C^m_k; adding a free
coordinate k_0 closes it up to P(C + 1) in P^N x P^m, and then

    s_d(Z, B) = deg(h^d k^(D - d) . [P(C + 1)]),      D = dim B.

An independent route (``segre_class_fibre_by_blowup``) uses the exceptional
divisor E of Bl_Z B: s_d = sum_j deg(h^d k^(D - 1 - d) . [E]).
"""
from __future__ import annotations

from typing import Optional, Sequence, Tuple

from gmpy2 import mpq

from ..errors import NonUniformDegrees, UnsupportedComponent
from ..idealeng import Ideal, eliminate, fresh_name
from ..idealeng.generic import Factor, generic_slice_length
from ..idealeng.ideal import saturate_by_element
from ..polycore import Poly, PolyRing, block_order, to_rational
from ..polycore.orders import GREVLEX
from ..singlocal import GermMap, jacobian_matrix
from .classes import Ambient, ChernIntegrand, SegreClass, ideal_dimension, sign
from .rees import fibre_names, rees_graph_ideal


def _point_from_fibre_ideal(A: Ideal, base: Sequence[str]) -> Tuple[mpq, ...]:
    """Read z0 off an ideal generated by affine-linear forms z_i - c_i."""
    ring = A.ring
    idx = [ring.index(v) for v in base]
    point = {}
    for g in A.generators:
        if g.total_degree() != 1:
            raise NonUniformDegrees(f"fibre generator {g} is not an affine-linear form")
        lin = [m for m in g.terms if sum(m) == 1]
        if len(lin) != 1 or lin[0].index(1) not in idx:
            raise NonUniformDegrees(f"fibre generator {g} is not of the form z_i - c")
        i = lin[0].index(1)
        point[ring.variables[i]] = -g.constant_term() / g.terms[lin[0]]
    if set(point) != set(base):
        raise NonUniformDegrees("fibre ideal must fix every base coordinate")
    return tuple(point[v] for v in base)


def _resolve_point(B: Ideal, ambient: Ambient, point, fibre_ideal) -> Tuple[mpq, ...]:
    if point is not None:
        return tuple(to_rational(c) for c in point)
    if fibre_ideal is None:
        raise ValueError("give either a base point or a fibre ideal")
    A = fibre_ideal if isinstance(fibre_ideal, Ideal) else Ideal(B.ring, list(fibre_ideal))
    return _point_from_fibre_ideal(A, ambient.base)


def normal_cone_closure(B: Ideal, ambient: Ambient, point) -> Tuple[Ideal, Ambient]:
    """Ideal of P(C + 1) for C the normal cone of the fibre over ``point`` in B.

    Lives in Q[fibre; k_0..k_m] = P^N x P^m (both factors projective).
    """
    ring = B.ring
    m = len(ambient.base)
    taken = PolyRing(ring.variables)
    s = fresh_name(taken, "s")
    ks = fibre_names(PolyRing(ring.variables + (s,)), m + 1, "k")
    deform = PolyRing(ks[1:] + ambient.fibre + (s,), GREVLEX)
    S = deform.gen(s)
    mapping = {v: deform.const(c) + S * deform.gen(k)
               for v, c, k in zip(ambient.base, point, ks[1:])}
    mapping.update({v: deform.gen(v) for v in ambient.fibre})
    fam = Ideal(deform, [g.substitute(mapping, deform) for g in B.generators])
    fam = saturate_by_element(fam, S)
    out_amb = Ambient(ambient.fibre, ks, True)
    out = out_amb.ring()
    special = Ideal(out, [g.substitute({s: out.zero()}, out) for g in fam.generators])
    # a reduced basis keeps the many slices below cheap
    return Ideal(out, special.groebner()), out_amb


def segre_class_fibre(B: Ideal, ambient: Ambient, point=None, fibre_ideal=None,
                      dimension: Optional[int] = None) -> SegreClass:
    """s(B cap ({z} x P^N), B) for B in C^m x P^N.

    ``point`` or an affine-linear ``fibre_ideal`` (z_i - c_i) selects z.
    """
    z0 = _resolve_point(B, ambient, point, fibre_ideal)
    N = ambient.fibre_dim
    D = ideal_dimension(B, ambient) if dimension is None else dimension
    cone, amb = normal_cone_closure(B, ambient, z0)
    if cone.is_unit() or D < 0:
        return SegreClass((0,) * (N + 1), N)
    fib, ks = Factor(amb.base, True), Factor(amb.fibre, True)
    coeffs = tuple(generic_slice_length(cone, [fib, ks], [d, D - d]) for d in range(N + 1))
    return SegreClass(coeffs, N)


def segre_class_fibre_by_blowup(B: Ideal, ambient: Ambient, point,
                                dimension: Optional[int] = None) -> SegreClass:
    """Reference route through the exceptional divisor of Bl_Z B.

    Requires that no component of B lies inside the fibre.
    """
    z0 = tuple(to_rational(c) for c in point)
    ring = B.ring
    N = ambient.fibre_dim
    D = ideal_dimension(B, ambient) if dimension is None else dimension
    m = len(ambient.base)
    t = fresh_name(ring, "T")
    ks = fibre_names(PolyRing(ring.variables + (t,)), m, "k")
    big = PolyRing((t,) + ring.variables + ks, block_order(1))
    T = big.gen(t)
    gens = [g.change_ring(big) for g in B.generators]
    gens += [big.gen(k) - T * (big.gen(v) - c) for v, c, k in zip(ambient.base, z0, ks)]
    rees = eliminate(Ideal(big, gens), [t])
    out_amb = Ambient(ambient.fibre, ks, True)
    out = out_amb.ring()
    at_point = {v: out.const(c) for v, c in zip(ambient.base, z0)}
    at_point.update({v: out.gen(v) for v in ambient.fibre + ks})
    E = Ideal(out, [g.substitute(at_point, out) for g in rees.generators])
    if E.is_unit():
        return SegreClass((0,) * (N + 1), N)
    over = Ideal(ring, list(B.generators) + [ring.gen(v) - c for v, c in zip(ambient.base, z0)])
    if ideal_dimension(over, ambient) >= D:
        raise UnsupportedComponent("a component of B lies inside the fibre")
    fib, kf = Factor(out_amb.base, True), Factor(out_amb.fibre, True)
    coeffs = tuple(generic_slice_length(E, [fib, kf], [d, D - 1 - d]) for d in range(N + 1))
    return SegreClass(coeffs, N)


# -- chi and mu of hypersurface germs ----------------------------------------------

def _hypersurface(f) -> Tuple[Poly, Tuple[mpq, ...]]:
    if isinstance(f, GermMap):
        if f.n != 1:
            raise NotImplementedError("only n = 1 is supported here")
        return f.global_components[0], f.base_point
    return f, None


def blowup_of_jacobian(f: Poly) -> Tuple[Ideal, Ambient]:
    """Bl_Y M in C^m x P^(m-1), Y = (df): the closure of the Gauss map graph."""
    partials = jacobian_matrix([f])[0]
    return rees_graph_ideal(partials, fibre_names(f.ring, f.ring.nvars, "b"))


def sigma_f_ideal(f: Poly) -> Tuple[Ideal, Ambient]:
    """Sigma_f = P(C_Y M + 1) over Y = (df) in C^m x P^m (last fibre coordinate free)."""
    C, amb = rees_graph_ideal(jacobian_matrix([f])[0],
                              fibre_names(f.ring, f.ring.nvars, "b"), cone_twist=True)
    alpha = fresh_name(PolyRing(amb.base + amb.fibre), "alpha")
    big = Ambient(amb.base, amb.fibre + (alpha,))
    ring = big.ring()
    return Ideal(ring, [g.change_ring(ring) for g in C.generators]), big


def total_transform_ideal(f: Poly, point) -> Tuple[Ideal, Ambient]:
    """Total transform of the fibre f = f(z) inside Bl_Y M (Y = (df))."""
    B, amb = blowup_of_jacobian(f)
    c = f.evaluate([to_rational(a) for a in point])
    return B + Ideal(B.ring, [(f - c).change_ring(B.ring)]), amb


def chi_at_point(f, point=None) -> int:
    """Euler characteristic of the Milnor fibre of f at z.

    (-1)^(m-1)[X] is the projectivised characteristic cycle of chi' (X the
    total transform of the fibre through z), so chi(z) is the unsigned
    integral of c(zeta_M^v) against s(p^-1(z), X).
    """
    f, base = _hypersurface(f)
    point = point if point is not None else (base or (0,) * f.ring.nvars)
    X, amb = total_transform_ideal(f, point)
    s = segre_class_fibre(X, amb, point, dimension=f.ring.nvars - 1)
    return s.integrate(ChernIntegrand.dual_tautological_quotient(amb.fibre_dim))


def blowup_fibre_integral(f, point=None) -> int:
    """int c(zeta_M^v) . s(p^-1(z), Bl_Y M).

    Agrees with chi(z) for the node (both vanish) but not in general: for
    x^3 + y^2 it is 0 while chi = -1.  Kept as a diagnostic.
    """
    f, base = _hypersurface(f)
    point = point if point is not None else (base or (0,) * f.ring.nvars)
    B, amb = blowup_of_jacobian(f)
    s = segre_class_fibre(B, amb, point, dimension=f.ring.nvars)
    return s.integrate(ChernIntegrand.dual_tautological_quotient(amb.fibre_dim))


def mu_at_point(f, point=None) -> int:
    """Milnor number as (-1)^m int c(zeta^v) . s(fibre of Sigma_f, Sigma_f)."""
    f, base = _hypersurface(f)
    point = point if point is not None else (base or (0,) * f.ring.nvars)
    m = f.ring.nvars
    S, amb = sigma_f_ideal(f)
    if S.is_unit():
        return 0
    s = segre_class_fibre(S, amb, point, dimension=m)
    return sign("mu_point", m) * s.integrate(ChernIntegrand.dual_tautological_quotient(amb.fibre_dim))
