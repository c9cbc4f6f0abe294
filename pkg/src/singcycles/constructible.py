"""Constructible functions as priority-ordered stratum lists, and the passage
from conic Lagrangian cycles to function values."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import List, Sequence, Tuple

from gmpy2 import mpq

from .charclass import Ambient, ChernIntegrand, chi_at_point, mu_at_point, segre_class_fibre, sign
from .charclass.rees import fibre_names
from .errors import InputError, UnsupportedComponent
from .idealeng import Ideal, krull_dimension
from .idealeng.ideal import saturation
from .polycore import Poly, PolyRing, to_rational
from .singlocal import _as_germ, jacobian_matrix, minors


def _vanishes(I: Ideal, point) -> bool:
    return all(g.evaluate(point) == 0 for g in I.generators)


@dataclass(frozen=True)
class ConstructibleFn:
    """Value of the first stratum whose ideal vanishes at the point, else ``default``."""

    ring: PolyRing
    strata: Tuple[Tuple[Ideal, int], ...] = ()
    default: int = 0

    def __post_init__(self):
        for I, _ in self.strata:
            if I.ring.variables != self.ring.variables:
                raise InputError("stratum ideal lives in a different ring")
            if I.is_unit():
                raise InputError("stratum ideals must be proper")

    def __call__(self, point) -> int:
        return evaluate(self, point)


def evaluate(cf: ConstructibleFn, point) -> int:
    point = [to_rational(c) for c in point]
    if len(point) != cf.ring.nvars:
        raise InputError(f"point of length {len(point)} for {cf.ring.nvars} variables")
    for I, value in cf.strata:
        if _vanishes(I, point):
            return value
    return cf.default


def indicator(I: Ideal) -> ConstructibleFn:
    """1_X for X = V(I)."""
    return ConstructibleFn(I.ring, ((I, 1),), 0)


@dataclass(frozen=True)
class LagrangianCycleList:
    """sum_i k_i [T*_{W_i} M], each W_i given by an ideal of M."""

    components: Tuple[Tuple[Ideal, int], ...] = ()

    def __post_init__(self):
        seen = []
        for I, k in self.components:
            if k == 0:
                raise InputError("multiplicities must be nonzero")
            if I.is_unit():
                raise InputError("component ideals must be proper")
            if any(I == J for J in seen):
                raise InputError("component ideals must be distinct")
            seen.append(I)

    def __add__(self, other: "LagrangianCycleList") -> "LagrangianCycleList":
        merged: List[List] = [[I, k] for I, k in self.components]
        for I, k in other.components:
            for entry in merged:
                if entry[0] == I:
                    entry[1] += k
                    break
            else:
                merged.append([I, k])
        return LagrangianCycleList(tuple((I, k) for I, k in merged if k))

    def scale(self, c: int) -> "LagrangianCycleList":
        if c == 0:
            return LagrangianCycleList()
        return LagrangianCycleList(tuple((I, c * k) for I, k in self.components))


def _is_point(I: Ideal):
    """The rational point cut out by I, if I is the maximal ideal of one."""
    ring = I.ring
    gb = I.groebner()
    if len(gb) != ring.nvars:
        return None
    point = {}
    for g in gb:
        lin = [m for m in g.terms if sum(m) == 1]
        if g.total_degree() != 1 or len(lin) != 1:
            return None
        i = lin[0].index(1)
        point[i] = -g.constant_term() / g.terms[lin[0]]
    if len(point) != ring.nvars:
        return None
    return tuple(point[i] for i in range(ring.nvars))


def completed_conormal(W: Ideal) -> Tuple[Ideal, Ambient]:
    """P(T*_W M + 1) in C^m x P^m: the conormal cone of W plus a free coordinate."""
    src = W.ring
    m = src.nvars
    cot = fibre_names(src, m + 1, "a")
    amb = Ambient(src.variables, cot)
    ring = amb.ring()
    a = [ring.gen(v) for v in cot[1:]]
    if W.is_zero():
        return Ideal(ring, a), amb
    pt = _is_point(W)
    if pt is not None:
        return Ideal(ring, [g.change_ring(ring) for g in W.generators]), amb
    c = m - krull_dimension(W)
    gens = [g.change_ring(ring) for g in W.generators]
    jac = jacobian_matrix(gens, src.variables)
    sing = Ideal(ring, gens + minors(jac, c))
    if not sing.is_unit():
        raise UnsupportedComponent(f"{W} is singular (or not reduced) and not a point")
    cone = Ideal(ring, gens + minors(jac + [a], c + 1))
    cone = saturation(cone, Ideal(ring, minors(jac, c)))[0]
    return cone, amb


def cycle_to_function_value(cycle: LagrangianCycleList, point, m: int = None) -> int:
    """sum_i (-1)^m k_i int c(zeta^v) . s(fibre of P(T*_{W_i} M + 1), P(T*_{W_i} M + 1)).

    Convention: (-1)^d [T*_W M] corresponds to Eu_W (d = dim W), so the
    zero section (-1)^m [T*_M M] gives 1_M.
    """
    total = 0
    for W, k in cycle.components:
        mm = W.ring.nvars if m is None else m
        if mm != W.ring.nvars:
            raise InputError("ambient dimension does not match the component ring")
        V, amb = completed_conormal(W)
        s = segre_class_fibre(V, amb, point, dimension=mm)
        val = s.integrate(ChernIntegrand.dual_tautological_quotient(amb.fibre_dim))
        total += sign("cycle_completed", mm) * k * val
    return total


# -- Euler relation ----------------------------------------------------------------------

@dataclass(frozen=True)
class EulerPoint:
    point: Tuple[mpq, ...]
    chi: int
    mu: int
    holds: bool


@dataclass(frozen=True)
class EulerReport:
    points: Tuple[EulerPoint, ...] = field(default_factory=tuple)

    @property
    def passed(self) -> bool:
        return all(p.holds for p in self.points)


def check_euler_relation(f, points: Sequence[Sequence]) -> EulerReport:
    """1 = chi(z) + (-1)^(m-n+1) mu(z) at each point (n = 1)."""
    F = _as_germ(f)
    if F.n != 1:
        raise NotImplementedError("the Euler relation check is implemented for n = 1")
    g: Poly = F.global_components[0]
    out = []
    for z in points:
        z = tuple(to_rational(c) for c in z)
        chi = chi_at_point(g, z)
        mu = mu_at_point(g, z)
        ok = 1 == chi + sign("euler_relation", F.m, F.n) * mu
        out.append(EulerPoint(z, chi, mu, ok))
    return EulerReport(tuple(out))


def mu_function(f: Poly) -> ConstructibleFn:
    """mu as a constructible function: a point stratum per rational critical point."""
    from .charclass import rational_points
    from .singlocal import milnor_number_hypersurface, jacobian_ideal

    J = jacobian_ideal(f)
    strata = []
    for p in rational_points(J):
        I = Ideal(f.ring, [f.ring.gen(v) - c for v, c in zip(f.ring.variables, p)])
        strata.append((I, milnor_number_hypersurface(f, p)))
    return ConstructibleFn(f.ring, tuple(strata), 0)
