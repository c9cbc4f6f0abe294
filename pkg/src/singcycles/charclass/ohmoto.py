"""Total Milnor number through the zero scheme Z of the covector u . dF."""
from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import List, Tuple

from gmpy2 import mpq

from ..errors import PositiveDimensionalCritical
from ..idealeng import INFINITE, Ideal, vsdim_quotient
from ..idealeng.generic import generic_slice_length
from ..idealeng.ideal import saturation
from ..polycore import LEX, Poly, PolyRing
from ..singlocal import GermMap, _as_germ, critical_scheme, jacobian_matrix, le_greuel_icis, \
    milnor_number_hypersurface
from .classes import Ambient, sign
from .rees import fibre_names


def ohmoto_Z_ideal(F) -> Tuple[Ideal, Ambient]:
    """Z in C^m x P^(n-1): entries of (u_1..u_n) . dF, saturated by (u)."""
    F = _as_germ(F)
    src = F.ring
    us = fibre_names(src, F.n, "u")
    amb = Ambient(src.variables, us)
    ring = amb.ring()
    jac = jacobian_matrix([c.change_ring(ring) for c in F.global_components], src.variables)
    u = [ring.gen(v) for v in us]
    gens = []
    for j in range(F.m):
        e = ring.zero()
        for i in range(F.n):
            e = e + u[i] * jac[i][j]
        gens.append(e)
    Z = Ideal(ring, gens)
    Z = saturation(Z, Ideal(ring, u))[0]
    return Z, amb


def mu_total_via_Z(F) -> int:
    """Degree-0 part of pi_*(c(zeta_N^v) . [Z]): (-1)^(n-1) deg(h^(n-1) . [Z])."""
    F = _as_germ(F)
    C = critical_scheme(F)
    if vsdim_quotient(C) == INFINITE:
        raise PositiveDimensionalCritical("the critical scheme is not zero-dimensional")
    Z, amb = ohmoto_Z_ideal(F)
    if Z.is_unit():
        return 0
    base, fibre = amb.factors()
    return sign("total_mu", F.m, F.n) * generic_slice_length(Z, [base, fibre], [0, F.n - 1])


# -- oracle: local Milnor numbers summed over the critical points ----------------------

def _rational_roots(p: Poly) -> List[mpq]:
    """Rational roots of a univariate polynomial (rational root theorem)."""
    var = [i for i in range(p.ring.nvars) if p.degree(p.ring.variables[i])]
    if not var:
        return []
    i = var[0]
    coeffs = {m[i]: Fraction(int(c.numerator), int(c.denominator)) for m, c in p.terms.items()}
    den = lcm(*(c.denominator for c in coeffs.values()))
    ints = {k: int(c * den) for k, c in coeffs.items()}
    low = min(ints)
    roots = [mpq(0)] if low > 0 else []
    ints = {k - low: c for k, c in ints.items()}
    top = max(ints)
    if top == 0:
        return roots

    def divisors(n):
        n = abs(n)
        out = set()
        k = 1
        while k * k <= n:
            if n % k == 0:
                out.update((k, n // k))
            k += 1
        return out

    for a in divisors(ints[0]):
        for b in divisors(ints[top]):
            for r in (Fraction(a, b), Fraction(-a, b)):
                if sum(c * r ** k for k, c in ints.items()) == 0:
                    q = mpq(r.numerator, r.denominator)
                    if q not in roots:
                        roots.append(q)
    return roots


def rational_points(I: Ideal) -> List[Tuple[mpq, ...]]:
    """All rational zeros of a zero-dimensional ideal (triangular lex solve)."""
    ring = I.ring
    lex = PolyRing(ring.variables, LEX)
    return _solve(Ideal(lex, [g.change_ring(lex) for g in I.generators]), {})


def _solve(I: Ideal, fixed: dict) -> List[Tuple[mpq, ...]]:
    ring = I.ring
    if I.is_unit():
        return []
    free = [v for v in ring.variables if v not in fixed]
    if not free:
        return [tuple(fixed[v] for v in ring.variables)]
    last = free[-1]
    uni = [g for g in I.groebner() if set(g.support_variables()) <= {last}]
    if not uni:
        raise PositiveDimensionalCritical("ideal is not zero-dimensional")
    out = []
    for r in _rational_roots(uni[0]):
        sub = {last: r}
        J = Ideal(ring, [g.substitute(sub) for g in I.generators] + [ring.gen(last) - r])
        out.extend(_solve(J, {**fixed, last: r}))
    return out


def mu_total_oracle(F) -> int:
    """Sum of local Milnor numbers at the rational critical points, plus the
    length of the critical scheme away from them (irrational points)."""
    F = _as_germ(F)
    C = critical_scheme(F)
    if vsdim_quotient(C) == INFINITE:
        raise PositiveDimensionalCritical("the critical scheme is not zero-dimensional")
    total = 0
    rest = C
    for p in rational_points(C):
        if F.n == 1:
            total += milnor_number_hypersurface(F.global_components[0], p)
        else:
            total += le_greuel_icis(GermMap(F.ring, F.global_components, p))
        maximal = Ideal(C.ring, [C.ring.gen(v) - c for v, c in zip(C.ring.variables, p)])
        rest = saturation(rest, maximal)[0]
    if not rest.is_unit():
        if F.n != 1:
            raise PositiveDimensionalCritical("irrational critical points of an ICIS are not supported")
        total += int(vsdim_quotient(rest))
    return total
