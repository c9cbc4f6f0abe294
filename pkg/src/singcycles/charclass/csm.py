"""Chern-Schwartz-MacPherson classes of projective hypersurfaces."""
from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import List, Sequence, Tuple

from ..errors import CheckFailed, NotHomogeneous
from ..idealeng import Ideal
from ..polycore import Poly
from ..singlocal import jacobian_matrix
from .classes import CycleClass, cycle_class, sign
from .rees import fibre_names, rees_graph_ideal


@dataclass(frozen=True)
class CSMResult:
    """Classes in H_*(P^m), indexed by dimension (entry 0 is the degree)."""

    csm_1X: Tuple[int, ...]
    csm_chi_prime: Tuple[int, ...]
    csm_mu: Tuple[int, ...]
    projective_degrees: Tuple[int, ...]
    total_transform: CycleClass
    exceptional: CycleClass

    @property
    def euler_characteristic(self) -> int:
        return self.csm_1X[0]

    def positivity(self) -> bool:
        return (self.total_transform - self.exceptional).is_effective()


def pushforward_over_one_plus(w: Sequence[int], m: int) -> List[int]:
    """pi_*([W] / (1 + H + k)) for a cycle W of dimension e = len(w) - 1 in P^m x P^m.

    ``w[j]`` = deg(H^(e-j) k^j . [W]).  Returns coefficients of H^0..H^m.
    """
    e = len(w) - 1
    out = [0] * (m + 1)
    for t in range(e + 1):
        val = sum(comb(t, l) * w[t - l] for l in range(t + 1))
        j = m - e + t
        if 0 <= j <= m:
            out[j] += (-1) ** t * val
    return out


def _times_tangent(v: Sequence[int], m: int) -> List[int]:
    """Multiply a class in H^j-coordinates by c(T P^m) = (1 + H)^(m+1)."""
    out = [0] * (m + 1)
    for j, c in enumerate(v):
        for i in range(m + 1 - j):
            out[i + j] += comb(m + 1, i) * c
    return out


def _by_dimension(v: Sequence[int], m: int) -> Tuple[int, ...]:
    return tuple(v[m - d] for d in range(m + 1))


def csm_projective_hypersurface(F: Poly) -> CSMResult:
    if F.is_zero() or not F.is_homogeneous():
        raise NotHomogeneous(f"{F} is not a nonzero homogeneous form")
    src = F.ring
    m = src.nvars - 1
    d = F.total_degree()
    partials = jacobian_matrix([F])[0]
    ks = fibre_names(src, m + 1, "k")
    B, amb = rees_graph_ideal(partials, ks, base_projective=True)
    ring = amb.ring()
    # Y' = (F, dF) = (dF) by the Euler relation
    Xp = B + Ideal(ring, [F.change_ring(ring)])
    Yp = B + Ideal(ring, [p.change_ring(ring) for p in partials])
    g = cycle_class(B, amb, m, "Bl").coefficients
    x = cycle_class(Xp, amb, m - 1, "X'")
    if Yp.is_unit():
        y = CycleClass.zero(amb, m - 1, "Y'")
    else:
        y = cycle_class(Yp, amb, m - 1, "Y'")
    # divisor classes: X' = dH, Y' = (d-1)H - k on Bl
    expect_x = tuple(d * g[j] for j in range(m))
    expect_y = tuple((d - 1) * g[j] - g[j + 1] for j in range(m))
    if x.coefficients[:m] != expect_x or y.coefficients[:m] != expect_y:
        raise CheckFailed(f"divisor classes disagree with projective degrees {g}: "
                          f"X' {x.coefficients} vs {expect_x}, Y' {y.coefficients} vs {expect_y}")
    px = pushforward_over_one_plus(x.coefficients[:m], m)
    py = pushforward_over_one_plus(y.coefficients[:m], m)
    one = _times_tangent([a - b for a, b in zip(px, py)], m)
    chi = _times_tangent(px, m)
    mu = [sign("csm_mu", m) * c for c in _times_tangent(py, m)]
    return CSMResult(_by_dimension(one, m), _by_dimension(chi, m), _by_dimension(mu, m),
                     tuple(g), x, y)
