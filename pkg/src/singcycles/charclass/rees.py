"""Rees algebras: graphs of blow-ups and normal cones."""
from __future__ import annotations

from typing import Sequence, Tuple

from ..errors import EmptyIdeal
from ..idealeng import Ideal, eliminate, fresh_name
from ..idealeng.ideal import saturate_by_element
from ..polycore import GREVLEX, Poly, PolyRing, block_order
from .classes import Ambient


def fibre_names(ring: PolyRing, count: int, prefix: str) -> Tuple[str, ...]:
    names = []
    for i in range(count):
        base = f"{prefix}{i}"
        used = PolyRing(ring.variables + tuple(names))
        names.append(fresh_name(used, base))
    return tuple(names)


def rees_graph_ideal(generators: Sequence[Poly], fibre: Sequence[str] = None,
                     cone_twist: bool = False, base_projective: bool = False
                     ) -> Tuple[Ideal, Ambient]:
    """Ideal of the graph of z -> [g_0(z) : ... : g_r(z)] closure, in Q[z; u_0..u_r].

    This is the kernel of u_j -> g_j T.  It is computed as the ideal of the
    2x2 minors u_i g_j - u_j g_i saturated by one nonzero g: the Rees ideal is
    prime and agrees with the minors ideal once any nonzero g is inverted.
    Zero generators are kept, their coordinates are cut to zero.

    With ``cone_twist`` the generators of I are added in degree 0, giving the
    normal cone C_I (Rees / I Rees).
    """
    gens = list(generators)
    if not gens or all(g.is_zero() for g in gens):
        raise EmptyIdeal("rees_graph_ideal needs a nonzero generator")
    src = gens[0].ring
    fibre = tuple(fibre) if fibre else fibre_names(src, len(gens), "u")
    if len(fibre) != len(gens):
        raise ValueError("one fibre coordinate per generator")
    amb = Ambient(src.variables, fibre, base_projective)
    ring = amb.ring()
    g = [p.change_ring(ring) for p in gens]
    u = [ring.gen(v) for v in fibre]
    rel = []
    for i in range(len(g)):
        for j in range(i + 1, len(g)):
            r = u[i] * g[j] - u[j] * g[i]
            if not r.is_zero():
                rel.append(r)
    pivot = min((p for p in g if not p.is_zero()), key=len)
    I = saturate_by_element(Ideal(ring, rel), pivot) if rel else Ideal(ring, [])
    if cone_twist:
        I = I + Ideal(ring, g)
    return I, amb


def rees_by_elimination(generators: Sequence[Poly], fibre: Sequence[str] = None,
                        base_projective: bool = False) -> Tuple[Ideal, Ambient]:
    """Reference Rees ideal: eliminate T from (u_j - T g_j)."""
    gens = list(generators)
    src = gens[0].ring
    fibre = tuple(fibre) if fibre else fibre_names(src, len(gens), "u")
    amb = Ambient(src.variables, fibre, base_projective)
    ring = amb.ring()
    t = fresh_name(ring, "T")
    big = PolyRing((t,) + ring.variables, block_order(1))
    T = big.gen(t)
    rel = [big.gen(v) - T * p.change_ring(big) for v, p in zip(fibre, gens)]
    E = eliminate(Ideal(big, rel), [t])
    return E.change_ring(ring), amb
