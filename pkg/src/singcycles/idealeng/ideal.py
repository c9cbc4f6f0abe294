"""Ideals over Q and the basic ideal-theoretic operations."""
from __future__ import annotations

import math
import threading
from typing import Dict, Iterable, List, Optional, Sequence, Tuple, Union

from gmpy2 import mpq

from ..errors import EmptyIdeal, GlobalOrderUnsupported, RingMismatch
from ..polycore.division import poly_divmod
from ..polycore.orders import DS, GREVLEX, MonomialOrder, block_order
from ..polycore.poly import Poly, PolyRing
from .groebner import buchberger, normal_form
from .hilbert import hilbert_numerator, pole_order_data, staircase_size, univariate
from .mora import _LocalPoly, mora_nf, standard_basis_ds

INFINITE = math.inf

_cache_lock = threading.Lock()


def fresh_name(ring: PolyRing, base: str) -> str:
    name = base
    k = 0
    while name in ring.variables:
        k += 1
        name = f"{base}{k}"
    return name


class Ideal:
    """An ideal of ``ring`` given by generators; bases are cached per order."""

    def __init__(self, ring: PolyRing, generators: Iterable[Union[Poly, str]] = ()):
        gens = []
        for g in generators:
            if isinstance(g, str):
                g = ring(g)
            elif g.ring.variables != ring.variables:
                raise RingMismatch(f"generator {g} is not in ring {ring.variables}")
            elif g.ring != ring:
                g = Poly._raw(ring, dict(g.terms))
            if not g.is_zero():
                gens.append(g)
        self.ring = ring
        self.generators: Tuple[Poly, ...] = tuple(gens)
        self._bases: Dict[MonomialOrder, Tuple[Poly, ...]] = {}
        self._raw: Dict[MonomialOrder, list] = {}

    # -- construction helpers -----------------------------------------------
    @classmethod
    def from_strings(cls, ring: PolyRing, texts: Sequence[str]) -> "Ideal":
        return cls(ring, [ring(t) for t in texts])

    def _check(self, other: "Ideal"):
        if other.ring.variables != self.ring.variables:
            raise RingMismatch(f"rings differ: {self.ring.variables} vs {other.ring.variables}")

    def __add__(self, other):
        if isinstance(other, Ideal):
            self._check(other)
            return Ideal(self.ring, self.generators + other.generators)
        return Ideal(self.ring, self.generators + tuple(other))

    def __mul__(self, other: "Ideal") -> "Ideal":
        self._check(other)
        return Ideal(self.ring, [f * g for f in self.generators for g in other.generators])

    def power(self, k: int) -> "Ideal":
        out = Ideal(self.ring, [self.ring.one()])
        for _ in range(k):
            out = out * self
        return out

    def change_ring(self, target: PolyRing) -> "Ideal":
        return Ideal(target, [g.change_ring(target) for g in self.generators])

    def __repr__(self):
        return f"Ideal({', '.join(str(g) for g in self.generators) or '0'})"

    # -- bases ----------------------------------------------------------------
    def _global_order(self, order: Optional[MonomialOrder]) -> MonomialOrder:
        order = order or self.ring.order
        if not order.is_global:
            raise GlobalOrderUnsupported("groebner_basis needs a global order; use standard_basis")
        return order

    def raw_basis(self, order: Optional[MonomialOrder] = None) -> list:
        order = self._global_order(order)
        hit = self._raw.get(order)
        if hit is None:
            hit = buchberger([g.terms for g in self.generators], order.key_function())
            with _cache_lock:
                hit = self._raw.setdefault(order, hit)
        return hit

    def groebner(self, order: Optional[MonomialOrder] = None) -> Tuple[Poly, ...]:
        """Reduced Groebner basis, monic, sorted by increasing leading monomial."""
        order = self._global_order(order)
        hit = self._bases.get(order)
        if hit is None:
            hit = tuple(Poly._raw(self.ring, dict(t)) for t in self.raw_basis(order))
            with _cache_lock:
                hit = self._bases.setdefault(order, hit)
        return hit

    def raw_basis_modp(self, p: int, order: MonomialOrder = GREVLEX) -> list:
        return buchberger([g.terms for g in self.generators], order.key_function(), p)

    def standard_basis(self) -> Tuple[Poly, ...]:
        """Minimal standard basis for the local order ds."""
        hit = self._bases.get(DS)
        if hit is None:
            sb = standard_basis_ds([g.terms for g in self.generators])
            hit = tuple(Poly._raw(self.ring, t) for _, t in sb)
            with _cache_lock:
                hit = self._bases.setdefault(DS, hit)
        return hit

    def leading_monomials(self, order: Optional[MonomialOrder] = None) -> List[tuple]:
        order = order or self.ring.order
        if order.is_local:
            key = order.key_function()
            return [max(g.terms, key=key) for g in self.standard_basis()]
        return [t[0][0] for t in self.raw_basis(order)]

    # -- membership -------------------------------------------------------------
    def reduce(self, f: Poly, order: Optional[MonomialOrder] = None) -> Poly:
        """Normal form of ``f`` (Mora's weak normal form for local orders)."""
        order = order or self.ring.order
        if order.is_local:
            return mora_normal_form(f, self.standard_basis())
        terms = normal_form(f.terms, self.raw_basis(order), order.key_function())
        return Poly._raw(self.ring, dict(terms))

    def contains(self, f: Union[Poly, str]) -> bool:
        if isinstance(f, str):
            f = self.ring(f)
        return self.reduce(f).is_zero()

    __contains__ = contains

    def contains_ideal(self, other: "Ideal") -> bool:
        self._check(other)
        return all(self.contains(g) for g in other.generators)

    def __eq__(self, other):
        if not isinstance(other, Ideal):
            return NotImplemented
        if other.ring.variables != self.ring.variables:
            return False
        if self.ring.order.is_local or other.ring.order.is_local:
            return self.contains_ideal(other) and other.contains_ideal(self)
        return [list(t) for t in self.raw_basis(GREVLEX)] == [list(t) for t in other.raw_basis(GREVLEX)]

    __hash__ = None

    def is_zero(self) -> bool:
        return not self.generators

    def is_unit(self) -> bool:
        lms = self.leading_monomials()
        return any(not any(m) for m in lms)

    # -- invariants ---------------------------------------------------------------
    def krull_dimension(self) -> int:
        return krull_dimension(self)

    def vsdim(self):
        return vsdim_quotient(self)


def mora_normal_form(g: Poly, basis: Sequence[Poly]) -> Poly:
    """Weak normal form of ``g`` modulo a ds standard basis."""
    if not g.ring.order.is_local:
        raise GlobalOrderUnsupported("mora_normal_form needs the local order ds")
    key = DS.key_function()
    lp = [_LocalPoly(dict(b.terms), key) for b in basis if not b.is_zero()]
    return Poly._raw(g.ring, mora_nf(g.terms, lp, key))


def groebner_basis(I: Ideal, order: Optional[MonomialOrder] = None) -> List[Poly]:
    return list(I.groebner(order))


def standard_basis(I: Ideal) -> List[Poly]:
    if not I.ring.order.is_local:
        raise GlobalOrderUnsupported("standard_basis needs the local order ds")
    return list(I.standard_basis())


# -- ring bookkeeping ------------------------------------------------------------

def _global_ring(ring: PolyRing) -> PolyRing:
    return ring if ring.order.is_global else ring.with_order(GREVLEX)


def _sub_ring(ring: PolyRing, keep: Sequence[str]) -> PolyRing:
    grading = None
    if ring.grading is not None:
        grading = tuple(ring.grading[ring.index(v)] for v in keep)
        # renumber blocks densely
        blocks = sorted(set(grading))
        grading = tuple(blocks.index(b) for b in grading)
    order = ring.order
    if not order.is_global or order.kind == "block":
        order = GREVLEX
    return PolyRing(tuple(keep), order, grading)


def eliminate(I: Ideal, drop_vars: Iterable[str]) -> Ideal:
    """``I`` intersected with the subring on the remaining variables."""
    ring = I.ring
    drop = [v for v in ring.variables if v in set(drop_vars)]
    for v in drop_vars:
        ring.index(v)
    keep = [v for v in ring.variables if v not in drop]
    target = _sub_ring(ring, keep)
    if not drop:
        return Ideal(target, [g.change_ring(target) for g in I.generators])
    big = PolyRing(tuple(drop + keep), block_order(len(drop)))
    J = I.change_ring(big)
    k = len(drop)
    out = []
    for terms in J.raw_basis():
        if all(not any(m[:k]) for m, _ in terms):
            out.append(Poly._raw(target, {m[k:]: c for m, c in terms}))
    return Ideal(target, out)


def intersect(I: Ideal, J: Ideal) -> Ideal:
    """``I`` intersected with ``J``, eliminating t from t*I + (1 - t)*J."""
    I._check(J)
    if I.is_zero() or J.is_zero():
        return Ideal(I.ring, [])
    ring = I.ring
    t = fresh_name(ring, "t")
    big = PolyRing((t,) + ring.variables, block_order(1))
    tt = big.gen(t)
    gens = [tt * g.change_ring(big) for g in I.generators]
    gens += [(1 - tt) * g.change_ring(big) for g in J.generators]
    res = eliminate(Ideal(big, gens), [t])
    return res.change_ring(ring)


def intersect_all(ideals: Sequence[Ideal]) -> Ideal:
    if not ideals:
        raise EmptyIdeal("intersection of no ideals")
    out = ideals[0]
    for J in ideals[1:]:
        out = intersect(out, J)
    return out


def _exact_div(f: Poly, g: Poly) -> Poly:
    qs, r = poly_divmod(f, [g], GREVLEX)
    if not r.is_zero():
        raise ArithmeticError(f"{g} does not divide {f}")
    return qs[0]


def quotient_by_element(I: Ideal, g: Poly) -> Ideal:
    ring = I.ring
    if g.is_zero():
        return Ideal(ring, [ring.one()])
    gr = _global_ring(ring)
    Ig = Ideal(gr, I.generators)
    if Ig.contains(Poly._raw(gr, dict(g.terms))):
        return Ideal(ring, [ring.one()])
    inter = intersect(Ig, Ideal(gr, [g]))
    gg = Poly._raw(gr, dict(g.terms))
    return Ideal(ring, [_exact_div(h, gg) for h in inter.generators])


def ideal_quotient(I: Ideal, J: Ideal) -> Ideal:
    """``I : J`` = {g : g*J in I}."""
    I._check(J)
    if J.is_zero():
        return Ideal(I.ring, [I.ring.one()])
    parts = [quotient_by_element(I, g) for g in J.generators]
    if len(parts) == 1:
        return parts[0]
    gr = _global_ring(I.ring)
    res = intersect_all([Ideal(gr, p.generators) for p in parts])
    return Ideal(I.ring, res.generators)


def _strip_variables(f: Poly, idx: Sequence[int]) -> Poly:
    """Divide f by the largest monomial in the variables ``idx`` dividing it."""
    low = {i: min(m[i] for m in f.terms) for i in idx}
    if not any(low.values()):
        return f
    return Poly._raw(f.ring, {tuple(e - low.get(i, 0) for i, e in enumerate(m)): c
                              for m, c in f.terms.items()})


def saturate_by_element(I: Ideal, g: Poly) -> Ideal:
    """``I : g^oo`` via I + (1 - w*g), eliminating w."""
    ring = I.ring
    if g.is_constant():
        return Ideal(ring, I.generators)
    gens = list(I.generators)
    if len(g.terms) == 1:
        # I : m^oo is unchanged by first dividing each generator by its m-content
        (mono,) = g.terms
        gens = [_strip_variables(f, [i for i, e in enumerate(mono) if e]) for f in gens]
    w = fresh_name(ring, "w")
    big = PolyRing((w,) + ring.variables, block_order(1))
    ww = big.gen(w)
    gens = [f.change_ring(big) for f in gens] + [1 - ww * g.change_ring(big)]
    return eliminate(Ideal(big, gens), [w]).change_ring(ring)


def saturation(I: Ideal, J: Ideal) -> Tuple[Ideal, int]:
    """``(I : J^oo, k)`` with k the least exponent such that J^k (I : J^oo) lies in I."""
    I._check(J)
    gr = _global_ring(I.ring)
    Ig = Ideal(gr, I.generators)
    if J.is_zero():
        return Ideal(I.ring, [I.ring.one()]), 0
    parts = [saturate_by_element(Ig, Poly._raw(gr, dict(g.terms))) for g in J.generators]
    sat = parts[0] if len(parts) == 1 else intersect_all(parts)
    k = saturation_exponent(Ig, Ideal(gr, J.generators), sat)
    return Ideal(I.ring, sat.generators), k


def saturation_exponent(I: Ideal, J: Ideal, sat: Ideal) -> int:
    """Least k with J^k * sat contained in I.

    Works with normal forms modulo I: the span of NF(J^k * sat) is tracked by
    a reduced echelon set and the exponent is the first k where it vanishes.
    """
    order = GREVLEX
    key = order.key_function()
    basis = I.raw_basis(order)

    def nf(terms):
        return dict(normal_form(terms, basis, key))

    current = _echelon([nf(g.terms) for g in sat.generators], key)
    k = 0
    jgens = [g.terms for g in J.generators]
    while current:
        k += 1
        if k > 10_000:
            raise RuntimeError("saturation exponent did not stabilise")
        products = []
        for v in current:
            for g in jgens:
                prod = {}
                for m1, c1 in v.items():
                    for m2, c2 in g.items():
                        m = tuple(a + b for a, b in zip(m1, m2))
                        prod[m] = prod.get(m, 0) + c1 * c2
                products.append(nf({m: c for m, c in prod.items() if c}))
        current = _echelon(products, key)
    return k


def _echelon(vectors: List[dict], key) -> List[dict]:
    """Reduced row echelon form of sparse vectors indexed by monomials."""
    pivots: Dict[tuple, dict] = {}
    for v in vectors:
        v = {m: c for m, c in v.items() if c}
        while v:
            lead = max(v, key=key)
            row = pivots.get(lead)
            if row is None:
                inv = 1 / v[lead]
                pivots[lead] = {m: c * inv for m, c in v.items()}
                break
            c = v[lead]
            for m, a in row.items():
                nv = v.get(m, 0) - c * a
                if nv:
                    v[m] = nv
                else:
                    v.pop(m, None)
    return list(pivots.values())


def iterated_quotient_saturation(I: Ideal, J: Ideal) -> Tuple[Ideal, int]:
    """Reference saturation: repeat I <- I : J until stable."""
    cur = I
    k = 0
    while True:
        nxt = ideal_quotient(cur, J)
        if nxt == cur:
            return cur, k
        cur = nxt
        k += 1


def krull_dimension(I: Ideal) -> int:
    """Krull dimension of R/I (-1 for the unit ideal).

    For a ds ring this is the dimension of the local ring at the origin, read
    off the tangent-cone leading ideal.
    """
    n = I.ring.nvars
    lms = I.leading_monomials()
    if any(not any(m) for m in lms):
        return -1
    num = univariate(hilbert_numerator(lms, lambda m: (sum(m),), 1))
    d, _ = pole_order_data(num, n)
    return d


def vsdim_quotient(I: Ideal):
    """dim_Q R/I (local ring for ds) or ``INFINITE``."""
    lms = I.leading_monomials()
    if any(not any(m) for m in lms):
        return 0
    size = staircase_size(lms, I.ring.nvars)
    return INFINITE if size is None else size


def vsdim_modp(I: Ideal, p: int):
    raw = I.raw_basis_modp(p)
    lms = [t[0][0] for t in raw]
    if any(not any(m) for m in lms):
        return 0
    size = staircase_size(lms, I.ring.nvars)
    return INFINITE if size is None else size


def is_zero_dimensional(I: Ideal) -> bool:
    return vsdim_quotient(I) != INFINITE
