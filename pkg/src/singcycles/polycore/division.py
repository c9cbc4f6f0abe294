"""Multivariate division with remainder for global orders."""
from __future__ import annotations

import heapq
from typing import List, Optional, Sequence, Tuple

from ..errors import LocalOrderUnsupported, RingMismatch
from .orders import MonomialOrder
from .poly import Poly


class TermHeap:
    """A polynomial under reduction: coefficient dict plus a max-heap of monomials.

    Monomials are popped largest first; cancelled monomials are skipped lazily.
    """

    __slots__ = ("coeffs", "heap", "key", "p")

    def __init__(self, terms, key, p=0):
        self.coeffs = dict(terms)
        self.key = key
        self.p = p
        self.heap = [(_neg(key(m)), m) for m in self.coeffs]
        heapq.heapify(self.heap)

    def pop_leading(self):
        """Remove and return the leading ``(monomial, coefficient)``, or None."""
        heap, coeffs = self.heap, self.coeffs
        while heap:
            _, m = heapq.heappop(heap)
            c = coeffs.pop(m, None)
            if c:
                return m, c
        return None

    def sub_multiple(self, c, shift, terms):
        """``self -= c * x^shift * terms`` (``terms`` an iterable of (mono, coeff))."""
        coeffs, heap, key, p = self.coeffs, self.heap, self.key, self.p
        for m, a in terms:
            mm = tuple(x + y for x, y in zip(m, shift))
            old = coeffs.get(mm)
            if old is None:
                v = -c * a
                if p:
                    v %= p
                if v:
                    coeffs[mm] = v
                    heapq.heappush(heap, (_neg(key(mm)), mm))
            else:
                v = old - c * a
                if p:
                    v %= p
                if v:
                    coeffs[mm] = v
                else:
                    del coeffs[mm]


def _neg(k):
    return tuple(-x for x in k)


def poly_divmod(g: Poly, divisors: Sequence[Poly], order: Optional[MonomialOrder] = None
                ) -> Tuple[List[Poly], Poly]:
    """Divide ``g`` by ``divisors``: returns ``(quotients, remainder)``.

    ``g = sum(q_i * d_i) + r`` and no term of ``r`` is divisible by a leading
    monomial of a divisor.  The order defaults to the ring order and must be
    global.
    """
    order = order or g.ring.order
    if not order.is_global:
        raise LocalOrderUnsupported("poly_divmod needs a global order; use mora_normal_form")
    for d in divisors:
        if d.ring.variables != g.ring.variables:
            raise RingMismatch("divisor in a different ring")
        if d.is_zero():
            raise ZeroDivisionError("zero divisor in poly_divmod")
    key = order.key_function()
    ring = g.ring
    leads = []
    for d in divisors:
        ts = d.sorted_terms(order)
        leads.append((ts[0][0], ts[0][1], ts[1:]))
    quotients = [dict() for _ in divisors]
    rem = {}
    work = TermHeap(g.items(), key)
    while True:
        top = work.pop_leading()
        if top is None:
            break
        m, c = top
        for i, (lm, lc, tail) in enumerate(leads):
            if all(a >= b for a, b in zip(m, lm)):
                shift = tuple(a - b for a, b in zip(m, lm))
                q = c / lc
                quotients[i][shift] = quotients[i].get(shift, 0) + q
                work.sub_multiple(q, shift, tail)
                break
        else:
            rem[m] = c
    qs = [Poly._raw(ring, {m: c for m, c in q.items() if c}) for q in quotients]
    return qs, Poly._raw(ring, rem)
