"""Standard bases for the local degree-reverse-lexicographic order (ds).

The normal form is Mora's: a reducer of minimal ecart is chosen, and the
current polynomial is added to the reducer set whenever its ecart is smaller
than the reducer's.  This terminates even though the order is not a
well-ordering.  The result is a weak normal form.
"""
from __future__ import annotations

from typing import Dict, List, Sequence, Tuple

from gmpy2 import mpq

from ..polycore.orders import DS
from .stats import record

Terms = Dict[tuple, object]


class _LocalPoly:
    __slots__ = ("terms", "lm", "lc", "ecart")

    def __init__(self, terms: Terms, key):
        self.terms = terms
        self.lm = max(terms, key=key)
        self.lc = terms[self.lm]
        self.ecart = max(sum(m) for m in terms) - sum(self.lm)


def _divides(a, b):
    return all(x <= y for x, y in zip(a, b))


def _sub_scaled(f: Terms, c, shift, g: Terms) -> Terms:
    out = dict(f)
    for m, a in g.items():
        mm = tuple(x + y for x, y in zip(m, shift))
        v = out.get(mm, 0) - c * a
        if v:
            out[mm] = v
        else:
            out.pop(mm, None)
    return out


def mora_nf(f: Terms, basis: Sequence[_LocalPoly], key) -> Terms:
    """Weak normal form of ``f`` with respect to ``basis`` (ds order)."""
    if not f:
        return {}
    h = _LocalPoly(dict(f), key)
    reducers: List[_LocalPoly] = list(basis)
    while True:
        cands = [g for g in reducers if _divides(g.lm, h.lm)]
        if not cands:
            return h.terms
        g = min(cands, key=lambda t: (t.ecart, len(t.terms)))
        if g.ecart > h.ecart:
            reducers.append(h)
        shift = tuple(a - b for a, b in zip(h.lm, g.lm))
        terms = _sub_scaled(h.terms, h.lc / g.lc, shift, g.terms)
        if not terms:
            return {}
        h = _LocalPoly(terms, key)


def _spoly(f: _LocalPoly, g: _LocalPoly) -> Terms:
    lcm = tuple(max(a, b) for a, b in zip(f.lm, g.lm))
    sf = tuple(a - b for a, b in zip(lcm, f.lm))
    sg = tuple(a - b for a, b in zip(lcm, g.lm))
    left = {tuple(x + y for x, y in zip(m, sf)): c / f.lc for m, c in f.terms.items()}
    return _sub_scaled(left, 1 / g.lc, sg, g.terms)


def standard_basis_ds(polys: Sequence[Terms]) -> List[Tuple[tuple, Terms]]:
    """Minimal standard basis for ds; returns ``[(leading_monomial, monic_terms)]``."""
    key = DS.key_function()
    basis: List[_LocalPoly] = []
    for f in polys:
        f = {m: c for m, c in f.items() if c}
        if f:
            basis.append(_LocalPoly(f, key))
    if not basis:
        return []
    pairs = [(i, j) for j in range(len(basis)) for i in range(j)]
    processed = 0
    while pairs:
        # smallest-degree lcm first keeps intermediate ecarts low
        best = min(range(len(pairs)), key=lambda t: sum(
            max(a, b) for a, b in zip(basis[pairs[t][0]].lm, basis[pairs[t][1]].lm)))
        i, j = pairs.pop(best)
        processed += 1
        h = mora_nf(_spoly(basis[i], basis[j]), basis, key)
        if h:
            basis.append(_LocalPoly(h, key))
            k = len(basis) - 1
            pairs.extend((t, k) for t in range(k))
            if not any(basis[k].lm):
                break
    record("sb_pairs", processed)
    for b in basis:
        if not any(b.lm):
            n = len(b.lm)
            return [((0,) * n, {(0,) * n: mpq(1)})]
    out = []
    for idx, b in enumerate(basis):
        dominated = False
        for jdx, other in enumerate(basis):
            if jdx == idx:
                continue
            if _divides(other.lm, b.lm) and (other.lm != b.lm or jdx < idx):
                dominated = True
                break
        if not dominated:
            inv = 1 / b.lc
            out.append((b.lm, {m: c * inv for m, c in b.terms.items()}))
    out.sort(key=lambda t: key(t[0]))
    return out
