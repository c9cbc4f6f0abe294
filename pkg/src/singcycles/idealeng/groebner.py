"""Buchberger's algorithm on raw term dictionaries.

Polynomials are ``{exponent_tuple: coefficient}`` dicts.  Coefficients are
``mpq`` over Q, or plain ints reduced mod ``p`` when ``p`` is nonzero.
Pairs are chosen by the normal strategy (smallest lcm first) and pruned
with the Gebauer-Moeller criteria.
"""
from __future__ import annotations

from typing import Callable, Dict, List, Sequence

from gmpy2 import mpq

from ..polycore.division import TermHeap
from .stats import record

Terms = Dict[tuple, object]


def cached_key(raw: Callable) -> Callable:
    cache: dict = {}

    def key(m):
        k = cache.get(m)
        if k is None:
            k = cache[m] = raw(m)
        return k

    return key


def _mask(m):
    bits = 0
    for i, e in enumerate(m):
        if e:
            bits |= 1 << i
    return bits


def _inverse(c, p):
    return pow(int(c), -1, p) if p else 1 / c


class _Basis:
    """Monic polynomials with their leading data, sorted tails and divisibility masks."""

    def __init__(self, key, p):
        self.key = key
        self.p = p
        self.lms: List[tuple] = []
        self.masks: List[int] = []
        self.tails: List[list] = []
        self.active: List[bool] = []

    def add(self, terms_sorted) -> int:
        lm = terms_sorted[0][0]
        self.lms.append(lm)
        self.masks.append(_mask(lm))
        self.tails.append(terms_sorted[1:])
        self.active.append(True)
        return len(self.lms) - 1

    def find_reducer(self, m, mmask):
        best = None
        for i, lm in enumerate(self.lms):
            if not self.active[i] or self.masks[i] & ~mmask:
                continue
            if all(a >= b for a, b in zip(m, lm)):
                if best is None or len(self.tails[i]) < len(self.tails[best]):
                    best = i
                    if not self.tails[i]:
                        break
        return best

    def reduce(self, heap: TermHeap) -> list:
        """Fully reduce the polynomial held in ``heap``; returns sorted monic terms (or [])."""
        out = _reduce_no_normalise(self, heap)
        if not out:
            return out
        p = self.p
        inv = _inverse(out[0][1], p)
        if p:
            return [(m, (c * inv) % p) for m, c in out]
        return [(m, c * inv) for m, c in out]


def _monic_sorted(terms: Terms, key, p):
    items = sorted(((m, c) for m, c in terms.items() if c), key=lambda t: key(t[0]), reverse=True)
    if not items:
        return items
    inv = _inverse(items[0][1], p)
    if p:
        return [(m, (c * inv) % p) for m, c in items]
    return [(m, c * inv) for m, c in items]


def _lcm(a, b):
    return tuple(x if x > y else y for x, y in zip(a, b))


def _divides(a, b):
    return all(x <= y for x, y in zip(a, b))


def _coprime(a, b):
    return all(x == 0 or y == 0 for x, y in zip(a, b))


def buchberger(polys: Sequence[Terms], key_raw: Callable, p: int = 0) -> List[list]:
    """Reduced Groebner basis of the ideal generated by ``polys``.

    Returns a list of monic sorted term lists ``[(mono, coeff), ...]``, ordered
    by increasing leading monomial.
    """
    key = cached_key(key_raw)
    if p:
        polys = [{m: int(c) % p for m, c in f.items() if int(c) % p} for f in polys]
    inputs = [_monic_sorted(f, key, p) for f in polys]
    inputs = [f for f in inputs if f]
    if not inputs:
        return []
    if any(not any(f[0][0]) for f in inputs):
        return [[((0,) * len(inputs[0][0][0]), 1 if p else mpq(1))]]

    basis = _Basis(key, p)
    pairs: list = []  # (lcm_key, lcm, i, j)

    def update(h):
        lm_h = basis.lms[h]
        current = [g for g in range(h) if basis.active[g]]
        cands = [(g, _lcm(lm_h, basis.lms[g])) for g in current]
        keep = []
        for idx, (g1, l1) in enumerate(cands):
            if _coprime(lm_h, basis.lms[g1]):
                keep.append((g1, l1))
                continue
            dominated = False
            for g2, l2 in cands[idx + 1:]:
                if _divides(l2, l1):
                    dominated = True
                    break
            if not dominated:
                for g2, l2 in keep:
                    if _divides(l2, l1):
                        dominated = True
                        break
            if not dominated:
                keep.append((g1, l1))
        new_pairs = [(g, l) for g, l in keep if not _coprime(lm_h, basis.lms[g])]
        survivors = []
        for entry in pairs:
            _, l12, g1, g2 = entry
            if (_divides(lm_h, l12)
                    and _lcm(basis.lms[g1], lm_h) != l12
                    and _lcm(basis.lms[g2], lm_h) != l12):
                continue
            survivors.append(entry)
        pairs[:] = survivors
        for g, l in new_pairs:
            pairs.append((key(l), l, g, h))
        for g in current:
            if _divides(lm_h, basis.lms[g]):
                basis.active[g] = False

    # inter-reduce the input first: smaller leading terms go in first
    inputs.sort(key=lambda f: key(f[0][0]))
    for f in inputs:
        heap = TermHeap(f, key, p)
        h = basis.reduce(heap)
        if h:
            if not any(h[0][0]):
                return [h]
            update(basis.add(h))

    processed = 0
    while pairs:
        best = min(range(len(pairs)), key=lambda t: pairs[t][0])
        _, l, i, j = pairs.pop(best)
        processed += 1
        heap = TermHeap((), key, p)
        si = tuple(a - b for a, b in zip(l, basis.lms[i]))
        sj = tuple(a - b for a, b in zip(l, basis.lms[j]))
        heap.sub_multiple(-1, si, basis.tails[i])
        heap.sub_multiple(1, sj, basis.tails[j])
        h = basis.reduce(heap)
        if h:
            if not any(h[0][0]):
                record("gb_pairs", processed)
                return [h]
            update(basis.add(h))
    record("gb_pairs", processed)

    # tail-reduce the minimal basis; leading coefficients are already 1
    idx = [i for i in range(len(basis.lms)) if basis.active[i]]
    idx.sort(key=lambda i: key(basis.lms[i]))
    one = 1 if p else mpq(1)
    result = []
    for i in idx:
        basis.active[i] = False
        tail = _reduce_no_normalise(basis, TermHeap(basis.tails[i], key, p))
        basis.active[i] = True
        basis.tails[i] = tail
        result.append([(basis.lms[i], one)] + tail)
    return result


def _reduce_no_normalise(basis: _Basis, heap: TermHeap) -> list:
    out = []
    while True:
        top = heap.pop_leading()
        if top is None:
            return out
        m, c = top
        r = basis.find_reducer(m, _mask(m))
        if r is None:
            out.append((m, c))
            continue
        shift = tuple(a - b for a, b in zip(m, basis.lms[r]))
        heap.sub_multiple(c, shift, basis.tails[r])


def normal_form(f: Terms, basis_terms: Sequence[list], key_raw: Callable, p: int = 0) -> list:
    """Fully reduce ``f`` modulo a Groebner basis given as monic sorted term lists."""
    key = cached_key(key_raw)
    b = _Basis(key, p)
    for g in basis_terms:
        b.add(g)
    if p:
        f = {m: int(c) % p for m, c in f.items() if int(c) % p}
    heap = TermHeap(f.items(), key, p)
    return _reduce_no_normalise(b, heap)
