"""Hilbert series numerators of monomial ideals.

The numerator is computed by Bigatti's pivot recursion::

    N(I) = N(I + (p)) + t^deg(p) * N(I : p),     p = x^e

with base case "generators pairwise coprime", where the numerator is the
product of the factors ``1 - t^deg(g)``.  Numerators are dicts from
multidegree tuples to integers, so one routine serves single and multiple
gradings.
"""
from __future__ import annotations

from typing import Callable, Dict, List, Sequence, Tuple

Numerator = Dict[tuple, int]


def minimalize(gens: Sequence[tuple]) -> List[tuple]:
    gens = sorted(set(gens), key=sum)
    out: List[tuple] = []
    for g in gens:
        if not any(all(a <= b for a, b in zip(h, g)) for h in out):
            out.append(g)
    return out


def _mul(a: Numerator, b: Numerator) -> Numerator:
    out: Numerator = {}
    for da, ca in a.items():
        for db, cb in b.items():
            d = tuple(x + y for x, y in zip(da, db))
            out[d] = out.get(d, 0) + ca * cb
    return {d: c for d, c in out.items() if c}


def _add(a: Numerator, b: Numerator) -> Numerator:
    out = dict(a)
    for d, c in b.items():
        out[d] = out.get(d, 0) + c
    return {d: c for d, c in out.items() if c}


def hilbert_numerator(gens: Sequence[tuple], degree: Callable[[tuple], tuple], nblocks: int
                      ) -> Numerator:
    """Numerator of the Hilbert series of S/(gens) over the denominator prod (1 - t_b)^{n_b}."""
    zero = (0,) * nblocks
    memo: Dict[frozenset, Numerator] = {}

    def rec(gs: List[tuple]) -> Numerator:
        gs = minimalize(gs)
        if not gs:
            return {zero: 1}
        fk = frozenset(gs)
        hit = memo.get(fk)
        if hit is not None:
            return hit
        n = len(gs[0])
        counts = [0] * n
        for g in gs:
            for i, e in enumerate(g):
                if e:
                    counts[i] += 1
        shared = max(range(n), key=lambda i: counts[i])
        if counts[shared] <= 1:
            res: Numerator = {zero: 1}
            for g in gs:
                res = _mul(res, {zero: 1, degree(g): -1} if degree(g) != zero else {})
            memo[fk] = res
            return res
        exps = sorted(g[shared] for g in gs if g[shared])
        e = exps[(len(exps) - 1) // 2]
        pivot = tuple(e if i == shared else 0 for i in range(n))
        plus = rec(gs + [pivot])
        colon = rec([tuple(max(a - b, 0) for a, b in zip(g, pivot)) for g in gs])
        res = _add(plus, _mul({degree(pivot): 1}, colon))
        memo[fk] = res
        return res

    return rec(list(gens))


def univariate(num: Numerator) -> List[int]:
    """Coefficient list of a single-graded numerator."""
    if not num:
        return []
    top = max(d[0] for d in num)
    out = [0] * (top + 1)
    for d, c in num.items():
        out[d[0]] += c
    return out


def divide_one_minus_t(coeffs: List[int]) -> Tuple[List[int], bool]:
    """Divide by (1 - t); returns (quotient, exact)."""
    if not coeffs:
        return [], True
    q = []
    acc = 0
    for c in coeffs[:-1]:
        acc += c
        q.append(acc)
    exact = acc + coeffs[-1] == 0
    return q, exact


def pole_order_data(coeffs: List[int], nvars: int) -> Tuple[int, List[int]]:
    """Krull dimension and reduced numerator Q with N = (1 - t)^(n - d) Q."""
    if not any(coeffs):
        return -1, []
    k = 0
    cur = coeffs
    while k < nvars:
        q, exact = divide_one_minus_t(cur)
        if not exact:
            break
        cur = q
        k += 1
    return nvars - k, cur


def staircase_size(gens: Sequence[tuple], nvars: int):
    """Number of monomials outside the monomial ideal; ``None`` when infinite."""
    gens = minimalize(gens)
    for i in range(nvars):
        if not any(g[i] and sum(g) == g[i] for g in gens):
            return None
    num = univariate(hilbert_numerator(gens, lambda m: (sum(m),), 1))
    for _ in range(nvars):
        num, exact = divide_one_minus_t(num)
        assert exact
    return sum(num)
