"""Hilbert data of (multi)homogeneous ideals."""
from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Dict, Optional, Tuple, Union

from ..errors import NotHomogeneous
from ..polycore.orders import GREVLEX
from .generic import Factor, generic_slice_length
from .hilbert import hilbert_numerator, pole_order_data, univariate
from .ideal import Ideal


@dataclass(frozen=True)
class HilbertData:
    """Hilbert series ``numerator / prod_b (1 - t_b)^{n_b}`` and what it encodes.

    ``dimension`` is projective: Krull dimension minus the number of grading
    blocks (so -1 for an ideal whose zero set is empty in projective space).
    For one block ``degree`` is set; for several, ``multidegree`` maps exponent
    vectors of hyperplane classes (one per block, summing to ``dimension``) to
    intersection numbers.
    """

    numerator: Dict[tuple, int]
    denominator_exponents: Tuple[int, ...]
    krull_dimension: int
    dimension: int
    degree: Optional[int] = None
    multidegree: Optional[Dict[tuple, int]] = None


def _grading(ring):
    return ring.grading if ring.grading is not None else (0,) * ring.nvars


def _check_homogeneous(I: Ideal):
    grading = _grading(I.ring)
    ring = I.ring
    for g in I.generators:
        degs = {ring.block_degrees(m) if ring.grading is not None else (sum(m),) for m in g.terms}
        if len(degs) != 1:
            raise NotHomogeneous(f"{g} is not homogeneous for the grading {grading}")


def hilbert_data(I: Ideal) -> HilbertData:
    _check_homogeneous(I)
    ring = I.ring
    grading = _grading(ring)
    nblocks = max(grading) + 1 if grading else 1
    sizes = tuple(sum(1 for g in grading if g == b) for b in range(nblocks))
    lms = I.leading_monomials(GREVLEX if ring.order.is_local else None)

    def degree(m):
        out = [0] * nblocks
        for b, e in zip(grading, m):
            out[b] += e
        return tuple(out)

    num = hilbert_numerator(lms, degree, nblocks)
    total = univariate(hilbert_numerator(lms, lambda m: (sum(m),), 1))
    krull, reduced = pole_order_data(total, ring.nvars)
    dim = krull - nblocks
    if nblocks == 1:
        return HilbertData(num, sizes, krull, dim, degree=sum(reduced) if krull >= 0 else 0)
    md: Dict[tuple, int] = {}
    if dim >= 0:
        factors = []
        for b in range(nblocks):
            names = tuple(v for v, g in zip(ring.variables, grading) if g == b)
            factors.append(Factor(names, True))
        for cuts in _compositions(dim, [f.dim for f in factors]):
            md[cuts] = generic_slice_length(I, factors, cuts)
    return HilbertData(num, sizes, krull, dim, multidegree=md)


def _compositions(total, caps):
    if len(caps) == 1:
        if total <= caps[0]:
            yield (total,)
        return
    for a in range(min(total, caps[0]) + 1):
        for rest in _compositions(total - a, caps[1:]):
            yield (a,) + rest


def kpoly_multidegree(I: Ideal) -> Dict[tuple, int]:
    """Multidegree from the K-polynomial (lowest-order part of K(1 - s)).

    Exact, with no random choices.  Only top-dimensional components of the
    affine cone contribute, so the ideal should be saturated with respect to
    every irrelevant ideal.  Keys are hyperplane exponent vectors as in
    :class:`HilbertData`.
    """
    _check_homogeneous(I)
    ring = I.ring
    grading = _grading(ring)
    nblocks = max(grading) + 1
    sizes = [sum(1 for g in grading if g == b) for b in range(nblocks)]

    def degree(m):
        out = [0] * nblocks
        for b, e in zip(grading, m):
            out[b] += e
        return tuple(out)

    num = hilbert_numerator(I.leading_monomials(GREVLEX), degree, nblocks)
    expanded: Dict[tuple, int] = {}
    for d, c in num.items():
        parts = [[(k, comb(e, k) * (-1) ** k) for k in range(e + 1)] for e in d]
        stack = [((), c)]
        for opts in parts:
            stack = [(key + (k,), v * w) for key, v in stack for k, w in opts]
        for key, v in stack:
            expanded[key] = expanded.get(key, 0) + v
    expanded = {k: v for k, v in expanded.items() if v}
    if not expanded:
        return {}
    low = min(sum(k) for k in expanded)
    out = {}
    for k, v in expanded.items():
        if sum(k) == low:
            # H^k cut with complementary powers: deg(prod H_b^{(n_b - 1) - k_b})
            cuts = tuple(n - 1 - a for n, a in zip(sizes, k))
            if all(c >= 0 for c in cuts):
                out[cuts] = v
    return out
