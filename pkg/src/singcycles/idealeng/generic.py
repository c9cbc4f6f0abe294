"""Generic linear sections and the randomness policy behind them.

Every "generic" choice is a vector of random integers drawn uniformly from
``[-bound, bound]``.  A generic computation is run twice with independent
draws and accepted only when both runs agree; otherwise the bound is widened
and the pair is redrawn, up to ``retries`` times.
"""
from __future__ import annotations

import random
from contextlib import contextmanager
from contextvars import ContextVar
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from ..errors import GenericityFailure
from ..polycore import DEFAULT_PRIME
from ..polycore.orders import GREVLEX
from ..polycore.poly import Poly, PolyRing
from .ideal import INFINITE, Ideal, vsdim_modp, vsdim_quotient
from .stats import record


@dataclass(frozen=True)
class GenericityPolicy:
    seed: Optional[int] = None
    bound: int = 101
    retries: int = 3
    widen: int = 10
    prescreen: bool = False
    prime: int = DEFAULT_PRIME


@dataclass
class _State:
    policy: GenericityPolicy
    rng: random.Random = field(repr=False, default=None)

    def __post_init__(self):
        if self.rng is None:
            self.rng = random.Random(self.policy.seed)


_state: ContextVar = ContextVar("singcycles_genericity", default=None)


@contextmanager
def use_policy(policy: GenericityPolicy):
    """Run the enclosed computations under ``policy`` with one shared RNG."""
    token = _state.set(_State(policy))
    try:
        yield policy
    finally:
        _state.reset(token)


def _current() -> _State:
    st = _state.get()
    if st is None:
        st = _State(GenericityPolicy())
        _state.set(st)
    return st


def current_policy() -> GenericityPolicy:
    return _current().policy


def stable_value(compute: Callable[[random.Random, int], object], what: str = "generic count"):
    """Run ``compute(rng, bound)`` twice per attempt until two draws agree.

    ``compute`` returns ``None`` when its draw was visibly degenerate.
    """
    st = _current()
    pol = st.policy
    bound = pol.bound
    seen = []
    for _ in range(pol.retries + 1):
        a = compute(st.rng, bound)
        b = compute(st.rng, bound)
        record("generic_draws", 2)
        if a is not None and a == b:
            return a
        seen.append((a, b))
        record("generic_retries")
        bound *= pol.widen
    raise GenericityFailure(f"{what}: draws never agreed after {pol.retries} retries: {seen}")


# -- slicing -------------------------------------------------------------------

@dataclass(frozen=True)
class Factor:
    """One factor of the ambient space: affine C^a or projective P^N (N+1 coordinates)."""

    variables: Tuple[str, ...]
    projective: bool

    @property
    def dim(self) -> int:
        return len(self.variables) - (1 if self.projective else 0)


def _rand(rng: random.Random, bound: int) -> int:
    return rng.randint(-bound, bound)


def slice_length(I: Ideal, factors: Sequence[Factor], cuts: Sequence[int],
                 rng: random.Random, bound: int, p: int = 0):
    """Length of I cut by ``cuts[j]`` generic hyperplanes in factor j, or ``None``.

    Each factor is replaced by a random affine parametrisation of a generic
    linear subspace of the right dimension (inside an affine chart for a
    projective factor).  ``None`` signals a non-finite intersection.
    """
    ring = I.ring
    if any(c > f.dim or c < 0 for c, f in zip(cuts, factors)):
        return 0
    names: List[str] = []
    plan = []
    for j, (f, c) in enumerate(zip(factors, cuts)):
        k = f.dim - c
        params = [f"_p{j}_{i}" for i in range(k)]
        names.extend(params)
        plan.append((f, params))
    target = PolyRing(tuple(names), GREVLEX)
    mapping: Dict[str, Poly] = {}
    for f, params in plan:
        for v in f.variables:
            img = target.const(_rand(rng, bound))
            for t in params:
                img = img + target.gen(t) * _rand(rng, bound)
            mapping[v] = img
    missing = set(ring.variables) - set(mapping)
    if missing:
        raise ValueError(f"variables {sorted(missing)} belong to no factor")
    J = Ideal(target, [g.substitute(mapping, target) for g in I.generators])
    if p:
        n = vsdim_modp(J, p)
        if n == INFINITE:
            return None
    n = vsdim_quotient(J)
    return None if n == INFINITE else n


def generic_slice_length(I: Ideal, factors: Sequence[Factor], cuts: Sequence[int]) -> int:
    """``slice_length`` made deterministic by the two-draw agreement rule."""
    if any(c > f.dim or c < 0 for c, f in zip(cuts, factors)):
        return 0
    pol = current_policy()
    p = pol.prime if pol.prescreen else 0
    return stable_value(lambda rng, bound: slice_length(I, factors, cuts, rng, bound, p),
                        f"slice {tuple(cuts)} of {I}")


def cycle_vector(I: Ideal, base: Factor, fibre: Factor, dim: int) -> List[int]:
    """``e_i`` = length of I cut by i generic hyperplanes of ``fibre`` and dim - i of ``base``.

    For a cycle of dimension ``dim`` in base x fibre this is the vector of
    mixed degrees, i = 0..fibre.dim.
    """
    return [generic_slice_length(I, [base, fibre], [dim - i, i]) for i in range(fibre.dim + 1)]
