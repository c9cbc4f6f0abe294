"""Monomial orders.

Every order is turned into a sort key: a tuple of integers such that the
larger monomial has the larger key.  The Groebner kernels only ever compare
keys, so adding an order means adding a key builder here.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Tuple

from ..errors import ArityMismatch

Monomial = Tuple[int, ...]

_KINDS = ("lex", "grlex", "grevlex", "ds", "block")


def _grevlex_key(m):
    return (sum(m),) + tuple(-e for e in reversed(m))


@dataclass(frozen=True)
class MonomialOrder:
    """A monomial order.

    ``kind`` is one of ``lex``, ``grlex``, ``grevlex``, ``ds`` (local,
    negative-degree reverse lex) or ``block``.  For ``block`` the first
    ``k`` variables form an elimination block, each block ordered by grevlex.
    """

    kind: str = "grevlex"
    k: int = 0

    def __post_init__(self):
        if self.kind not in _KINDS:
            raise ValueError(f"unknown monomial order {self.kind!r}")
        if self.kind == "block" and self.k < 0:
            raise ValueError("block size must be non-negative")

    @property
    def is_global(self) -> bool:
        return self.kind != "ds"

    @property
    def is_local(self) -> bool:
        return self.kind == "ds"

    def key_function(self) -> Callable[[Monomial], tuple]:
        kind = self.kind
        if kind == "lex":
            return tuple
        if kind == "grlex":
            return lambda m: (sum(m),) + tuple(m)
        if kind == "grevlex":
            return _grevlex_key
        if kind == "ds":
            return lambda m: (-sum(m),) + tuple(-e for e in reversed(m))
        k = self.k
        return lambda m: _grevlex_key(m[:k]) + _grevlex_key(m[k:])

    def key(self, m: Monomial) -> tuple:
        return self.key_function()(m)

    def __str__(self):
        return f"block({self.k})" if self.kind == "block" else self.kind


LEX = MonomialOrder("lex")
GRLEX = MonomialOrder("grlex")
GREVLEX = MonomialOrder("grevlex")
DS = MonomialOrder("ds")


def block_order(k: int) -> MonomialOrder:
    return MonomialOrder("block", k)


def compare_monomials(a: Monomial, b: Monomial, order: MonomialOrder) -> int:
    """Return -1, 0 or 1 as ``a`` is smaller than, equal to or larger than ``b``."""
    if len(a) != len(b):
        raise ArityMismatch(f"monomials of arity {len(a)} and {len(b)}")
    key = order.key_function()
    ka, kb = key(tuple(a)), key(tuple(b))
    return (ka > kb) - (ka < kb)


def divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b))


def lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x if x > y else y for x, y in zip(a, b))


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def mono_div(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x - y for x, y in zip(a, b))
