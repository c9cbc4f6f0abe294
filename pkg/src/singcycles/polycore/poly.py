"""Sparse multivariate polynomials over Q."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, Iterable, Mapping, Optional, Sequence, Tuple, Union

from gmpy2 import mpq

from ..errors import ArityMismatch, RingMismatch, UnknownVariable
from .orders import GREVLEX, Monomial, MonomialOrder

Rational = mpq
Coefficient = Union[int, "mpq"]


def to_rational(c) -> mpq:
    """Coerce ints, Fractions, mpq and ``"p/q"`` strings to an exact rational."""
    if isinstance(c, str):
        return mpq(c.strip())
    if isinstance(c, float):
        raise TypeError("floating-point coefficients are not supported")
    return mpq(c)


@dataclass(frozen=True)
class PolyRing:
    """Polynomial ring over Q with named variables.

    ``grading`` optionally assigns every variable to a grading block
    (``0, 1, ...``); it is used for bihomogeneous ideals.
    """

    variables: Tuple[str, ...]
    order: MonomialOrder = GREVLEX
    grading: Optional[Tuple[int, ...]] = None
    _index: Dict[str, int] = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        object.__setattr__(self, "variables", tuple(self.variables))
        if len(set(self.variables)) != len(self.variables):
            raise ValueError(f"duplicate variable names in {self.variables}")
        if self.grading is not None:
            object.__setattr__(self, "grading", tuple(self.grading))
            if len(self.grading) != len(self.variables):
                raise ValueError("grading must assign a block to every variable")
        object.__setattr__(self, "_index", {v: i for i, v in enumerate(self.variables)})

    @property
    def nvars(self) -> int:
        return len(self.variables)

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise UnknownVariable(f"variable {name!r} is not in ring {self.variables}") from None

    def gen(self, name) -> "Poly":
        i = name if isinstance(name, int) else self.index(name)
        e = [0] * self.nvars
        e[i] = 1
        return Poly._raw(self, {tuple(e): mpq(1)})

    def gens(self):
        return [self.gen(i) for i in range(self.nvars)]

    def zero(self) -> "Poly":
        return Poly._raw(self, {})

    def one(self) -> "Poly":
        return self.const(1)

    def const(self, c) -> "Poly":
        c = to_rational(c)
        return Poly._raw(self, {(0,) * self.nvars: c} if c else {})

    def monomial(self, exps: Sequence[int], coeff=1) -> "Poly":
        if len(exps) != self.nvars:
            raise ArityMismatch(f"exponent vector of length {len(exps)} in ring of arity {self.nvars}")
        c = to_rational(coeff)
        return Poly._raw(self, {tuple(exps): c} if c else {})

    def with_order(self, order: MonomialOrder) -> "PolyRing":
        return PolyRing(self.variables, order, self.grading)

    def with_grading(self, grading) -> "PolyRing":
        return PolyRing(self.variables, self.order, grading)

    def block_degrees(self, m: Monomial) -> Tuple[int, ...]:
        """Degree of ``m`` in each grading block (total degree if ungraded)."""
        if self.grading is None:
            return (sum(m),)
        out = [0] * (max(self.grading) + 1)
        for g, e in zip(self.grading, m):
            out[g] += e
        return tuple(out)

    def __call__(self, text: str) -> "Poly":
        from .parser import parse_poly

        return parse_poly(text, self)


def _dict_mul(a: Mapping, b: Mapping) -> dict:
    out: dict = {}
    for ma, ca in a.items():
        for mb, cb in b.items():
            m = tuple(x + y for x, y in zip(ma, mb))
            c = out.get(m)
            out[m] = ca * cb if c is None else c + ca * cb
    return {m: c for m, c in out.items() if c}


class Poly:
    """Immutable sparse polynomial: a mapping from exponent tuples to nonzero rationals."""

    __slots__ = ("ring", "_terms", "_sorted", "_hash")

    def __init__(self, ring: PolyRing, terms: Optional[Mapping] = None):
        clean = {}
        for m, c in (terms or {}).items():
            m = tuple(int(e) for e in m)
            if len(m) != ring.nvars:
                raise ArityMismatch(f"monomial {m} in ring of arity {ring.nvars}")
            if any(e < 0 for e in m):
                raise ValueError(f"negative exponent in {m}")
            c = to_rational(c)
            if c:
                clean[m] = clean.get(m, 0) + c
        self.ring = ring
        self._terms = {m: c for m, c in clean.items() if c}
        self._sorted = None
        self._hash = None

    @classmethod
    def _raw(cls, ring: PolyRing, terms: dict) -> "Poly":
        p = cls.__new__(cls)
        p.ring = ring
        p._terms = terms
        p._sorted = None
        p._hash = None
        return p

    # -- access -------------------------------------------------------------
    @property
    def terms(self) -> Mapping[Monomial, mpq]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def __len__(self):
        return len(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def is_constant(self) -> bool:
        return all(not any(m) for m in self._terms)

    def sorted_terms(self, order: Optional[MonomialOrder] = None):
        """Terms from largest to smallest in ``order`` (default: the ring order)."""
        if order is not None and order != self.ring.order:
            key = order.key_function()
            return sorted(self._terms.items(), key=lambda t: key(t[0]), reverse=True)
        if self._sorted is None:
            key = self.ring.order.key_function()
            self._sorted = sorted(self._terms.items(), key=lambda t: key(t[0]), reverse=True)
        return self._sorted

    def lm(self, order=None) -> Monomial:
        return self.sorted_terms(order)[0][0]

    def lc(self, order=None) -> mpq:
        return self.sorted_terms(order)[0][1]

    def lt(self, order=None) -> "Poly":
        m, c = self.sorted_terms(order)[0]
        return Poly._raw(self.ring, {m: c})

    def total_degree(self) -> int:
        return max((sum(m) for m in self._terms), default=-1)

    def min_degree(self) -> int:
        return min((sum(m) for m in self._terms), default=-1)

    def degree(self, var) -> int:
        i = var if isinstance(var, int) else self.ring.index(var)
        return max((m[i] for m in self._terms), default=-1)

    def support_variables(self):
        return [v for i, v in enumerate(self.ring.variables) if any(m[i] for m in self._terms)]

    def coefficient(self, exps) -> mpq:
        return self._terms.get(tuple(exps), mpq(0))

    def constant_term(self) -> mpq:
        return self._terms.get((0,) * self.ring.nvars, mpq(0))

    # -- arithmetic ---------------------------------------------------------
    def _coerce(self, other) -> "Poly":
        if isinstance(other, Poly):
            if other.ring.variables != self.ring.variables:
                raise RingMismatch(f"{other.ring.variables} vs {self.ring.variables}")
            return other
        return self.ring.const(other)

    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self._terms)
        for m, c in other._terms.items():
            v = out.get(m)
            if v is None:
                out[m] = c
            else:
                v = v + c
                if v:
                    out[m] = v
                else:
                    del out[m]
        return Poly._raw(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        return Poly._raw(self.ring, {m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, Poly):
            c = to_rational(other)
            if not c:
                return self.ring.zero()
            return Poly._raw(self.ring, {m: v * c for m, v in self._terms.items()})
        other = self._coerce(other)
        return Poly._raw(self.ring, _dict_mul(self._terms, other._terms))

    __rmul__ = __mul__

    def __truediv__(self, other):
        c = to_rational(other)
        return self * (1 / c)

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = self.ring.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def monic(self, order=None) -> "Poly":
        if not self._terms:
            return self
        return self * (1 / self.lc(order))

    # -- comparison ---------------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.ring.variables == other.ring.variables and self._terms == other._terms
        try:
            return self._terms == self.ring.const(other)._terms
        except TypeError:
            return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring.variables, frozenset(self._terms.items())))
        return self._hash

    # -- calculus and substitution ------------------------------------------
    def diff(self, var) -> "Poly":
        i = var if isinstance(var, int) else self.ring.index(var)
        out = {}
        for m, c in self._terms.items():
            e = m[i]
            if e:
                out[m[:i] + (e - 1,) + m[i + 1:]] = c * e
        return Poly._raw(self.ring, out)

    def evaluate(self, point) -> mpq:
        """Evaluate at a full point (sequence in ring order or mapping name -> value)."""
        if isinstance(point, Mapping):
            vals = [to_rational(point[v]) for v in self.ring.variables]
        else:
            vals = [to_rational(v) for v in point]
            if len(vals) != self.ring.nvars:
                raise ArityMismatch(f"point of length {len(vals)} in ring of arity {self.ring.nvars}")
        total = mpq(0)
        for m, c in self._terms.items():
            t = c
            for v, e in zip(vals, m):
                if e:
                    t *= v ** e
            total += t
        return total

    def substitute(self, mapping: Mapping, target: Optional[PolyRing] = None) -> "Poly":
        """Substitute polynomials (or constants) for variables.

        ``mapping`` sends variable names of this ring to Polys in ``target`` (or
        constants).  Variables not mentioned are mapped to the variable of the
        same name in ``target``.
        """
        target = target or self.ring
        images = []
        for v in self.ring.variables:
            if v in mapping:
                img = mapping[v]
                images.append(img if isinstance(img, Poly) else target.const(img))
            else:
                images.append(target.gen(v))
        powers = [dict() for _ in images]

        def power(i, e):
            cache = powers[i]
            if e not in cache:
                cache[e] = images[i] ** e
            return cache[e]

        out: dict = {}
        for m, c in self._terms.items():
            term = {(0,) * target.nvars: c}
            for i, e in enumerate(m):
                if e:
                    term = _dict_mul(term, power(i, e)._terms)
            for mm, cc in term.items():
                v = out.get(mm, 0) + cc
                if v:
                    out[mm] = v
                else:
                    out.pop(mm, None)
        return Poly._raw(target, out)

    def change_ring(self, target: PolyRing) -> "Poly":
        """Re-express in ``target`` by matching variable names (missing ones must not occur)."""
        idx = []
        for i, v in enumerate(self.ring.variables):
            if v in target._index:
                idx.append(target._index[v])
            elif any(m[i] for m in self._terms):
                raise UnknownVariable(f"variable {v!r} does not exist in {target.variables}")
            else:
                idx.append(None)
        out = {}
        n = target.nvars
        for m, c in self._terms.items():
            e = [0] * n
            for i, j in enumerate(idx):
                if j is not None:
                    e[j] = m[i]
            out[tuple(e)] = c
        return Poly._raw(target, out)

    def translate(self, point) -> "Poly":
        """Return p(z + point): the germ at ``point`` moved to the origin."""
        shifts = {v: self.ring.gen(v) + to_rational(a) for v, a in zip(self.ring.variables, point) if a}
        return self.substitute(shifts) if shifts else self

    def is_homogeneous(self, weights: Optional[Sequence[int]] = None) -> bool:
        if not self._terms:
            return True
        if weights is None:
            degs = {sum(m) for m in self._terms}
        else:
            degs = {sum(w * e for w, e in zip(weights, m)) for m in self._terms}
        return len(degs) == 1

    def block_degree(self) -> Optional[Tuple[int, ...]]:
        """Multidegree w.r.t. the ring grading, or None if not multihomogeneous."""
        degs = {self.ring.block_degrees(m) for m in self._terms}
        if len(degs) != 1:
            return None
        return degs.pop()

    def content_normalized(self) -> "Poly":
        """Scale to integer coefficients with gcd 1 and positive leading coefficient."""
        if not self._terms:
            return self
        from math import gcd, lcm

        den = 1
        for c in self._terms.values():
            den = lcm(den, int(c.denominator))
        ints = {m: int(c * den) for m, c in self._terms.items()}
        g = 0
        for v in ints.values():
            g = gcd(g, v)
        if self.lc() < 0:
            g = -g
        return Poly._raw(self.ring, {m: mpq(v, g) for m, v in ints.items()})

    # -- printing -----------------------------------------------------------
    def __str__(self):
        if not self._terms:
            return "0"
        names = self.ring.variables
        pieces = []
        for m, c in self.sorted_terms():
            mono = "*".join(
                names[i] if e == 1 else f"{names[i]}^{e}" for i, e in enumerate(m) if e
            )
            sign = "-" if c < 0 else "+"
            a = -c if c < 0 else c
            if not mono:
                body = str(a)
            elif a == 1:
                body = mono
            else:
                body = f"{a}*{mono}"
            pieces.append((sign, body))
        first_sign, first = pieces[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in pieces[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self):
        return f"Poly({str(self)!r})"
