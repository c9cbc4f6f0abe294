"""Local singularity theory of polynomial map germs.

Critical schemes, Milnor numbers (hypersurfaces via the Milnor algebra,
complete intersections via the Le-Greuel recursion), relative conormal
ideals, the fibre-dimension test for "no blow-up in codimension 0", and
discriminants.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import List, Optional, Sequence, Tuple

from gmpy2 import mpq

from .errors import ArityMismatch, NonIsolated, NotICIS
from .idealeng import INFINITE, Ideal, eliminate, krull_dimension, vsdim_quotient
from .idealeng.ideal import fresh_name, saturate_by_element
from .polycore import DS, GREVLEX, Poly, PolyRing, block_order, to_rational


@dataclass(frozen=True)
class GermMap:
    """A polynomial map germ (C^m, p) -> (C^n, f(p)), stored translated to the origin.

    ``components`` are the translated maps ``f(z + p) - f(p)``; the
    original polynomials are kept in ``global_components``.
    """

    ring: PolyRing
    global_components: Tuple[Poly, ...]
    base_point: Tuple[mpq, ...] = ()
    components: Tuple[Poly, ...] = field(init=False)
    value: Tuple[mpq, ...] = field(init=False)

    def __post_init__(self):
        m = self.ring.nvars
        comps = tuple(Poly._raw(self.ring, dict(c.terms)) for c in self.global_components)
        point = tuple(to_rational(c) for c in self.base_point) or (mpq(0),) * m
        if len(point) != m:
            raise ArityMismatch(f"base point of length {len(point)} for {m} variables")
        if not comps:
            raise ArityMismatch("a map germ needs at least one component")
        if len(comps) > m:
            raise ArityMismatch(f"target dimension {len(comps)} exceeds source dimension {m}")
        value = tuple(c.evaluate(point) for c in comps)
        local = tuple(c.translate(point) - v for c, v in zip(comps, value))
        object.__setattr__(self, "global_components", comps)
        object.__setattr__(self, "base_point", point)
        object.__setattr__(self, "value", value)
        object.__setattr__(self, "components", local)

    @classmethod
    def from_strings(cls, variables: Sequence[str], components: Sequence[str],
                     base_point: Optional[Sequence] = None) -> "GermMap":
        if isinstance(variables, str):
            variables = variables.replace(",", " ").split()
        ring = PolyRing(tuple(variables), GREVLEX)
        return cls(ring, tuple(ring(c) for c in components), tuple(base_point or ()))

    @property
    def m(self) -> int:
        return self.ring.nvars

    @property
    def n(self) -> int:
        return len(self.components)

    def truncate(self, k: int) -> "GermMap":
        return GermMap(self.ring, self.global_components[:k], self.base_point)


def _as_germ(F) -> GermMap:
    if isinstance(F, GermMap):
        return F
    if isinstance(F, Poly):
        return GermMap(F.ring, (F,))
    return GermMap(F[0].ring, tuple(F))


# -- Jacobians -------------------------------------------------------------------

def jacobian_matrix(components: Sequence[Poly], variables: Optional[Sequence[str]] = None
                    ) -> List[List[Poly]]:
    variables = variables or components[0].ring.variables
    return [[f.diff(v) for v in variables] for f in components]


def determinant(rows: Sequence[Sequence[Poly]]) -> Poly:
    n = len(rows)
    if n == 1:
        return rows[0][0]
    total = rows[0][0].ring.zero()
    for j in range(n):
        if rows[0][j].is_zero():
            continue
        minor = [r[:j] + r[j + 1:] for r in rows[1:]]
        term = rows[0][j] * determinant(minor)
        total = total + term if j % 2 == 0 else total - term
    return total


def minors(matrix: Sequence[Sequence[Poly]], k: int) -> List[Poly]:
    """All k x k minors (nonzero ones only)."""
    out = []
    nrows, ncols = len(matrix), len(matrix[0])
    for rs in combinations(range(nrows), k):
        for cs in combinations(range(ncols), k):
            d = determinant([[matrix[r][c] for c in cs] for r in rs])
            if not d.is_zero():
                out.append(d)
    return out


def jacobian_ideal(f: Poly) -> Ideal:
    return Ideal(f.ring, [f.diff(v) for v in f.ring.variables])


def critical_scheme(F) -> Ideal:
    """Ideal of the n x n minors of the Jacobian matrix (global polynomials)."""
    F = _as_germ(F)
    comps = F.global_components
    return Ideal(F.ring, minors(jacobian_matrix(comps), len(comps)))


# -- Milnor numbers ---------------------------------------------------------------

def _origin_primary(J: Ideal) -> Optional[int]:
    """vsdim of R/J when J is primary to the origin, else None.

    Certifies that the global critical scheme is the origin alone: with
    d = dim R/J finite, the origin is the only zero iff every x_i^d lies in J.
    """
    d = vsdim_quotient(J)
    if d == INFINITE or d == 0:
        return None
    ring = J.ring
    for v in ring.variables:
        if not J.contains(ring.gen(v) ** d):
            return None
    return d


def local_vsdim(gens: Sequence[Poly]):
    """dim_Q of the local ring at the origin modulo ``gens`` (or INFINITE)."""
    ring = gens[0].ring
    glob = Ideal(ring.with_order(GREVLEX), gens)
    d = _origin_primary(glob)
    if d is not None:
        return d
    loc = Ideal(ring.with_order(DS), gens)
    return vsdim_quotient(loc)


def milnor_number_hypersurface(f: Poly, point: Optional[Sequence] = None) -> int:
    """Milnor number dim O/J(f) at ``point`` (default the origin); 0 at smooth points."""
    g = f.translate([to_rational(c) for c in point]) if point is not None else f
    J = jacobian_ideal(g)
    if J.is_zero():
        raise NonIsolated(f"{f} has no isolated critical point (constant function)")
    mu = local_vsdim(list(J.generators))
    if mu == INFINITE:
        raise NonIsolated(f"critical point of {f} at {tuple(point or ())} is not isolated")
    return int(mu)


def le_greuel_icis(F) -> int:
    """Milnor number of an ICIS germ by the Le-Greuel recursion.

    mu(f_1..f_k) + mu(f_1..f_{k-1}) = dim O/((f_1..f_{k-1}) + I_k(d(f_1..f_k))).
    """
    F = _as_germ(F)
    comps = F.components
    mu_prev = 0
    for k in range(1, F.n + 1):
        gens = list(comps[:k - 1]) + minors(jacobian_matrix(comps[:k]), k)
        gens = [g for g in gens if not g.is_zero()]
        if not gens:
            raise NotICIS(f"({', '.join(map(str, comps[:k]))}) is not an ICIS")
        total = local_vsdim(gens)
        if total == INFINITE:
            raise NotICIS(f"({', '.join(map(str, comps[:k]))}) is not an isolated complete intersection")
        mu_prev = int(total) - mu_prev
        if mu_prev < 0:
            raise NotICIS("negative Milnor number in the Le-Greuel recursion")
    return mu_prev


# -- conormal geometry ---------------------------------------------------------------

@dataclass(frozen=True)
class ConormalIdeal:
    """Ideal of the relative conormal space in C^m x C^m (base z, cotangent a)."""

    ring: PolyRing
    ideal: Ideal
    base: Tuple[str, ...]
    cotangent: Tuple[str, ...]

    def dimension(self) -> int:
        return krull_dimension(self.ideal)


def cotangent_names(ring: PolyRing, prefix: str = "a_") -> Tuple[str, ...]:
    names = []
    for v in ring.variables:
        name = prefix + v
        while name in ring.variables:
            name = "_" + name
        names.append(name)
    return tuple(names)


def relative_conormal_ideal(F) -> ConormalIdeal:
    """Closure of {(z, a) : a in the row span of dF(z)} over the submersion locus.

    lambda-multipliers are eliminated from a_j - sum_i lambda_i df_i/dz_j, and
    the result is saturated by one nonzero maximal minor (the conormal space
    is irreducible, so one minor is enough to remove the spurious part over
    the critical locus).
    """
    F = _as_germ(F)
    src = F.ring
    comps = F.global_components
    cot = cotangent_names(src)
    lam = []
    for i in range(F.n):
        lam.append(fresh_name(PolyRing(src.variables + cot + tuple(lam)), f"lam{i}"))
    big = PolyRing(tuple(lam) + src.variables + cot, block_order(len(lam)))
    jac = jacobian_matrix([c.change_ring(big) for c in comps], src.variables)
    gens = []
    for j, a in enumerate(cot):
        expr = big.gen(a)
        for i, l in enumerate(lam):
            expr = expr - big.gen(l) * jac[i][j]
        gens.append(expr)
    target = PolyRing(src.variables + cot, GREVLEX, (0,) * src.nvars + (1,) * src.nvars)
    E = eliminate(Ideal(big, gens), lam).change_ring(target)
    mins = sorted(critical_scheme(F).generators, key=len)
    if mins and not mins[0].is_constant():
        E = saturate_by_element(E, mins[0].change_ring(target))
    return ConormalIdeal(target, E, src.variables, cot)


def conormal_by_minors(F) -> Ideal:
    """Reference construction: (n+1)-minors of [dF; a] saturated by the full critical ideal."""
    from .idealeng.ideal import saturation

    F = _as_germ(F)
    src = F.ring
    cot = cotangent_names(src)
    target = PolyRing(src.variables + cot, GREVLEX, (0,) * src.nvars + (1,) * src.nvars)
    rows = jacobian_matrix([c.change_ring(target) for c in F.global_components], src.variables)
    rows.append([target.gen(a) for a in cot])
    I = Ideal(target, minors(rows, F.n + 1))
    C = Ideal(target, [g.change_ring(target) for g in critical_scheme(F).generators])
    return saturation(I, C)[0]


@dataclass(frozen=True)
class NoBlowupReport:
    fibre_dimensions: Tuple[int, ...]
    expected: int
    conormal_dimension: int
    passed: bool


def check_no_blowup_codim0(F, sample_values: Sequence[Sequence] = ()) -> NoBlowupReport:
    """Fibre dimensions of T*_f M -> N: the special fibre (locally at the base
    point) and, globally, the fibres over ``sample_values``; pass iff all equal m."""
    F = _as_germ(F)
    con = relative_conormal_ideal(F)
    ring = con.ring
    m = F.m
    dims = []
    local_ring = ring.with_order(DS)
    shift = {v: ring.gen(v) + c for v, c in zip(F.ring.variables, F.base_point) if c}
    special = [g.substitute(shift) if shift else g for g in con.ideal.generators]
    special += [c.change_ring(ring) for c in F.components]
    dims.append(krull_dimension(Ideal(local_ring, special)))
    for w in sample_values:
        w = [to_rational(c) for c in w]
        fib = list(con.ideal.generators)
        fib += [c.change_ring(ring) - wi for c, wi in zip(F.global_components, w)]
        dims.append(krull_dimension(Ideal(ring, fib)))
    cdim = con.dimension()
    ok = all(d == m for d in dims) and cdim == m + F.n
    return NoBlowupReport(tuple(dims), m, cdim, ok)


def discriminant_ideal(F) -> Ideal:
    """Eliminate the source variables from (f_i - w_i) + C(f)."""
    F = _as_germ(F)
    src = F.ring
    ws = []
    for i in range(F.n):
        ws.append(fresh_name(PolyRing(src.variables + tuple(ws)), "w" if F.n == 1 else f"w{i + 1}"))
    big = PolyRing(src.variables + tuple(ws), GREVLEX)
    gens = [c.change_ring(big) - big.gen(w) for c, w in zip(F.global_components, ws)]
    gens += [g.change_ring(big) for g in critical_scheme(F).generators]
    return eliminate(Ideal(big, gens), src.variables)
