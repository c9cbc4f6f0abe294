"""Cycle classes, Segre classes, fibre Chern integrands and the sign table."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Tuple

from ..idealeng import Ideal, krull_dimension
from ..idealeng.generic import Factor, generic_slice_length
from ..polycore import GREVLEX, PolyRing


@dataclass(frozen=True)
class Ambient:
    """C^a x P^N (or P^a x P^N when ``base_projective``), by variable names."""

    base: Tuple[str, ...]
    fibre: Tuple[str, ...]
    base_projective: bool = False

    @property
    def base_dim(self) -> int:
        return len(self.base) - (1 if self.base_projective else 0)

    @property
    def fibre_dim(self) -> int:
        return len(self.fibre) - 1

    def ring(self) -> PolyRing:
        return PolyRing(self.base + self.fibre, GREVLEX,
                        (0,) * len(self.base) + (1,) * len(self.fibre))

    def factors(self) -> Tuple[Factor, Factor]:
        return Factor(self.base, self.base_projective), Factor(self.fibre, True)


@dataclass(frozen=True)
class CycleClass:
    """Class of a ``dimension``-dimensional cycle W in base x P^N.

    ``coefficients[i]`` is the length of W cut by i generic hyperplanes of
    P^N and ``dimension - i`` generic hyperplanes of the base, i = 0..N.
    """

    ambient: Ambient
    dimension: int
    coefficients: Tuple[int, ...]
    support_tag: str = ""

    def _check(self, other: "CycleClass"):
        if (self.ambient.base_dim, self.ambient.fibre_dim, self.dimension) != (
                other.ambient.base_dim, other.ambient.fibre_dim, other.dimension):
            raise ValueError("cycle classes live in different ambients or dimensions")

    def __add__(self, other: "CycleClass") -> "CycleClass":
        self._check(other)
        return CycleClass(self.ambient, self.dimension,
                          tuple(a + b for a, b in zip(self.coefficients, other.coefficients)),
                          f"{self.support_tag}+{other.support_tag}")

    def __sub__(self, other: "CycleClass") -> "CycleClass":
        self._check(other)
        return CycleClass(self.ambient, self.dimension,
                          tuple(a - b for a, b in zip(self.coefficients, other.coefficients)),
                          f"{self.support_tag}-{other.support_tag}")

    def is_effective(self) -> bool:
        return all(c >= 0 for c in self.coefficients)

    def is_zero(self) -> bool:
        return not any(self.coefficients)

    @classmethod
    def zero(cls, ambient: Ambient, dimension: int, tag: str = "") -> "CycleClass":
        return cls(ambient, dimension, (0,) * (ambient.fibre_dim + 1), tag)


def ideal_dimension(I: Ideal, ambient: Ambient) -> int:
    """Dimension of the subvariety of base x P^N cut out by a fibre-homogeneous ideal."""
    return krull_dimension(I) - 1 - (1 if ambient.base_projective else 0)


def cycle_class(I: Ideal, ambient: Ambient, dimension: Optional[int] = None,
                tag: str = "") -> CycleClass:
    if dimension is None:
        dimension = ideal_dimension(I, ambient)
    if dimension < 0 or I.is_unit():
        return CycleClass.zero(ambient, max(dimension, 0), tag)
    base, fibre = ambient.factors()
    coeffs = tuple(generic_slice_length(I, [base, fibre], [dimension - i, i])
                   for i in range(ambient.fibre_dim + 1))
    return CycleClass(ambient, dimension, coeffs, tag)


@dataclass(frozen=True)
class SegreClass:
    """s(A, B) for A inside one fibre {z} x P^N; ``coefficients[d]`` = deg(h^d . s_d)."""

    coefficients: Tuple[int, ...]
    fibre_dim: int

    def integrate(self, integrand: "ChernIntegrand") -> int:
        return sum(c * s for c, s in zip(integrand.coefficients, self.coefficients))


@dataclass(frozen=True)
class ChernIntegrand:
    """Truncated power series in the fibre hyperplane class h, modulo h^(N+1)."""

    coefficients: Tuple[int, ...]

    def __post_init__(self):
        if not self.coefficients or self.coefficients[0] != 1:
            raise ValueError("a total Chern class has constant term 1")

    @property
    def fibre_dim(self) -> int:
        return len(self.coefficients) - 1

    def __mul__(self, other: "ChernIntegrand") -> "ChernIntegrand":
        n = min(len(self.coefficients), len(other.coefficients))
        out = [0] * n
        for i, a in enumerate(self.coefficients[:n]):
            for j, b in enumerate(other.coefficients[:n - i]):
                out[i + j] += a * b
        return ChernIntegrand(tuple(out))

    @classmethod
    def dual_tautological_quotient(cls, fibre_dim: int) -> "ChernIntegrand":
        """c(zeta^v) on a trivial P^N-bundle restricted to one fibre: 1/(1 + h)."""
        return cls(tuple((-1) ** i for i in range(fibre_dim + 1)))

    @classmethod
    def line(cls, degree: int, fibre_dim: int) -> "ChernIntegrand":
        """c(O(degree)) = 1 + degree * h."""
        return cls((1, degree) + (0,) * (fibre_dim - 1) if fibre_dim >= 1 else (1,))


# One place for every sign convention.  ``m`` = dim M, ``n`` = dim N.
SIGN_TABLE = {
    # mu(z) = (-1)^m int c(zeta^v) s(..., P(C + f*T*N))   (ambient M x C)
    "mu_point": lambda m, n=1: (-1) ** m,
    # f_gamma with P(T*M): (-1)^(m-1) k int c(zeta_M^v) s(...)
    "cycle_projective": lambda m, n=1: (-1) ** (m - 1),
    # same with the projective completion P(T*M + 1): one dimension more
    "cycle_completed": lambda m, n=1: (-1) ** m,
    # 1 = chi + (-1)^(m-n+1) mu
    "euler_relation": lambda m, n=1: (-1) ** (m - n + 1),
    # chi - 1 = (-1)^(m-1) mu (hypersurfaces)
    "chi_minus_one": lambda m, n=1: (-1) ** (m - 1),
    # c_*(mu) = (-1)^(m-1) c(TM|X) pi_*([Y']/(1 + X' - Y'))
    "csm_mu": lambda m, n=1: (-1) ** (m - 1),
    # degree-0 part of pi_*(c(zeta_N^v) [Z]) picks (-h)^(n-1)
    "total_mu": lambda m, n=1: (-1) ** (n - 1),
    # (-1)^d [T*_W M] <-> Eu_W for dim W = d
    "euler_obstruction": lambda d, n=1: (-1) ** d,
}


def sign(name: str, m: int, n: int = 1) -> int:
    return SIGN_TABLE[name](m, n)
