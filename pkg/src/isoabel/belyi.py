"""Cyclic covers of the projective line branched over three points.

The curve y^d = x^a (x - 1)^b with a + b + c = d (c the exponent at
infinity) carries the deck transformation y -> zeta_d * y.  Everything
about its Hodge theory is elementary and exact: the genus comes from
Riemann-Hurwitz, and the multiplicity of the deck eigenvalue zeta_d^j on
holomorphic one-forms is a floor-function count.  gcd(a, b, c, d) = 1 is
required so the curve is irreducible.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import ComputationError, PreconditionError
from .polynomials import CyclotomicProduct, divisors

__all__ = [
    "BelyiCover",
    "genus",
    "eigen_multiplicity",
    "cm_exponents",
    "deck_charpoly",
    "adjunction_count",
]


@dataclass(frozen=True)
class BelyiCover:
    """y^d = x^a (x-1)^b with exponent c at infinity, a + b + c = d."""

    a: int
    b: int
    c: int
    d: int

    def __post_init__(self):
        if min(self.a, self.b, self.c) < 1 or self.d < 2:
            raise PreconditionError("exponents must be positive and the degree at least 2")
        if self.a + self.b + self.c != self.d:
            raise PreconditionError(
                f"a+b+c != d for ({self.a}, {self.b}, {self.c}, {self.d})"
            )
        if math.gcd(math.gcd(self.a, self.b), math.gcd(self.c, self.d)) != 1:
            raise PreconditionError("exponents and degree must have gcd 1")


def genus(cover: BelyiCover) -> int:
    """Genus of the smooth model, by Riemann-Hurwitz over three points.

    >>> genus(BelyiCover(4, 1, 5, 10))
    2
    """
    a, b, c, d = cover.a, cover.b, cover.c, cover.d
    total = d - math.gcd(a, d) - math.gcd(b, d) - math.gcd(c, d) + 2
    if total % 2:
        raise ComputationError("Riemann-Hurwitz count came out odd")
    return total // 2


def eigen_multiplicity(cover: BelyiCover, j: int) -> int:
    """Multiplicity (0 or 1) of the deck eigenvalue zeta_d^j on 1-forms.

    >>> eigen_multiplicity(BelyiCover(4, 1, 5, 10), 1)
    1
    >>> eigen_multiplicity(BelyiCover(4, 1, 5, 10), 2)
    0
    """
    a, b, d = cover.a, cover.b, cover.d
    if not 1 <= j <= d - 1:
        raise PreconditionError(f"eigenvalue index must lie in 1..{d - 1}")
    value = -((-a * j) // d + (-b * j) // d + ((a + b) * j) // d + 1)
    if value not in (0, 1):
        raise ComputationError("eigenvalue multiplicity outside {0, 1}")
    return value


def cm_exponents(cover: BelyiCover) -> frozenset[int]:
    """Indices j with a holomorphic eigenform for zeta_d^j; genus many."""
    return frozenset(
        j for j in range(1, cover.d) if eigen_multiplicity(cover, j) == 1
    )


def deck_charpoly(cover: BelyiCover) -> CyclotomicProduct:
    """Characteristic polynomial of the deck action on first cohomology.

    Equals (t^d - 1)(t - 1)^2 / ((t^ga - 1)(t^gb - 1)(t^gc - 1)) with
    g* = gcd(*, d), assembled directly in cyclotomic-factored form.
    """
    d = cover.d
    gcds = [math.gcd(x, d) for x in (cover.a, cover.b, cover.c)]
    factors: dict[int, int] = {}
    for n in divisors(d):
        e = 1 + 2 * (n == 1) - sum(g % n == 0 for g in gcds)
        if e < 0:
            raise ComputationError("deck polynomial would require a denominator")
        if e:
            factors[n] = e
    return CyclotomicProduct.from_factors(factors)


def adjunction_count(d: int, l: int) -> int:
    """Number of adjunction conditions for curves of degrees d and l.

    Counts lattice points (i, j) >= (0, 0) with (i+1, j+1) on or below
    the diagonal of the rectangle [0, l] x [0, d]; the closed form is
    ((d-1)(l-1) + gcd(d, l) - 1) / 2.

    >>> adjunction_count(2, 3)
    1
    """
    if d < 2 or l < 2:
        raise PreconditionError("both degrees must be at least 2")
    total = (d - 1) * (l - 1) + math.gcd(d, l) - 1
    if total % 2:
        raise ComputationError("adjunction count came out odd")
    return total // 2
