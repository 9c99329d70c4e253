"""Global Alexander polynomials of singular plane curves and cyclic covers.

A curve configuration records the degree, the singular points with their
local types, and the global flags that the theory needs (irreducibility,
transversality of the line at infinity).  Points live in projective
coordinates over cyclotomic fields and are normalised so the last
nonzero coordinate is 1.

For an irreducible curve of degree d whose singularities are ordinary
nodes plus (p, q)-type points, the Alexander polynomial is

    Delta(t) = Delta_{p,q}(t)^s,

with s the superabundance of the linear system of curves of degree
m = (1/p + 1/q) d - 3 passing through the (p, q)-points: s is the number
of those points minus the rank of the evaluation matrix of all degree-m
monomials at them.  The polynomial always divides the product of the
local characteristic polynomials.

First cohomology of the N-fold cyclic cover branched over the curve is
controlled by the same data: each cyclic summand with order lambda_i(t)
contributes gcd(t^N - 1, lambda_i) to the characteristic polynomial of
the deck transformation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .cyclotomic_field import CycloMatrix, CyclotomicNumber
from .errors import ComputationError, PreconditionError
from .polynomials import (
    CyclotomicProduct,
    IntPolynomial,
    factor_cyclotomic,
    poly_gcd,
    t_power_minus_one,
)
from .singularity import AdeType, Descriptor, OnePair, charpoly

__all__ = [
    "SingularPoint",
    "CurveConfiguration",
    "AlexanderReport",
    "CoverAlbaneseReport",
    "local_bound",
    "superabundance",
    "alexander_polynomial",
    "bound_only_report",
    "user_supplied_report",
    "cover_h1_charpoly",
    "cover_albanese_report",
]


def _as_cyclo(value) -> CyclotomicNumber:
    if isinstance(value, CyclotomicNumber):
        return value
    return CyclotomicNumber.rational(value)


@dataclass(frozen=True)
class SingularPoint:
    """A singular point in projective coordinates with its local type.

    Coordinates are normalised on construction: the last nonzero
    coordinate is scaled to 1.
    """

    location: tuple[CyclotomicNumber, CyclotomicNumber, CyclotomicNumber]
    descriptor: Descriptor

    def __post_init__(self):
        coords = tuple(_as_cyclo(c) for c in self.location)
        if len(coords) != 3:
            raise PreconditionError("projective points need three coordinates")
        last = next((i for i in (2, 1, 0) if not coords[i].is_zero), None)
        if last is None:
            raise PreconditionError("(0 : 0 : 0) is not a projective point")
        scale = coords[last].inverse()
        object.__setattr__(self, "location", tuple(c * scale for c in coords))


def point(x, y, z, descriptor: Descriptor) -> SingularPoint:
    """Convenience constructor accepting ints, Fractions or field elements."""
    return SingularPoint((_as_cyclo(x), _as_cyclo(y), _as_cyclo(z)), descriptor)


@dataclass(frozen=True)
class CurveConfiguration:
    degree: int
    points: tuple[SingularPoint, ...]
    components: int = 1
    irreducible: bool = True
    transversal_at_infinity: bool = True

    def __post_init__(self):
        object.__setattr__(self, "points", tuple(self.points))
        if self.degree < 1:
            raise PreconditionError("degree must be positive")
        if self.components < 1:
            raise PreconditionError("component count must be positive")
        if self.irreducible and self.components != 1:
            raise PreconditionError("an irreducible curve has exactly one component")


def local_bound(config: CurveConfiguration) -> CyclotomicProduct:
    """Product of the local characteristic polynomials of all points."""
    out = CyclotomicProduct.one()
    for pt in config.points:
        out = out * charpoly(pt.descriptor)
    return out


def _is_node(descriptor: Descriptor) -> bool:
    return isinstance(descriptor, AdeType) and descriptor.letter == "A" and descriptor.index == 1


def _matching_points(config: CurveConfiguration, p: int, q: int) -> list[SingularPoint]:
    OnePair(p, q)
    selected = []
    for pt in config.points:
        if _is_node(pt.descriptor):
            continue
        desc = pt.descriptor
        if not isinstance(desc, OnePair) or {desc.p, desc.q} != {p, q}:
            raise PreconditionError(
                "superabundance needs every non-node singularity of type "
                f"({p}, {q}); found {desc!r}"
            )
        selected.append(pt)
    return selected


def superabundance(config: CurveConfiguration, p: int, q: int) -> int:
    """Failure of the (p, q)-points to impose independent conditions.

    The points are evaluated against every monomial of degree
    m = (1/p + 1/q) * degree - 3; the result is (number of points) minus
    the exact rank of that matrix.  m must be an integer >= -2; for
    negative m the empty linear system leaves all points unaccounted.
    """
    pts = _matching_points(config, p, q)
    m = Fraction(config.degree, p) + Fraction(config.degree, q) - 3
    if m.denominator != 1:
        raise PreconditionError(
            f"(1/{p} + 1/{q}) * {config.degree} - 3 = {m} is not an integer"
        )
    m = int(m)
    if m < -2:
        raise PreconditionError(f"auxiliary degree {m} is below -2")
    if m < 0:
        return len(pts)
    if not pts:
        return 0
    monomials = [
        (i, j, m - i - j) for i in range(m, -1, -1) for j in range(m - i, -1, -1)
    ]
    rows = []
    for pt in pts:
        powers = []
        for coord in pt.location:
            cp = [CyclotomicNumber.rational(1)]
            for _ in range(m):
                cp.append(cp[-1] * coord)
            powers.append(cp)
        rows.append(
            [powers[0][i] * powers[1][j] * powers[2][k] for i, j, k in monomials]
        )
    matrix = CycloMatrix.from_rows(rows)
    return len(pts) - matrix.rank()


@dataclass(frozen=True)
class AlexanderReport:
    local_bound: CyclotomicProduct
    superabundance: int | None
    polynomial: CyclotomicProduct | None
    method: str

    def __post_init__(self):
        if self.method not in ("specialized-formula", "bound-only", "user-supplied"):
            raise PreconditionError(f"unknown method {self.method!r}")
        if self.polynomial is not None and not self.polynomial.divides(self.local_bound):
            raise PreconditionError(
                "the Alexander polynomial must divide the product of local factors"
            )


def alexander_polynomial(config: CurveConfiguration, p: int, q: int) -> AlexanderReport:
    """Alexander polynomial of an irreducible curve with (p, q) and node singularities.

    Delta = (t - 1)^(components - 1) * Delta_{p,q}^superabundance; the
    divisibility by the local bound is re-checked on construction.
    """
    if not config.irreducible:
        raise PreconditionError("the specialized formula needs an irreducible curve")
    s = superabundance(config, p, q)
    poly = charpoly(OnePair(p, q)) ** s
    if config.components > 1:
        poly = poly * CyclotomicProduct.from_factors({1: config.components - 1})
    return AlexanderReport(
        local_bound=local_bound(config),
        superabundance=s,
        polynomial=poly,
        method="specialized-formula",
    )


def bound_only_report(config: CurveConfiguration) -> AlexanderReport:
    """Only the divisibility bound, for configurations outside the formula's scope."""
    return AlexanderReport(
        local_bound=local_bound(config),
        superabundance=None,
        polynomial=None,
        method="bound-only",
    )


def user_supplied_report(
    config: CurveConfiguration, polynomial: CyclotomicProduct
) -> AlexanderReport:
    """Record an externally computed Alexander polynomial, checking the bound."""
    return AlexanderReport(
        local_bound=local_bound(config),
        superabundance=None,
        polynomial=polynomial,
        method="user-supplied",
    )


def cover_h1_charpoly(modules, cover_order: int) -> CyclotomicProduct:
    """Deck-action characteristic polynomial on H^1 of the cyclic cover.

    modules lists the orders (polynomials in ZZ[t]) of the cyclic
    summands of the homology module; each contributes its gcd with
    t^N - 1.

    >>> str(cover_h1_charpoly([IntPolynomial([1, -1, 1])], 6))
    'Phi_6'
    """
    if cover_order < 2:
        raise PreconditionError("cover order must be at least 2")
    target = t_power_minus_one(cover_order)
    product = IntPolynomial.one()
    for order in modules:
        if order.is_zero:
            raise PreconditionError("module orders must be nonzero")
        product = product * poly_gcd(target, order)
    return factor_cyclotomic(product)


@dataclass(frozen=True)
class CoverAlbaneseReport:
    dimension: int
    cm_conductors: frozenset[int]


def cover_albanese_report(
    config: CurveConfiguration, p: int, q: int, cover_order: int
) -> CoverAlbaneseReport:
    """Albanese dimension and CM fields of the N-fold cyclic branched cover.

    The homology module is superabundance-many copies of Delta_{p,q};
    the Albanese dimension is half the degree of the induced deck
    polynomial on H^1.
    """
    if not config.irreducible:
        raise PreconditionError("the cover computation needs an irreducible curve")
    s = superabundance(config, p, q)
    delta = charpoly(OnePair(p, q)).expand()
    ch = cover_h1_charpoly([delta] * s, cover_order)
    if ch.degree % 2:
        raise ComputationError("odd first Betti number for a smooth projective cover")
    return CoverAlbaneseReport(ch.degree // 2, ch.conductors())
