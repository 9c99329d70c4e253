"""Mordell-Weil ranks of isotrivial abelian families over the plane.

An isotrivial family with fiber A, trivialised by the cyclic cover of
order d branched over the discriminant curve, has

    rank MW = s * phi(d)        (as an upper bound in general)

where s is the multiplicity of Phi_d in the Alexander polynomial of the
discriminant and phi is the Euler totient.  The bound needs the trace of
the family to vanish and, to be meaningful, a simple fiber with
multiplication by Q(zeta_d); it is attained exactly when the Albanese of
the trivialising cover is isogenous to A^s with matching multiplicity,
which the caller asserts through a flag.  Without cyclotomic
multiplication on the fiber the rank is zero outright.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import PreconditionError
from .polynomials import CyclotomicProduct, euler_phi

__all__ = [
    "FiberDescriptor",
    "MWRankReport",
    "rank_report",
    "holonomy_consistency",
    "EXACT_FROM_ALBANESE",
    "BOUND_FROM_MULTIPLICITY",
    "NO_CM_FIBER",
    "NO_PHI_D_FACTOR",
]

EXACT_FROM_ALBANESE = "exact-from-albanese-multiplicity"
BOUND_FROM_MULTIPLICITY = "bound-from-multiplicity"
NO_CM_FIBER = "no-cm-fiber"
NO_PHI_D_FACTOR = "no-phi-d-factor"


@dataclass(frozen=True)
class FiberDescriptor:
    """The abelian fiber: CM conductor (None if no cyclotomic CM), simplicity,
    and whether the family has trivial trace over the base."""

    cm_conductor: int | None
    simple: bool
    trivial_trace: bool

    def __post_init__(self):
        if self.cm_conductor is not None and self.cm_conductor < 1:
            raise PreconditionError("CM conductor must be positive when present")


@dataclass(frozen=True)
class MWRankReport:
    bound: int
    exact: int | None
    reason: str

    def __post_init__(self):
        if self.exact is not None and self.exact != self.bound:
            raise PreconditionError("an exact rank must equal the bound")


def rank_report(
    alexander: CyclotomicProduct,
    holonomy_order: int,
    fiber: FiberDescriptor,
    albanese_multiplicity_known: bool = False,
) -> MWRankReport:
    """Mordell-Weil rank bound s * phi(d) for the family with holonomy order d.

    >>> rank_report(CyclotomicProduct.from_factors({10: 1}), 10,
    ...             FiberDescriptor(10, True, True), True)
    MWRankReport(bound=4, exact=4, reason='exact-from-albanese-multiplicity')
    """
    if holonomy_order < 2:
        raise PreconditionError("holonomy order must be at least 2")
    if not fiber.trivial_trace:
        raise PreconditionError(
            "nonzero trace: the rank statement concerns the quotient by the "
            "trace, so the trace must be split off first"
        )
    if fiber.cm_conductor is None or fiber.cm_conductor < 3:
        # Q(zeta_1) = Q(zeta_2) = Q carries no cyclotomic multiplication
        return MWRankReport(0, 0, NO_CM_FIBER)
    if fiber.cm_conductor != holonomy_order:
        raise PreconditionError(
            f"fiber CM conductor {fiber.cm_conductor} must match the holonomy "
            f"order {holonomy_order}"
        )
    s = alexander.exponent(holonomy_order)
    if s == 0:
        return MWRankReport(0, 0, NO_PHI_D_FACTOR)
    if not fiber.simple:
        raise PreconditionError("the multiplicity bound needs a simple fiber")
    bound = s * euler_phi(holonomy_order)
    if albanese_multiplicity_known:
        return MWRankReport(bound, bound, EXACT_FROM_ALBANESE)
    return MWRankReport(bound, None, BOUND_FROM_MULTIPLICITY)


def holonomy_consistency(holonomy_order: int, local_polynomials) -> bool:
    """Whether any local factor supports eigenvalues of exact order d.

    A family whose fiberwise automorphism has order d can only acquire
    rank from singular points whose local monodromy already contains a
    primitive d-th root of unity.
    """
    if holonomy_order < 2:
        raise PreconditionError("holonomy order must be at least 2")
    return any(p.exponent(holonomy_order) > 0 for p in local_polynomials)
