"""Exact invariants of plane curve singularities and isotrivial families.

The pipeline: exact cyclotomic arithmetic -> local monodromy of germs ->
embedded resolution and local Albanese varieties -> Alexander
polynomials of curve configurations and their cyclic covers ->
Mordell-Weil rank bounds for isotrivial abelian families over the
complement.
"""

from .alexander import (
    AlexanderReport,
    CoverAlbaneseReport,
    CurveConfiguration,
    SingularPoint,
    alexander_polynomial,
    bound_only_report,
    cover_albanese_report,
    cover_h1_charpoly,
    local_bound,
    point,
    superabundance,
    user_supplied_report,
)
from .belyi import (
    BelyiCover,
    adjunction_count,
    cm_exponents,
    deck_charpoly,
    eigen_multiplicity,
    genus,
)
from .cyclotomic_field import CycloMatrix, CyclotomicNumber
from .errors import ComputationError, PreconditionError
from .mordell_weil import (
    FiberDescriptor,
    MWRankReport,
    holonomy_consistency,
    rank_report,
)
from .polynomials import (
    CyclotomicProduct,
    IntPolynomial,
    cyclotomic,
    divisors,
    euler_phi,
    factor_cyclotomic,
    poly_gcd,
    t_power_minus_one,
)
from .resolution import (
    AlbaneseFactor,
    LocalAlbaneseReport,
    ResolutionNode,
    ResolutionTree,
    acampo_charpoly,
    local_albanese,
    resolution_tree,
)
from .singularity import (
    AdeType,
    CmVerdict,
    OnePair,
    PuiseuxCharacteristic,
    RawCharPoly,
    charpoly,
    charpoly_ade,
    charpoly_one_pair,
    charpoly_puiseux,
    cm_verdict,
    spectrum_one_pair,
)

__version__ = "0.1.0"
