"""Built-in example data: curve configurations and reference invariants.

These are the worked examples the command line fixture suite replays;
the test suite reuses them and checks the frozen expected values.
"""

from __future__ import annotations

import math

from .alexander import CurveConfiguration, SingularPoint, alexander_polynomial, point
from .cyclotomic_field import CyclotomicNumber
from .errors import PreconditionError
from .mordell_weil import FiberDescriptor, rank_report
from .polynomials import CyclotomicProduct
from .resolution import local_albanese, resolution_tree
from .singularity import OnePair, PuiseuxCharacteristic, charpoly_puiseux

__all__ = [
    "cusp_configuration_on_conic",
    "generic_six_cusp_configuration",
    "triple_factor_alexander",
    "builtin_checks",
]


def cusp_configuration_on_conic(p: int) -> CurveConfiguration:
    """The degree-2p curve (x^p + y^p)^2 + (y^2 + z^2)^p.

    Its singular points are 2p cusps of type (2, p) at x^p = -y^p,
    y^2 + z^2 = 0, all lying on one conic; that failure of general
    position is what makes the Alexander polynomial jump.
    """
    if p < 3 or p % 2 == 0:
        raise PreconditionError("p must be an odd exponent >= 3")
    conductor = math.lcm(4, p)
    i_unit = CyclotomicNumber.zeta(conductor, conductor // 4)
    zeta_p = CyclotomicNumber.zeta(conductor, conductor // p)
    one = CyclotomicNumber.rational(1)
    points = []
    for s in (1, -1):
        y = i_unit * s
        for k in range(p):
            x = -(zeta_p**k * y)
            points.append(SingularPoint((x, y, one), OnePair(2, p)))
    return CurveConfiguration(degree=2 * p, points=tuple(points))


def generic_six_cusp_configuration() -> CurveConfiguration:
    """Six (2, 3) cusps in general position (no conic through all six)."""
    coords = [
        (1, 0, 0),
        (0, 1, 0),
        (0, 0, 1),
        (1, 1, 1),
        (1, 2, 3),
        (1, 4, 9),
    ]
    pts = tuple(point(x, y, z, OnePair(2, 3)) for x, y, z in coords)
    return CurveConfiguration(degree=6, points=pts)


def triple_factor_alexander(p: int) -> CyclotomicProduct:
    """The Alexander polynomial Phi_{2p}^3, p an odd prime.

    Realised by degree-2p curves whose Alexander polynomial is
    ((t^p + 1)/(t + 1))^3, the largest multiplicity produced by the
    superabundance formula at that degree.
    """
    if p < 3 or any(p % k == 0 for k in range(2, p)):
        raise PreconditionError("p must be an odd prime")
    return CyclotomicProduct.from_factors({2 * p: 3})


def _check(name, ok, detail):
    return (name, bool(ok), detail)


def builtin_checks() -> list[tuple[str, bool, str]]:
    """Replay the reference examples; returns (name, passed, detail) rows."""
    out = []

    tree = resolution_tree(PuiseuxCharacteristic(((5, 2),)))
    rid = min(tree.rupture_ids)
    neighbor_mults = sorted(tree.multiplicity(i) for i in tree.neighbors(rid))
    out.append(
        _check(
            "resolution (5,2): rupture multiplicity 10, neighbours {1,4,5}",
            tree.multiplicity(rid) == 10 and neighbor_mults == [1, 4, 5],
            f"multiplicity {tree.multiplicity(rid)}, neighbours {neighbor_mults}",
        )
    )

    poly = charpoly_puiseux(PuiseuxCharacteristic(((3, 2), (1, 2))))
    out.append(
        _check(
            "two-pair germ ((3,2),(1,2)): monodromy Phi_12 * Phi_26",
            poly == CyclotomicProduct.from_factors({12: 1, 26: 1}),
            str(poly),
        )
    )

    report = local_albanese(PuiseuxCharacteristic(((5, 2),)), 10)
    cover = report.factors[0].belyi if report.factors else None
    out.append(
        _check(
            "cover of order 10 over the (5,2) germ: one genus-2 factor",
            report.total_dimension == 2
            and len(report.factors) == 1
            and cover is not None
            and sorted((cover.a, cover.b, cover.c)) == [1, 4, 5]
            and cover.d == 10,
            f"dimension {report.total_dimension}, cover {cover}",
        )
    )

    for p, expected_s in ((3, 1), (5, 1)):
        rep = alexander_polynomial(cusp_configuration_on_conic(p), 2, p)
        out.append(
            _check(
                f"degree-{2 * p} curve with {2 * p} cusps on a conic: "
                f"Alexander Phi_{2 * p}",
                rep.superabundance == expected_s
                and rep.polynomial == CyclotomicProduct.from_factors({2 * p: 1}),
                f"superabundance {rep.superabundance}, polynomial {rep.polynomial}",
            )
        )

    rep = alexander_polynomial(generic_six_cusp_configuration(), 2, 3)
    out.append(
        _check(
            "six cusps in general position: trivial Alexander polynomial",
            rep.superabundance == 0 and rep.polynomial == CyclotomicProduct.one(),
            f"superabundance {rep.superabundance}",
        )
    )

    alex = alexander_polynomial(cusp_configuration_on_conic(5), 2, 5).polynomial
    mw = rank_report(alex, 10, FiberDescriptor(10, True, True), True)
    out.append(
        _check(
            "isotrivial family over the ten-cusp curve: Mordell-Weil rank 4",
            mw.exact == 4,
            f"bound {mw.bound}, exact {mw.exact}",
        )
    )

    for p in (3, 5, 7):
        mw = rank_report(
            triple_factor_alexander(p), 2 * p, FiberDescriptor(2 * p, True, True), True
        )
        out.append(
            _check(
                f"triple-factor family, holonomy order {2 * p}: rank {3 * (p - 1)}",
                mw.exact == 3 * (p - 1),
                f"bound {mw.bound}, exact {mw.exact}",
            )
        )

    return out
