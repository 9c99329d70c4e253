import random
from fractions import Fraction

import numpy as np
import pytest

from isoabel.alexander import (
    AlexanderReport,
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
from isoabel.cyclotomic_field import CycloMatrix, CyclotomicNumber
from isoabel.errors import PreconditionError
from isoabel.fixtures import (
    cusp_configuration_on_conic,
    generic_six_cusp_configuration,
)
from isoabel.polynomials import CyclotomicProduct, IntPolynomial, cyclotomic
from isoabel.singularity import AdeType, OnePair


def node(x, y, z):
    return point(x, y, z, AdeType("A", 1))


def float_rank(rows, tol=1e-8):
    a = np.array([[z.to_complex() for z in row] for row in rows], dtype=complex)
    sv = np.linalg.svd(a, compute_uv=False)
    return int(np.sum(sv > tol * max(1.0, sv[0])))


def conic_matrix(config):
    # degree-2 monomial evaluations, the raw matrix behind superabundance
    monomials = [(i, j, 2 - i - j) for i in range(2, -1, -1) for j in range(2 - i, -1, -1)]
    rows = []
    for pt in config.points:
        x, y, z = pt.location
        rows.append([x**i * y**j * z**k for i, j, k in monomials])
    return rows


def test_point_normalization():
    a = point(2, 4, 2, AdeType("A", 1))
    assert a.location == (
        CyclotomicNumber.rational(1),
        CyclotomicNumber.rational(2),
        CyclotomicNumber.rational(1),
    )
    b = point(3, 6, 0, AdeType("A", 1))
    assert b == point(Fraction(1, 2), 1, 0, AdeType("A", 1))
    with pytest.raises(PreconditionError):
        point(0, 0, 0, AdeType("A", 1))


def test_configuration_validation():
    with pytest.raises(PreconditionError):
        CurveConfiguration(degree=0, points=())
    with pytest.raises(PreconditionError):
        CurveConfiguration(degree=3, points=(), components=2, irreducible=True)


def test_local_bound_products():
    cusp = point(1, 0, 0, OnePair(2, 3))
    cfg = CurveConfiguration(degree=6, points=(cusp, cusp, node(0, 1, 0)))
    assert local_bound(cfg).factors == {6: 2, 1: 1}


def test_conic_fixture_matrix_rank():
    config = cusp_configuration_on_conic(3)
    assert len(config.points) == 6
    rows = conic_matrix(config)
    matrix = CycloMatrix.from_rows(rows)
    assert matrix.conductor == 12
    assert matrix.rank() == 5
    assert float_rank(rows) == 5


def test_superabundance_on_special_conic_position():
    assert superabundance(cusp_configuration_on_conic(3), 2, 3) == 1
    assert superabundance(cusp_configuration_on_conic(5), 2, 5) == 1


def test_superabundance_generic_position():
    config = generic_six_cusp_configuration()
    assert superabundance(config, 2, 3) == 0
    rows = conic_matrix(config)
    assert CycloMatrix.from_rows(rows).rank() == 6
    assert float_rank(rows) == 6


def test_superabundance_ignores_nodes():
    base = cusp_configuration_on_conic(3)
    dressed = CurveConfiguration(
        degree=base.degree,
        points=base.points + (node(1, 1, 1), node(1, 2, 3)),
    )
    assert superabundance(dressed, 2, 3) == superabundance(base, 2, 3)


def test_superabundance_point_order_irrelevant():
    base = cusp_configuration_on_conic(5)
    shuffled = list(base.points)
    random.Random(3).shuffle(shuffled)
    permuted = CurveConfiguration(degree=base.degree, points=tuple(shuffled))
    assert superabundance(permuted, 2, 5) == 1


def test_superabundance_rejects_fractional_auxiliary_degree():
    cfg = CurveConfiguration(degree=7, points=(point(1, 0, 0, OnePair(2, 3)),))
    with pytest.raises(PreconditionError):
        superabundance(cfg, 2, 3)


def test_superabundance_rejects_foreign_singularities():
    cfg = CurveConfiguration(degree=6, points=(point(1, 0, 0, OnePair(2, 5)),))
    with pytest.raises(PreconditionError):
        superabundance(cfg, 2, 3)
    ade = CurveConfiguration(degree=6, points=(point(1, 0, 0, AdeType("A", 2)),))
    with pytest.raises(PreconditionError):
        superabundance(ade, 2, 3)


def test_alexander_conic_fixtures():
    report = alexander_polynomial(cusp_configuration_on_conic(3), 2, 3)
    assert report.method == "specialized-formula"
    assert report.superabundance == 1
    assert report.polynomial.factors == {6: 1}
    assert report.local_bound.factors == {6: 6}

    report5 = alexander_polynomial(cusp_configuration_on_conic(5), 2, 5)
    assert report5.polynomial.factors == {10: 1}
    assert report5.local_bound.factors == {10: 10}


def test_alexander_generic_fixture_is_trivial():
    report = alexander_polynomial(generic_six_cusp_configuration(), 2, 3)
    assert report.superabundance == 0
    assert report.polynomial == CyclotomicProduct.one()


def test_alexander_divides_local_bound():
    for config, p, q in [
        (cusp_configuration_on_conic(3), 2, 3),
        (cusp_configuration_on_conic(5), 2, 5),
        (generic_six_cusp_configuration(), 2, 3),
    ]:
        report = alexander_polynomial(config, p, q)
        assert report.polynomial.divides(report.local_bound)
        assert report.polynomial.is_fully_cyclotomic


def test_alexander_rejects_reducible_curve():
    cfg = CurveConfiguration(
        degree=6,
        points=(point(1, 0, 0, OnePair(2, 3)),),
        components=2,
        irreducible=False,
    )
    with pytest.raises(PreconditionError):
        alexander_polynomial(cfg, 2, 3)


def test_report_validation_enforces_divisibility():
    with pytest.raises(PreconditionError):
        AlexanderReport(
            local_bound=CyclotomicProduct.from_factors({6: 1}),
            superabundance=None,
            polynomial=CyclotomicProduct.from_factors({10: 1}),
            method="user-supplied",
        )
    with pytest.raises(PreconditionError):
        AlexanderReport(
            local_bound=CyclotomicProduct.one(),
            superabundance=None,
            polynomial=None,
            method="guesswork",
        )


def test_bound_only_and_user_supplied_reports():
    config = cusp_configuration_on_conic(3)
    bound = bound_only_report(config)
    assert bound.method == "bound-only"
    assert bound.polynomial is None and bound.superabundance is None
    assert bound.local_bound.factors == {6: 6}

    supplied = user_supplied_report(config, CyclotomicProduct.from_factors({6: 2}))
    assert supplied.method == "user-supplied"
    assert supplied.polynomial.factors == {6: 2}
    with pytest.raises(PreconditionError):
        user_supplied_report(config, CyclotomicProduct.from_factors({5: 1}))


def test_cover_h1_examples():
    assert cover_h1_charpoly([cyclotomic(6)], 6).factors == {6: 1}
    assert cover_h1_charpoly([cyclotomic(6)], 5) == CyclotomicProduct.one()
    assert cover_h1_charpoly([cyclotomic(10)] * 2, 10).factors == {10: 2}
    # non-cyclotomic part of a module order never meets t^N - 1
    mixed = cyclotomic(6) * IntPolynomial((-2, 0, 1))
    assert cover_h1_charpoly([mixed], 6).factors == {6: 1}


def test_cover_h1_divisibility_under_order_multiplication():
    modules = [cyclotomic(6) * cyclotomic(4), cyclotomic(10)]
    for n in (2, 3, 4, 6, 10):
        for k in (2, 3, 5):
            small = cover_h1_charpoly(modules, n)
            large = cover_h1_charpoly(modules, n * k)
            assert small.divides(large)


def test_cover_h1_rejects_bad_input():
    with pytest.raises(PreconditionError):
        cover_h1_charpoly([cyclotomic(6)], 1)
    with pytest.raises(PreconditionError):
        cover_h1_charpoly([IntPolynomial.zero()], 6)


def test_cover_albanese_fixture_reports():
    r3 = cover_albanese_report(cusp_configuration_on_conic(3), 2, 3, 6)
    assert r3.dimension == 1
    assert r3.cm_conductors == frozenset({6})
    r5 = cover_albanese_report(cusp_configuration_on_conic(5), 2, 5, 10)
    assert r5.dimension == 2
    assert r5.cm_conductors == frozenset({10})
    generic = cover_albanese_report(generic_six_cusp_configuration(), 2, 3, 6)
    assert generic.dimension == 0
    assert generic.cm_conductors == frozenset()
