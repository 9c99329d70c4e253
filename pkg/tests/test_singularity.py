import math
from fractions import Fraction

import pytest

from isoabel.errors import PreconditionError
from isoabel.polynomials import (
    CyclotomicProduct,
    IntPolynomial,
    cyclotomic,
    t_power_minus_one,
)
from isoabel.singularity import (
    CM_BY_CRITERION,
    CM_BY_UNIBRANCHED,
    CRITERION_INAPPLICABLE,
    AdeType,
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


def torus_knot_charpoly(p, q):
    # (t^pq - 1)(t - 1) / ((t^p - 1)(t^q - 1)), computed by exact division
    num = t_power_minus_one(p * q) * t_power_minus_one(1)
    den = t_power_minus_one(p) * t_power_minus_one(q)
    return num.exact_div(den)


def coprime_pairs(bound):
    for p in range(2, bound + 1):
        for q in range(p + 1, bound + 1):
            if math.gcd(p, q) == 1:
                yield p, q


def test_descriptor_validation():
    with pytest.raises(PreconditionError):
        OnePair(4, 2)
    with pytest.raises(PreconditionError):
        OnePair(1, 3)
    with pytest.raises(PreconditionError):
        PuiseuxCharacteristic(((2, 3),))
    with pytest.raises(PreconditionError):
        PuiseuxCharacteristic(((3, 2), (4, 2)))
    with pytest.raises(PreconditionError):
        AdeType("D", 3)
    with pytest.raises(PreconditionError):
        AdeType("F", 4)


def test_puiseux_genus_and_multiplicity():
    pc = PuiseuxCharacteristic(((3, 2), (6, 5)))
    assert pc.genus == 2
    assert pc.multiplicity == 10


def test_one_pair_small_cases():
    assert charpoly_one_pair(2, 3).factors == {6: 1}
    assert charpoly_one_pair(2, 5).factors == {10: 1}
    assert charpoly_one_pair(3, 4).factors == {6: 1, 12: 1}
    assert charpoly_one_pair(2, 3).expand() == IntPolynomial((1, -1, 1))


def test_one_pair_matches_quotient_construction():
    for p, q in coprime_pairs(12):
        assert charpoly_one_pair(p, q).expand() == torus_knot_charpoly(p, q)


def test_one_pair_degree_and_symmetry():
    for p, q in coprime_pairs(30):
        fac = charpoly_one_pair(p, q)
        assert fac.degree == (p - 1) * (q - 1)
        assert fac.is_fully_cyclotomic
    expanded = charpoly_one_pair(4, 7).expand()
    assert expanded.reciprocal() == expanded


def test_puiseux_single_pair_reduces_to_one_pair():
    pc = PuiseuxCharacteristic(((5, 3),))
    assert charpoly_puiseux(pc) == charpoly_one_pair(3, 5)


def test_puiseux_two_pairs_inflation_identity():
    # (2,3)-cusp refined by a (5,6) pair: first factor is the one-pair
    # polynomial in t^5, second comes from the derived pair (36, 5)
    pc = PuiseuxCharacteristic(((3, 2), (6, 5)))
    expected = torus_knot_charpoly(2, 3).compose_power(5) * torus_knot_charpoly(5, 36)
    got = charpoly_puiseux(pc)
    assert got.expand() == expected
    assert got.is_fully_cyclotomic
    assert got.degree == 150


def test_puiseux_two_pairs_cyclotomic_form():
    pc = PuiseuxCharacteristic(((3, 2), (1, 2)))
    assert charpoly_puiseux(pc).factors == {12: 1, 26: 1}


def test_charpoly_dispatch():
    assert charpoly(OnePair(2, 3)) == charpoly_one_pair(2, 3)
    assert charpoly(PuiseuxCharacteristic(((3, 2),))) == charpoly_one_pair(2, 3)
    assert charpoly(AdeType("A", 2)) == charpoly_one_pair(2, 3)
    raw = RawCharPoly(CyclotomicProduct.from_factors({5: 1}))
    assert charpoly(raw).factors == {5: 1}


def test_ade_table():
    assert charpoly_ade(AdeType("A", 1)).factors == {1: 1}
    assert charpoly_ade(AdeType("A", 2)).factors == {6: 1}
    # odd A_m: (t^(m+1) - 1)/(t + 1)
    for m in (3, 5, 7, 9):
        expected = t_power_minus_one(m + 1).exact_div(IntPolynomial((1, 1)))
        assert charpoly_ade(AdeType("A", m)).expand() == expected
    # even A_m agrees with the unibranched (2, m+1) germ
    for m in (2, 4, 6, 8):
        assert charpoly_ade(AdeType("A", m)) == charpoly_one_pair(2, m + 1)
    # D_n: (t^(n-1) + (-1)^(n-1))(t - 1)
    assert charpoly_ade(AdeType("D", 4)).expand() == t_power_minus_one(3) * t_power_minus_one(1)
    assert charpoly_ade(AdeType("D", 5)).expand() == IntPolynomial((1, 0, 0, 0, 1)) * IntPolynomial((-1, 1))
    assert charpoly_ade(AdeType("E", 6)) == charpoly_one_pair(3, 4)
    assert charpoly_ade(AdeType("E", 7)).factors == {1: 1, 7: 1}
    assert charpoly_ade(AdeType("E", 8)) == charpoly_one_pair(3, 5)


def test_ade_degree_equals_index():
    cases = [AdeType("A", m) for m in range(1, 14)]
    cases += [AdeType("D", n) for n in range(4, 14)]
    cases += [AdeType("E", n) for n in (6, 7, 8)]
    for ade in cases:
        assert charpoly_ade(ade).degree == ade.index


def test_spectrum_examples():
    assert spectrum_one_pair(2, 3) == frozenset({Fraction(5, 6)})
    assert spectrum_one_pair(2, 5) == frozenset({Fraction(7, 10), Fraction(9, 10)})


def test_spectrum_cardinality_and_range():
    for p, q in coprime_pairs(30):
        spec = spectrum_one_pair(p, q)
        assert len(spec) == (p - 1) * (q - 1) // 2
        for alpha in spec:
            assert Fraction(0) < alpha < Fraction(1)
            assert 1 - alpha not in spec


def test_spectrum_rejects_non_coprime():
    with pytest.raises(PreconditionError):
        spectrum_one_pair(4, 2)


def test_cm_verdict_unibranched_paths():
    assert cm_verdict(OnePair(2, 3)).status == CM_BY_UNIBRANCHED
    assert cm_verdict(PuiseuxCharacteristic(((3, 2), (6, 5)))).status == CM_BY_UNIBRANCHED
    assert cm_verdict(AdeType("A", 4)).status == CM_BY_UNIBRANCHED


def test_cm_verdict_criterion_paths():
    # odd A_m is not unibranched; A_3 = Phi_1 Phi_4 passes the criterion
    v = cm_verdict(AdeType("A", 3))
    assert v.status == CM_BY_CRITERION
    assert v.multiple_root_conductors == ()
    assert v.value_at_minus_one != 0
    assert cm_verdict(AdeType("D", 4)).status == CM_BY_CRITERION
    assert cm_verdict(AdeType("E", 7)).status == CM_BY_CRITERION


def test_cm_verdict_repeated_eigenvalue_blocks_criterion():
    v = cm_verdict(CyclotomicProduct.from_factors({6: 2}))
    assert v.status == CRITERION_INAPPLICABLE
    assert v.multiple_root_conductors == (6,)


def test_cm_verdict_minus_one_eigenvalue_blocks_criterion():
    v = cm_verdict(CyclotomicProduct.from_factors({2: 1, 6: 1}))
    assert v.status == CRITERION_INAPPLICABLE
    assert v.value_at_minus_one == 0


def test_cm_verdict_repeated_root_at_one_is_harmless():
    v = cm_verdict(CyclotomicProduct.from_factors({1: 2, 6: 1}))
    assert v.status == CM_BY_CRITERION


def test_cm_verdict_raw_polynomial_input():
    assert cm_verdict(cyclotomic(6) * cyclotomic(10)).status == CM_BY_CRITERION
    sq = cyclotomic(10) * cyclotomic(10)
    assert cm_verdict(sq).status == CRITERION_INAPPLICABLE
