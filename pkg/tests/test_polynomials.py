import math

import pytest
from hypothesis import given, settings, strategies as st

from isoabel.errors import ComputationError, PreconditionError
from isoabel.polynomials import (
    CyclotomicProduct,
    IntPolynomial,
    cyclotomic,
    divisors,
    euler_phi,
    factor_cyclotomic,
    poly_gcd,
    t_power_minus_one,
)


def mobius(n):
    out = 1
    d = 2
    while d * d <= n:
        if n % d == 0:
            n //= d
            if n % d == 0:
                return 0
            out = -out
        d += 1
    if n > 1:
        out = -out
    return out


def cyclotomic_by_mobius(n):
    # independent construction: prod over d | n of (t^d - 1)^mu(n/d)
    num = IntPolynomial.one()
    den = IntPolynomial.one()
    for d in divisors(n):
        m = mobius(n // d)
        if m == 1:
            num = num * t_power_minus_one(d)
        elif m == -1:
            den = den * t_power_minus_one(d)
    return num.exact_div(den)


def test_euler_phi_matches_unit_count():
    for n in range(1, 201):
        units = sum(1 for a in range(1, n + 1) if math.gcd(a, n) == 1)
        assert euler_phi(n) == units


def test_divisors_sorted_and_complete():
    assert divisors(1) == (1,)
    assert divisors(12) == (1, 2, 3, 4, 6, 12)
    for n in (7, 36, 100):
        ds = divisors(n)
        assert list(ds) == sorted(ds)
        assert all(n % d == 0 for d in ds)
        assert len(ds) == sum(1 for d in range(1, n + 1) if n % d == 0)


def test_int_polynomial_basic_arithmetic():
    f = IntPolynomial((1, 2, 1))
    g = IntPolynomial((-1, 1))
    assert f * g == IntPolynomial((-1, -1, 1, 1))
    assert f + g == IntPolynomial((0, 3, 1))
    assert f - f == IntPolynomial.zero()
    assert g ** 2 == IntPolynomial((1, -2, 1))
    assert f.degree == 2 and IntPolynomial.zero().degree == -1


def test_divmod_is_exact_euclidean_division():
    f = IntPolynomial((2, 0, -3, 1))
    g = IntPolynomial((-1, 1))
    q, r = divmod(f, g)
    assert q * g + r == f
    assert r.degree < g.degree
    with pytest.raises(ValueError):
        divmod(IntPolynomial((1, 1, 1)), IntPolynomial((0, 2)))


def test_exact_div_rejects_nondivisor():
    with pytest.raises(ComputationError):
        t_power_minus_one(5).exact_div(IntPolynomial((1, 1)))


def test_evaluate_and_derivative():
    f = IntPolynomial((1, -1, 0, 2))
    assert f.evaluate(3) == 1 - 3 + 54
    assert f.derivative() == IntPolynomial((-1, 0, 6))


def test_reciprocal_and_compose_power():
    f = IntPolynomial((2, 0, 1))
    assert f.reciprocal() == IntPolynomial((1, 0, 2))
    assert f.compose_power(3) == IntPolynomial((2, 0, 0, 0, 0, 0, 1))
    assert cyclotomic(6).reciprocal() == cyclotomic(6)


def test_str_rendering():
    assert str(IntPolynomial((1, -1, 1))) == "t^2 - t + 1"
    assert str(IntPolynomial.zero()) == "0"
    assert str(IntPolynomial((-2,))) == "-2"


def test_poly_gcd_examples():
    assert poly_gcd(t_power_minus_one(6), t_power_minus_one(4)) == t_power_minus_one(2)
    assert poly_gcd(cyclotomic(5), cyclotomic(7)) == IntPolynomial.one()
    f = cyclotomic(6) * IntPolynomial((1, 0, 1))
    g = cyclotomic(6) * IntPolynomial((3, 1))
    assert poly_gcd(f, g) == cyclotomic(6)


def test_cyclotomic_small_values():
    assert cyclotomic(1) == IntPolynomial((-1, 1))
    assert cyclotomic(2) == IntPolynomial((1, 1))
    assert cyclotomic(6) == IntPolynomial((1, -1, 1))
    assert cyclotomic(12) == IntPolynomial((1, 0, -1, 0, 1))


def test_cyclotomic_matches_mobius_construction():
    for n in range(1, 201):
        assert cyclotomic(n) == cyclotomic_by_mobius(n)
        assert cyclotomic(n).degree == euler_phi(n)


def test_cyclotomic_product_identity():
    # t^n - 1 factors as the product of Phi_d over divisors d of n
    for n in (1, 2, 6, 12, 30):
        prod = IntPolynomial.one()
        for d in divisors(n):
            prod = prod * cyclotomic(d)
        assert prod == t_power_minus_one(n)


def test_factor_cyclotomic_pure_products():
    fac = factor_cyclotomic(t_power_minus_one(3))
    assert fac.sign == 1
    assert fac.factors == {1: 1, 3: 1}
    assert fac.remainder == IntPolynomial.one()
    assert fac.is_fully_cyclotomic

    sq = factor_cyclotomic(cyclotomic(10) * cyclotomic(10))
    assert sq.factors == {10: 2}


def test_factor_cyclotomic_mixed_remainder():
    f = cyclotomic(12) * IntPolynomial((-2, 0, 1))
    fac = factor_cyclotomic(f)
    assert fac.factors == {12: 1}
    assert fac.remainder == IntPolynomial((-2, 0, 1))
    assert not fac.is_fully_cyclotomic
    assert fac.expand() == f


def test_factor_cyclotomic_negative_leading():
    f = cyclotomic(6) * IntPolynomial((-1,))
    fac = factor_cyclotomic(f)
    assert fac.sign == -1
    assert fac.factors == {6: 1}
    assert fac.expand() == f


def test_factor_cyclotomic_rejects_bad_input():
    with pytest.raises(PreconditionError):
        factor_cyclotomic(IntPolynomial.zero())
    with pytest.raises(PreconditionError):
        factor_cyclotomic(IntPolynomial((1, 2)))


def test_remainder_has_no_roots_of_unity():
    f = cyclotomic(6) * cyclotomic(8) * IntPolynomial((-2, 0, 1))
    rem = factor_cyclotomic(f).remainder
    for m in range(1, 2 * rem.degree * rem.degree + 1):
        assert poly_gcd(rem, t_power_minus_one(m)) == IntPolynomial.one()


@given(
    st.dictionaries(st.sampled_from([1, 2, 3, 4, 5, 6, 8, 10, 12]),
                    st.integers(min_value=1, max_value=3), max_size=4),
    st.sampled_from([None, (-2, 0, 1), (-1, -1, 1), (3, 0, 0, 1)]),
)
@settings(max_examples=60, deadline=None)
def test_factor_expand_roundtrip(exponents, extra):
    rem = IntPolynomial.one() if extra is None else IntPolynomial(extra)
    f = rem
    for n, e in exponents.items():
        f = f * cyclotomic(n) ** e
    fac = factor_cyclotomic(f)
    assert fac.expand() == f
    for n, e in exponents.items():
        assert fac.exponent(n) >= e


def test_cyclotomic_product_algebra():
    a = CyclotomicProduct.from_factors({6: 1})
    b = CyclotomicProduct.from_factors({6: 1, 10: 2})
    prod = a * b
    assert prod.factors == {6: 2, 10: 2}
    assert prod.degree == 2 * 2 + 2 * 4
    assert (a ** 3).factors == {6: 3}
    assert a.divides(b)
    assert not b.divides(a)
    assert b.conductors() == frozenset({6, 10})
    assert prod.expand() == cyclotomic(6) ** 2 * cyclotomic(10) ** 2


def test_cyclotomic_product_evaluate():
    b = CyclotomicProduct.from_factors({6: 1, 10: 2})
    assert b.evaluate(1) == cyclotomic(6).evaluate(1) * cyclotomic(10).evaluate(1) ** 2
    assert CyclotomicProduct.one().evaluate(17) == 1


def test_cyclotomic_product_str():
    one = CyclotomicProduct.one()
    assert str(one) == "1"
    mixed = factor_cyclotomic(cyclotomic(12) * IntPolynomial((-2, 0, 1)))
    assert str(mixed) == "Phi_12 * (t^2 - 2)"
