"""Polynomial, series, and binomial arithmetic."""
import math
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from lstirling.algebra import (
    NEG_INF,
    Poly,
    Series,
    X,
    binomial,
    falling_basis,
    poly_gcd,
    series_geom,
    series_mul,
)

small_ints = st.integers(min_value=-50, max_value=50)
polys = st.lists(small_ints, max_size=6).map(lambda cs: Poly(cs))
nonzero_polys = polys.filter(lambda p: not p.is_zero())


# -- binomial ---------------------------------------------------------------


def test_binomial_matches_math_comb_for_nonnegative_upper():
    for n in range(0, 12):
        for k in range(0, 14):
            assert binomial(n, k) == math.comb(n, k)


def test_binomial_negative_upper_values():
    assert binomial(-1, 0) == 1
    assert binomial(-1, 3) == -1
    assert binomial(-2, 3) == -4
    assert binomial(-3, 2) == 6


def test_binomial_rejects_negative_lower():
    with pytest.raises(ValueError):
        binomial(5, -1)


@given(st.integers(min_value=-30, max_value=30), st.integers(min_value=1, max_value=12))
def test_binomial_pascal_rule_holds_for_any_integer_upper(n, k):
    assert binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k)


# -- Poly basics ------------------------------------------------------------


def test_poly_trims_trailing_zeros():
    assert Poly((1, 2, 0, 0)).coeffs == (1, 2)
    assert Poly((0, 0)).coeffs == ()


def test_zero_poly_degree_is_below_every_integer():
    z = Poly(())
    assert z.is_zero()
    assert z.degree is NEG_INF
    assert z.degree < -(10**9)
    assert not (z.degree < NEG_INF)
    assert z.degree == NEG_INF


def test_degree_and_leading():
    p = Poly((3, 0, 7))
    assert p.degree == 2
    assert p.leading() == 7
    assert p.coefficient(1) == 0
    assert p.coefficient(99) == 0


def test_equality_ignores_representation():
    assert Poly((1, 0)) == Poly((1,))
    assert Poly((0, 1)) == X
    assert Poly((1,)) != Poly((2,))
    assert Poly((1,)) == 1
    assert 0 == Poly(())


# -- ring axioms ------------------------------------------------------------


@given(polys, polys, polys)
def test_addition_is_associative_and_commutative(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a + b == b + a


@given(polys, polys, polys)
def test_multiplication_distributes_and_associates(a, b, c):
    assert a * (b + c) == a * b + a * c
    assert (a * b) * c == a * (b * c)
    assert a * b == b * a


@given(polys)
def test_additive_inverse_and_units(a):
    assert (a + (-a)).is_zero()
    assert a - a == Poly(())
    assert a * Poly((1,)) == a
    assert a * 1 == a
    assert 1 * a == a
    assert a * 0 == Poly(())


@given(polys, small_ints)
def test_int_scalars_act_like_constant_polynomials(a, c):
    assert a * c == a * Poly((c,))
    assert c * a == a * c
    assert a + c == a + Poly((c,))
    assert c - a == Poly((c,)) - a


@given(polys, polys)
def test_degree_of_product_adds_for_integer_coefficients(a, b):
    if a.is_zero() or b.is_zero():
        assert (a * b).is_zero()
    else:
        assert (a * b).degree == a.degree + b.degree


@given(polys, st.integers(min_value=0, max_value=5))
def test_power_matches_repeated_multiplication(a, e):
    expected = Poly((1,))
    for _ in range(e):
        expected = expected * a
    assert a**e == expected


# -- division ---------------------------------------------------------------


@given(polys, nonzero_polys)
def test_divmod_reconstructs_dividend_with_small_remainder(a, b):
    a, b = a.to_fractions(), b.to_fractions()
    q, r = divmod(a, b)
    assert q * b + r == a
    assert r.degree < b.degree
    assert a // b == q
    assert a % b == r


def test_divmod_exact_division():
    a = Poly((-1, 0, 1)).to_fractions()  # (x-1)(x+1)
    b = Poly((1, 1)).to_fractions()
    q, r = divmod(a, b)
    assert r.is_zero()
    assert q == Poly((Fraction(-1), Fraction(1)))


# -- calculus and evaluation -------------------------------------------------


@given(polys, polys)
def test_derivative_satisfies_product_rule(a, b):
    assert (a * b).derivative() == a.derivative() * b + a * b.derivative()


@given(polys, polys)
def test_derivative_is_linear(a, b):
    assert (a + b).derivative() == a.derivative() + b.derivative()


@given(polys, small_ints)
def test_eval_matches_naive_power_sum(p, t):
    assert p.eval(t) == sum(c * t**i for i, c in enumerate(p.coeffs))
    assert p(t) == p.eval(t)


@given(polys, st.fractions(min_value=-10, max_value=10, max_denominator=20))
def test_eval_accepts_rational_points(p, t):
    assert p.eval(t) == sum(Fraction(c) * t**i for i, c in enumerate(p.coeffs))


def test_monic_normalizes_leading_coefficient():
    p = Poly((2, 0, 4)).monic()
    assert p.leading() == 1
    assert p == Poly((Fraction(1, 2), 0, 1))
    assert Poly(()).monic().is_zero()


def test_map_coeffs_and_to_fractions():
    p = Poly((1, 2))
    assert p.map_coeffs(lambda c: 10 * c) == Poly((10, 20))
    q = p.to_fractions()
    assert all(isinstance(c, Fraction) for c in q.coeffs)
    assert q == p


# -- rendering ---------------------------------------------------------------


def test_render_ascending_powers():
    assert Poly(()).render() == "0"
    assert Poly((1, 8, 10)).render() == "1+8x+10x^2"
    assert Poly((0, -1)).render() == "-x"
    assert Poly((0, 0, 1)).render() == "x^2"
    assert Poly((-2, 1)).render("t") == "-2+t"


def test_render_nested_coefficients_are_parenthesized():
    p = Poly((Poly((0,)), Poly((5, 3))))  # (5+3z) x
    assert p.render() == "(5+3z)x"


# -- nested coefficients ------------------------------------------------------


def test_scale_multiplies_by_a_coefficient_ring_element():
    z_plus_1 = Poly((1, 1))
    p = Poly((Poly((1,)), Poly((0, 1))))  # 1 + z x
    q = p.scale(z_plus_1)
    assert q == Poly((z_plus_1, Poly((0, 1, 1))))


def test_falling_basis_small_cases():
    assert falling_basis(0) == Poly((1,))
    # k=1: a single factor x - 0 = x
    assert falling_basis(1) == Poly((Poly(()), Poly((1,))))


def test_falling_basis_specializes_to_integer_product():
    # at z = 1 the factors become x - i(i+1)
    for k in range(5):
        specialized = falling_basis(k).map_coeffs(lambda c: c.eval(1) if isinstance(c, Poly) else c)
        direct = Poly((1,))
        for i in range(k):
            direct = direct * Poly((-i * (i + 1), 1))
        assert specialized == direct


# -- gcd ----------------------------------------------------------------------


def test_poly_gcd_common_factor():
    a = (Poly((-1, 1)) * Poly((-2, 1))).to_fractions()
    b = (Poly((-2, 1)) * Poly((-3, 1))).to_fractions()
    assert poly_gcd(a, b) == Poly((-2, 1)).to_fractions()


def test_poly_gcd_coprime_inputs_give_a_unit():
    a = Poly((-1, 1)).to_fractions()
    b = Poly((1, 1)).to_fractions()
    g = poly_gcd(a, b)
    assert g.degree == 0


@given(nonzero_polys, nonzero_polys)
def test_poly_gcd_divides_both_inputs(a, b):
    a, b = a.to_fractions(), b.to_fractions()
    g = poly_gcd(a, b)
    assert (a % g).is_zero()
    assert (b % g).is_zero()


# -- series -------------------------------------------------------------------


def test_series_pads_and_truncates_to_order():
    s = Series((1, 2), 3)
    assert s.coeffs == (1, 2, 0, 0)
    t = Series((1, 2, 3, 4, 5), 2)
    assert t.coeffs == (1, 2, 3)
    with pytest.raises(ValueError):
        Series((), -1)


def test_series_geom_coefficients_are_ratio_powers():
    s = series_geom(2, 4)
    assert s.coeffs == (1, 6, 36, 216, 1296)


def test_series_mul_truncates_at_common_order():
    a = series_geom(1, 5)
    b = series_geom(2, 5)
    prod = series_mul(a, b)
    # coefficient j of 1/((1-2x)(1-6x)) is sum_{i<=j} 2^i 6^(j-i)
    for j in range(6):
        assert prod.coeffs[j] == sum(2**i * 6 ** (j - i) for i in range(j + 1))


def test_series_mul_requires_matching_orders():
    with pytest.raises(ValueError):
        series_mul(series_geom(1, 3), series_geom(1, 4))
