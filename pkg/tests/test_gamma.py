"""Binomial-basis expansion coefficients and their two recurrences."""
from math import factorial

import pytest
from hypothesis import given
from hypothesis import strategies as st

from lstirling.algebra import Poly, binomial
from lstirling.gamma import (
    binomial_poly,
    closed_forms,
    gamma_coeff,
    gamma_ode_step,
    gamma_poly,
    gamma_poly_via_ode,
    gamma_row,
    lc_expansion,
    lemma_binomial_identity,
    ls_binomial_expansion,
    ls_nested_sum,
    support,
)
from lstirling.triangles import lc, ls

# Rows frozen from running the three-term integer recurrence by hand.
GAMMA_ROWS = {
    0: (1,),
    1: (1,),
    2: (1, 8, 10),
    3: (1, 34, 219, 448, 280),
    4: (1, 114, 2049, 12440, 32244, 36960, 15400),
    5: (1, 356, 15058, 202268, 1197865, 3588464, 5663944, 4484480, 1401400),
}


def test_support_window():
    assert support(0) == (0, 0)
    assert support(1) == (3, 3)
    assert support(2) == (4, 6)
    assert support(5) == (7, 15)
    with pytest.raises(ValueError):
        support(-1)


def test_rows_match_frozen_values():
    for k, row in GAMMA_ROWS.items():
        assert gamma_row(k) == row


def test_coefficients_vanish_outside_the_support():
    for k in range(1, 7):
        lo, hi = support(k)
        assert gamma_coeff(k, lo - 1) == 0
        assert gamma_coeff(k, hi + 1) == 0
        assert gamma_coeff(k, 0) == 0
    assert gamma_coeff(0, 0) == 1


def test_row_endpoints_closed_forms():
    for k in range(1, 13):
        lo, hi = support(k)
        assert gamma_coeff(k, lo) == 1
        assert gamma_coeff(k, hi) == factorial(3 * k) // (factorial(k) * 6**k)


def test_polynomial_value_at_minus_one():
    assert gamma_poly(3).eval(-1) == -18
    for k in range(1, 13):
        expected = (-1) ** k * factorial(k + 1) * factorial(k) // 2**k
        assert gamma_poly(k).eval(-1) == expected


def test_closed_forms_bundle():
    assert closed_forms(12)


def test_differential_step_keeps_integer_coefficients():
    p = gamma_poly(5)
    q = gamma_ode_step(p, 5)
    assert all(isinstance(c, int) for c in q.coeffs)


def test_differential_recurrence_reproduces_integer_recurrence_rows():
    for k in range(0, 9):
        assert gamma_poly_via_ode(k) == gamma_poly(k)


# -- expansion of the triangle along a diagonal ---------------------------------


def test_binomial_expansion_matches_triangle():
    for k in range(1, 6):
        for n in range(1, 21):
            assert ls_binomial_expansion(n, k) == ls(n + k, n)


def test_nested_sum_matches_binomial_expansion():
    for k in range(1, 5):
        for n in range(1, 16):
            assert ls_nested_sum(n, k) == ls_binomial_expansion(n, k)


def test_near_diagonal_closed_forms():
    for n in range(0, 21):
        assert ls(n + 1, n) == 2 * binomial(n + 2, 3)
        assert ls(n + 2, n) == (
            40 * binomial(n + 3, 6) + 32 * binomial(n + 3, 5) + 4 * binomial(n + 3, 4)
        )
        assert ls(n + 3, n) == 8 * (
            280 * binomial(n + 4, 9)
            + 448 * binomial(n + 4, 8)
            + 219 * binomial(n + 4, 7)
            + 34 * binomial(n + 4, 6)
            + binomial(n + 4, 5)
        )


def test_first_kind_expansion_reflects_the_triangle():
    for k in range(1, 5):
        for n in range(k + 1, 16):
            assert lc_expansion(n, k) == lc(n - 1, n - k - 1)


# -- binomial polynomial helpers --------------------------------------------------


def test_binomial_poly_interpolates_binomial_coefficients():
    for m in range(0, 6):
        p = binomial_poly(m)
        assert p.degree == m or (m == 0 and p == Poly((1,)))
        for t in range(-8, 9):
            assert p.eval(t) == binomial(t, m)


@given(st.integers(min_value=0, max_value=8), st.integers(min_value=-5, max_value=8))
def test_quadratic_shift_identity_on_binomial_polynomials(a, b):
    assert lemma_binomial_identity(a, b)
