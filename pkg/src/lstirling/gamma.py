"""Binomial-basis expansions of ls(n+k, n) along diagonals.

For fixed k the diagonal n -> ls(n+k, n) is a polynomial in n of degree 3k.
It expands exactly in the binomial basis as

    ls(n+k, n) = 2^k sum_i gamma(k, i) C(n+k+1, i),

with positive integer coefficients gamma(k, i) supported on k+2 <= i <= 3k
for k >= 1 (and gamma(0, 0) = 1).  The coefficients satisfy an integer
three-term recurrence in k and, equivalently, the polynomials
gamma_k(x) = sum_i gamma(k, i) x^i satisfy a derivative-based recurrence;
both routes are implemented and must agree.  Evaluating the expansion at
negative arguments produces the first-kind diagonal lc(n-1, n-k-1).
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import factorial

from .algebra import Poly, binomial
from .triangles import CheckResult


def support(k: int) -> tuple:
    """Index range (lo, hi) where gamma(k, .) can be nonzero."""
    if k < 0:
        raise ValueError(f"support: k must be nonnegative, got {k}")
    return (0, 0) if k == 0 else (k + 2, 3 * k)


@lru_cache(maxsize=None)
def gamma_coeff(k: int, i: int) -> int:
    """gamma(k, i) by the integer recurrence

    gamma(k,i) = C(i-k,2) gamma(k-1,i-1) + (i-1)(i-k-1) gamma(k-1,i-2)
                 + C(i-1,2) gamma(k-1,i-3),

    seeded by gamma(0,0) = 1.  Zero outside the support.
    """
    if k < 0 or i < 0:
        return 0
    if k == 0:
        return 1 if i == 0 else 0
    return (
        binomial(i - k, 2) * gamma_coeff(k - 1, i - 1)
        + (i - 1) * (i - k - 1) * gamma_coeff(k - 1, i - 2)
        + binomial(i - 1, 2) * gamma_coeff(k - 1, i - 3)
    )


def gamma_row(k: int) -> tuple:
    """In-support coefficients (gamma(k, lo), ..., gamma(k, hi))."""
    lo, hi = support(k)
    return tuple(gamma_coeff(k, i) for i in range(lo, hi + 1))


def gamma_poly(k: int) -> Poly:
    """gamma_k(x) = sum_i gamma(k, i) x^i, from the coefficient recurrence."""
    lo, _ = support(k)
    return Poly((0,) * lo + gamma_row(k))


def gamma_ode_step(p: Poly, k: int) -> Poly:
    """One step of the derivative-based recurrence: gamma_{k+1} from gamma_k.

    gamma_{k+1} = (k(k+1)/2 - kx + x^2) x gamma_k
                  - (k + (k-2)x - 2x^2) x^2 gamma_k'
                  + (1+x)^2 x^3 / 2 gamma_k''

    All divisions are exact: gamma_k''/2 has integer coefficients because
    i(i-1) is always even.
    """
    d1 = p.derivative()
    d2 = d1.derivative()
    half_d2 = Poly(tuple(c // 2 for c in d2.coeffs))
    term1 = Poly((0, k * (k + 1) // 2, -k, 1)) * p
    term2 = Poly((0, 0, k, k - 2, -2)) * d1
    term3 = Poly((0, 0, 0, 1, 2, 1)) * half_d2
    return term1 - term2 + term3


def gamma_poly_via_ode(k: int) -> Poly:
    """gamma_k(x) built by iterating gamma_ode_step from gamma_0 = 1.

    Independent of gamma_coeff; the two must produce identical rows.
    """
    if k < 0:
        raise ValueError("gamma_poly_via_ode: k must be nonnegative")
    p = Poly((1,))
    for m in range(k):
        p = gamma_ode_step(p, m)
    return p


def ls_binomial_expansion(n: int, k: int) -> int:
    """ls(n+k, n) via 2^k sum_i gamma(k,i) C(n+k+1, i)."""
    if n < 0 or k < 0:
        raise ValueError("ls_binomial_expansion: indices must be nonnegative")
    lo, hi = support(k)
    return 2 ** k * sum(gamma_coeff(k, i) * binomial(n + k + 1, i) for i in range(lo, hi + 1))


def ls_nested_sum(n: int, k: int) -> int:
    """ls(n+k, n) as the k-fold nested sum 2^k sum C(t_k+1,2) ... C(t_1+1,2).

    Every level carries the triangular factor C(t+1, 2); levels telescope as
    prefix sums, so the whole sum is a k-pass dynamic program.
    """
    if n < 1 or k < 1:
        raise ValueError("ls_nested_sum: need n >= 1 and k >= 1")
    cur = [0] * (n + 1)
    for t in range(1, n + 1):
        cur[t] = cur[t - 1] + binomial(t + 1, 2)
    for _ in range(k - 1):
        nxt = [0] * (n + 1)
        for t in range(1, n + 1):
            nxt[t] = nxt[t - 1] + binomial(t + 1, 2) * cur[t]
        cur = nxt
    return 2 ** k * cur[n]


def lc_expansion(n: int, k: int) -> int:
    """lc(n-1, n-k-1) via the expansion evaluated at a negated argument.

    (-1)^k 2^k sum_i gamma(k,i) C(-n+k+1, i); needs n >= 1 and 0 <= k <= n-1.
    """
    if n < 1 or k < 0 or n - k - 1 < 0:
        raise ValueError("lc_expansion: need n >= 1 and 0 <= k <= n-1")
    lo, hi = support(k)
    s = sum(gamma_coeff(k, i) * binomial(-n + k + 1, i) for i in range(lo, hi + 1))
    return (-1) ** k * 2 ** k * s


def closed_forms(kmax: int) -> CheckResult:
    """Verify the four closed forms for 1 <= k <= kmax.

    gamma(k, k+2) = 1
    gamma(k, 3k)  = (3k)! / (k! 6^k)
    gamma_k(-1)   = (-1)^k (k+1)! k! / 2^k
    2^k gamma(k, 3k) / (3k)! = 1 / (k! 3^k)  (the leading coefficient)
    """
    for k in range(1, kmax + 1):
        checks = (
            ("gamma(k,k+2)=1", gamma_coeff(k, k + 2) == 1),
            (
                "gamma(k,3k)=(3k)!/(k! 6^k)",
                gamma_coeff(k, 3 * k) == factorial(3 * k) // (factorial(k) * 6 ** k),
            ),
            (
                "gamma_k(-1)=(-1)^k (k+1)! k!/2^k",
                gamma_poly(k).eval(-1)
                == (-1) ** k * factorial(k + 1) * factorial(k) // 2 ** k,
            ),
            (
                "leading coefficient 1/(k! 3^k)",
                Fraction(2 ** k * gamma_coeff(k, 3 * k), factorial(3 * k))
                == Fraction(1, factorial(k) * 3 ** k),
            ),
        )
        for name, ok in checks:
            if not ok:
                return CheckResult(False, f"k={k}: {name} fails")
    return CheckResult(True)


def binomial_poly(m: int) -> Poly:
    """C(x, m) = x(x-1)...(x-m+1)/m! as a polynomial with Fraction coefficients."""
    if m < 0:
        raise ValueError("binomial_poly: m must be nonnegative")
    out = Poly((Fraction(1),))
    for i in range(m):
        out = out * Poly((Fraction(-i), Fraction(1)))
    return out * Fraction(1, factorial(m))


def lemma_binomial_identity(a: int, b: int) -> CheckResult:
    """Verify C(x-b,2) C(x,a) = C(a+2,2) C(x,a+2) + (a+1)(a-b) C(x,a+1)
    + C(a-b,2) C(x,a) as an exact polynomial identity in x."""
    if a < 0:
        raise ValueError("lemma_binomial_identity: a must be nonnegative")
    xb = Poly((Fraction(-b), Fraction(1)))
    lhs = xb * (xb - 1) * Fraction(1, 2) * binomial_poly(a)
    rhs = (
        binomial_poly(a + 2) * binomial(a + 2, 2)
        + binomial_poly(a + 1) * ((a + 1) * (a - b))
        + binomial_poly(a) * binomial(a - b, 2)
    )
    if lhs == rhs:
        return CheckResult(True)
    return CheckResult(False, f"a={a}, b={b}: difference {(lhs - rhs).render()}")
