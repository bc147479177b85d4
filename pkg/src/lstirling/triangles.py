"""The Legendre-Stirling and Jacobi-Stirling number triangles.

Four triangles share the shape T(n,k) = T(n-1,k-1) + f(n,k) T(n-1,k) with
T(0,0) = 1 and T vanishing outside 0 <= k <= n:

    ls(n,k)   f = k(k+1)          second kind, integer entries
    lc(n,k)   f = n(n-1)          first kind, integer entries
    js(n,k)   f = k(k+z)          second kind, entries in Z[z]
    jc(n,k)   f = (n-1)(n-1+z)    first kind, entries in Z[z]

Setting z = 1 in js/jc recovers ls/lc.  Alongside the recurrences this module
carries the independent routes to the same numbers (explicit alternating sum,
vertical recurrence, generating-function products) and the identity checks
that tie all routes together.
"""
from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .algebra import Poly, Series, falling_basis, series_geom, series_mul


@dataclass
class CheckResult:
    """Outcome of an identity sweep: ok flag plus the first counterexample."""

    ok: bool
    detail: str | None = None

    def __bool__(self) -> bool:
        return self.ok


class Triangle:
    """Memoized triangle for T(n,k) = T(n-1,k-1) + f(n,k) T(n-1,k).

    Rows are filled iteratively and cached for the lifetime of the instance;
    a lock makes concurrent reads of a shared instance safe.  `one` and
    `zero` fix the entry ring (ints, or Poly for the z-triangles).
    """

    def __init__(self, factor, one=1, zero=0, tag: str = ""):
        self.factor = factor
        self.one = one
        self.zero = zero
        self.tag = tag
        self._rows = [[one]]
        self._lock = threading.Lock()

    def value(self, n: int, k: int):
        if n < 0 or k < 0:
            raise ValueError(f"triangle {self.tag}: indices must be nonnegative")
        if k > n:
            return self.zero
        with self._lock:
            while len(self._rows) <= n:
                m = len(self._rows)
                prev = self._rows[m - 1]
                row = []
                for j in range(m + 1):
                    left = prev[j - 1] if 1 <= j <= m else self.zero
                    up = prev[j] if j < m else self.zero
                    row.append(left + self.factor(m, j) * up)
                self._rows.append(row)
            return self._rows[n][k]

    def row(self, n: int) -> list:
        return [self.value(n, k) for k in range(n + 1)]


ls_triangle = Triangle(lambda n, k: k * (k + 1), tag="ls")
lc_triangle = Triangle(lambda n, k: n * (n - 1), tag="lc")
js_triangle = Triangle(lambda n, k: Poly((k * k, k)), one=Poly((1,)), zero=Poly(), tag="js")
jc_triangle = Triangle(lambda n, k: Poly(((n - 1) ** 2, n - 1)), one=Poly((1,)), zero=Poly(), tag="jc")


def ls(n: int, k: int) -> int:
    """Legendre-Stirling number of the second kind, by the triangular recurrence."""
    return ls_triangle.value(n, k)


def lc(n: int, k: int) -> int:
    """Legendre-Stirling number of the first kind (unsigned)."""
    return lc_triangle.value(n, k)


def js(n: int, k: int) -> Poly:
    """Jacobi-Stirling number of the second kind, a polynomial in z."""
    return js_triangle.value(n, k)


def jc(n: int, k: int) -> Poly:
    """Jacobi-Stirling number of the first kind, a polynomial in z."""
    return jc_triangle.value(n, k)


def ls_explicit(n: int, k: int) -> int:
    """ls(n,k) by the explicit alternating sum.

    Sum over r = 0..k of (-1)^(r+k) (2r+1) (r^2+r)^n / ((r+k+1)! (k-r)!),
    evaluated in exact rationals.  Python's 0**0 == 1 supplies the convention
    needed at n = 0.  A non-integer total would mean an implementation bug and
    raises ArithmeticError.
    """
    if n < 0 or k < 0:
        raise ValueError("ls_explicit: indices must be nonnegative")
    total = Fraction(0)
    for r in range(k + 1):
        term = Fraction(
            (-1) ** (r + k) * (2 * r + 1) * (r * r + r) ** n,
            factorial(r + k + 1) * factorial(k - r),
        )
        total += term
    if total.denominator != 1:
        raise ArithmeticError(f"ls_explicit({n},{k}) is not an integer: {total}")
    return int(total)


def ls_vertical(n: int, j: int) -> int:
    """ls(n,j) by the vertical recurrence.

    Sum over k = j..n of ls(k-1, j-1) (j(j+1))^(n-k); requires 1 <= j <= n.
    """
    if not 1 <= j <= n:
        raise ValueError("ls_vertical: need 1 <= j <= n")
    ratio = j * (j + 1)
    return sum(ls(k - 1, j - 1) * ratio ** (n - k) for k in range(j, n + 1))


def _legendre_basis(k: int) -> Poly:
    # falling_basis at z = 1: product of (x - i(i+1)) over the integers
    out = Poly((1,))
    for i in range(k):
        out = out * Poly((-i * (i + 1), 1))
    return out


def horizontal_identity_ls(n: int) -> CheckResult:
    """Check x^n = sum_k ls(n,k) x(x-2)(x-6)...(x-(k-1)k) by exact expansion."""
    if n < 0:
        raise ValueError("horizontal_identity_ls: n must be nonnegative")
    rhs = Poly()
    for k in range(n + 1):
        rhs = rhs + _legendre_basis(k) * ls(n, k)
    lhs = Poly((0,) * n + (1,))
    if rhs == lhs:
        return CheckResult(True)
    return CheckResult(False, f"n={n}: difference {(rhs - lhs).render()}")


def vertical_gf_check(k: int, order: int) -> CheckResult:
    """Check prod_{r=1..k} 1/(1 - r(r+1)x) = sum_m ls(m+k,k) x^m up to x^order."""
    if k < 1:
        raise ValueError("vertical_gf_check: k must be at least 1")
    prod = series_geom(1, order)
    for r in range(2, k + 1):
        prod = series_mul(prod, series_geom(r, order))
    for m in range(order + 1):
        expected = ls(m + k, k)
        if prod.coeffs[m] != expected:
            return CheckResult(
                False,
                f"k={k}: coefficient of x^{m} is {prod.coeffs[m]}, triangle gives {expected}",
            )
    return CheckResult(True)


def horizontal_identity_js(n: int) -> CheckResult:
    """Check x^n = sum_k js(n,k)(z) prod_{i<k} (x - i(z+i)) over Z[z]."""
    if n < 0:
        raise ValueError("horizontal_identity_js: n must be nonnegative")
    rhs = Poly()
    for k in range(n + 1):
        rhs = rhs + falling_basis(k).scale(js(n, k))
    lhs = Poly((0,) * n + (1,))
    if rhs == lhs:
        return CheckResult(True)
    return CheckResult(False, f"n={n}: difference {(rhs - lhs).render()}")


def jc_defining_product(n: int) -> CheckResult:
    """Check prod_{i<n} (x + i(z+i)) = sum_k jc(n,k)(z) x^k over Z[z]."""
    if n < 0:
        raise ValueError("jc_defining_product: n must be nonnegative")
    lhs = Poly((1,))
    for i in range(n):
        lhs = lhs * Poly((Poly((i * i, i)), 1))
    rhs = Poly(tuple(jc(n, k) for k in range(n + 1)))
    if lhs == rhs:
        return CheckResult(True)
    return CheckResult(False, f"n={n}: difference {(lhs - rhs).render()}")
