"""Exact arithmetic substrate: binomials, dense polynomials, truncated series.

Everything in this module is exact.  Integers are Python ints, rationals are
`fractions.Fraction` (always reduced, positive denominator), and there is no
floating point anywhere.  `Poly` is a dense univariate polynomial whose
coefficients may be ints, Fractions, or again `Poly` values; the nested form
gives polynomials in x over Z[z], which is all the bivariate structure the
rest of the package needs.
"""
from __future__ import annotations

from fractions import Fraction
from itertools import zip_longest
from math import comb


class _MinusInfinity:
    """Degree of the zero polynomial.  Compares below every integer."""

    __slots__ = ()

    def __lt__(self, other):
        return not isinstance(other, _MinusInfinity)

    def __le__(self, other):
        return True

    def __gt__(self, other):
        return False

    def __ge__(self, other):
        return isinstance(other, _MinusInfinity)

    def __eq__(self, other):
        return isinstance(other, _MinusInfinity)

    def __hash__(self):
        return hash("lstirling.NEG_INF")

    def __repr__(self):
        return "-oo"


NEG_INF = _MinusInfinity()


def binomial(n: int, k: int) -> int:
    """Binomial coefficient C(n, k) = n(n-1)...(n-k+1) / k! for any integer n.

    The upper argument may be negative, following
    C(-m, k) = (-1)^k C(m+k-1, k).  The lower argument must be >= 0.

    >>> binomial(5, 3)
    10
    >>> binomial(-2, 3)
    -4
    >>> binomial(2, 5)
    0
    """
    if k < 0:
        raise ValueError(f"binomial: lower index must be nonnegative, got {k}")
    if n >= 0:
        return comb(n, k)
    return (-1) ** k * comb(k - n - 1, k)


def _is_zero_coeff(c) -> bool:
    return c.is_zero() if isinstance(c, Poly) else c == 0


class Poly:
    """Dense polynomial, constant coefficient first, trailing zeros trimmed.

    The zero polynomial is the empty coefficient tuple and its degree is the
    NEG_INF marker, never a plain integer.  Arithmetic works for any
    coefficient ring closed under + and *: ints, Fractions, or Poly itself.

    >>> p = Poly([-1, 0, 1])
    >>> p.render()
    '-1+x^2'
    >>> p.eval(3)
    8
    >>> (Poly([0, 1]) * Poly([0, 1])).degree
    2
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = list(coeffs)
        while cs and _is_zero_coeff(cs[-1]):
            cs.pop()
        self.coeffs = tuple(cs)

    # -- structure ---------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self):
        """Degree of the polynomial; NEG_INF for the zero polynomial."""
        return NEG_INF if not self.coeffs else len(self.coeffs) - 1

    def leading(self):
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def coefficient(self, i: int):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    # -- ring operations ---------------------------------------------------

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Poly((other,))
        if not isinstance(other, Poly):
            return NotImplemented
        return Poly(a + b for a, b in zip_longest(self.coeffs, other.coeffs, fillvalue=0))

    __radd__ = __add__

    def __neg__(self):
        return Poly(-c for c in self.coeffs)

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Poly((other,))
        if not isinstance(other, Poly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Poly(c * other for c in self.coeffs)
        if not isinstance(other, Poly):
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return Poly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if _is_zero_coeff(a):
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power of a polynomial")
        out, base = Poly((1,)), self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def scale(self, c):
        """Multiply every coefficient by c.

        This is scalar multiplication in the coefficient ring; use it when c
        lives one level down (e.g. a z-polynomial scaling a poly in x).
        """
        return Poly(co * c for co in self.coeffs)

    # -- euclidean division (field coefficients) ----------------------------

    def __divmod__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        lead_inv = Fraction(1, 1) / other.coeffs[-1]
        rem = list(self.coeffs)
        d = len(other.coeffs)
        quo = [Fraction(0)] * max(0, len(rem) - d + 1)
        while True:
            while rem and _is_zero_coeff(rem[-1]):
                rem.pop()
            if len(rem) < d:
                break
            t = rem[-1] * lead_inv
            shift = len(rem) - d
            quo[shift] = t
            for i, c in enumerate(other.coeffs):
                rem[shift + i] = rem[shift + i] - t * c
            rem.pop()
        return Poly(quo), Poly(rem)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    # -- calculus and evaluation --------------------------------------------

    def derivative(self) -> "Poly":
        return Poly(i * c for i, c in enumerate(self.coeffs) if i >= 1)

    def eval(self, point):
        """Evaluate by Horner's rule; exact for int/Fraction points."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * point + c
        return acc

    __call__ = eval

    def map_coeffs(self, f) -> "Poly":
        return Poly(f(c) for c in self.coeffs)

    def to_fractions(self) -> "Poly":
        return self.map_coeffs(Fraction)

    def monic(self) -> "Poly":
        if self.is_zero():
            return self
        inv = Fraction(1, 1) / self.coeffs[-1]
        return Poly(c * inv for c in self.coeffs)

    # -- comparison and display ----------------------------------------------

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, Poly)):
            return (self - other).is_zero()
        return NotImplemented

    def render(self, var: str = "x", inner_var: str = "z") -> str:
        """Human-readable form, ascending powers: '1+8x+10x^2'."""
        if self.is_zero():
            return "0"
        parts = []
        for e, c in enumerate(self.coeffs):
            if _is_zero_coeff(c):
                continue
            if isinstance(c, Poly):
                cs = f"({c.render(inner_var)})"
            elif c == 1 and e > 0:
                cs = ""
            elif c == -1 and e > 0:
                cs = "-"
            else:
                cs = str(c)
            if e == 0:
                parts.append(str(c) if not isinstance(c, Poly) else cs)
            elif e == 1:
                parts.append(f"{cs}{var}")
            else:
                parts.append(f"{cs}{var}^{e}")
        return "+".join(parts).replace("+-", "-")

    def __repr__(self):
        return f"Poly('{self.render()}')"


X = Poly((0, 1))


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic gcd by Euclid's algorithm over Fraction coefficients."""
    a, b = a.to_fractions(), b.to_fractions()
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def falling_basis(k: int) -> Poly:
    """Product of (x - i(z+i)) for i = 0..k-1, as a poly in x over Z[z].

    Coefficients of the result are Poly values in z.  k = 0 gives 1.
    Specializing z to 1 yields the basis used by the Legendre-Stirling
    horizontal identity, x(x-2)(x-6)...

    >>> falling_basis(2) == Poly((Poly(()), Poly((-1, -1)), 1))
    True
    """
    if k < 0:
        raise ValueError("falling_basis: k must be nonnegative")
    out = Poly((1,))
    for i in range(k):
        out = out * Poly((Poly((-i * i, -i)), 1))
    return out


class Series:
    """Power series truncated at a fixed order N: exactly N+1 coefficients.

    Coefficients are stored as Fractions.  Multiplication keeps the same
    truncation order; operands must agree on it.
    """

    __slots__ = ("coeffs", "order")

    def __init__(self, coeffs, order: int):
        if order < 0:
            raise ValueError("Series: order must be nonnegative")
        cs = [Fraction(c) for c in list(coeffs)[: order + 1]]
        cs.extend(Fraction(0) for _ in range(order + 1 - len(cs)))
        self.coeffs = tuple(cs)
        self.order = order

    def __eq__(self, other):
        if not isinstance(other, Series):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __repr__(self):
        return f"Series({list(self.coeffs)!r}, order={self.order})"


def series_geom(r: int, order: int) -> Series:
    """Truncation of 1/(1 - r(r+1)x): coefficients (r(r+1))^j.

    >>> series_geom(1, 3).coeffs == (1, 2, 4, 8)
    True
    """
    ratio = r * (r + 1)
    return Series((ratio ** j for j in range(order + 1)), order)


def series_mul(a: Series, b: Series) -> Series:
    """Product truncated at the common order."""
    if a.order != b.order:
        raise ValueError("series_mul: operands must share the truncation order")
    n = a.order
    out = [Fraction(0)] * (n + 1)
    for i, ca in enumerate(a.coeffs):
        if ca == 0:
            continue
        for j in range(n + 1 - i):
            out[i + j] += ca * b.coeffs[j]
    return Series(out, n)
