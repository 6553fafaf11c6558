"""Closed-form Hilbert series and dimension formulas.

Univariate polynomial arithmetic is exact; series are truncated at an
explicit cap and represented with an explicit minimal degree so negative
powers are first-class.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .ncalg import WeightSystem

__all__ = [
    "LaurentSeries",
    "SaitoFunction",
    "saito",
    "hh_series",
    "hh2_nonpositive_dim",
    "ph_Bphi_dims",
    "ph_Aphi_ranks",
    "product_series",
    "one_minus_power_series",
    "milnor_formula",
]


def product_series(weights, N: int) -> list:
    """Coefficients up to degree N of prod_i 1/(1 - u^{w_i})."""
    coeffs = [1] + [0] * N
    for w in weights:
        for m in range(w, N + 1):
            coeffs[m] += coeffs[m - w]
    return coeffs


def one_minus_power_series(weights, k: int, N: int) -> list:
    """Coefficients up to N of (1 - u^k) * prod_i 1/(1 - u^{w_i})."""
    base = product_series(weights, N)
    return [base[m] - (base[m - k] if m >= k else 0) for m in range(N + 1)]


def _poly_mul(f, g):
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[i + j] += a * b
    return out


def _poly_divmod(num, den):
    """Exact division with remainder over the rationals (ascending coeffs)."""
    num = [Fraction(c) for c in num]
    den = [Fraction(c) for c in den]
    while den and not den[-1]:
        den.pop()
    if not den:
        raise ZeroDivisionError("zero denominator polynomial")
    deg_d = len(den) - 1
    quot = [Fraction(0)] * max(1, len(num) - deg_d)
    rem = list(num)
    for i in range(len(rem) - 1, deg_d - 1, -1):
        if rem[i]:
            q = rem[i] / den[-1]
            quot[i - deg_d] = q
            for j in range(deg_d + 1):
                rem[i - deg_d + j] -= q * den[j]
    while rem and not rem[-1]:
        rem.pop()
    while len(quot) > 1 and not quot[-1]:
        quot.pop()
    return quot, rem


def _u_power_minus_one(k: int) -> list:
    out = [0] * (k + 1)
    out[0] = -1
    out[k] = 1
    return out


def milnor_formula(ws: WeightSystem) -> Fraction:
    d = ws.d
    return Fraction((d - ws.a) * (d - ws.b) * (d - ws.c), ws.a * ws.b * ws.c)


@dataclass(frozen=True)
class SaitoFunction:
    """The rational function ((u^{d-a}-1)(u^{d-b}-1)(u^{d-c}-1)) / ((u^a-1)(u^b-1)(u^c-1))."""

    a: int
    b: int
    c: int
    d: int
    numerator: tuple
    denominator: tuple
    is_polynomial: bool
    quotient: tuple | None  # integer coefficients, ascending, when polynomial

    @property
    def mu(self) -> Fraction:
        """Value at u = 1, computed from the weight data."""
        return Fraction(
            (self.d - self.a) * (self.d - self.b) * (self.d - self.c),
            self.a * self.b * self.c,
        )

    def quotient_at_one(self) -> int | None:
        return sum(self.quotient) if self.quotient is not None else None


def saito(a: int, b: int, c: int, d: int) -> SaitoFunction:
    """Exact polynomiality verdict for the graded dimension series.

    When the quotient exists, its coefficients are the generic graded
    dimensions of the ring cut out by the three partial derivatives, its
    value at 1 is the total dimension, and that value always matches the
    closed-form count (d-a)(d-b)(d-c)/(abc).
    """
    if not (0 < a <= b <= c < d):
        raise ValueError(f"need 0 < a <= b <= c < d, got {(a, b, c, d)}")
    if gcd(gcd(a, b), gcd(c, d)) != 1:
        raise ValueError(f"need gcd(a,b,c,d) = 1, got {(a, b, c, d)}")
    num = _poly_mul(
        _poly_mul(_u_power_minus_one(d - a), _u_power_minus_one(d - b)),
        _u_power_minus_one(d - c),
    )
    den = _poly_mul(
        _poly_mul(_u_power_minus_one(a), _u_power_minus_one(b)), _u_power_minus_one(c)
    )
    quot, rem = _poly_divmod(num, den)
    is_poly = not rem
    quotient = None
    if is_poly:
        if any(q.denominator != 1 for q in quot):
            raise ArithmeticError("polynomial quotient with non-integer coefficients")
        quotient = tuple(int(q) for q in quot)
        expected_mu = Fraction((d - a) * (d - b) * (d - c), a * b * c)
        if sum(quotient) != expected_mu:
            raise ArithmeticError(
                f"quotient value at 1 is {sum(quotient)}, expected {expected_mu}"
            )
    return SaitoFunction(a, b, c, d, tuple(num), tuple(den), is_poly, quotient)


@dataclass(frozen=True)
class LaurentSeries:
    """Exact coefficients on degrees min_degree..cap."""

    min_degree: int
    cap: int
    coeffs: tuple  # coeffs[i] is the coefficient of u^(min_degree + i)

    def __post_init__(self):
        if len(self.coeffs) != self.cap - self.min_degree + 1:
            raise ValueError("coefficient list does not match the degree window")

    def coeff(self, m: int):
        if m < self.min_degree:
            return 0
        if m > self.cap:
            raise ValueError(f"degree {m} beyond truncation cap {self.cap}")
        return self.coeffs[m - self.min_degree]

    def window(self, lo: int, hi: int) -> list:
        return [self.coeff(m) for m in range(lo, hi + 1)]

    def sum_up_to(self, m: int):
        return sum(self.coeff(k) for k in range(self.min_degree, m + 1))


def _geometric(step: int, N: int) -> list:
    """Coefficients of 1/(1 - u^step) up to degree N."""
    return [1 if m % step == 0 else 0 for m in range(N + 1)]


def _chi(ws: WeightSystem) -> tuple:
    sf = saito(ws.a, ws.b, ws.c, ws.d)
    if not sf.is_polynomial:
        raise ValueError(
            f"the dimension series for weights {ws.weights}, degree {ws.d} is not a polynomial"
        )
    return sf.quotient


def hh_series(k: int, ws: WeightSystem, cap: int | None = None) -> LaurentSeries:
    """Hilbert series of the k-th cohomology of the graded deformed algebra.

    k = 0, 1: 1/(1-u^d).
    k = 2:    u^{-d} * (chi(u)/(1-u^d) - 1).
    k = 3:    u^{-d} * chi(u)/(1-u^d).
    chi is the polynomial quotient of `saito`; non-polynomial chi is
    rejected.
    """
    if k not in (0, 1, 2, 3):
        raise ValueError("k must be one of 0, 1, 2, 3")
    d = ws.d
    if cap is None:
        cap = 3 * d
    if k in (0, 1):
        return LaurentSeries(0, cap, tuple(_geometric(d, cap)))
    chi = _chi(ws)
    upper = cap + d
    f = [0] * (upper + 1)
    for i, a in enumerate(chi):
        if a:
            for m in range(i, upper + 1, d):
                f[m] += a
    if k == 2:
        f[0] -= 1
    return LaurentSeries(-d, cap, tuple(f))


def hh2_nonpositive_dim(ws: WeightSystem) -> int:
    """Total dimension in degrees <= 0 of the k = 2 series; equals mu."""
    return int(hh_series(2, ws, cap=max(0, ws.d)).sum_up_to(0))


def ph_Bphi_dims(ws: WeightSystem, k_max: int = 4, jacobi_dims=None) -> list:
    """Cohomology dimensions of the hypersurface Poisson algebra.

    Pattern: [1, j, j + mu, mu, mu, ...] where j is the graded dimension of
    the derivative-quotient ring in degree varpi = d - a - b - c and mu its
    total dimension.  `jacobi_dims` may supply the graded dimensions
    explicitly (a computed list); otherwise the generic values from the
    polynomial quotient of `saito` are used.
    """
    if jacobi_dims is None:
        jacobi_dims = _chi(ws)
    varpi = ws.varpi
    mu = sum(jacobi_dims)
    j = jacobi_dims[varpi] if 0 <= varpi < len(jacobi_dims) else 0
    out = []
    for k in range(k_max + 1):
        if k == 0:
            out.append(1)
        elif k == 1:
            out.append(j)
        elif k == 2:
            out.append(j + mu)
        else:
            out.append(mu)
    return out


def ph_Aphi_ranks(ws: WeightSystem) -> tuple:
    """Ranks (degrees 0..3) of the ambient Poisson cohomology as free modules
    over the Casimir polynomial subring: (1, 1, mu, mu), zero above degree 3."""
    mu = milnor_formula(ws)
    if mu.denominator != 1:
        raise ValueError(f"non-integral dimension count {mu} for {ws}")
    return (1, 1, int(mu), int(mu))
