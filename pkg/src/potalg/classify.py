"""Rational/elliptic dichotomy for weighted plane curves of low degree.

Given weights 0 < a <= b <= c with gcd 1 and a degree d <= a+b+c, decide
whether the generic curve of degree d in the corresponding weighted
projective plane is elliptic (exactly the three E-type rows) or rational.
The decision tree is a case analysis on the leading powers of z and y;
each rational verdict carries the case label and the reduction that
rationalizes the curve.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

__all__ = ["ClassificationResult", "classify_weights", "enumerate_elliptic", "TABLE"]

#: verdict -> (a, b, c, d, p, q, r, mu)
TABLE = {
    "E6": (1, 1, 1, 3, 3, 3, 3, 8),
    "E7": (1, 1, 2, 4, 4, 4, 2, 9),
    "E8": (1, 2, 3, 6, 6, 3, 2, 10),
}


@dataclass(frozen=True)
class ClassificationResult:
    verdict: str  # "E6" | "E7" | "E8" | "Rational" | "NotApplicable"
    a: int
    b: int
    c: int
    d: int
    p: int | None  # d/a when elliptic
    q: int | None
    r: int | None
    reason: str

    @property
    def elliptic(self) -> bool:
        return self.verdict in ("E6", "E7", "E8")

    @property
    def legs(self) -> tuple | None:
        """Leg lengths (p-1, q-1, r-1) of the extended diagram when elliptic."""
        if not self.elliptic:
            return None
        return (self.p - 1, self.q - 1, self.r - 1)


def _elliptic(verdict, a, b, c, d, reason):
    return ClassificationResult(verdict, a, b, c, d, d // a, d // b, d // c, reason)


def _rational(a, b, c, d, reason):
    return ClassificationResult("Rational", a, b, c, d, None, None, None, reason)


def classify_weights(a: int, b: int, c: int, d: int | None = None) -> ClassificationResult:
    """Decide the generic dichotomy for weights (a, b, c) and degree d.

    d defaults to a + b + c and may not exceed it.  Weight validation
    (ordering, gcd) rejects invalid input outright.
    """
    if not all(isinstance(v, int) for v in (a, b, c)):
        raise TypeError("weights must be integers")
    if not (0 < a <= b <= c):
        raise ValueError(f"need 0 < a <= b <= c, got {(a, b, c)}")
    if gcd(a, gcd(b, c)) != 1:
        raise ValueError(f"weights must have gcd 1, got {(a, b, c)}")
    if d is None:
        d = a + b + c
    if d > a + b + c:
        raise ValueError(f"degree {d} exceeds a+b+c = {a + b + c}")
    if d <= 0:
        return ClassificationResult("NotApplicable", a, b, c, d, None, None, None,
                                    "no curve in degree <= 0")

    if a == b == c:  # gcd forces (1, 1, 1)
        if d == 3:
            return _elliptic("E6", a, b, c, d, "equal weights, smooth plane cubic")
        return _rational(a, b, c, d, f"equal weights, degree {d} < 3 curve")

    # Weights unequal: z can appear to power at most 2 (3c <= d would force
    # equal weights), and power <= 1 makes the curve a rational graph.
    if 2 * c > d:
        return _rational(a, b, c, d, "leading power of z is at most 1")

    if b == c:  # case 1: a < b = c
        return _rational(
            a, b, c, d,
            "case 1 (a < b = c): the quadratic in (y, z) diagonalizes, z becomes linear",
        )

    if a == b:  # case 2a: a = b < c, z^2 present
        if (2 * c) % a:
            return _rational(a, b, c, d, "case 2a (a = b): no monomial complements z^2")
        n = (2 * c) // a  # ordinary degree of g in z^2 = g(x, y)
        if n == 4:
            # c = 2a with gcd 1 forces (1, 1, 2), and 2c <= d <= a+b+c pins d = 4
            return _elliptic("E7", a, b, c, d, "case 2a (a = b, quartic double cover)")
        if n == 3:
            return _rational(
                a, b, c, d,
                "case 2a (a = b): cubic double cover, rationalized by z -> -z (the (2,2,3) case)",
            )
        return _rational(a, b, c, d, f"case 2a (a = b): double cover of degree {n} < 3")

    # case 2b: a < b < c, z^2 present; nonrational needs the pure y^3 term
    if 2 * c != 3 * b:
        return _rational(a, b, c, d, "case 2b (a < b < c): y^3 absent from z^2 = g(x, y)")
    if b == 2 * a:
        # 2c = 3b and b = 2a with gcd 1 force (1, 2, 3), and d is pinned to 6
        return _elliptic("E8", a, b, c, d, "case 2b (b = 2a, degree-6 double cover)")
    # b < 2a here (2c <= d <= a+b+c bounds b <= 2a)
    if (2 * b) % a == 0:
        return _rational(
            a, b, c, d,
            "case 2b: z^2 = y^3 + x^k*y, rationalized by z -> -z (the (4,6,9) case)",
        )
    if (3 * b) % a == 0:
        p = (3 * b) // a
        if p == 4:
            return _rational(
                a, b, c, d,
                "case 2b: z^2 = y^3 + x^4, rationalized by a cube root of unity on y "
                "(the (3,4,6) case)",
            )
        return _rational(
            a, b, c, d,
            f"case 2b: z^2 = y^3 + x^{p}, rationalized by z -> -z (the (6,2p,3p) case)",
        )
    return _rational(a, b, c, d, "case 2b: z^2 = y^3 is cuspidal")


def enumerate_elliptic(bound: int) -> list:
    """All weight triples with c <= bound whose generic top-degree curve is
    elliptic.  Exhaustiveness of the case analysis makes this the three
    table rows for every bound >= 3."""
    if bound < 3:
        raise ValueError("bound must be at least 3")
    out = []
    for c in range(1, bound + 1):
        for b in range(1, c + 1):
            for a in range(1, b + 1):
                if gcd(a, gcd(b, c)) != 1:
                    continue
                if classify_weights(a, b, c).elliptic:
                    out.append((a, b, c))
    return out
