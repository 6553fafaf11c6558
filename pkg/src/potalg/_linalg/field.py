"""Coefficient fields for the sparse echelon engine.

Two fields are used: exact rationals (gmpy2.mpq when available, else
fractions.Fraction; both are exact, gmpy2 is just faster) and prime
fields GF(p) on canonical representatives 0..p-1.
"""

from __future__ import annotations

from fractions import Fraction

try:
    from gmpy2 import mpq as _mpq

    _HAVE_GMPY2 = True
except ImportError:  # pragma: no cover - environment without gmpy2
    _mpq = None
    _HAVE_GMPY2 = False

__all__ = ["QQ", "GFp", "HAVE_GMPY2"]

HAVE_GMPY2 = _HAVE_GMPY2


class _RationalField:
    """Exact rational arithmetic behind a uniform field interface."""

    name = "QQ"

    def __init__(self):
        self._make = _mpq if _HAVE_GMPY2 else Fraction

    def coerce(self, value):
        if isinstance(value, int):
            return self._make(value)
        num = getattr(value, "numerator", None)
        if num is None:
            raise TypeError(f"not a rational: {value!r}")
        return self._make(int(num), int(value.denominator))

    @staticmethod
    def sub_mul(a, c, b):
        """a - c*b."""
        return a - c * b

    @staticmethod
    def mul(a, b):
        return a * b

    def inv(self, a):
        return self._make(1) / a

    @staticmethod
    def neg(a):
        return -a

    @staticmethod
    def to_fraction(a) -> Fraction:
        return Fraction(int(a.numerator), int(a.denominator))


QQ = _RationalField()


class GFp:
    """GF(p); elements are plain ints in [0, p)."""

    def __init__(self, p: int):
        self.p = p
        self.name = f"GF({p})"

    def coerce(self, value):
        p = self.p
        if isinstance(value, int):
            return value % p
        num = getattr(value, "numerator", None)
        if num is None:
            raise TypeError(f"not a rational: {value!r}")
        den = int(value.denominator) % p
        if den == 0:
            raise ZeroDivisionError(f"denominator of {value} vanishes mod {p}")
        return int(num) % p * pow(den, -1, p) % p

    def sub_mul(self, a, c, b):
        return (a - c * b) % self.p

    def mul(self, a, b):
        return a * b % self.p

    def inv(self, a):
        return pow(a, -1, self.p)

    def neg(self, a):
        return -a % self.p
