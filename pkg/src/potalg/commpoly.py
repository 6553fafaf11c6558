"""Exact commutative polynomials with a fixed finite variable list.

The default ring is C[x, y, z] (exponent triples), which is what the
Poisson and series layers use.  The number of variables is not hardwired,
so the matrix-factorization module can work in six variables when checking
identities symbolically.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping

from .ncalg import Rat, WeightSystem, as_fraction

__all__ = ["CommPoly", "comm_variables"]


class CommPoly:
    """Finite map from exponent tuples to nonzero Fraction coefficients."""

    __slots__ = ("_terms", "_nvars")

    def __init__(self, terms=(), nvars: int = 3):
        data = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for expo, coeff in items:
            expo = tuple(int(e) for e in expo)
            if len(expo) != nvars:
                raise ValueError(f"exponent {expo} has {len(expo)} entries, expected {nvars}")
            if any(e < 0 for e in expo):
                raise ValueError(f"negative exponent in {expo}")
            coeff = as_fraction(coeff)
            if coeff:
                new = data.get(expo, 0) + coeff
                if new:
                    data[expo] = new
                else:
                    data.pop(expo, None)
        self._terms = data
        self._nvars = nvars

    # -- constructors --------------------------------------------------
    @classmethod
    def zero(cls, nvars: int = 3) -> "CommPoly":
        return cls(nvars=nvars)

    @classmethod
    def scalar(cls, coeff: Rat, nvars: int = 3) -> "CommPoly":
        return cls({(0,) * nvars: coeff}, nvars=nvars)

    @classmethod
    def one(cls, nvars: int = 3) -> "CommPoly":
        return cls.scalar(1, nvars)

    @classmethod
    def variable(cls, i: int, nvars: int = 3) -> "CommPoly":
        expo = [0] * nvars
        expo[i] = 1
        return cls({tuple(expo): 1}, nvars=nvars)

    @classmethod
    def monomial(cls, expo, coeff: Rat = 1) -> "CommPoly":
        expo = tuple(int(e) for e in expo)
        return cls({expo: coeff}, nvars=len(expo))

    # -- access ----------------------------------------------------------
    @property
    def nvars(self) -> int:
        return self._nvars

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def coeff(self, expo) -> Fraction:
        return self._terms.get(tuple(expo), Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    def total_degree(self) -> int:
        if not self._terms:
            return -1
        return max(sum(e) for e in self._terms)

    def weighted_degree(self, ws: WeightSystem) -> int:
        """Top degree for deg x = a, deg y = b, deg z = c (3 variables only)."""
        self._require3()
        if not self._terms:
            return -1
        return max(e[0] * ws.a + e[1] * ws.b + e[2] * ws.c for e in self._terms)

    def is_weighted_homogeneous(self, ws: WeightSystem) -> bool:
        self._require3()
        degs = {e[0] * ws.a + e[1] * ws.b + e[2] * ws.c for e in self._terms}
        return len(degs) <= 1

    def weighted_part(self, ws: WeightSystem, m: int) -> "CommPoly":
        self._require3()
        return CommPoly(
            {e: c for e, c in self._terms.items() if e[0] * ws.a + e[1] * ws.b + e[2] * ws.c == m}
        )

    def _require3(self):
        if self._nvars != 3:
            raise ValueError("operation defined only on C[x, y, z]")

    # -- arithmetic --------------------------------------------------------
    def _check_ring(self, other: "CommPoly"):
        if self._nvars != other._nvars:
            raise ValueError("mixed variable counts")

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        self._check_ring(other)
        data = dict(self._terms)
        for e, c in other._terms.items():
            new = data.get(e, 0) + c
            if new:
                data[e] = new
            else:
                data.pop(e, None)
        return self._wrap(data)

    __radd__ = __add__

    def __neg__(self):
        return self._wrap({e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return self._coerce(other) + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, CommPoly):
            return NotImplemented
        self._check_ring(other)
        data = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                new = data.get(e, 0) + c1 * c2
                if new:
                    data[e] = new
                else:
                    data.pop(e, None)
        return self._wrap(data)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def scale(self, coeff: Rat) -> "CommPoly":
        coeff = as_fraction(coeff)
        if not coeff:
            return CommPoly.zero(self._nvars)
        return self._wrap({e: c * coeff for e, c in self._terms.items()})

    def __truediv__(self, other):
        return self.scale(Fraction(1) / as_fraction(other))

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("only nonnegative integer powers")
        out = CommPoly.one(self._nvars)
        for _ in range(n):
            out = out * self
        return out

    def diff(self, i: int) -> "CommPoly":
        """Partial derivative with respect to variable i."""
        data = {}
        for e, c in self._terms.items():
            if e[i]:
                e2 = list(e)
                e2[i] -= 1
                data[tuple(e2)] = c * e[i]
        return self._wrap(data)

    def subs(self, values) -> Fraction:
        """Evaluate at a full point (one exact rational per variable)."""
        values = [as_fraction(v) for v in values]
        if len(values) != self._nvars:
            raise ValueError("wrong number of values")
        total = Fraction(0)
        for e, c in self._terms.items():
            term = c
            for v, k in zip(values, e):
                term *= v**k
            total += term
        return total

    def _wrap(self, data: dict) -> "CommPoly":
        out = CommPoly.__new__(CommPoly)
        out._terms = data
        out._nvars = self._nvars
        return out

    def _coerce(self, value):
        if isinstance(value, CommPoly):
            return value
        if isinstance(value, (int, Fraction)):
            return CommPoly.scalar(value, self._nvars)
        return NotImplemented

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self._nvars == other._nvars and self._terms == other._terms

    def __hash__(self):
        return hash((self._nvars, frozenset(self._terms.items())))

    def __bool__(self):
        return bool(self._terms)

    def __repr__(self):
        if not self._terms:
            return "0"
        names = "xyz" if self._nvars == 3 else [f"v{i}" for i in range(self._nvars)]
        bits = []
        for e in sorted(self._terms, key=lambda e: (sum(e), e)):
            c = self._terms[e]
            mono = "*".join(
                f"{names[i]}" + (f"^{k}" if k > 1 else "") for i, k in enumerate(e) if k
            )
            if not mono:
                bits.append(str(c))
            elif c == 1:
                bits.append(mono)
            elif c == -1:
                bits.append(f"-{mono}")
            else:
                bits.append(f"{c}*{mono}")
        return " + ".join(bits).replace("+ -", "- ")


def comm_variables(nvars: int = 3) -> list:
    return [CommPoly.variable(i, nvars) for i in range(nvars)]
