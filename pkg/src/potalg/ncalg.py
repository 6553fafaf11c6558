"""Free-algebra arithmetic on three weighted generators x, y, z.

Everything here is exact: coefficients are `fractions.Fraction`, words are
tuples of letter indices, and all operations are pure functions of their
inputs.  This module provides words, noncommutative polynomials, cyclic
words, potentials with their cyclic partial derivatives, abelianization,
and the constructors for the standard potential family used throughout
the package.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Iterator, Mapping, Sequence, Union

__all__ = [
    "LETTERS",
    "X",
    "Y",
    "Z",
    "Word",
    "WeightSystem",
    "NCPoly",
    "CyclicWord",
    "Potential",
    "ParameterSet",
    "Rat",
    "as_fraction",
    "weighted_degree",
    "cyclic_derivative",
    "abelianize",
    "make_PQR",
    "make_standard_potential",
    "word_count",
    "words_of_degree",
    "words_up_to",
]

LETTERS = "xyz"

Word = tuple  # tuple of letter indices in {0, 1, 2}
Rat = Union[int, Fraction]


def as_fraction(value) -> Fraction:
    """Coerce an int, Fraction or rational string like '3/7' to Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value)
    # gmpy2.mpq and similar expose numerator/denominator
    num = getattr(value, "numerator", None)
    den = getattr(value, "denominator", None)
    if num is not None and den is not None:
        return Fraction(int(num), int(den))
    raise TypeError(f"not an exact rational: {value!r}")


def letter_index(letter) -> int:
    if isinstance(letter, int):
        if letter not in (0, 1, 2):
            raise ValueError(f"letter index out of range: {letter}")
        return letter
    idx = LETTERS.find(letter)
    if idx < 0:
        raise ValueError(f"unknown letter {letter!r}; alphabet is x, y, z")
    return idx


X, Y, Z = 0, 1, 2


@dataclass(frozen=True)
class WeightSystem:
    """Positive integer weights for x, y, z with gcd 1.

    `d` is the distinguished total degree (defaults to a+b+c) and
    `varpi = d - a - b - c` the associated index.
    """

    a: int
    b: int
    c: int
    d: int = None  # type: ignore[assignment]

    def __post_init__(self):
        if not (isinstance(self.a, int) and isinstance(self.b, int) and isinstance(self.c, int)):
            raise TypeError("weights must be integers")
        if not (0 < self.a <= self.b <= self.c):
            raise ValueError(f"weights must satisfy 0 < a <= b <= c, got {(self.a, self.b, self.c)}")
        if math.gcd(self.a, math.gcd(self.b, self.c)) != 1:
            raise ValueError(f"weights must have gcd 1, got {(self.a, self.b, self.c)}")
        if self.d is None:
            object.__setattr__(self, "d", self.a + self.b + self.c)
        elif not isinstance(self.d, int) or self.d <= 0:
            raise ValueError(f"total degree must be a positive integer, got {self.d}")

    @property
    def weights(self) -> tuple:
        return (self.a, self.b, self.c)

    @property
    def varpi(self) -> int:
        return self.d - self.a - self.b - self.c

    def degree(self, word: Word) -> int:
        w = self.weights
        return sum(w[i] for i in word)

    def deglex_key(self, word: Word):
        """Sort key: weighted degree first, then letterwise comparison."""
        return (self.degree(word), word)

    def exponents(self) -> tuple:
        """(p, q, r) = (d/a, d/b, d/c); raises if not integral."""
        if self.d % self.a or self.d % self.b or self.d % self.c:
            raise ValueError(
                f"degree {self.d} is not divisible by each weight {self.weights}; "
                "no monic exponent triple exists"
            )
        return (self.d // self.a, self.d // self.b, self.d // self.c)


#: The three standard weight systems, keyed by type label.
STANDARD_WEIGHTS = {
    "E6": WeightSystem(1, 1, 1),
    "E7": WeightSystem(1, 1, 2),
    "E8": WeightSystem(1, 2, 3),
}


def weighted_degree(word: Word, ws: WeightSystem) -> int:
    """Sum of letter weights of `word` (the empty word has degree 0)."""
    return ws.degree(tuple(letter_index(l) for l in word))


def word_to_str(word: Word) -> str:
    if not word:
        return "1"
    out = []
    i = 0
    while i < len(word):
        j = i
        while j < len(word) and word[j] == word[i]:
            j += 1
        out.append(LETTERS[word[i]] + (f"^{j - i}" if j - i > 1 else ""))
        i = j
    return "*".join(out)


class NCPoly:
    """A noncommutative polynomial: finite map word -> nonzero Fraction."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Word, Rat] | Iterable = ()):
        data = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for word, coeff in items:
            word = tuple(letter_index(l) for l in word)
            coeff = as_fraction(coeff)
            if coeff:
                new = data.get(word, 0) + coeff
                if new:
                    data[word] = new
                else:
                    data.pop(word, None)
        self._terms = data

    # -- constructors ------------------------------------------------
    @classmethod
    def zero(cls) -> "NCPoly":
        return cls()

    @classmethod
    def one(cls) -> "NCPoly":
        return cls({(): 1})

    @classmethod
    def monomial(cls, word, coeff: Rat = 1) -> "NCPoly":
        return cls({tuple(letter_index(l) for l in word): coeff})

    @classmethod
    def variable(cls, letter) -> "NCPoly":
        return cls.monomial((letter_index(letter),))

    @classmethod
    def scalar(cls, coeff: Rat) -> "NCPoly":
        return cls({(): coeff})

    # -- access ------------------------------------------------------
    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def coeff(self, word) -> Fraction:
        return self._terms.get(tuple(letter_index(l) for l in word), Fraction(0))

    def support(self):
        return set(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def degree(self, ws: WeightSystem) -> int:
        """Top weighted degree; the zero polynomial has degree -1 by convention."""
        if not self._terms:
            return -1
        return max(ws.degree(w) for w in self._terms)

    def is_homogeneous(self, ws: WeightSystem) -> bool:
        degs = {ws.degree(w) for w in self._terms}
        return len(degs) <= 1

    def homogeneous_part(self, ws: WeightSystem, m: int) -> "NCPoly":
        return NCPoly({w: c for w, c in self._terms.items() if ws.degree(w) == m})

    def leading_part(self, ws: WeightSystem) -> "NCPoly":
        return self.homogeneous_part(ws, self.degree(ws))

    # -- arithmetic ----------------------------------------------------
    def __add__(self, other):
        other = _coerce_nc(other)
        if other is NotImplemented:
            return NotImplemented
        data = dict(self._terms)
        for w, c in other._terms.items():
            new = data.get(w, 0) + c
            if new:
                data[w] = new
            else:
                data.pop(w, None)
        out = NCPoly.__new__(NCPoly)
        out._terms = data
        return out

    __radd__ = __add__

    def __neg__(self):
        out = NCPoly.__new__(NCPoly)
        out._terms = {w: -c for w, c in self._terms.items()}
        return out

    def __sub__(self, other):
        other = _coerce_nc(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return _coerce_nc(other) + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, NCPoly):
            return NotImplemented
        data = {}
        for w1, c1 in self._terms.items():
            for w2, c2 in other._terms.items():
                w = w1 + w2
                new = data.get(w, 0) + c1 * c2
                if new:
                    data[w] = new
                else:
                    data.pop(w, None)
        out = NCPoly.__new__(NCPoly)
        out._terms = data
        return out

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def scale(self, coeff: Rat) -> "NCPoly":
        coeff = as_fraction(coeff)
        if not coeff:
            return NCPoly.zero()
        out = NCPoly.__new__(NCPoly)
        out._terms = {w: c * coeff for w, c in self._terms.items()}
        return out

    def __truediv__(self, other):
        return self.scale(Fraction(1) / as_fraction(other))

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("only nonnegative integer powers")
        out = NCPoly.one()
        for _ in range(n):
            out = out * self
        return out

    def commutator(self, other: "NCPoly") -> "NCPoly":
        return self * other - other * self

    # -- comparisons / misc -------------------------------------------
    def __eq__(self, other):
        other = _coerce_nc(other)
        if other is NotImplemented:
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __bool__(self):
        return bool(self._terms)

    def __repr__(self):
        if not self._terms:
            return "0"
        bits = []
        for w in sorted(self._terms, key=lambda w: (len(w), w)):
            c = self._terms[w]
            cs = str(c)
            if w:
                cs = "" if c == 1 else ("-" if c == -1 else f"{c}*")
                bits.append(f"{cs}{word_to_str(w)}")
            else:
                bits.append(cs)
        s = " + ".join(bits).replace("+ -", "- ")
        return s


def _coerce_nc(value):
    if isinstance(value, NCPoly):
        return value
    if isinstance(value, (int, Fraction)):
        return NCPoly.scalar(value)
    return NotImplemented


def _min_rotation(word: Word) -> Word:
    return min(word[i:] + word[:i] for i in range(len(word))) if word else word


@dataclass(frozen=True)
class CyclicWord:
    """A word up to rotation, stored as the lexicographically minimal rotation."""

    representative: Word

    def __init__(self, word):
        word = tuple(letter_index(l) for l in word)
        object.__setattr__(self, "representative", _min_rotation(word))

    def __len__(self):
        return len(self.representative)

    def degree(self, ws: WeightSystem) -> int:
        return ws.degree(self.representative)

    def rotations(self) -> set:
        w = self.representative
        return {w[i:] + w[:i] for i in range(len(w))} if w else {w}

    def __repr__(self):
        return f"({word_to_str(self.representative)})"


class Potential:
    """A linear combination of cyclic words (the commutator quotient of NCPoly).

    The projection NCPoly -> Potential identifies uv with vu for all words
    u, v; consequently a potential keeps one coefficient per cyclic word.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms=()):
        data = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for cw, coeff in items:
            if not isinstance(cw, CyclicWord):
                cw = CyclicWord(cw)
            coeff = as_fraction(coeff)
            if coeff:
                new = data.get(cw, 0) + coeff
                if new:
                    data[cw] = new
                else:
                    data.pop(cw, None)
        self._terms = data

    @classmethod
    def from_ncpoly(cls, f: NCPoly) -> "Potential":
        return cls(((CyclicWord(w), c) for w, c in f.terms.items()))

    @classmethod
    def zero(cls) -> "Potential":
        return cls()

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def degree(self, ws: WeightSystem) -> int:
        if not self._terms:
            return -1
        return max(cw.degree(ws) for cw in self._terms)

    def is_homogeneous(self, ws: WeightSystem) -> bool:
        return len({cw.degree(ws) for cw in self._terms}) <= 1

    def homogeneous_part(self, ws: WeightSystem, m: int) -> "Potential":
        return Potential({cw: c for cw, c in self._terms.items() if cw.degree(ws) == m})

    def leading_part(self, ws: WeightSystem) -> "Potential":
        return self.homogeneous_part(ws, self.degree(ws))

    def __add__(self, other):
        if not isinstance(other, Potential):
            return NotImplemented
        data = dict(self._terms)
        for cw, c in other._terms.items():
            new = data.get(cw, 0) + c
            if new:
                data[cw] = new
            else:
                data.pop(cw, None)
        out = Potential.__new__(Potential)
        out._terms = data
        return out

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, coeff: Rat) -> "Potential":
        coeff = as_fraction(coeff)
        if not coeff:
            return Potential.zero()
        out = Potential.__new__(Potential)
        out._terms = {cw: c * coeff for cw, c in self._terms.items()}
        return out

    def __eq__(self, other):
        return isinstance(other, Potential) and self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __repr__(self):
        if not self._terms:
            return "0"
        bits = [f"{c}*{cw!r}" for cw, c in sorted(self._terms.items(), key=lambda t: (len(t[0]), t[0].representative))]
        return " + ".join(bits).replace("+ -", "- ")


def cyclic_derivative(phi: Potential | CyclicWord | NCPoly, letter) -> NCPoly:
    """Cyclic partial derivative of a potential with respect to one letter.

    For a single cyclic word, the derivative is the sum over occurrences of
    the letter of the word read around the cycle starting just after that
    occurrence.  The result does not depend on the chosen rotation.
    """
    j = letter_index(letter)
    if isinstance(phi, NCPoly):
        phi = Potential.from_ncpoly(phi)
    if isinstance(phi, CyclicWord):
        phi = Potential({phi: 1})
    data = {}
    for cw, coeff in phi.terms.items():
        w = cw.representative
        n = len(w)
        for s in range(n):
            if w[s] == j:
                piece = w[s + 1:] + w[:s]
                new = data.get(piece, 0) + coeff
                if new:
                    data[piece] = new
                else:
                    data.pop(piece, None)
    out = NCPoly.__new__(NCPoly)
    out._terms = data
    return out


def abelianize(f):
    """Ring map onto C[x,y,z]: words map to commutative monomials.

    Accepts an NCPoly or a Potential and returns a CommPoly.  Commutators
    (and hence all rotation differences) map to zero.
    """
    from .commpoly import CommPoly

    data = {}
    if isinstance(f, Potential):
        items = ((cw.representative, c) for cw, c in f.terms.items())
    elif isinstance(f, NCPoly):
        items = iter(f.terms.items())
    else:
        raise TypeError(f"cannot abelianize {type(f).__name__}")
    for word, coeff in items:
        expo = (word.count(0), word.count(1), word.count(2))
        new = data.get(expo, 0) + coeff
        if new:
            data[expo] = new
        else:
            data.pop(expo, None)
    return CommPoly(data)


# ---------------------------------------------------------------------------
# Parameter sets and the standard potential family
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ParameterSet:
    """Scalars and one-variable coefficient lists specializing a potential.

    `P_coeffs` (and Q, R alike) lists coefficients by ascending power, so
    `P_coeffs[k]` is the coefficient of x^k; index 0 is the constant term.
    `t` is the commutator twist, `c` the potential scale.  `q` is the
    independent second twist of the computer-algebra relation family, whose
    low-order relation constants live in `lower = (a1, a2, b1, b2, c1, c2)`.
    `tau` and `nu` parameterize the commutative surface family.
    """

    t: Fraction = Fraction(1)
    c: Fraction = Fraction(0)
    P_coeffs: tuple = ()
    Q_coeffs: tuple = ()
    R_coeffs: tuple = ()
    q: Fraction | None = None
    tau: Fraction | None = None
    nu: Fraction | None = None
    lower: tuple = (Fraction(0),) * 6

    def __post_init__(self):
        object.__setattr__(self, "t", as_fraction(self.t))
        object.__setattr__(self, "c", as_fraction(self.c))
        for name in ("P_coeffs", "Q_coeffs", "R_coeffs"):
            object.__setattr__(self, name, tuple(as_fraction(v) for v in getattr(self, name)))
        for name in ("q", "tau", "nu"):
            v = getattr(self, name)
            if v is not None:
                object.__setattr__(self, name, as_fraction(v))
        object.__setattr__(self, "lower", tuple(as_fraction(v) for v in self.lower))
        if len(self.lower) != 6:
            raise ValueError("lower must hold exactly (a1, a2, b1, b2, c1, c2)")


def make_PQR(ws: WeightSystem, lower_coeffs: Sequence = ((), (), ())) -> tuple:
    """Monic-normalized coefficient lists for the three one-variable polynomials.

    P has degree p = d/a with leading coefficient 1/p and zero constant term;
    `lower_coeffs` supplies (alpha_1..alpha_{p-1}) for the x^{p-1}..x^1 slots,
    and similarly for Q, R.  Short tuples are padded with zeros.
    """
    p, q, r = ws.exponents()
    out = []
    for deg, lows in zip((p, q, r), lower_coeffs):
        lows = [as_fraction(v) for v in lows]
        if len(lows) > deg - 1:
            raise ValueError(f"too many lower coefficients for degree {deg}")
        lows += [Fraction(0)] * (deg - 1 - len(lows))
        # ascending powers: [const=0, x^1 <- last low coeff, ..., x^{deg-1}, 1/deg]
        coeffs = [Fraction(0)] + lows[::-1] + [Fraction(1, deg)]
        out.append(tuple(coeffs))
    return tuple(out)


def _one_var_potential(coeffs: Sequence, letter: int) -> Potential:
    terms = {}
    for k, coeff in enumerate(coeffs):
        coeff = as_fraction(coeff)
        if coeff:
            terms[CyclicWord((letter,) * k)] = coeff
    return Potential(terms)


def make_standard_potential(ws: WeightSystem, params: ParameterSet) -> Potential:
    """The potential  xyz - t*yxz + c*(P(x) + Q(y) + R(z)).

    Coefficient lists default to the monic leading terms x^p/p, y^q/q, z^r/r
    when empty.  Rejects weight systems whose exponent triple (d/a, d/b, d/c)
    is not integral.
    """
    p, q, r = ws.exponents()
    P = params.P_coeffs or make_PQR(ws)[0]
    Q = params.Q_coeffs or make_PQR(ws)[1]
    R = params.R_coeffs or make_PQR(ws)[2]
    for coeffs, deg, name in ((P, p, "P"), (Q, q, "Q"), (R, r, "R")):
        if len(coeffs) - 1 > deg:
            raise ValueError(f"{name} has degree {len(coeffs) - 1} > {deg} = d/weight")
    phi = Potential({CyclicWord((X, Y, Z)): 1, CyclicWord((Y, X, Z)): -params.t})
    if params.c:
        for coeffs, letter in ((P, X), (Q, Y), (R, Z)):
            phi = phi + _one_var_potential(coeffs, letter).scale(params.c)
    return phi


def standard_relations(ws: WeightSystem, params: ParameterSet) -> list:
    """The three cyclic partial derivatives of the standard potential."""
    phi = make_standard_potential(ws, params)
    return [cyclic_derivative(phi, v) for v in (X, Y, Z)]


# ---------------------------------------------------------------------------
# Word enumeration
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def _word_count(weights: tuple, m: int) -> int:
    if m < 0:
        return 0
    if m == 0:
        return 1
    return sum(_word_count(weights, m - w) for w in weights)


def word_count(ws: WeightSystem, m: int) -> int:
    """Number of words of weighted degree exactly m.

    Satisfies c(m) = c(m-a) + c(m-b) + c(m-c) with c(0) = 1.
    """
    if m < 0:
        raise ValueError("degree must be nonnegative")
    return _word_count(ws.weights, m)


@lru_cache(maxsize=None)
def _words_of_degree(weights: tuple, m: int) -> tuple:
    if m < 0:
        return ()
    if m == 0:
        return ((),)
    out = []
    for letter in range(3):
        for tail in _words_of_degree(weights, m - weights[letter]):
            out.append((letter,) + tail)
    return tuple(out)


def words_of_degree(ws: WeightSystem, m: int) -> list:
    """All words of weighted degree exactly m, sorted letterwise."""
    return sorted(_words_of_degree(ws.weights, m))


def words_up_to(ws: WeightSystem, N: int) -> list:
    """All words of weighted degree <= N in ascending deglex order."""
    out = []
    for m in range(N + 1):
        out.extend(words_of_degree(ws, m))
    return out
