"""The commutative shadow: brackets from a structure polynomial, exterior
calculus in three variables, and brute-force derivative-quotient data.

The bracket attached to a polynomial phi is the determinant formula
{f, g} * vol = d(phi) ^ df ^ dg on C[x, y, z] with the standard volume
form; phi is automatically a Casimir and the Jacobi identity holds for
every phi.  The module also provides the one-form/bivector dictionary
(contraction with vol is the identity on component triples) and the
integrability / closedness tests on one-forms.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from ._linalg.echelon import SparseEchelon
from ._linalg.field import QQ
from .commpoly import CommPoly
from .ncalg import ParameterSet, Rat, WeightSystem, as_fraction, make_PQR

__all__ = [
    "PoissonStructure",
    "OneForm",
    "Bivector",
    "JacobiReport",
    "bracket",
    "jacobi_identity_check",
    "frobenius_and_unimodularity",
    "jacobi_ring",
    "milnor_number",
    "build_delpezzo_phi",
    "fermat_phi",
    "monomials_of_degree",
]


@dataclass(frozen=True)
class PoissonStructure:
    """Bracket on C[x, y, z] induced by a structure polynomial."""

    phi: CommPoly
    ws: WeightSystem

    def bracket(self, f: CommPoly, g: CommPoly) -> CommPoly:
        return bracket(self, f, g)

    def alpha(self) -> "OneForm":
        """The exact one-form d(phi)."""
        return OneForm(self.phi.diff(0), self.phi.diff(1), self.phi.diff(2))

    def bivector(self) -> "Bivector":
        return Bivector(self.phi.diff(0), self.phi.diff(1), self.phi.diff(2))


def bracket(ps: PoissonStructure, f: CommPoly, g: CommPoly) -> CommPoly:
    """{f, g} = det of the Jacobian of (phi, f, g)."""
    px, py, pz = ps.phi.diff(0), ps.phi.diff(1), ps.phi.diff(2)
    fx, fy, fz = f.diff(0), f.diff(1), f.diff(2)
    gx, gy, gz = g.diff(0), g.diff(1), g.diff(2)
    return (
        px * (fy * gz - fz * gy)
        - py * (fx * gz - fz * gx)
        + pz * (fx * gy - fy * gx)
    )


def jacobi_identity_check(ps: PoissonStructure) -> bool:
    """{x,{y,z}} + {y,{z,x}} + {z,{x,y}} = 0, as an exact polynomial identity."""
    x, y, z = (CommPoly.variable(i) for i in range(3))
    total = (
        bracket(ps, x, bracket(ps, y, z))
        + bracket(ps, y, bracket(ps, z, x))
        + bracket(ps, z, bracket(ps, x, y))
    )
    return total.is_zero()


@dataclass(frozen=True)
class OneForm:
    """A dx + B dy + C dz."""

    A: CommPoly
    B: CommPoly
    C: CommPoly

    def d(self) -> "TwoForm":
        return TwoForm(
            self.C.diff(1) - self.B.diff(2),
            self.A.diff(2) - self.C.diff(0),
            self.B.diff(0) - self.A.diff(1),
        )

    def wedge2(self, other: "TwoForm") -> CommPoly:
        """(1-form) ^ (2-form), as a multiple of the volume form."""
        return self.A * other.P + self.B * other.Q + self.C * other.R

    def to_bivector(self) -> "Bivector":
        """Contraction dictionary: component triples are shared."""
        return Bivector(self.A, self.B, self.C)


@dataclass(frozen=True)
class TwoForm:
    """P dy^dz + Q dz^dx + R dx^dy."""

    P: CommPoly
    Q: CommPoly
    R: CommPoly

    def is_zero(self) -> bool:
        return self.P.is_zero() and self.Q.is_zero() and self.R.is_zero()


@dataclass(frozen=True)
class Bivector:
    """P d/dy^d/dz + Q d/dz^d/dx + R d/dx^d/dy."""

    P: CommPoly
    Q: CommPoly
    R: CommPoly

    def to_oneform(self) -> OneForm:
        """Contraction with the volume form (identity on components)."""
        return OneForm(self.P, self.Q, self.R)


def frobenius_and_unimodularity(alpha: OneForm) -> dict:
    """Integrability and closedness of a one-form.

    poisson:    alpha ^ d(alpha) = 0 (the associated bivector satisfies the
                Jacobi identity);
    unimodular: d(alpha) = 0.
    Closedness forces integrability; the implication is asserted.
    """
    da = alpha.d()
    unimodular = da.is_zero()
    poisson = alpha.wedge2(da).is_zero()
    if unimodular and not poisson:
        raise AssertionError("closed one-form failed the integrability test")
    return {"poisson": poisson, "unimodular": unimodular}


# ---------------------------------------------------------------------------
# Derivative-quotient (Jacobi ring) data
# ---------------------------------------------------------------------------


@dataclass
class JacobiReport:
    phi: CommPoly
    ws: WeightSystem
    graded_dims: list
    mu: int | None  # total dimension when finite
    finite: bool
    degree_cap: int


@lru_cache(maxsize=None)
def monomials_of_degree(weights: tuple, m: int) -> tuple:
    """Exponent triples of weighted degree exactly m, sorted."""
    a, b, c = weights
    out = []
    for i in range(m // a + 1):
        rem_i = m - i * a
        for j in range(rem_i // b + 1):
            rem = rem_i - j * b
            if rem % c == 0:
                out.append((i, j, rem // c))
    return tuple(sorted(out))


def jacobi_ring(phi: CommPoly, ws: WeightSystem, degree_cap: int | None = None) -> JacobiReport:
    """Graded dimensions of C[x,y,z] modulo the three partial derivatives.

    Brute force: for each degree the span of monomial multiples of the
    partials is row-reduced exactly.  The input must be weighted
    homogeneous; dims are reported up to degree_cap (default 3d), with
    finite=True only when a full window of max(a,b,c) consecutive zero
    dimensions appears, which forces all higher components to vanish.
    """
    if degree_cap is None:
        degree_cap = 3 * ws.d
    if not phi.is_weighted_homogeneous(ws):
        raise ValueError("graded dimensions need a weighted-homogeneous polynomial")
    partials = [phi.diff(v) for v in range(3)]
    pdegs = [p.weighted_degree(ws) for p in partials]
    weights = ws.weights
    dims = []
    window = 0
    need = max(weights)
    for m in range(degree_cap + 1):
        basis = monomials_of_degree(weights, m)
        index = {e: i for i, e in enumerate(basis)}
        ech = SparseEchelon(len(basis), QQ)
        for p, pd in zip(partials, pdegs):
            if p.is_zero() or pd > m:
                continue
            for mono in monomials_of_degree(weights, m - pd):
                vec = {}
                for e, coeff in p.terms.items():
                    col = index[(e[0] + mono[0], e[1] + mono[1], e[2] + mono[2])]
                    vec[col] = QQ.coerce(coeff)
                ech.add_row(vec)
        dims.append(len(basis) - ech.rank)
        window = window + 1 if dims[-1] == 0 else 0
        if window >= need:
            break
    finite = window >= need
    total = sum(dims) if finite else None
    # strip the trailing zero window from the report
    while dims and dims[-1] == 0:
        dims.pop()
    return JacobiReport(phi, ws, dims, total, finite, degree_cap)


def milnor_number(ws: WeightSystem, d: int | None = None) -> Fraction:
    """(d-a)(d-b)(d-c)/(abc); non-integral values signal inconsistent data.

    For d = a+b+c the equivalent product form (a+b)(a+c)(b+c)/(abc) is
    cross-checked.
    """
    a, b, c = ws.weights
    if d is None:
        d = ws.d
    mu = Fraction((d - a) * (d - b) * (d - c), a * b * c)
    if d == a + b + c:
        alt = Fraction((a + b) * (a + c) * (b + c), a * b * c)
        if alt != mu:
            raise ArithmeticError("dimension count identities disagree")
    return mu


def fermat_phi(ws: WeightSystem, tau: Rat = 1, monic: bool = False) -> CommPoly:
    """x^p + y^q + z^r + tau*xyz, or the 1/p, 1/q, 1/r-normalized variant.

    The two normalizations have different degenerate tau loci: tau = 1 is
    generic for the integer-coefficient form in all three weight systems,
    but not for the normalized one (E7 and E8 acquire positive-dimensional
    critical loci there).
    """
    p, q, r = ws.exponents()
    tau = as_fraction(tau)
    terms = {
        (p, 0, 0): Fraction(1, p) if monic else Fraction(1),
        (0, q, 0): Fraction(1, q) if monic else Fraction(1),
        (0, 0, r): Fraction(1, r) if monic else Fraction(1),
    }
    if tau:
        terms[(1, 1, 1)] = tau
    return CommPoly(terms)


def build_delpezzo_phi(params: ParameterSet, ws: WeightSystem) -> CommPoly:
    """tau*xyz + P(x) + Q(y) + R(z) + nu, with monic-normalized defaults.

    Exponents p = d/a, q = d/b, r = d/c must be integral; tau must be
    nonzero (the leading-term normal form needs it).
    """
    ws.exponents()
    tau = params.tau if params.tau is not None else Fraction(1)
    tau = as_fraction(tau)
    if not tau:
        raise ValueError("tau must be nonzero")
    nu = as_fraction(params.nu) if params.nu is not None else Fraction(0)
    P = params.P_coeffs or make_PQR(ws)[0]
    Q = params.Q_coeffs or make_PQR(ws)[1]
    R = params.R_coeffs or make_PQR(ws)[2]
    phi = CommPoly({(1, 1, 1): tau})
    for var, coeffs in enumerate((P, Q, R)):
        for k, coeff in enumerate(coeffs):
            coeff = as_fraction(coeff)
            if coeff:
                e = [0, 0, 0]
                e[var] = k
                phi = phi + CommPoly({tuple(e): coeff})
    if nu:
        phi = phi + CommPoly.scalar(nu)
    return phi
