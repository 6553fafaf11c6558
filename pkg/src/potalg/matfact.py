"""Matrix factorizations of the cubic x^3 + y^3 + z^3 - tau*xyz.

Every nonzero rational point (alpha, beta, gamma) determines a 3x3 matrix
of linear forms whose adjugate, rescaled by -1/(alpha*beta*gamma), pairs
with it into an exact factorization of the cubic with
tau = (alpha^3 + beta^3 + gamma^3)/(alpha*beta*gamma); deriving tau from
the point (rather than picking tau first) keeps all test data rational.
The adjugate identity itself holds for arbitrary entries and is checked
symbolically in six variables.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .commpoly import CommPoly
from .ncalg import Rat, as_fraction

__all__ = [
    "CurvePoint",
    "MatrixFactorization",
    "build_D",
    "point_matrix",
    "verify_factorization",
    "adjugate_identity_check",
    "symbolic_adjugate_identity",
    "mat_mul",
    "adjugate3",
    "det3",
]


def mat_mul(A, B):
    n = len(A)
    return tuple(
        tuple(sum((A[i][k] * B[k][j] for k in range(n)), start=CommPoly.zero(A[0][0].nvars))
              for j in range(n))
        for i in range(n)
    )


def det3(A) -> CommPoly:
    return (
        A[0][0] * (A[1][1] * A[2][2] - A[1][2] * A[2][1])
        - A[0][1] * (A[1][0] * A[2][2] - A[1][2] * A[2][0])
        + A[0][2] * (A[1][0] * A[2][1] - A[1][1] * A[2][0])
    )


def adjugate3(A):
    """Transposed cofactor matrix: A * adj(A) = adj(A) * A = det(A) * Id."""

    def cof(i, j):
        rows = [r for r in range(3) if r != i]
        cols = [c for c in range(3) if c != j]
        m = A[rows[0]][cols[0]] * A[rows[1]][cols[1]] - A[rows[0]][cols[1]] * A[rows[1]][cols[0]]
        return m if (i + j) % 2 == 0 else -m

    return tuple(tuple(cof(j, i) for j in range(3)) for i in range(3))


@dataclass(frozen=True)
class CurvePoint:
    """Nonzero rational coordinates with the derived cubic parameter tau."""

    alpha: Fraction
    beta: Fraction
    gamma: Fraction
    tau: Fraction

    def __init__(self, alpha: Rat, beta: Rat, gamma: Rat, tau: Rat | None = None):
        alpha, beta, gamma = as_fraction(alpha), as_fraction(beta), as_fraction(gamma)
        if not (alpha and beta and gamma):
            raise ValueError("all three coordinates must be nonzero")
        derived = (alpha**3 + beta**3 + gamma**3) / (alpha * beta * gamma)
        if tau is not None and as_fraction(tau) != derived:
            raise ValueError(
                f"point not on the curve: tau must be {derived}, got {tau}"
            )
        object.__setattr__(self, "alpha", alpha)
        object.__setattr__(self, "beta", beta)
        object.__setattr__(self, "gamma", gamma)
        object.__setattr__(self, "tau", derived)

    @property
    def singular_curve(self) -> bool:
        """True when the factored cubic x^3+y^3+z^3 - tau*xyz is singular."""
        return self.tau == 3

    def psi(self) -> CommPoly:
        return CommPoly({(3, 0, 0): 1, (0, 3, 0): 1, (0, 0, 3): 1, (1, 1, 1): -self.tau})


@dataclass(frozen=True)
class MatrixFactorization:
    g: tuple  # 3x3 CommPoly, linear entries
    g_prime: tuple  # 3x3 CommPoly, quadratic entries
    psi: CommPoly

    def check(self) -> bool:
        return verify_factorization(self)


def point_matrix(alpha, beta, gamma, nvars: int = 3):
    """The 3x3 matrix of linear forms attached to a coordinate triple."""
    x, y, z = (CommPoly.variable(i, nvars) for i in range(3))
    a, b, g = alpha, beta, gamma
    return (
        (a * x, b * z, g * y),
        (g * z, a * y, b * x),
        (b * y, g * x, a * z),
    )


def build_D(pt: CurvePoint) -> MatrixFactorization:
    """Factorization (D, D', psi) with D*D' = D'*D = psi * Id exactly.

    D has linear entries, D' = -adj(D)/(alpha*beta*gamma) quadratic ones,
    and psi = x^3 + y^3 + z^3 - tau*xyz for the derived tau.
    """
    D = point_matrix(pt.alpha, pt.beta, pt.gamma)
    scale = Fraction(-1) / (pt.alpha * pt.beta * pt.gamma)
    Dp = tuple(tuple(e * scale for e in row) for row in adjugate3(D))
    return MatrixFactorization(D, Dp, pt.psi())


def verify_factorization(mf: MatrixFactorization) -> bool:
    """Exact check of both composition identities against psi * Id."""
    nvars = mf.psi.nvars
    zero = CommPoly.zero(nvars)
    for prod in (mat_mul(mf.g, mf.g_prime), mat_mul(mf.g_prime, mf.g)):
        for i in range(3):
            for j in range(3):
                expect = mf.psi if i == j else zero
                if prod[i][j] != expect:
                    return False
    return True


def adjugate_identity_check(alpha: Rat, beta: Rat, gamma: Rat) -> bool:
    """D * adj(D) = adj(D) * D = det(D) * Id for arbitrary rational triples."""
    D = point_matrix(as_fraction(alpha), as_fraction(beta), as_fraction(gamma))
    return _adjugate_identity(D)


def symbolic_adjugate_identity() -> bool:
    """The same identity with alpha, beta, gamma as polynomial variables."""
    x, y, z, a, b, g = (CommPoly.variable(i, 6) for i in range(6))
    D = (
        (a * x, b * z, g * y),
        (g * z, a * y, b * x),
        (b * y, g * x, a * z),
    )
    return _adjugate_identity(D)


def _adjugate_identity(D) -> bool:
    adj = adjugate3(D)
    det = det3(D)
    nvars = det.nvars
    zero = CommPoly.zero(nvars)
    for prod in (mat_mul(D, adj), mat_mul(adj, D)):
        for i in range(3):
            for j in range(3):
                expect = det if i == j else zero
                if prod[i][j] != expect:
                    return False
    return True
