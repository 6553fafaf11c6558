"""Central elements: discovery by linear algebra and verification.

The centralizer solver works in quotient coordinates: unknowns are
coefficients on the complement-word basis of the quotient at the degree
bound, and the three commutation conditions become exact linear systems
whose null space is computed by rational row reduction.  Verification of
a candidate central element reduces its three commutators to normal form.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ._linalg.echelon import SparseEchelon
from ._linalg.field import QQ
from .gridal import RelationSet, quotient_basis
from .ncalg import (
    NCPoly,
    ParameterSet,
    WeightSystem,
    as_fraction,
)

__all__ = [
    "CentralizerSolution",
    "ComparisonResult",
    "centralizer",
    "verify_central",
    "compare_mod_ideal",
    "table_central_element",
    "table_guards_ok",
    "two_twist_relations",
    "two_twist_psi",
]


@dataclass
class CentralizerSolution:
    degree_bound: int
    mode: str
    solution_dim: int
    basis: list  # NCPoly solutions in normal-form coordinates
    normalized_psi: NCPoly | None  # distinguished nonconstant solution


def _nullspace(rows, ncols: int):
    """Null-space basis of the system given by `rows` (dicts col -> Fraction).

    Returns vectors as dicts col -> Fraction, one per free column, each with
    coefficient 1 on its free column.
    """
    ech = SparseEchelon(ncols, QQ)
    for row in rows:
        ech.add_row({c: QQ.coerce(v) for c, v in row.items()})
    ech.back_substitute()
    pivots = ech.pivot_cols()
    free_cols = [c for c in range(ncols) if c not in pivots]
    vecs = []
    for f in free_cols:
        vec = {f: Fraction(1)}
        for p in pivots:
            t = ech.pivot_rows[p].get(f)
            if t:
                vec[p] = -QQ.to_fraction(t)
        vecs.append(vec)
    return vecs


def centralizer(rs: RelationSet, bound: int, mode: str = "filtered") -> CentralizerSolution:
    """Solve the three commutation conditions at the given degree bound.

    Unknowns are quotient coordinates: coefficients on complement words of
    degree <= bound (filtered) or exactly bound (graded).  Each generator v
    imposes that the commutator's normal form vanish at degree
    bound + weight(v).  Returns the full solution space.
    """
    ws = rs.ws
    qb0 = quotient_basis(rs, bound, mode)
    unknowns = list(qb0.complement_words)
    rows = []
    for v in range(3):
        target = bound + ws.weights[v]
        qbv = quotient_basis(rs, target, mode)
        by_target = {}
        for i, b in enumerate(unknowns):
            comm = NCPoly.monomial((v,) + b) - NCPoly.monomial(b + (v,))
            for w, cval in qbv.nf_vector(comm).items():
                by_target.setdefault(w, {})[i] = cval
        for w in sorted(by_target, key=ws.deglex_key):
            rows.append(by_target[w])
    vecs = _nullspace(rows, len(unknowns))
    basis = [NCPoly({unknowns[i]: c for i, c in vec.items()}) for vec in vecs]
    psi = _normalized_psi(basis, ws)
    return CentralizerSolution(
        degree_bound=bound,
        mode=mode,
        solution_dim=len(basis),
        basis=basis,
        normalized_psi=psi,
    )


def _normalized_psi(basis, ws: WeightSystem) -> NCPoly | None:
    """Distinguished nonconstant solution: zero constant term, first nonzero
    coefficient (deglex order) equal to 1; deterministic."""
    stripped = []
    for f in basis:
        f = f - NCPoly.scalar(f.coeff(()))
        if not f.is_zero():
            stripped.append(f)
    if not stripped:
        return None
    # Reduce so each survivor is normalized on its deglex-smallest word.
    words = sorted({w for f in stripped for w in f.support()}, key=ws.deglex_key)
    index = {w: i for i, w in enumerate(words)}
    n = len(words)
    ech = SparseEchelon(n, QQ)  # pivot = largest col = deglex-smallest word
    for f in stripped:
        ech.add_row({n - 1 - index[w]: QQ.coerce(c) for w, c in f.terms.items()})
    ech.back_substitute()
    lead = max(ech.pivot_cols())
    row = ech.pivot_rows[lead]
    return NCPoly({words[n - 1 - c]: QQ.to_fraction(v) for c, v in row.items()})


def verify_central(rs: RelationSet, psi: NCPoly, mode: str | None = None) -> bool:
    """True iff all three commutators of psi reduce to zero."""
    if psi.is_zero():
        return True
    ws = rs.ws
    if mode is None:
        mode = "graded" if rs.homogeneous and psi.is_homogeneous(ws) else "filtered"
    deg = psi.degree(ws)
    if mode == "graded" and deg == 0:
        return True
    for v in range(3):
        comm = NCPoly.variable(v) * psi - psi * NCPoly.variable(v)
        if comm.is_zero():
            continue
        qb = quotient_basis(rs, deg + ws.weights[v], mode)
        if not qb.normal_form(comm).is_zero():
            return False
    return True


@dataclass
class ComparisonResult:
    verdict: str  # "equal" | "proportional" | "distinct"
    scalar: Fraction | None  # psi1 ~ scalar * psi2 modulo constants

    def __eq__(self, other):
        if isinstance(other, str):
            return self.verdict == other
        return (self.verdict, self.scalar) == (other.verdict, other.scalar)


def compare_mod_ideal(rs: RelationSet, psi1: NCPoly, psi2: NCPoly) -> ComparisonResult:
    """Compare two elements in the quotient, ignoring constant summands.

    "equal" means identical normal forms; "proportional" means the
    nonconstant parts of the normal forms agree up to a nonzero scalar
    (reported); anything else is "distinct".
    """
    ws = rs.ws
    m = max(psi1.degree(ws), psi2.degree(ws), 0)
    qb = quotient_basis(rs, m, "filtered")
    n1 = qb.nf_vector(psi1)
    n2 = qb.nf_vector(psi2)
    if n1 == n2:
        return ComparisonResult("equal", Fraction(1))
    s1 = {w: c for w, c in n1.items() if w != ()}
    s2 = {w: c for w, c in n2.items() if w != ()}
    if not s1 and not s2:
        return ComparisonResult("proportional", Fraction(1))
    if not s1 or not s2 or set(s1) != set(s2):
        return ComparisonResult("distinct", None)
    w0 = min(s2, key=ws.deglex_key)
    scalar = s1[w0] / s2[w0]
    if all(s1[w] == scalar * c for w, c in s2.items()):
        return ComparisonResult("proportional", scalar)
    return ComparisonResult("distinct", None)


# ---------------------------------------------------------------------------
# Published closed forms
# ---------------------------------------------------------------------------


def table_relations(kind: str, t, c, lower_coeffs=((), (), ())) -> RelationSet:
    """Relation set in the closed-form convention.

    Each twisted commutator equals +c times the derivative of the
    one-variable polynomial in the remaining generator, e.g.
    x*y - t*y*x = c*R'(z).  This is the convention under which
    `table_central_element` and `two_twist_psi` are central; it differs from
    the faithful potential derivative by the sign of c.
    """
    from .ncalg import STANDARD_WEIGHTS, make_PQR, make_standard_potential

    ws = STANDARD_WEIGHTS[kind] if isinstance(kind, str) else kind
    P, Q, R = make_PQR(ws, lower_coeffs)
    params = ParameterSet(t=t, c=-as_fraction(c), P_coeffs=P, Q_coeffs=Q, R_coeffs=R)
    return RelationSet.from_potential(make_standard_potential(ws, params), ws)


def table_guards_ok(kind: str, t, c) -> bool:
    """Parameter guards under which the closed forms below are defined."""
    t, c = as_fraction(t), as_fraction(c)
    if kind == "E6":
        return c**3 != -1
    if kind == "E7":
        return t**2 != c**4
    raise ValueError(f"no closed-form guards for {kind!r}")


def table_central_element(kind: str, t, c) -> NCPoly:
    """Degree-d central element of the graded algebra of type E6 or E7.

    These are the published closed forms for the homogeneous (leading-term)
    potential with twist t and scale c; the E6 form needs c^3 != -1 and the
    E7 form t^2 != c^4.  There is no printed closed form for E8: use
    `centralizer` on the graded relation set instead.
    """
    t, c = as_fraction(t), as_fraction(c)
    if not table_guards_ok(kind, t, c):
        raise ValueError(f"non-generic parameters for {kind}: guard violated")
    if kind == "E6":
        lam = (t**3 - c**3) / (c**3 + 1)
        return NCPoly(
            {
                (1, 1, 1): c,  # y^3
                (1, 2, 0): lam,  # yzx
                (2, 2, 2): lam * c,  # z^3
                (2, 1, 0): -t,  # zyx
            }
        )
    if kind == "E7":
        # The y^4 sign differs from some printed forms, which use a complex
        # rescaling of z; this is the real-parameter convention of
        # `table_relations`, verified central by the solver.
        lam = (t**4 + t**2 + 1) / (t**2 - c**4)
        return NCPoly(
            {
                (0, 1, 0, 1): t**2 + 1,  # xyxy
                (0, 1, 1, 0): -lam * t,  # xyyx
                (1, 1, 1, 1): lam * c**2,  # y^4
                (1, 1, 0, 0): t,  # yyxx
            }
        )
    raise ValueError(f"no closed form for {kind!r}")


def two_twist_relations(params: ParameterSet) -> RelationSet:
    """Relation family with two independent twists on unit weights.

    q is the commutation twist, t scales the squares, and
    lower = (a1, a2, b1, b2, c1, c2) holds the inhomogeneous constants:

        x*y - q*y*x - t*z^2 + c1*z + c2
        y*z - q*z*y - t*x^2 + a1*x + a2
        z*x - q*x*z - t*y^2 + b1*y + b2
    """
    if params.q is None:
        raise ValueError("the two-twist family needs q")
    q, t = params.q, params.t
    a1, a2, b1, b2, c1, c2 = params.lower
    ws = WeightSystem(1, 1, 1)
    rels = [
        NCPoly({(0, 1): 1, (1, 0): -q, (2, 2): -t, (2,): c1, (): c2}),
        NCPoly({(1, 2): 1, (2, 1): -q, (0, 0): -t, (0,): a1, (): a2}),
        NCPoly({(2, 0): 1, (0, 2): -q, (1, 1): -t, (1,): b1, (): b2}),
    ]
    return RelationSet(rels, ws)


def two_twist_psi(params: ParameterSet) -> NCPoly:
    """The machine-computed degree-3 central element of the two-twist family."""
    if params.q is None:
        raise ValueError("the two-twist family needs q")
    q, t = params.q, params.t
    a1, a2, b1, b2, c1, c2 = params.lower
    head = t * (q + 1)
    terms = {
        (1, 1, 1): head * t * (t**3 + 1),  # y^3
        (1, 2, 0): head * (q**3 - t**3),  # yzx
        (2, 1, 0): head * (-q) * (t**3 + 1),  # zyx
        (2, 2, 2): head * t * (q**3 - t**3),  # z^3
        (1, 1): -t * (q**2 + q * t**3 + q + 2 * t**3 + 1) * b1,  # y^2
        (1, 2): (q * t**3 - q**2) * a1,  # yz
        (2, 0): t**3 * (q + 1) * b1,  # zx
        (2, 1): (q**3 + q * t**3) * a1,  # zy
        (1, 0): q * (q + 1) * t**3 * c1,  # yx
        (2, 2): t * (2 * q * t**3 + t**3 - q**4 - q**3 - q**2) * c1,  # z^2
        (0,): -((q**3 * t + 2 * q**2 * t + q * t) * a2 + q**2 * a1**2 + q * t**2 * b1 * c1),
        (1,): -t * (
            (q**3 + 2 * q**2 + q * t**3 + 2 * q + t**3 + 1) * b2
            + q * t * a1 * c1
            - t**2 * b1**2
        ),
        (2,): -t * (
            (q**4 + 2 * q**3 + 2 * q**2 - q * t**3 + q - t**3) * c2
            + q * t**2 * c1**2
            + q * t * a1 * b1
        ),
    }
    return NCPoly(terms)
