"""Fast quotient dimensions: modular ranks with exact certification attempts.

Ranks of relation-product spans are computed over several fixed 31-bit
prime fields.  A prime can only under-report the rational rank, so the
engine keeps the lexicographically largest (rank vector, pivot set)
structure seen and requires `min_primes` independent primes to agree on
it.  It then tries to upgrade the consensus to a full proof: the reduced
echelon is lifted to exact rationals (Chinese remainder + rational
reconstruction) and the lifted null vectors are re-verified over the
rationals against every generating product.  When the lift succeeds the
reported dimensions are fully proved; when entry heights exceed the
prime budget (they grow exponentially with the degree on the large
truncations), the result is flagged as modular consensus instead and the
caller decides whether to fall back to exact elimination.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from ..ncalg import WeightSystem, words_of_degree
from .engines import gf_engine
from .field import QQ
from .span import FilteredSpan, filtered_span, graded_span

__all__ = [
    "PRIMES",
    "CertificationError",
    "CertifiedDims",
    "crt",
    "rational_reconstruct",
    "certified_filtered_dims",
    "certified_graded_dims",
]

# 31-bit primes, largest first; a fixed list keeps every run deterministic.
PRIMES = (
    2147483647, 2147483629, 2147483587, 2147483579, 2147483563,
    2147483549, 2147483543, 2147483497, 2147483489, 2147483477,
    2147483423, 2147483399, 2147483353, 2147483323, 2147483269,
    2147483249, 2147483237, 2147483179, 2147483171, 2147483137,
    2147483123, 2147483077, 2147483069, 2147483059, 2147483053,
    2147483033, 2147483029, 2147482951, 2147482949, 2147482943,
    2147482937, 2147482921, 2147482877, 2147482873, 2147482867,
    2147482859, 2147482819, 2147482817, 2147482811, 2147482801,
    2147482763, 2147482739, 2147482697, 2147482693, 2147482681,
    2147482663, 2147482661, 2147482621, 2147482591, 2147482583,
    2147482577, 2147482507, 2147482501, 2147482481, 2147482417,
    2147482409, 2147482367, 2147482361, 2147482349, 2147482343,
    2147482327, 2147482291, 2147482273, 2147482237, 2147482231,
    2147482223, 2147482121, 2147482093, 2147482091, 2147482081,
    2147482063, 2147482021, 2147481997, 2147481967, 2147481949,
    2147481937, 2147481907, 2147481901, 2147481899, 2147481893,
)


class CertificationError(RuntimeError):
    """No usable prime (all divide some input denominator)."""


@dataclass
class CertifiedDims:
    dims: list  # quotient dimension per degree 0..N
    verified: bool  # True: dims re-proved over Q via lifted null vectors
    consensus_primes: list  # primes agreeing on the reported structure
    monotone: list  # per degree: no pivot arrived after its own degree step
    proof: str = field(default="")

    def __post_init__(self):
        if not self.proof:
            k = len(self.consensus_primes)
            self.proof = (
                "exact (lifted null certificate verified over Q)"
                if self.verified
                else f"modular consensus across {k} primes"
            )


def crt(residues, moduli):
    """Combine residues into one residue modulo the product."""
    r, m = residues[0] % moduli[0], moduli[0]
    for r2, m2 in zip(residues[1:], moduli[1:]):
        inv = pow(m % m2, -1, m2)
        r = r + m * ((r2 - r) * inv % m2)
        m *= m2
    return r % m, m


def rational_reconstruct(u: int, M: int):
    """The rational n/d = u (mod M) with |n|, d <= sqrt(M/2), or None."""
    bound = math.isqrt(M // 2)
    r0, r1 = M, u % M
    s0, s1 = 0, 1
    while r1 > bound:
        q = r0 // r1
        r0, r1 = r1, r0 - q * r1
        s0, s1 = s1, s0 - q * s1
    n, d = r1, s1
    if d < 0:
        n, d = -n, -d
    if d == 0 or d > bound or math.gcd(n, d) != 1:
        return None
    return Fraction(n, d)


def _lift_tails(exports, moduli):
    """Lift matching echelon exports to exact tail rows, or None.

    exports: per prime, list of (pivot, cols, vals) with identical pivot
    structure.  Returns {pivot: {col: Fraction}} without the monic pivot
    entry.  Fails fast on the first unreconstructible entry.
    """
    tails = {}
    nprimes = len(moduli)
    for rows in zip(*exports):
        pivot = rows[0][0]
        support = sorted({c for _, cols, _ in rows for c in cols if c != pivot})
        residue_maps = [dict(zip(cols, vals)) for _, cols, vals in rows]
        tail = {}
        for col in support:
            residues = [residue_maps[k].get(col, 0) for k in range(nprimes)]
            u, M = crt(residues, moduli)
            val = rational_reconstruct(u, M)
            if val is None:
                return None
            if val:
                tail[col] = val
        tails[pivot] = tail
    return tails


def _probe_rows(engines, primes, sample: int = 24) -> bool:
    """Cheap liftability probe on the latest rows (the tallest entries).

    The probe runs on non-reduced rows, which have the same coefficient
    scale as the reduced ones; a failure means the full lift is hopeless
    with this prime set.
    """
    pivots = engines[0].pivots[-sample:]
    exports = [[(p, *zip(*sorted(e.row(p).items()))) for p in pivots] for e in engines]
    return _lift_tails(exports, primes) is not None


def _coerced_relations(relations, ws: WeightSystem):
    out = []
    for r in relations:
        terms = sorted(r.terms.items())
        top = max(ws.degree(w) for w, _ in terms)
        out.append((top, [(w, QQ.coerce(c)) for w, c in terms]))
    return out


def _verify_rows(raw_rows, tails) -> bool:
    """Exact check that every raw generating row lies in the lifted span."""
    zero = QQ.coerce(0)
    qtails = {piv: [(b, QQ.coerce(t)) for b, t in tail.items()] for piv, tail in tails.items()}
    for row in raw_rows:
        acc = {}
        for col, c in row:
            tail = qtails.get(col)
            if tail is None:
                acc[col] = acc.get(col, zero) + c
            else:
                for b, t in tail:
                    acc[b] = acc.get(b, zero) - c * t
        if any(acc.values()):
            return False
    return True


def _raw_filtered_rows(rels, ws: WeightSystem, N: int, index):
    for top, terms in rels:
        if top > N:
            continue
        for s in range(N - top + 1):
            for i in range(s + 1):
                for u in words_of_degree(ws, i):
                    for w in words_of_degree(ws, s - i):
                        yield [(index[u + word + w], c) for word, c in terms]


def _raw_graded_rows(rels, ws: WeightSystem, m: int, index):
    for top, terms in rels:
        if top > m:
            continue
        s = m - top
        for i in range(s + 1):
            for u in words_of_degree(ws, i):
                for w in words_of_degree(ws, s - i):
                    yield [(index[u + word + w], c) for word, c in terms]


class _RunPool:
    """Modular runs over the fixed prime list, computed once and shared.

    Keeps the runs agreeing on the lexicographically largest
    (ranks, pivots) structure; modular rank never exceeds the rational
    rank, so inferior structures come from unlucky primes and are dropped.
    """

    def __init__(self, run_span, span_key, max_primes: int):
        self.run_span = run_span
        self.span_key = span_key
        self.max_primes = max_primes
        self._prime_iter = iter(PRIMES)
        self.used = 0
        self.best_key = None
        self.runs = []
        self.primes = []

    def extend_to(self, count: int):
        while len(self.runs) < count and self.used < self.max_primes:
            p = next(self._prime_iter, None)
            if p is None:
                break
            try:
                span = self.run_span(p)
            except ZeroDivisionError:
                continue  # p divides an input denominator
            self.used += 1
            key = self.span_key(span)
            if self.best_key is None or key > self.best_key:
                self.best_key, self.runs, self.primes = key, [span], [p]
            elif key == self.best_key:
                self.runs.append(span)
                self.primes.append(p)
        if not self.runs:
            raise CertificationError("every available prime divides an input denominator")
        return list(self.runs), list(self.primes)


def _filtered_key(span):
    return tuple(span.ranks), tuple(span.engine.pivots)


def _graded_key(span):
    return (
        tuple(span.ranks),
        tuple(tuple(span.engines[m].pivots) for m in range(span.N + 1)),
    )


def certified_filtered_dims(relations, ws: WeightSystem, N: int, *, min_primes: int = 3,
                            lift_primes: int = 8, max_primes: int = len(PRIMES),
                            force_python: bool = False) -> CertifiedDims:
    rels = _coerced_relations(relations, ws)

    def run(p):
        return filtered_span(relations, ws, N, lambda n: gf_engine(n, p, force_python))

    pool = _RunPool(run, _filtered_key, max_primes)
    runs, primes = pool.extend_to(min_primes)
    span = runs[0]
    dims = [span.words_le[m] - span.ranks[m] for m in range(N + 1)]
    monotone = _monotone_flags(span)

    # Attempt the exact upgrade while the lift stays within budget.
    verified = False
    lift_runs, lift_ps = runs, primes
    while True:
        if _probe_rows([s.engine for s in lift_runs], lift_ps):
            for s in lift_runs:
                if not getattr(s, "_rref", False):
                    s.engine.back_substitute()
                    s._rref = True
            tails = _lift_tails([s.engine.export_rows() for s in lift_runs], lift_ps)
            if tails is not None and _verify_rows(
                _raw_filtered_rows(rels, ws, N, span.index), tails
            ):
                verified = True
                primes = lift_ps
                break
        if len(lift_ps) >= lift_primes:
            break
        more, more_ps = pool.extend_to(len(lift_ps) + 2)
        if len(more_ps) <= len(lift_ps):
            break
        lift_runs, lift_ps = more, more_ps
    if not verified:
        primes = pool.primes  # report every prime agreeing on the structure
    return CertifiedDims(dims, verified, list(primes), monotone)


def _monotone_flags(span: FilteredSpan):
    """Per degree: every pivot of degree <= m arrived by step m.

    A late low-degree pivot means the span keeps growing below that degree,
    so the step ranks would understate the final component there.
    """
    pivot_deg_le = [0] * (span.N + 1)
    for piv in span.engine.pivots:
        pivot_deg_le[span.col_degree[piv]] += 1
    for m in range(1, span.N + 1):
        pivot_deg_le[m] += pivot_deg_le[m - 1]
    return [span.ranks[m] == pivot_deg_le[m] for m in range(span.N + 1)]


def certified_graded_dims(relations, ws: WeightSystem, N: int, *, min_primes: int = 3,
                          lift_primes: int = 8, max_primes: int = len(PRIMES),
                          force_python: bool = False) -> CertifiedDims:
    rels = _coerced_relations(relations, ws)

    def run(p):
        return graded_span(relations, ws, N, lambda n: gf_engine(n, p, force_python))

    pool = _RunPool(run, _graded_key, max_primes)
    runs, primes = pool.extend_to(min_primes)
    span = runs[0]
    dims = [len(span.bases[m]) - span.ranks[m] for m in range(N + 1)]

    verified = False
    lift_runs, lift_ps = runs, primes
    probe_deg = max(range(N + 1), key=lambda m: span.engines[m].rank)
    while True:
        if _probe_rows([s.engines[probe_deg] for s in lift_runs], lift_ps):
            for s in lift_runs:
                if not getattr(s, "_rref", False):
                    for m in range(N + 1):
                        s.engines[m].back_substitute()
                    s._rref = True
            ok = True
            for m in range(N + 1):
                tails = _lift_tails([s.engines[m].export_rows() for s in lift_runs], lift_ps)
                if tails is None or not _verify_rows(
                    _raw_graded_rows(rels, ws, m, span.indexes[m]), tails
                ):
                    ok = False
                    break
            if ok:
                verified = True
                primes = lift_ps
                break
        if len(lift_ps) >= lift_primes:
            break
        more, more_ps = pool.extend_to(len(lift_ps) + 2)
        if len(more_ps) <= len(lift_ps):
            break
        lift_runs, lift_ps = more, more_ps
    if not verified:
        primes = pool.primes
    return CertifiedDims(dims, verified, list(primes), [True] * (N + 1))
