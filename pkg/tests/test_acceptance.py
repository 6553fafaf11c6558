"""Acceptance suite: one test per criterion, one printed verdict line each.

Run with `pytest -s tests/test_acceptance.py` to see the per-criterion
lines.  Every comparison is exact (integer/rational equality, no
tolerances); the stated runtime budgets are asserted where the criterion
fixes one.
"""

import random
import time
from fractions import Fraction as F

import pytest

from potalg.center import (
    two_twist_psi,
    two_twist_relations,
    centralizer,
    compare_mod_ideal,
    table_central_element,
    table_guards_ok,
    table_relations,
    verify_central,
)
from potalg.classify import classify_weights, enumerate_elliptic
from potalg.commpoly import CommPoly
from potalg.gridal import RelationSet, hilbert_certificate, quotient_by_center_dims
from potalg.matfact import CurvePoint, build_D, det3, point_matrix, symbolic_adjugate_identity, verify_factorization
from potalg.ncalg import (
    NCPoly,
    ParameterSet,
    STANDARD_WEIGHTS,
    make_PQR,
    make_standard_potential,
)
from potalg.poisson import (
    OneForm,
    PoissonStructure,
    fermat_phi,
    frobenius_and_unimodularity,
    jacobi_identity_check,
    jacobi_ring,
    milnor_number,
)
from potalg.series import (
    hh2_nonpositive_dim,
    hh_series,
    one_minus_power_series,
    ph_Aphi_ranks,
    ph_Bphi_dims,
    product_series,
    saito,
)

TABLE_MU = {"E6": 8, "E7": 9, "E8": 10}
SERIES_THROUGH_2D2 = {
    "E6": [1, 3, 6, 10, 15, 21, 28, 36, 45],
    "E7": [1, 2, 4, 6, 9, 12, 16, 20, 25, 30, 36],
    "E8": [1, 1, 2, 3, 4, 5, 7, 8, 10, 12, 14, 16, 19, 21, 24],
}
JACOBI_DIMS = {
    "E6": [1, 3, 3, 1],
    "E7": [1, 2, 3, 2, 1],
    "E8": [1, 1, 2, 2, 2, 1, 1],
}


def _verdict(criterion: int, label: str, detail: str = ""):
    suffix = f" ({detail})" if detail else ""
    print(f"criterion {criterion:2d} [{label}]: PASS{suffix}")


def sample_rational(rng) -> F:
    return F(rng.randint(-(10**6), 10**6), rng.randint(1, 10**3))


def seeded_relation_set(kind: str, seed: int) -> RelationSet:
    ws = STANDARD_WEIGHTS[kind]
    rng = random.Random(seed)
    p, q, r = ws.exponents()
    low = (
        tuple(sample_rational(rng) for _ in range(p - 1)),
        tuple(sample_rational(rng) for _ in range(q - 1)),
        tuple(sample_rational(rng) for _ in range(r - 1)),
    )
    P, Q, R = make_PQR(ws, low)
    t = sample_rational(rng) or F(2)
    c = sample_rational(rng) or F(3)
    params = ParameterSet(t=t, c=c, P_coeffs=P, Q_coeffs=Q, R_coeffs=R)
    return RelationSet.from_potential(make_standard_potential(ws, params), ws)


def test_criterion_01_filtered_flatness():
    t0 = time.time()
    for kind in ("E6", "E7", "E8"):
        ws = STANDARD_WEIGHTS[kind]
        N = 2 * ws.d + 2
        for seed in range(5):
            rs = seeded_relation_set(kind, 1000 + seed)
            report = hilbert_certificate(rs, N, mode="filtered")
            assert report.ok, f"{kind} seed {seed}: first fail {report.first_fail}"
            assert report.dims == SERIES_THROUGH_2D2[kind]
            assert report.dims == product_series(ws.weights, N)
    elapsed = time.time() - t0
    assert elapsed < 300, f"flatness runs took {elapsed:.0f}s (budget 300s)"
    _verdict(1, "flatness E6/E7/E8 x 5 seeds", f"{elapsed:.0f}s")


def test_criterion_02_two_twist_center_oracle():
    rng = random.Random(2024)

    def small():
        return F(rng.randint(-40, 40), rng.randint(1, 12))

    done = 0
    while done < 3:
        q, t = small(), small()
        if not q or not t or q == -1:
            continue
        params = ParameterSet(t=t, q=q, lower=tuple(small() for _ in range(6)))
        rs = two_twist_relations(params)
        t0 = time.time()
        sol = centralizer(rs, 3, "filtered")
        assert sol.solution_dim == 2
        cmp = compare_mod_ideal(rs, sol.normalized_psi, two_twist_psi(params))
        assert cmp.verdict == "proportional"
        assert time.time() - t0 < 60
        done += 1
    _verdict(2, "two-twist family solver vs published element", "3 specializations")


def test_criterion_03_table_elements():
    rng = random.Random(33)

    def small():
        return F(rng.randint(-30, 30), rng.randint(1, 9))

    for kind, bound in (("E6", 3), ("E7", 4)):
        done = 0
        while done < 3:
            t, c = small(), small()
            if not t or not c or not table_guards_ok(kind, t, c):
                continue
            rs = table_relations(kind, t, c)
            psi = table_central_element(kind, t, c)
            assert verify_central(rs, psi)
            sol = centralizer(rs, bound, "graded")
            assert sol.solution_dim == 1
            assert compare_mod_ideal(rs, sol.normalized_psi, psi).verdict == "proportional"
            done += 1
    _verdict(3, "published E6/E7 degree-d elements", "3 generic specializations each")


def test_criterion_04_e8_self_consistency():
    rng = random.Random(44)

    def small():
        return F(rng.randint(-20, 20), rng.randint(1, 8))

    t, c = F(7, 2), F(3)
    rs = table_relations("E8", t, c)
    sol = centralizer(rs, 6, "graded")
    assert sol.solution_dim == 1
    assert verify_central(rs, sol.normalized_psi)
    low = (
        tuple(small() for _ in range(5)),
        (small(), small()),
        (small(),),
    )
    sol_f = centralizer(table_relations("E8", t, c, low), 6, "filtered")
    assert sol_f.solution_dim == 2
    _verdict(4, "E8 center", "graded dim 1, central; filtered dim 2")


def test_criterion_05_quotient_by_center():
    for kind, t, c in (("E6", F(2), F(5)), ("E7", F(3), F(2))):
        ws = STANDARD_WEIGHTS[kind]
        rs = table_relations(kind, t, c)
        psi = table_central_element(kind, t, c)
        dims = quotient_by_center_dims(rs, psi, 2 * ws.d)
        assert dims == one_minus_power_series(ws.weights, ws.d, 2 * ws.d)
    _verdict(5, "central quotient series E6/E7", "up to degree 2d")


def test_criterion_06_jacobi_milnor():
    t0 = time.time()
    for kind in ("E6", "E7", "E8"):
        ws = STANDARD_WEIGHTS[kind]
        report = jacobi_ring(fermat_phi(ws, 1), ws)
        assert report.finite
        assert report.graded_dims == JACOBI_DIMS[kind]
        assert report.mu == TABLE_MU[kind]
        assert tuple(report.graded_dims) == saito(ws.a, ws.b, ws.c, ws.d).quotient
        assert report.mu == milnor_number(ws)
    elapsed = time.time() - t0
    assert elapsed < 30
    _verdict(6, "brute-force derivative quotients", f"totals 8/9/10 in {elapsed:.1f}s")


def test_criterion_07_mu_chain():
    for kind in ("E6", "E7", "E8"):
        ws = STANDARD_WEIGHTS[kind]
        p, q, r = ws.exponents()
        mu = TABLE_MU[kind]
        assert milnor_number(ws) == mu
        assert p + q + r - 1 == mu
        assert hh2_nonpositive_dim(ws) == mu
    _verdict(7, "dimension-count chain", "8 = 8 = 8, 9 = 9 = 9, 10 = 10 = 10")


def test_criterion_08_classification():
    assert enumerate_elliptic(20) == [(1, 1, 1), (1, 1, 2), (1, 2, 3)]
    expected = {
        "E6": (1, 1, 1, 3, (3, 3, 3), (2, 2, 2)),
        "E7": (1, 1, 2, 4, (4, 4, 2), (3, 3, 1)),
        "E8": (1, 2, 3, 6, (6, 3, 2), (5, 2, 1)),
    }
    for kind, (a, b, c, d, pqr, legs) in expected.items():
        res = classify_weights(a, b, c)
        assert res.verdict == kind and res.d == d
        assert (res.p, res.q, res.r) == pqr and res.legs == legs
    rationals = [
        (1, 1, 3, 5),
        (2, 2, 3, None),
        (3, 4, 6, None),
        (4, 6, 9, None),
        (6, 10, 15, None),
        (1, 1, 1, 2),
        (1, 1, 1, 1),
        (1, 2, 2, None),
        (2, 3, 4, None),
        (1, 3, 4, None),
        (1, 1, 2, 3),
        (2, 3, 5, None),
        (3, 3, 4, None),
        (1, 2, 3, 5),
    ]
    for a, b, c, d in rationals:
        assert classify_weights(a, b, c, d).verdict == "Rational", (a, b, c, d)
    _verdict(8, "weight classification", f"3 table rows + {len(rationals)} rational triples")


def test_criterion_09_matrix_factorizations():
    t0 = time.time()
    assert symbolic_adjugate_identity()
    rng = random.Random(99)

    def nonzero():
        while True:
            v = F(rng.randint(-60, 60), rng.randint(1, 15))
            if v:
                return v

    for _ in range(100):
        pt = CurvePoint(nonzero(), nonzero(), nonzero())
        assert verify_factorization(build_D(pt))
    # negative control: off-curve tau never matches the determinant
    for _ in range(10):
        a, b, g = nonzero(), nonzero(), nonzero()
        tau_off = (a**3 + b**3 + g**3) / (a * b * g) + 1
        psi_off = CommPoly({(3, 0, 0): 1, (0, 3, 0): 1, (0, 0, 3): 1, (1, 1, 1): -tau_off})
        assert det3(point_matrix(a, b, g)) != psi_off * (-(a * b * g))
    elapsed = time.time() - t0
    assert elapsed < 60
    _verdict(9, "matrix factorizations", f"100 points + symbolic identity in {elapsed:.1f}s")


def test_criterion_10_poisson_invariants():
    rng = random.Random(1010)
    ws = STANDARD_WEIGHTS["E6"]
    x, y, z = (CommPoly.variable(i) for i in range(3))
    for _ in range(50):
        terms = {}
        for _ in range(rng.randint(1, 6)):
            e = (rng.randint(0, 2), rng.randint(0, 2), rng.randint(0, 2))
            terms[e] = terms.get(e, 0) + rng.randint(-9, 9)
        phi = CommPoly(terms)
        ps = PoissonStructure(phi, ws)
        assert jacobi_identity_check(ps)
        for v in (x, y, z):
            assert ps.bracket(phi, v).is_zero()
    # the three worked one-form examples
    phi = fermat_phi(ws, F(2))
    assert frobenius_and_unimodularity(PoissonStructure(phi, ws).alpha()) == {
        "poisson": True,
        "unimodular": True,
    }
    assert frobenius_and_unimodularity(OneForm(CommPoly.zero(), x, CommPoly.zero())) == {
        "poisson": True,
        "unimodular": False,
    }
    assert frobenius_and_unimodularity(OneForm(z, x, CommPoly.zero())) == {
        "poisson": False,
        "unimodular": False,
    }
    _verdict(10, "bracket identities", "50 random structure polynomials + 3 one-forms")


def test_criterion_11_series_formulas():
    ws6 = STANDARD_WEIGHTS["E6"]
    assert hh_series(2, ws6, cap=3).window(-2, 3) == [3, 3, 2, 3, 3, 2]
    k0 = hh_series(0, ws6, cap=9)
    assert list(k0.coeffs) == [1 if m % 3 == 0 else 0 for m in range(10)]
    assert hh_series(3, ws6, cap=3).window(-3, 3) == [1, 3, 3, 2, 3, 3, 2]
    assert ph_Bphi_dims(STANDARD_WEIGHTS["E6"])[:5] == [1, 1, 9, 8, 8]
    assert ph_Bphi_dims(STANDARD_WEIGHTS["E7"])[:5] == [1, 1, 10, 9, 9]
    assert ph_Aphi_ranks(STANDARD_WEIGHTS["E6"]) == (1, 1, 8, 8)
    assert ph_Aphi_ranks(STANDARD_WEIGHTS["E7"]) == (1, 1, 9, 9)
    assert ph_Aphi_ranks(STANDARD_WEIGHTS["E8"]) == (1, 1, 10, 10)
    _verdict(11, "cohomology series", "windows, nonpositive sums, module ranks")
