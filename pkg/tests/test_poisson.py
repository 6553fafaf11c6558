import random
from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from potalg.commpoly import CommPoly
from potalg.ncalg import ParameterSet, STANDARD_WEIGHTS, WeightSystem
from potalg.poisson import (
    OneForm,
    PoissonStructure,
    bracket,
    build_delpezzo_phi,
    fermat_phi,
    frobenius_and_unimodularity,
    jacobi_identity_check,
    jacobi_ring,
    milnor_number,
)

x, y, z = (CommPoly.variable(i) for i in range(3))
WS111 = WeightSystem(1, 1, 1)


def random_poly(rng, max_deg=3, nterms=4):
    terms = {}
    for _ in range(nterms):
        e = tuple(rng.randint(0, max_deg) for _ in range(3))
        terms[e] = terms.get(e, 0) + rng.randint(-9, 9)
    return CommPoly(terms)


class TestBracket:
    def test_xyz_structure(self):
        ps = PoissonStructure(x * y * z, WS111)
        assert ps.bracket(x, y) == x * y
        assert ps.bracket(y, z) == y * z
        assert ps.bracket(z, x) == z * x

    def test_fermat_plus_twist(self):
        tau = F(5)
        phi = (x**3 + y**3 + z**3) / 3 + tau * (x * y * z)
        ps = PoissonStructure(phi, WS111)
        assert ps.bracket(x, y) == z**2 + tau * (x * y)

    def test_casimir(self):
        rng = random.Random(3)
        for _ in range(10):
            phi = random_poly(rng)
            ps = PoissonStructure(phi, WS111)
            for v in (x, y, z):
                assert ps.bracket(phi, v).is_zero()

    @settings(max_examples=25, deadline=None)
    @given(st.integers(0, 10**6))
    def test_antisymmetry_and_leibniz(self, seed):
        rng = random.Random(seed)
        phi = random_poly(rng)
        ps = PoissonStructure(phi, WS111)
        f, g, h = (random_poly(rng, max_deg=2, nterms=3) for _ in range(3))
        assert ps.bracket(f, g) == -ps.bracket(g, f)
        assert ps.bracket(f, g * h) == ps.bracket(f, g) * h + g * ps.bracket(f, h)

    def test_bilinearity(self):
        rng = random.Random(4)
        phi = random_poly(rng)
        ps = PoissonStructure(phi, WS111)
        f, g, h = (random_poly(rng, 2, 3) for _ in range(3))
        assert ps.bracket(f + g, h) == ps.bracket(f, h) + ps.bracket(g, h)


class TestJacobiIdentity:
    def test_random_cubics(self):
        rng = random.Random(5)
        for _ in range(10):
            assert jacobi_identity_check(PoissonStructure(random_poly(rng), WS111))

    def test_delpezzo_family(self):
        for kind in ("E6", "E7", "E8"):
            ws = STANDARD_WEIGHTS[kind]
            phi = build_delpezzo_phi(ParameterSet(tau=F(2), nu=F(1)), ws)
            assert jacobi_identity_check(PoissonStructure(phi, ws))


class TestFrobenius:
    def test_exact_form(self):
        phi = random_poly(random.Random(6))
        alpha = PoissonStructure(phi, WS111).alpha()
        assert frobenius_and_unimodularity(alpha) == {"poisson": True, "unimodular": True}

    def test_x_dy(self):
        alpha = OneForm(CommPoly.zero(), x, CommPoly.zero())
        assert frobenius_and_unimodularity(alpha) == {"poisson": True, "unimodular": False}

    def test_z_dx_plus_x_dy(self):
        alpha = OneForm(z, x, CommPoly.zero())
        assert frobenius_and_unimodularity(alpha) == {"poisson": False, "unimodular": False}

    def test_bivector_round_trip(self):
        alpha = OneForm(z, x * y, y**2)
        assert alpha.to_bivector().to_oneform() == alpha


class TestJacobiRing:
    @pytest.mark.parametrize(
        "kind,dims,mu",
        [
            ("E6", [1, 3, 3, 1], 8),
            ("E7", [1, 2, 3, 2, 1], 9),
            ("E8", [1, 1, 2, 2, 2, 1, 1], 10),
        ],
    )
    def test_canonical_families(self, kind, dims, mu):
        # tau = 1 is generic for the integer-coefficient normalization
        ws = STANDARD_WEIGHTS[kind]
        report = jacobi_ring(fermat_phi(ws, 1), ws)
        assert report.finite
        assert report.graded_dims == dims
        assert report.mu == mu

    def test_monic_normalization_generic_tau(self):
        # same dims for the 1/p-normalized family at a generic tau
        ws = STANDARD_WEIGHTS["E7"]
        report = jacobi_ring(build_delpezzo_phi(ParameterSet(tau=F(2)), ws), ws)
        assert report.finite and report.mu == 9
        assert report.graded_dims == [1, 2, 3, 2, 1]

    def test_monic_normalization_tau_one_is_degenerate(self):
        # with the 1/p coefficients the critical locus at tau = 1 is a curve
        ws = STANDARD_WEIGHTS["E7"]
        report = jacobi_ring(build_delpezzo_phi(ParameterSet(tau=F(1)), ws), ws)
        assert not report.finite

    def test_palindromic_dims(self):
        for kind in ("E6", "E7", "E8"):
            ws = STANDARD_WEIGHTS[kind]
            dims = jacobi_ring(fermat_phi(ws, 1), ws).graded_dims
            assert dims == dims[::-1]

    def test_singular_member_detected(self):
        # the E6 discriminant: x^3+y^3+z^3 + s*xyz is singular iff s^3 = -27
        ws = STANDARD_WEIGHTS["E6"]
        report = jacobi_ring(fermat_phi(ws, F(-3)), ws)
        assert not report.finite
        assert report.mu is None

    def test_rejects_inhomogeneous(self):
        ws = STANDARD_WEIGHTS["E6"]
        with pytest.raises(ValueError):
            jacobi_ring(x**3 + x, ws)


class TestMilnorNumber:
    def test_table_values(self):
        assert milnor_number(WeightSystem(1, 1, 1), 3) == 8
        assert milnor_number(WeightSystem(1, 1, 2), 4) == 9
        assert milnor_number(WeightSystem(1, 2, 3), 6) == 10

    def test_non_integral_flagged(self):
        mu = milnor_number(WeightSystem(1, 1, 3), 5)
        assert mu == F(32, 3)
        assert mu.denominator != 1

    def test_product_form_crosscheck(self):
        for ws in STANDARD_WEIGHTS.values():
            a, b, c = ws.weights
            assert milnor_number(ws) == F((a + b) * (a + c) * (b + c), a * b * c)


class TestDelPezzoFamily:
    def test_e6_canonical(self):
        phi = build_delpezzo_phi(ParameterSet(tau=F(1)), WS111)
        assert phi == (x**3 + y**3 + z**3) / 3 + x * y * z

    def test_e7_with_offsets(self):
        ws = STANDARD_WEIGHTS["E7"]
        phi = build_delpezzo_phi(ParameterSet(tau=F(2), nu=F(5)), ws)
        expected = 2 * (x * y * z) + (x**4) / 4 + (y**4) / 4 + (z**2) / 2 + CommPoly.scalar(5)
        assert phi == expected

    def test_parameter_count_is_mu(self):
        # free coefficients: (p-1)+(q-1)+(r-1) lower ones plus tau and nu
        for kind in ("E6", "E7", "E8"):
            ws = STANDARD_WEIGHTS[kind]
            p, q, r = ws.exponents()
            count = (p - 1) + (q - 1) + (r - 1) + 2
            assert count == milnor_number(ws) == p + q + r - 1

    def test_tau_zero_rejected(self):
        with pytest.raises(ValueError):
            build_delpezzo_phi(ParameterSet(tau=F(0)), WS111)
