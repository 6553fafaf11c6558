import random
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
from potalg.gridal import RelationSet, quotient_basis
from potalg.ncalg import NCPoly, ParameterSet, STANDARD_WEIGHTS

X, Y, Z = 0, 1, 2


def rand_fraction(rng, lo=20, den=8):
    return F(rng.randint(-lo, lo), rng.randint(1, den))


def random_two_twist_params(seed):
    rng = random.Random(seed)
    while True:
        q, t = rand_fraction(rng), rand_fraction(rng)
        # q = -1 kills the head factor; q = 0 or t = 0 degenerate
        if q and t and q != -1:
            break
    lower = tuple(rand_fraction(rng) for _ in range(6))
    return ParameterSet(t=t, q=q, lower=lower)


class TestTableElements:
    def test_e6_central_and_unique(self):
        t, c = F(2), F(5)
        rs = table_relations("E6", t, c)
        psi = table_central_element("E6", t, c)
        assert verify_central(rs, psi)
        sol = centralizer(rs, 3, "graded")
        assert sol.solution_dim == 1
        assert compare_mod_ideal(rs, sol.normalized_psi, psi).verdict == "proportional"

    def test_e7_central_and_unique(self):
        t, c = F(3), F(2)
        rs = table_relations("E7", t, c)
        psi = table_central_element("E7", t, c)
        assert verify_central(rs, psi)
        sol = centralizer(rs, 4, "graded")
        assert sol.solution_dim == 1
        assert compare_mod_ideal(rs, sol.normalized_psi, psi).verdict == "proportional"

    def test_x_not_central(self):
        rs = table_relations("E6", F(2), F(5))
        assert not verify_central(rs, NCPoly.variable(X))

    def test_guards(self):
        assert not table_guards_ok("E6", 2, -1)  # c^3 = -1
        assert not table_guards_ok("E7", 4, 2)  # t^2 = c^4
        with pytest.raises(ValueError):
            table_central_element("E6", F(2), F(-1))
        with pytest.raises(ValueError):
            table_central_element("E7", F(4), F(2))
        with pytest.raises(ValueError):
            table_central_element("E8", F(2), F(3))

    def test_scalar_robustness(self):
        # rescaling a relation leaves the solution space unchanged
        t, c = F(2), F(5)
        rs = table_relations("E6", t, c)
        scaled = RelationSet(
            (rs.relations[0].scale(F(7, 2)),) + rs.relations[1:], rs.ws
        )
        a = centralizer(rs, 3, "graded")
        b = centralizer(scaled, 3, "graded")
        assert a.solution_dim == b.solution_dim == 1
        assert a.normalized_psi == b.normalized_psi


class TestFilteredSolver:
    def test_e6_filtered_dimension_two(self):
        rng = random.Random(1)
        low = (
            (rand_fraction(rng), rand_fraction(rng)),
            (rand_fraction(rng), rand_fraction(rng)),
            (rand_fraction(rng), rand_fraction(rng)),
        )
        rs = table_relations("E6", F(5, 2), F(3), low)
        sol = centralizer(rs, 3, "filtered")
        assert sol.solution_dim == 2
        # the constants are one of the two dimensions
        assert any(f.coeff(()) and f.degree(rs.ws) == 0 for f in sol.basis) or any(
            f.coeff(()) for f in sol.basis
        )
        psi = sol.normalized_psi
        assert psi.coeff(()) == 0
        assert verify_central(rs, psi)

    def test_e7_filtered_dimension_two(self):
        rng = random.Random(5)
        low = (
            tuple(rand_fraction(rng) for _ in range(3)),
            tuple(rand_fraction(rng) for _ in range(3)),
            (rand_fraction(rng),),
        )
        rs = table_relations("E7", F(3, 2), F(2), low)
        sol = centralizer(rs, 4, "filtered")
        assert sol.solution_dim == 2
        assert verify_central(rs, sol.normalized_psi)

    def test_commutative_everything_central(self):
        rs = table_relations("E6", F(1), F(0))
        sol = centralizer(rs, 3, "filtered")
        assert sol.solution_dim == quotient_basis(rs, 3, "filtered").dimension == 20

    def test_normalized_psi_leading_coefficient(self):
        rng = random.Random(2)
        low = (
            (rand_fraction(rng), rand_fraction(rng)),
            (rand_fraction(rng), rand_fraction(rng)),
            (rand_fraction(rng), rand_fraction(rng)),
        )
        rs = table_relations("E6", F(3), F(2), low)
        psi = centralizer(rs, 3, "filtered").normalized_psi
        ws = rs.ws
        first = min(psi.terms, key=ws.deglex_key)
        assert psi.terms[first] == 1

    def test_leading_term_compatibility(self):
        # the top part of the filtered psi is central for the leading relations
        rng = random.Random(3)
        low = (
            (rand_fraction(rng), rand_fraction(rng)),
            (rand_fraction(rng), rand_fraction(rng)),
            (rand_fraction(rng), rand_fraction(rng)),
        )
        t, c = F(7, 3), F(2)
        rs = table_relations("E6", t, c, low)
        psi = centralizer(rs, 3, "filtered").normalized_psi
        top = psi.leading_part(rs.ws)
        assert verify_central(table_relations("E6", t, c), top)


class TestE8SelfConsistency:
    def test_graded_and_filtered(self):
        t, c = F(2), F(3)
        rs = table_relations("E8", t, c)
        sol = centralizer(rs, 6, "graded")
        assert sol.solution_dim == 1
        assert verify_central(rs, sol.normalized_psi)
        rng = random.Random(4)
        low = (
            tuple(rand_fraction(rng) for _ in range(5)),
            (rand_fraction(rng), rand_fraction(rng)),
            (rand_fraction(rng),),
        )
        rs_f = table_relations("E8", t, c, low)
        sol_f = centralizer(rs_f, 6, "filtered")
        assert sol_f.solution_dim == 2


class TestTwoTwistFamily:
    def test_homogeneous_specialization(self):
        ps = ParameterSet(t=F(3), q=F(2))
        psi = two_twist_psi(ps)
        assert all(len(w) == 3 for w in psi.support())
        assert verify_central(two_twist_relations(ps), psi)

    def test_random_specializations_central(self):
        for seed in range(3):
            ps = random_two_twist_params(seed)
            assert verify_central(two_twist_relations(ps), two_twist_psi(ps))

    def test_solver_proportional(self):
        for seed in range(3):
            ps = random_two_twist_params(10 + seed)
            rs = two_twist_relations(ps)
            sol = centralizer(rs, 3, "filtered")
            assert sol.solution_dim == 2
            cmp = compare_mod_ideal(rs, sol.normalized_psi, two_twist_psi(ps))
            assert cmp.verdict == "proportional"

    def test_equal_twists_collapse(self):
        # q = t kills the (q^3 - t^3) cyclic terms
        t = F(5, 3)
        ps = ParameterSet(t=t, q=t)
        psi = two_twist_psi(ps)
        head = t * (t + 1)
        expected = NCPoly(
            {
                (Y, Y, Y): head * t * (t**3 + 1),
                (Z, Y, X): head * (-t) * (t**3 + 1),
            }
        )
        assert psi == expected

    def test_matches_single_twist_table_form(self):
        # at q = t the family reduces to the unit-weight table element with c = t
        t = F(5, 3)
        ps = ParameterSet(t=t, q=t)
        rs = two_twist_relations(ps)
        table = table_central_element("E6", t, t)
        cmp = compare_mod_ideal(rs, two_twist_psi(ps), table)
        assert cmp.verdict == "proportional"

    def test_needs_q(self):
        with pytest.raises(ValueError):
            two_twist_relations(ParameterSet(t=F(2)))


class TestCompareModIdeal:
    def test_constant_shift_is_proportional(self):
        ps = random_two_twist_params(20)
        rs = two_twist_relations(ps)
        psi = two_twist_psi(ps)
        cmp = compare_mod_ideal(rs, psi, psi + NCPoly.scalar(7))
        assert cmp.verdict == "proportional"
        assert cmp.scalar == 1

    def test_scaled_is_proportional_with_scalar(self):
        ps = random_two_twist_params(21)
        rs = two_twist_relations(ps)
        psi = two_twist_psi(ps)
        cmp = compare_mod_ideal(rs, psi.scale(F(3, 4)), psi)
        assert cmp.verdict == "proportional"
        assert cmp.scalar == F(3, 4)

    def test_generator_shift_is_distinct(self):
        ps = random_two_twist_params(22)
        rs = two_twist_relations(ps)
        psi = two_twist_psi(ps)
        assert compare_mod_ideal(rs, psi, psi + NCPoly.variable(X)).verdict == "distinct"

    def test_identical_is_equal(self):
        ps = random_two_twist_params(23)
        rs = two_twist_relations(ps)
        psi = two_twist_psi(ps)
        assert compare_mod_ideal(rs, psi, psi).verdict == "equal"
