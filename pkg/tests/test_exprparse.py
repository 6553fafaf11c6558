from fractions import Fraction as F

import pytest

from potalg.commpoly import CommPoly
from potalg.exprparse import (
    ExprError,
    free_parameters,
    lower_commpoly,
    lower_ncpoly,
    lower_potential,
    parse_expression,
    print_expression,
)
from potalg.ncalg import (
    NCPoly,
    ParameterSet,
    STANDARD_WEIGHTS,
    make_standard_potential,
)

GOLDEN = [
    "x*y*z - t*y*x*z + c*(x^3/3 + y^3/3 + z^3/3)",
    "x*y - y*x",
    "x y",
    "-x + 2/3*y^2",
    "(x + y)*(x - y)",
    "x*-y",
    "t*(x + y + z)^2/4",
    "x^3/3",
    "1/2",
    "3",
]


class TestParsing:
    def test_standard_potential_lowering(self):
        ast = parse_expression(GOLDEN[0])
        pot = lower_potential(ast, {"t": F(2), "c": F(5)})
        ws = STANDARD_WEIGHTS["E6"]
        assert pot == make_standard_potential(ws, ParameterSet(t=F(2), c=F(5)))

    def test_commutator(self):
        f = lower_ncpoly(parse_expression("x*y - y*x"))
        assert f == NCPoly({(0, 1): 1, (1, 0): -1})

    def test_juxtaposition(self):
        assert parse_expression("x y") == parse_expression("x*y")
        assert parse_expression("2x") == parse_expression("2*x")
        assert parse_expression("x(y + z)") == parse_expression("x*(y + z)")

    def test_noncommutative_order(self):
        xy = lower_ncpoly(parse_expression("x*y"))
        yx = lower_ncpoly(parse_expression("y*x"))
        assert xy != yx

    def test_power_expansion(self):
        f = lower_ncpoly(parse_expression("(x + y)^2"))
        assert f.coeff((0, 1)) == 1 and f.coeff((1, 0)) == 1

    def test_factor_division(self):
        f = lower_ncpoly(parse_expression("x^3/3"))
        assert f == NCPoly({(0, 0, 0): F(1, 3)})

    def test_rational_literal(self):
        assert lower_ncpoly(parse_expression("5/2")) == NCPoly.scalar(F(5, 2))

    def test_commutative_lowering(self):
        f = lower_commpoly(parse_expression("x*y - y*x"))
        assert f.is_zero()
        g = lower_commpoly(parse_expression("x*y*x"))
        assert g == CommPoly({(2, 1, 0): 1})


class TestErrors:
    def test_syntax_error_position(self):
        with pytest.raises(ExprError) as exc:
            parse_expression("x +* y")
        assert exc.value.line == 1 and exc.value.col == 4

    def test_multiline_position(self):
        with pytest.raises(ExprError) as exc:
            parse_expression("x +\n y + $")
        assert exc.value.line == 2

    def test_unclosed_paren(self):
        with pytest.raises(ExprError):
            parse_expression("(x + y")

    def test_unbound_parameter(self):
        ast = parse_expression("t*x")
        with pytest.raises(ValueError, match="unbound"):
            lower_ncpoly(ast, {})

    def test_zero_denominator(self):
        with pytest.raises(ExprError):
            parse_expression("x/0")


class TestRoundTrip:
    @pytest.mark.parametrize("text", GOLDEN)
    def test_print_parse_identity(self, text):
        ast = parse_expression(text)
        assert parse_expression(print_expression(ast)) == ast

    def test_free_parameters(self):
        ast = parse_expression(GOLDEN[0])
        assert free_parameters(ast) == {"t", "c"}
