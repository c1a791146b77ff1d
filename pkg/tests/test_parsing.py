import random

import pytest

from sexticlab.parsing import (
    MAX_EXPONENT,
    PolyExpr,
    PolyParseError,
    parse_poly,
    render_poly,
)
from sexticlab.polyz import IntPoly


class TestParse:
    def test_golden_first(self):
        assert parse_poly("x^6-6x^4+9x^2-3") == IntPoly([-3, 0, 9, 0, -6, 0, 1])

    def test_bare_constant(self):
        assert parse_poly("7") == IntPoly([7])

    def test_repeated_exponents_sum(self):
        assert parse_poly("x^2+x^2") == IntPoly([0, 0, 2])

    def test_leading_sign(self):
        assert parse_poly("-x^2+1") == IntPoly([1, 0, -1])
        assert parse_poly("+3x") == IntPoly([0, 3])

    def test_whitespace_ignored(self):
        assert parse_poly(" x^6 - 6 x^4 + 9 x^2 - 3 ") == IntPoly([-3, 0, 9, 0, -6, 0, 1])

    def test_bare_x_and_exponent_one(self):
        assert parse_poly("x") == IntPoly([0, 1])
        assert parse_poly("5x") == IntPoly([0, 5])
        assert parse_poly("2x^1+x^0") == IntPoly([1, 2])

    def test_cancellation_to_zero(self):
        assert parse_poly("x^3-x^3").is_zero

    def test_coefficient_list(self):
        assert parse_poly("-3,0,9,0,-6,0,1") == IntPoly([-3, 0, 9, 0, -6, 0, 1])
        assert parse_poly(" 1 , 2 , 3 ") == IntPoly([1, 2, 3])


class TestParseErrors:
    def test_empty(self):
        with pytest.raises(PolyParseError):
            parse_poly("")

    def test_dangling_sign(self):
        with pytest.raises(PolyParseError) as err:
            parse_poly("x^2+")
        assert err.value.position == 4

    def test_garbage_token_position(self):
        with pytest.raises(PolyParseError) as err:
            parse_poly("x^2*3")
        assert err.value.position == 3

    def test_exponent_cap(self):
        parse_poly(f"x^{MAX_EXPONENT}")
        with pytest.raises(PolyParseError):
            parse_poly(f"x^{MAX_EXPONENT + 1}")

    def test_missing_exponent(self):
        with pytest.raises(PolyParseError):
            parse_poly("x^")
        with pytest.raises(PolyParseError):
            parse_poly("x^-2")

    def test_bad_coefficient_list(self):
        with pytest.raises(PolyParseError):
            parse_poly("1,,2")
        with pytest.raises(PolyParseError):
            parse_poly("1,x,2")


class TestRender:
    def test_golden_first(self):
        assert render_poly(IntPoly([-3, 0, 9, 0, -6, 0, 1])) == "x^6-6x^4+9x^2-3"

    def test_zero(self):
        assert render_poly(IntPoly()) == "0"

    def test_unit_coefficients(self):
        assert render_poly(IntPoly([0, -1, 1])) == "x^2-x"
        assert render_poly(IntPoly([-1, 0, 1])) == "x^2-1"

    def test_roundtrip_random(self):
        rng = random.Random(51)
        for _ in range(500):
            deg = rng.randrange(0, 9)
            cs = [rng.randrange(-99, 100) for _ in range(deg + 1)]
            p = IntPoly(cs)
            assert parse_poly(render_poly(p)) == p

    def test_polyexpr_roundtrip(self):
        expr = PolyExpr.parse("x^6+4x^4+x^2-1")
        assert parse_poly(expr.render()) == expr.parsed
