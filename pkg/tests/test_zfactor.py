import random

import pytest

from sexticlab.polyz import IntPoly
from sexticlab.zfactor import (
    factor_q,
    is_irreducible_q,
    proper_factor,
    rational_roots,
)


def reassemble(factors):
    prod = IntPoly([1])
    for f, m in factors:
        for _ in range(m):
            prod = prod * f
    return prod


class TestRationalRoots:
    def test_cube_minus_one(self):
        assert rational_roots(IntPoly([-1, 0, 0, 1])) == [1]

    def test_a4_family_has_no_roots(self):
        # f(+-1) = 6n+5 is never 0, and no divisor of the constant term works
        for n in range(-10, 11):
            p = IntPoly([-1, 0, 3 * n + 1, 0, 3 * n + 4, 0, 1])
            assert rational_roots(p) == []

    def test_square_difference(self):
        assert rational_roots(IntPoly([-4, 0, 1])) == [-2, 2]

    def test_zero_root_from_stripped_powers(self):
        assert rational_roots(IntPoly([0, 0, -1, 1])) == [0, 1]

    def test_zero_poly_rejected(self):
        with pytest.raises(ValueError):
            rational_roots(IntPoly())


class TestIsIrreducible:
    def test_f3_base_member(self):
        assert is_irreducible_q(IntPoly([1, 0, 6, 0, 5, 0, 1]))

    def test_difference_of_squares_shape(self):
        # x^2(x^2+1)^2 - 1 = (x(x^2+1)-1)(x(x^2+1)+1)
        f = IntPoly([-1, 0, 1, 0, 2, 0, 1])
        assert not is_irreducible_q(f)

    def test_linear(self):
        assert is_irreducible_q(IntPoly([-1, 1]))

    def test_nonmonic_rejected(self):
        with pytest.raises(ValueError):
            is_irreducible_q(IntPoly([1, 2]))

    def test_degree_cap(self):
        with pytest.raises(ValueError):
            is_irreducible_q(IntPoly([1] + [0] * 12 + [1]))

    def test_repeated_factor_is_reducible(self):
        f = IntPoly([1, 1]) ** 2
        assert not is_irreducible_q(f)

    def test_no_sixcycle_group_falls_back_cleanly(self):
        # the A4 quadrinomials are never irreducible mod any prime, so this
        # exercises the full factorization path on an irreducible input
        assert is_irreducible_q(IntPoly([-1, 0, 1, 0, 4, 0, 1]))


class TestFactorQ:
    def test_h_identity_f1_shape(self):
        # x^6-9x^4+6x^2-1 = (x^3-3x^2+1)(x^3+3x^2-1) at (a,b) = (3,1)
        factors = factor_q(IntPoly([-1, 0, 6, 0, -9, 0, 1]))
        assert factors == [
            (IntPoly([-1, 0, 3, 1]), 1),
            (IntPoly([1, 0, -3, 1]), 1),
        ]

    def test_h_identity_f3_shape(self):
        # x^6-6x^4+5x^2-1 = (x^3+2x^2-x-1)(x^3-2x^2-x+1) at n=0
        factors = factor_q(IntPoly([-1, 0, 5, 0, -6, 0, 1]))
        assert factors == [
            (IntPoly([-1, -1, 2, 1]), 1),
            (IntPoly([1, -1, -2, 1]), 1),
        ]

    def test_x_squared(self):
        assert factor_q(IntPoly([0, 0, 1])) == [(IntPoly([0, 1]), 2)]

    def test_nonmonic_rejected(self):
        with pytest.raises(ValueError):
            factor_q(IntPoly([1, 0, 2]))

    def test_degree_cap(self):
        with pytest.raises(ValueError):
            factor_q(IntPoly([1] + [0] * 12 + [1]))

    def test_reassembly_random(self):
        rng = random.Random(31)
        for _ in range(250):
            deg = rng.randrange(1, 8)
            cs = [rng.randrange(-9, 10) for _ in range(deg)] + [1]
            p = IntPoly(cs)
            factors = factor_q(p)
            assert reassemble(factors) == p
            for f, _ in factors:
                assert f.is_monic
                assert is_irreducible_q(f)

    def test_agreement_with_irreducibility(self):
        rng = random.Random(32)
        for _ in range(200):
            deg = rng.randrange(2, 7)
            cs = [rng.randrange(-6, 7) for _ in range(deg)] + [1]
            p = IntPoly(cs)
            factors = factor_q(p)
            single = len(factors) == 1 and factors[0][1] == 1
            assert is_irreducible_q(p) == single

    def test_recovers_cubic_products(self):
        # products of the two irreducible cubics from the splitting identities
        rng = random.Random(33)
        found = 0
        while found < 60:
            a = rng.randrange(-10, 11)
            b = rng.randrange(-10, 11)
            left = IntPoly([b, 0, -a, 1])
            right = IntPoly([-b, 0, a, 1])
            if not (is_irreducible_q(left) and is_irreducible_q(right)):
                continue
            found += 1
            factors = factor_q(left * right)
            assert sorted(f.coeffs for f, _ in factors) == sorted(
                [left.coeffs, right.coeffs]
            )

    def test_multiplicities(self):
        f = IntPoly([1, 1]) ** 3 * IntPoly([2, 1]) * IntPoly([1, 1, 1]) ** 2
        factors = factor_q(f)
        assert (IntPoly([1, 1]), 3) in factors
        assert (IntPoly([2, 1]), 1) in factors
        assert (IntPoly([1, 1, 1]), 2) in factors
        assert reassemble(factors) == f

    def test_proper_factor(self):
        assert proper_factor(IntPoly([1, 0, 6, 0, 5, 0, 1])) is None
        f = proper_factor(IntPoly([-1, 0, 6, 0, -9, 0, 1]))
        assert f is not None and 0 < f.degree < 6
