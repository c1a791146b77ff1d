import random

import pytest

from sexticlab.errors import ReduciblePolynomialError
from sexticlab.intkit import valuation
from sexticlab.monogenic import (
    MonogenicStatus,
    dedekind_prime_ok,
    is_monogenic_generic,
    jkk_check,
    jkk_poly,
    jly_check,
    jly_poly,
)
from sexticlab.polyz import IntPoly, discriminant
from sexticlab.zfactor import is_irreducible_q


class TestDedekind:
    def test_passes_on_monogenic_base(self):
        assert dedekind_prime_ok(IntPoly([1, 0, 6, 0, 5, 0, 1]), 7)

    def test_fails_on_resolvent_with_index_prime(self):
        # resolvent of the one-parameter C6 family at n = 2; 5 divides n^2+n-1
        assert not dedekind_prime_ok(IntPoly([1, 14, 9, 1]), 5)

    def test_vacuous_when_prime_misses_discriminant(self):
        assert dedekind_prime_ok(IntPoly([1, 1, 1]), 5)

    def test_nonmonic_rejected(self):
        with pytest.raises(ValueError):
            dedekind_prime_ok(IntPoly([1, 0, 2]), 3)

    def test_nonprime_rejected(self):
        with pytest.raises(ValueError):
            dedekind_prime_ok(IntPoly([1, 1, 1]), 6)

    def test_reducible_rejected(self):
        with pytest.raises(ReduciblePolynomialError):
            dedekind_prime_ok(IntPoly([-4, 0, 1]), 3)

    def test_true_whenever_square_misses_discriminant(self):
        rng = random.Random(41)
        checked = 0
        while checked < 150:
            deg = rng.randrange(2, 7)
            T = IntPoly([rng.randrange(-9, 10) for _ in range(deg)] + [1])
            if not is_irreducible_q(T):
                continue
            disc = discriminant(T)
            p = rng.choice([2, 3, 5, 7, 11, 13])
            if valuation(disc, p) >= 2:
                continue
            checked += 1
            assert dedekind_prime_ok(T, p), (T, p)


class TestGeneric:
    def test_golden_first(self):
        v = is_monogenic_generic(IntPoly([-3, 0, 9, 0, -6, 0, 1]))
        assert v.status is MonogenicStatus.MONOGENIC
        assert v.witness_prime is None and v.unfactored is None
        assert all(ok for _, ok in v.checked_primes)

    def test_nonmonogenic_with_witness(self):
        v = is_monogenic_generic(IntPoly([1, 0, 14, 0, 9, 0, 1]))
        assert v.status is MonogenicStatus.NOT_MONOGENIC
        assert v.witness_prime == 5
        assert (5, False) in v.checked_primes
        # the witness fails in isolation too
        assert not dedekind_prime_ok(IntPoly([1, 0, 14, 0, 9, 0, 1]), 5)

    def test_a4_base_member(self):
        v = is_monogenic_generic(IntPoly([-1, 0, 1, 0, 4, 0, 1]))
        assert v.status is MonogenicStatus.MONOGENIC

    def test_reducible_rejected(self):
        with pytest.raises(ReduciblePolynomialError):
            is_monogenic_generic(IntPoly([-1, 0, 1, 0, 2, 0, 1]))

    def test_unknown_on_budget_exhaustion(self):
        # x^2 + (p1 p2)^2 has discriminant -4 (p1 p2)^2; with starved budgets
        # the squared semiprime stays unfactored while the prime 2 passes
        m = 1000003 * 1000033
        f = IntPoly([m * m, 0, 1])
        v = is_monogenic_generic(f, trial_bound=10**4, rho_budget=0)
        assert v.status is MonogenicStatus.UNKNOWN
        assert v.unfactored is not None and v.unfactored > 1
        assert v.checked_primes == ((2, True),)

    def test_linear_is_monogenic(self):
        v = is_monogenic_generic(IntPoly([7, 1]))
        assert v.status is MonogenicStatus.MONOGENIC


class TestJly:
    def test_first_quadrinomial(self):
        assert jly_check(-3, -3).status is MonogenicStatus.MONOGENIC

    def test_second_quadrinomial(self):
        assert jly_check(3, 1).status is MonogenicStatus.MONOGENIC

    def test_square_divisor_of_b_fails_at_two(self):
        v = jly_check(-3, -12)
        assert v.status is MonogenicStatus.NOT_MONOGENIC
        assert v.witness_prime == 2
        g = is_monogenic_generic(jly_poly(-3, -12))
        assert g.status is MonogenicStatus.NOT_MONOGENIC

    def test_reducible_rejected(self):
        with pytest.raises(ReduciblePolynomialError):
            jly_check(1, -1)

    def test_condition_two_readings_agree(self):
        # inside the branch p | a, p coprime to b, the two parenthesizations
        # b1((b1 b)^3 + b c1^3) and b1 b (b1^3 b^2 + c1^3) differ by the unit b
        for p in (2, 3):
            for a in range(-30, 31):
                if a % p != 0:
                    continue
                for b in range(-30, 31):
                    if b % p == 0 or b == 0:
                        continue
                    b1 = 2 * a // p
                    c1 = (b + (-b) ** p) // p
                    lhs = (b1 * ((b1 * b) ** 3 + b * c1**3)) % p != 0
                    rhs = (b1 * b * (b1**3 * b * b + c1**3)) % p != 0
                    assert lhs == rhs, (p, a, b)


class TestJkk:
    def test_first_quadrinomial(self):
        assert jkk_check(-7, -1).status is MonogenicStatus.MONOGENIC

    def test_second_quadrinomial(self):
        assert jkk_check(1, 3).status is MonogenicStatus.MONOGENIC

    def test_reducible_rejected(self):
        with pytest.raises(ReduciblePolynomialError):
            jkk_check(-4, 1)  # -a = 4 is a square, so the shape splits

    def test_high_three_power_classes_fail_at_three(self):
        # instances with 3 coprime to a, 3 exactly dividing b and
        # 4a(b/3)^3 = 1 mod 27: located by scan, all must fail at p = 3
        # (choose a = 1 mod 4 so the test at p = 2 passes first)
        classes = [(2, 15), (7, 3), (11, 6), (16, 21), (20, 24), (25, 12)]
        located = 0
        for a_mod, b_mod in classes:
            found = None
            for s in range(8):
                a = a_mod + 27 * s
                if a % 4 != 1:
                    continue
                for t in range(3):
                    b = b_mod + 27 * t
                    if b % 2 == 0:
                        continue
                    f = jkk_poly(a, b)
                    if (4 * a * (b // 3) ** 3) % 27 == 1 and is_irreducible_q(f):
                        found = (a, b)
                        break
                if found:
                    break
            assert found is not None, (a_mod, b_mod)
            a, b = found
            v = jkk_check(a, b, assume_irreducible=True)
            assert v.status is MonogenicStatus.NOT_MONOGENIC, found
            assert v.witness_prime == 3, found
            g = is_monogenic_generic(jkk_poly(a, b), assume_irreducible=True)
            assert g.status is MonogenicStatus.NOT_MONOGENIC
            assert g.witness_prime == 3
            located += 1
        assert located == len(classes)

    def test_explicit_power_instance(self):
        # (a, b) = (61, 3): 4ab^3 - 27 = 3^8, a = 1 mod 4
        assert 4 * 61 * 27 - 27 == 3**8
        v = jkk_check(61, 3)
        assert v.status is MonogenicStatus.NOT_MONOGENIC
        assert v.witness_prime == 3


class TestQuadraticOracle:
    def test_monogenic_iff_fundamental_discriminant(self):
        # independent closed form: x^2+bx+c (irreducible) is monogenic exactly
        # when b^2-4c is a fundamental discriminant
        from sexticlab.intkit import factorize, is_square

        def fundamental(D):
            fac = factorize(D)
            assert fac.complete
            m = fac.sign
            for p, e in fac.factors:
                if e % 2:
                    m *= p
            return D == (m if m % 4 == 1 else 4 * m)

        rng = random.Random(99)
        checked = 0
        while checked < 300:
            b, c = rng.randrange(-60, 61), rng.randrange(-60, 61)
            D = b * b - 4 * c
            if D == 0 or is_square(D):
                continue
            v = is_monogenic_generic(IntPoly([c, b, 1]))
            assert (v.status is MonogenicStatus.MONOGENIC) == fundamental(D), (b, c)
            checked += 1


class TestVerdictInvariants:
    def test_monogenic_has_clean_trail(self):
        v = jly_check(-3, -3)
        assert v.unfactored is None
        assert all(ok for _, ok in v.checked_primes)

    def test_witness_appears_failed_in_trail(self):
        for v in (jly_check(-3, -12), jkk_check(61, 3)):
            assert v.status is MonogenicStatus.NOT_MONOGENIC
            assert (v.witness_prime, False) in v.checked_primes

    def test_oracle_equivalence_spot_grid(self):
        rng = random.Random(42)
        compared = 0
        while compared < 60:
            a = rng.randrange(-15, 16)
            b = rng.randrange(-15, 16)
            f = jly_poly(a, b)
            if not is_irreducible_q(f):
                continue
            compared += 1
            s1 = jly_check(a, b, assume_irreducible=True)
            s2 = is_monogenic_generic(f, assume_irreducible=True)
            assert s1.status is s2.status, (a, b)
