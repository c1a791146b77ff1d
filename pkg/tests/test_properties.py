"""Invariant checks driven by generated inputs.

The four heavyweight counted suites (reassembly, the composition identity,
index-test soundness, witness-vs-factorization equivalence) live in the
acceptance module; these are the finer-grained structural invariants.
"""

import math
import random

from hypothesis import given, settings
from hypothesis import strategies as st

from sexticlab.intkit import factorize, is_prime, is_square, isqrt
from sexticlab.parsing import parse_poly, render_poly
from sexticlab.polymodp import ModPoly, factor_modp, is_irreducible_modp
from sexticlab.polyz import IntPoly, discriminant, resultant, sylvester_resultant

ints = st.integers


@given(ints(min_value=0, max_value=10**30))
def test_isqrt_brackets(n):
    r = isqrt(n)
    assert r * r <= n < (r + 1) * (r + 1)


@given(ints(min_value=0, max_value=10**15))
def test_square_roundtrip(n):
    assert is_square(n * n)
    if n >= 1:
        assert not is_square(n * n + 1)


@given(ints(min_value=-(10**12), max_value=10**12).filter(lambda n: n != 0))
@settings(max_examples=300)
def test_factorize_reassembles(n):
    fac = factorize(n)
    assert fac.value() == n
    assert fac.complete == (fac.cofactor == 1)
    primes = [p for p, _ in fac.factors]
    assert primes == sorted(primes)
    assert all(is_prime(p) for p in primes)
    if fac.cofactor > 1:
        assert all(fac.cofactor % p for p in primes)


@given(
    st.lists(ints(min_value=-20, max_value=20), min_size=1, max_size=6),
    st.lists(ints(min_value=-20, max_value=20), min_size=1, max_size=6),
)
@settings(max_examples=300)
def test_resultant_swap_symmetry(acs, bcs):
    a, b = IntPoly(acs), IntPoly(bcs)
    if a.is_zero or b.is_zero:
        return
    sign = -1 if (a.degree * b.degree) % 2 else 1
    assert resultant(a, b) == sign * resultant(b, a)
    assert resultant(a, b) == sylvester_resultant(a, b)


@given(st.lists(ints(min_value=-50, max_value=50), min_size=1, max_size=9))
@settings(max_examples=300)
def test_parse_render_roundtrip(cs):
    p = IntPoly(cs)
    assert parse_poly(render_poly(p)) == p


@given(st.text(alphabet="0123456789xX^+- ,\t", max_size=40))
@settings(max_examples=500)
def test_parser_rejects_cleanly(text):
    # arbitrary input either parses or raises the dedicated error, never
    # anything else
    from sexticlab.parsing import PolyParseError

    try:
        parse_poly(text)
    except PolyParseError:
        pass


@given(
    st.lists(ints(min_value=-9, max_value=9), min_size=1, max_size=5),
    st.lists(ints(min_value=-9, max_value=9), min_size=1, max_size=5),
    ints(min_value=-20, max_value=20),
)
@settings(max_examples=200)
def test_eval_multiplicative(acs, bcs, x0):
    a, b = IntPoly(acs), IntPoly(bcs)
    assert (a * b)(x0) == a(x0) * b(x0)


def test_modp_factors_are_irreducible_and_reassemble():
    rng = random.Random(61)
    for _ in range(600):
        p = rng.choice([2, 3, 5, 7, 11, 13, 31, 101])
        deg = rng.randrange(1, 9)
        u = ModPoly(p, [rng.randrange(p) for _ in range(deg)] + [1])
        factors = factor_modp(u)
        prod = ModPoly(p, [1])
        for f, m in factors:
            assert is_irreducible_modp(f)
            assert f.is_monic
            for _ in range(m):
                prod = prod * f
        assert prod == u
        assert sum(m * f.degree for f, m in factors) == u.degree


def test_discriminant_matches_cubic_closed_form():
    # disc(x^3 + px + q) = -4p^3 - 27q^2
    rng = random.Random(62)
    for _ in range(500):
        p, q = rng.randrange(-40, 41), rng.randrange(-40, 41)
        poly = IntPoly([q, p, 0, 1])
        assert discriminant(poly) == -4 * p**3 - 27 * q * q


def test_gcd_of_random_products_is_nontrivial():
    rng = random.Random(63)
    from sexticlab.polyz import gcd, try_div

    for _ in range(200):
        f = IntPoly([rng.randrange(-5, 6) for _ in range(rng.randrange(1, 3))] + [1])
        a = IntPoly([rng.randrange(-5, 6) for _ in range(rng.randrange(1, 3))] + [1])
        g = gcd(f * a, f)
        assert try_div(g, f) is not None


def test_factorize_budget_math():
    # budgets small enough to fail on a hard semiprime still factor easy parts
    hard = 1000003 * 1000033
    fac = factorize(12 * hard, trial_bound=10**4, rho_budget=0)
    assert fac.prime_exponent(2) == 2
    assert fac.prime_exponent(3) == 1
    assert fac.cofactor == hard
    assert not fac.complete
    assert math.gcd(fac.cofactor, 6) == 1
