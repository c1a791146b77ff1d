"""Exact integer utilities: square tests, primality, bounded factorization.

Everything here is pure and deterministic for a fixed global seed.  The
factorization routine is budgeted (trial division bound plus a Pollard rho
iteration budget) so large batch runs stay predictable; anything it cannot
finish is reported honestly as an unfactored cofactor instead of guessed at.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from .config import derived_rng

DEFAULT_TRIAL_BOUND = 10**6
DEFAULT_RHO_BUDGET = 1 << 20

# Primes below this are always removed up front; full trial division out to
# the caller's bound only runs if rho exhausts its budget on a piece.
_PRETRIAL_LIMIT = 4096

# Deterministic Miller-Rabin base set for n < 2**64 (Sorenson & Webster).
_MR_BASES_64 = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
_TWO_64 = 1 << 64


@lru_cache(maxsize=1)
def _small_primes() -> tuple[int, ...]:
    limit = _PRETRIAL_LIMIT
    sieve = bytearray([1]) * (limit + 1)
    sieve[0] = sieve[1] = 0
    for p in range(2, math.isqrt(limit) + 1):
        if sieve[p]:
            sieve[p * p :: p] = bytearray(len(sieve[p * p :: p]))
    return tuple(i for i, flag in enumerate(sieve) if flag)


def isqrt(n: int) -> int:
    """Exact floor square root; rejects negative input."""
    if n < 0:
        raise ValueError("isqrt is undefined for negative integers")
    return math.isqrt(n)


def is_square(n: int) -> bool:
    if n < 0:
        return False
    r = math.isqrt(n)
    return r * r == n


def _is_spsp(n: int, a: int) -> bool:
    """Strong probable prime test to base a (n odd, n > 2)."""
    d = n - 1
    s = (d & -d).bit_length() - 1
    d >>= s
    x = pow(a % n, d, n)
    if x == 1 or x == n - 1:
        return True
    for _ in range(s - 1):
        x = x * x % n
        if x == n - 1:
            return True
    return False


def _jacobi(a: int, n: int) -> int:
    """Jacobi symbol (a/n) for odd n > 0."""
    a %= n
    result = 1
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


def _is_strong_lucas_prp(n: int) -> bool:
    """Strong Lucas probable prime test with Selfridge parameters (n odd > 2)."""
    # Selfridge method A: first D in 5, -7, 9, -11, ... with (D/n) = -1.
    D = 5
    while True:
        j = _jacobi(D % n, n)
        if j == -1:
            break
        if j == 0 and abs(D) % n != 0:
            return False
        D = -(D + 2) if D > 0 else -(D - 2)
    P = 1
    Q = (1 - D) // 4

    d = n + 1
    s = (d & -d).bit_length() - 1
    d >>= s

    def half(x: int) -> int:
        return x // 2 if x % 2 == 0 else (x + n) // 2

    # Binary ladder for U_d, V_d mod n.
    U, V, Qk = 1, P, Q % n
    for bit in bin(d)[3:]:
        U = U * V % n
        V = (V * V - 2 * Qk) % n
        Qk = Qk * Qk % n
        if bit == "1":
            U, V = half((P * U + V) % n), half((D * U + P * V) % n)
            Qk = Qk * (Q % n) % n
    if U == 0 or V == 0:
        return True
    for _ in range(s - 1):
        V = (V * V - 2 * Qk) % n
        if V == 0:
            return True
        Qk = Qk * Qk % n
    return False


def is_prime(n: int) -> bool:
    """Primality test.

    Deterministic for |n| < 2**64 (fixed Miller-Rabin base set).  Beyond that
    it is Baillie-PSW (strong probable prime base 2..37 plus a strong Lucas
    test): no counterexample is known, but it is not a primality proof.
    Negative numbers and 0, 1 are not prime.
    """
    if n < 2:
        return False
    for p in _MR_BASES_64:
        if n % p == 0:
            return n == p
    if n < 41 * 41:
        return True
    for a in _MR_BASES_64:
        if not _is_spsp(n, a):
            return False
    if n < _TWO_64:
        return True
    if is_square(n):
        return False
    return _is_strong_lucas_prp(n)


def valuation(n: int, p: int) -> int:
    """Largest e with p**e dividing n (n nonzero, p prime)."""
    if n == 0:
        raise ValueError("valuation of 0 is undefined")
    if not is_prime(p):
        raise ValueError(f"valuation requires a prime, got {p}")
    n = abs(n)
    e = 0
    while n % p == 0:
        n //= p
        e += 1
    return e


@dataclass(frozen=True)
class PrimeFactorization:
    """Signed, possibly partial factorization.

    sign * cofactor * prod(p**e) always reassembles the input.  The factor
    list holds strictly increasing primes; ``cofactor`` is 1 when the
    factorization is complete, otherwise a composite with no prime factor
    below the trial-division bound used.
    """

    sign: int
    factors: tuple[tuple[int, int], ...]
    cofactor: int
    complete: bool

    def __post_init__(self):
        if self.sign not in (-1, 1):
            raise ValueError("sign must be +1 or -1")
        primes = [p for p, _ in self.factors]
        if primes != sorted(set(primes)):
            raise ValueError("factors must be strictly increasing")
        if any(e < 1 for _, e in self.factors):
            raise ValueError("exponents must be positive")
        if self.cofactor < 1:
            raise ValueError("cofactor must be positive")
        if self.complete != (self.cofactor == 1):
            raise ValueError("complete flag contradicts the cofactor")

    def value(self) -> int:
        v = self.sign * self.cofactor
        for p, e in self.factors:
            v *= p**e
        return v

    def prime_exponent(self, p: int) -> int:
        for q, e in self.factors:
            if q == p:
                return e
        return 0


def _iroot(n: int, k: int) -> int:
    """Floor k-th root of n >= 0."""
    if n < 2 or k == 1:
        return n
    if k == 2:
        return math.isqrt(n)
    # float seed, then exact correction
    r = int(round(n ** (1.0 / k)))
    if r < 1:
        r = 1
    while r**k > n:
        r -= 1
    while (r + 1) ** k <= n:
        r += 1
    return r


def _perfect_power(n: int) -> tuple[int, int] | None:
    """Return (root, k) with root**k == n and k >= 2 prime, else None."""
    if n < 4:
        return None
    for k in _small_primes():
        if k > n.bit_length():
            break
        r = _iroot(n, k)
        if r >= 2 and r**k == n:
            return r, k
    return None


def _brent_rho(n: int, budget: int, rng) -> tuple[int | None, int]:
    """Brent-cycle Pollard rho; returns (factor or None, iterations used)."""
    if n % 2 == 0:
        return 2, 0
    used = 0
    while used < budget:
        y = rng.randrange(1, n)
        c = rng.randrange(1, n)
        m = 128
        g = r = q = 1
        x = ys = y
        while g == 1 and used < budget:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            used += r
            k = 0
            while k < r and g == 1:
                ys = y
                steps = min(m, r - k)
                for _ in range(steps):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                used += steps
                g = math.gcd(q, n)
                k += m
            r <<= 1
        if g == n:
            # backtrack one step at a time
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if 1 < g < n:
            return g, used
        # retry with a fresh polynomial
    return None, used


def _trial_range(m: int, lo: int, hi: int, counts: dict[int, int]) -> int:
    """Trial divide m by 6k+-1 candidates in (lo, hi]; returns the remainder.

    Callers guarantee m has no prime factor <= lo, so candidates skipped
    while aligning on the wheel are all divisible by 2 or 3.
    """
    d = lo + 1
    while d % 6 not in (1, 5):
        d += 1
    while d <= hi and d * d <= m:
        if m % d == 0:
            while m % d == 0:
                counts[d] = counts.get(d, 0) + 1
                m //= d
        d += 4 if d % 6 == 1 else 2
    return m


def factorize(
    n: int,
    trial_bound: int = DEFAULT_TRIAL_BOUND,
    rho_budget: int = DEFAULT_RHO_BUDGET,
) -> PrimeFactorization:
    """Factor n within the given budgets.

    Small primes are stripped first, then remaining pieces go through a
    primality check, perfect-power detection and Brent's rho (seeded from the
    global seed and |n|).  Only if rho runs out of budget does the costly
    full trial division out to ``trial_bound`` run, which preserves the
    guarantee that a surviving cofactor has no prime factor below the bound.
    """
    if n == 0:
        raise ValueError("cannot factor 0")
    if trial_bound < 2:
        raise ValueError("trial_bound must be at least 2")
    sign = -1 if n < 0 else 1
    m = abs(n)
    counts: dict[int, int] = {}
    pretrial = min(_PRETRIAL_LIMIT, trial_bound)
    for p in _small_primes():
        if p > pretrial or p * p > m:
            break
        if m % p == 0:
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            counts[p] = counts.get(p, 0) + e
    if 1 < m <= pretrial * pretrial:
        # no factor below pretrial survived, so m is prime
        counts[m] = counts.get(m, 0) + 1
        m = 1

    rng = derived_rng("rho", abs(n))
    budget_left = rho_budget
    cofactor = 1
    stack: list[int] = [m] if m > 1 else []
    while stack:
        v = stack.pop()
        if v == 1:
            continue
        if is_prime(v):
            counts[v] = counts.get(v, 0) + 1
            continue
        power = _perfect_power(v)
        if power is not None:
            root, k = power
            stack.extend([root] * k)
            continue
        d, used = _brent_rho(v, budget_left, rng)
        budget_left = max(0, budget_left - used)
        if d is not None:
            stack.append(d)
            stack.append(v // d)
            continue
        # rho gave up: honor the trial-division contract the slow way
        rem = _trial_range(v, pretrial, trial_bound, counts)
        if rem == 1:
            continue
        if is_prime(rem):
            counts[rem] = counts.get(rem, 0) + 1
        else:
            cofactor *= rem

    # keep the cofactor coprime to the listed primes
    if cofactor > 1:
        for p in list(counts):
            while cofactor % p == 0:
                cofactor //= p
                counts[p] += 1
        if cofactor > 1 and is_prime(cofactor):
            counts[cofactor] = counts.get(cofactor, 0) + 1
            cofactor = 1

    factors = tuple(sorted(counts.items()))
    return PrimeFactorization(sign, factors, cofactor, cofactor == 1)


def is_squarefree(
    n: int,
    trial_bound: int = DEFAULT_TRIAL_BOUND,
    rho_budget: int = DEFAULT_RHO_BUDGET,
) -> bool | None:
    """Tri-state squarefreeness: True, False, or None when undecidable.

    None only happens on an incomplete factorization whose unfactored
    cofactor is not itself a visible power; a repeated prime anywhere in the
    factored part settles the question as False regardless of completeness.
    """
    if n == 0:
        raise ValueError("squarefreeness of 0 is undefined")
    if abs(n) == 1:
        return True
    fac = factorize(n, trial_bound, rho_budget)
    if any(e >= 2 for _, e in fac.factors):
        return False
    if fac.complete:
        return True
    if _perfect_power(fac.cofactor) is not None:
        return False
    return None
