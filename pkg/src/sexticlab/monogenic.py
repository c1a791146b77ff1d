"""Monogenicity tests: the generic prime-index criterion and two specialized
coefficient criteria for the quadrinomial shapes this project studies.

The generic route factors the polynomial discriminant and runs the index
divisibility test prime by prime; only primes whose square divides the
discriminant can divide the index, so squarefree-exponent primes are skipped.
The specialized routes read the verdict from coefficient congruences, using
the closed discriminant forms of their shapes, and exist both as the fast
path for scans and as an independent cross-check of the generic machinery.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from . import polymodp, zfactor
from .errors import ReduciblePolynomialError
from .intkit import (
    DEFAULT_RHO_BUDGET,
    DEFAULT_TRIAL_BOUND,
    factorize,
    is_prime,
)
from .polyz import IntPoly, discriminant


class MonogenicStatus(Enum):
    MONOGENIC = "Monogenic"
    NOT_MONOGENIC = "NotMonogenic"
    UNKNOWN = "Unknown"


@dataclass(frozen=True)
class MonogenicVerdict:
    """Outcome of a monogenicity test.

    ``witness_prime`` is present exactly when the verdict is NotMonogenic (a
    prime dividing the index); ``unfactored`` is present exactly when the
    verdict is Unknown (the composite part of the discriminant that the
    budgets could not factor).  ``checked_primes`` records the per-prime
    pass/fail trail in the order tested.
    """

    status: MonogenicStatus
    witness_prime: int | None = None
    unfactored: int | None = None
    checked_primes: tuple[tuple[int, bool], ...] = ()

    def __post_init__(self):
        if self.status is MonogenicStatus.MONOGENIC:
            if self.witness_prime is not None or self.unfactored is not None:
                raise ValueError("a Monogenic verdict carries no witness or cofactor")
            if not all(ok for _, ok in self.checked_primes):
                raise ValueError("a Monogenic verdict cannot contain a failed prime")
        elif self.status is MonogenicStatus.NOT_MONOGENIC:
            if (self.witness_prime, False) not in self.checked_primes:
                raise ValueError("the witness prime must appear as failed in the trail")
        elif self.unfactored is None:
            raise ValueError("an Unknown verdict must carry the unfactored cofactor")


def _dedekind_core(T: IntPoly, p: int) -> bool:
    """Index test at p for monic T; True means p does not divide the index."""
    Tb = polymodp.reduce(T, p)
    factors = polymodp.factor_modp(Tb)
    if all(e == 1 for _, e in factors):
        return True  # squarefree reduction: the gcd is trivially 1
    h1b = polymodp.ModPoly._raw(p, [1])
    for g, _ in factors:
        h1b = h1b * g
    h2b = Tb // h1b
    h1 = h1b.to_int_poly()
    h2 = h2b.to_int_poly()
    diff = h1 * h2 - T
    quo = []
    for c in diff.coeffs:
        if c % p != 0:
            raise AssertionError("h1*h2 - T is not divisible by p")
        quo.append(c // p)
    Fb = polymodp.reduce(IntPoly(quo), p)
    g = polymodp.gcd_modp(polymodp.gcd_modp(Fb, h1b), h2b)
    return g.degree == 0


def dedekind_prime_ok(T: IntPoly, p: int) -> bool:
    """True iff p does not divide the index [Z_K : Z[theta]] for K = Q(theta).

    T must be monic and irreducible over Q, p prime.  The test factors T mod
    p, lifts the distinct irreducible part h1 and the cofactor h2, forms
    F = (h1*h2 - T)/p, and checks gcd(F, h1, h2) = 1 over F_p.
    """
    if not T.is_monic:
        raise ValueError("dedekind_prime_ok requires a monic polynomial")
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if not zfactor.is_irreducible_q(T):
        raise ReduciblePolynomialError(T, zfactor.proper_factor(T))
    return _dedekind_core(T, p)


def is_monogenic_generic(
    T: IntPoly,
    trial_bound: int = DEFAULT_TRIAL_BOUND,
    rho_budget: int = DEFAULT_RHO_BUDGET,
    assume_irreducible: bool = False,
) -> MonogenicVerdict:
    """Full monogenicity verdict for monic irreducible T.

    Factors the discriminant within the budgets and runs the prime-index test
    at every prime whose square divides it.  An unfactored composite cofactor
    downgrades an otherwise clean run to Unknown: it may hide a repeated
    prime, and this tool never reports Monogenic on incomplete evidence.
    """
    if not T.is_monic:
        raise ValueError("is_monogenic_generic requires a monic polynomial")
    if not assume_irreducible and not zfactor.is_irreducible_q(T):
        raise ReduciblePolynomialError(T, zfactor.proper_factor(T))
    if T.degree == 1:
        return MonogenicVerdict(MonogenicStatus.MONOGENIC)
    disc = discriminant(T)
    fac = factorize(disc, trial_bound, rho_budget)
    checked: list[tuple[int, bool]] = []
    for p, e in fac.factors:
        if e >= 2:
            ok = _dedekind_core(T, p)
            checked.append((p, ok))
            if not ok:
                return MonogenicVerdict(
                    MonogenicStatus.NOT_MONOGENIC,
                    witness_prime=p,
                    checked_primes=tuple(checked),
                )
    if not fac.complete:
        return MonogenicVerdict(
            MonogenicStatus.UNKNOWN,
            unfactored=fac.cofactor,
            checked_primes=tuple(checked),
        )
    return MonogenicVerdict(MonogenicStatus.MONOGENIC, checked_primes=tuple(checked))


# -- specialized criteria -----------------------------------------------------


def jly_poly(a: int, b: int) -> IntPoly:
    """x**2 (x**2 + a)**2 + b, expanded: x**6 + 2a x**4 + a**2 x**2 + b."""
    return IntPoly((b, 0, a * a, 0, 2 * a, 0, 1))


def jkk_poly(a: int, b: int) -> IntPoly:
    """x**6 + a (b x**2 + 1)**2, expanded: x**6 + a b**2 x**4 + 2ab x**2 + a."""
    return IntPoly((a, 0, 2 * a * b, 0, a * b * b, 0, 1))


def _jly_prime_ok(a: int, b: int, delta: int, p: int) -> bool:
    if b % p == 0:
        return b % (p * p) != 0
    if a % p == 0:
        if p in (2, 3):
            b1 = 2 * a // p
            c1 = (b + (-b) ** p) // p
            if b1 % p == 0 and c1 % p != 0:
                return True
            return (b1 * ((b1 * b) ** 3 + b * c1**3)) % p != 0
        # p > 3 with p | a, p coprime to b never divides the discriminant
        return False
    if p == 2:
        return b % 4 == 1
    return delta % (p * p) != 0


def _jkk_prime_ok(a: int, b: int, delta: int, p: int) -> bool:
    if a % p == 0:
        return a % (p * p) != 0
    if b % p == 0:
        if p in (2, 3):
            b1 = 2 * a * b // p
            c1 = (a + (-a) ** p) // p
            if b1 % p == 0 and c1 % p != 0:
                return True
            return (b1 * (-(c1**3) + a * b1**3)) % p != 0
        return False
    if p == 2:
        return a % 4 == 1
    return delta % (p * p) != 0


def _specialized_verdict(
    core: int,
    delta: int,
    prime_ok,
    trial_bound: int,
    rho_budget: int,
) -> MonogenicVerdict:
    """Shared driver: test 2, the primes of `core` (b or a), and the primes of delta."""
    fac_core = factorize(core, trial_bound, rho_budget)
    fac_delta = factorize(delta, trial_bound, rho_budget)
    primes = sorted(
        {2}
        | {p for p, _ in fac_core.factors}
        | {p for p, _ in fac_delta.factors}
    )
    checked: list[tuple[int, bool]] = []
    for p in primes:
        ok = prime_ok(p)
        checked.append((p, ok))
        if not ok:
            return MonogenicVerdict(
                MonogenicStatus.NOT_MONOGENIC,
                witness_prime=p,
                checked_primes=tuple(checked),
            )
    if not (fac_core.complete and fac_delta.complete):
        unf = 1
        if not fac_core.complete:
            unf *= fac_core.cofactor
        if not fac_delta.complete:
            unf *= fac_delta.cofactor
        return MonogenicVerdict(
            MonogenicStatus.UNKNOWN, unfactored=unf, checked_primes=tuple(checked)
        )
    return MonogenicVerdict(MonogenicStatus.MONOGENIC, checked_primes=tuple(checked))


def jly_check(
    a: int,
    b: int,
    trial_bound: int = DEFAULT_TRIAL_BOUND,
    rho_budget: int = DEFAULT_RHO_BUDGET,
    assume_irreducible: bool = False,
) -> MonogenicVerdict:
    """Coefficient criterion for x**6 + 2a x**4 + a**2 x**2 + b (irreducible).

    The discriminant is -2**6 b**3 (4a**3 - 27b)**2, so only 2, the primes of
    b, and the primes of 4a**3 - 27b need testing.
    """
    f = jly_poly(a, b)
    if not assume_irreducible and not zfactor.is_irreducible_q(f):
        raise ReduciblePolynomialError(f, zfactor.proper_factor(f))
    delta = 4 * a**3 - 27 * b
    if b == 0 or delta == 0:
        # zero discriminant; the shape is never irreducible here
        raise ReduciblePolynomialError(f)
    return _specialized_verdict(
        b, delta, lambda p: _jly_prime_ok(a, b, delta, p), trial_bound, rho_budget
    )


def jkk_check(
    a: int,
    b: int,
    trial_bound: int = DEFAULT_TRIAL_BOUND,
    rho_budget: int = DEFAULT_RHO_BUDGET,
    assume_irreducible: bool = False,
) -> MonogenicVerdict:
    """Coefficient criterion for x**6 + a b**2 x**4 + 2ab x**2 + a (irreducible).

    The discriminant is -2**6 a**5 (4a b**3 - 27)**2, so only 2, the primes of
    a, and the primes of 4a b**3 - 27 need testing.
    """
    f = jkk_poly(a, b)
    if not assume_irreducible and not zfactor.is_irreducible_q(f):
        raise ReduciblePolynomialError(f, zfactor.proper_factor(f))
    if a == 0:
        raise ReduciblePolynomialError(f)  # collapses to x**6
    delta = 4 * a * b**3 - 27
    return _specialized_verdict(
        a, delta, lambda p: _jkk_prime_ok(a, b, delta, p), trial_bound, rho_budget
    )
