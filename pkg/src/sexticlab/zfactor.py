"""Irreducibility testing and complete factorization over Q.

Scope is monic integer polynomials of degree <= 12, which covers every
polynomial this project manipulates (sextics, their resolvents, products of
two cubics).  Factorization is classic Zassenhaus: squarefree split over Z,
factor modulo a good small prime, Hensel-lift past the Mignotte bound, then
recombine lifted factors by exact trial division.
"""

from __future__ import annotations

from itertools import combinations

from . import polymodp
from .intkit import isqrt
from .polyz import IntPoly, discriminant, exact_div, gcd as gcd_z, try_div

MAX_DEGREE = 12

# first 25 primes: the modular shortcut pool for irreducibility
_SHORTCUT_PRIMES = (
    2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47,
    53, 59, 61, 67, 71, 73, 79, 83, 89, 97,
)
# odd primes among the first 50: the Hensel prime pool
_LIFT_PRIMES = (
    3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53,
    59, 61, 67, 71, 73, 79, 83, 89, 97, 101, 103, 107, 109, 113, 127,
    131, 137, 139, 149, 151, 157, 163, 167, 173, 179, 181, 191, 193,
    197, 199, 211, 223, 227, 229,
)


def rational_roots(p: IntPoly) -> list[int]:
    """All integer roots of p, sorted ascending (each listed once).

    Powers of x are stripped first, so a zero constant term contributes the
    root 0; the remaining candidates are divisors of the constant term,
    confirmed by evaluation.
    """
    if p.is_zero:
        raise ValueError("the zero polynomial has no well-defined root set")
    roots: set[int] = set()
    cs = list(p.coeffs)
    k = 0
    while cs[k] == 0:
        k += 1
    if k > 0:
        roots.add(0)
    stripped = IntPoly(cs[k:])
    c0 = abs(stripped.coeffs[0])
    if stripped.degree >= 1:
        d = 1
        while d * d <= c0:
            if c0 % d == 0:
                for cand in (d, -d, c0 // d, -(c0 // d)):
                    if stripped(cand) == 0:
                        roots.add(cand)
            d += 1
    return sorted(roots)


def _yun_squarefree(p: IntPoly) -> list[tuple[IntPoly, int]]:
    """Yun's squarefree decomposition of a monic polynomial over Z."""
    g = gcd_z(p, p.derivative())
    if g.degree == 0:
        return [(p, 1)]
    out: list[tuple[IntPoly, int]] = []
    w = exact_div(p, g)
    y = exact_div(p.derivative(), g)
    z = y - w.derivative()
    i = 1
    while not z.is_zero:
        h = gcd_z(w, z)
        if h.degree > 0:
            out.append((h, i))
        w = exact_div(w, h)
        y = exact_div(z, h)
        z = y - w.derivative()
        i += 1
    if w.degree > 0:
        out.append((w, i))
    return out


def _pick_lift_prime(s: IntPoly) -> int:
    for q in _LIFT_PRIMES:
        if s.lc % q == 0:
            continue
        if polymodp.is_squarefree_modp(polymodp.reduce(s, q)):
            return q
    raise ArithmeticError(
        f"no squarefree reduction among the first 50 primes for {s!r}"
    )


def _mignotte_modulus(s: IntPoly, q: int) -> int:
    """Smallest power of q exceeding twice the factor coefficient bound."""
    norm_sq = sum(c * c for c in s.coeffs)
    r = isqrt(norm_sq)
    if r * r < norm_sq:
        r += 1
    bound = (1 << s.degree) * r
    modulus = q
    while modulus <= 2 * bound:
        modulus *= q
    return modulus


def _mul_mod(a: list[int], b: list[int], modulus: int) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca:
            for j, cb in enumerate(b):
                out[i + j] = (out[i + j] + ca * cb) % modulus
    return out


def _hensel_lift(
    s: IntPoly, gs: list[polymodp.ModPoly], q: int, target: int
) -> tuple[list[list[int]], int]:
    """Lift the pairwise-coprime monic factors of s mod q up to the target modulus.

    Linear lifting: one power of q per pass, using the fixed partial-fraction
    inverses computed once over F_q.  Returns (lifted coefficient lists, q**l).
    """
    ws = []
    for i, gi in enumerate(gs):
        prod_others = polymodp.ModPoly._raw(q, [1])
        for j, gj in enumerate(gs):
            if j != i:
                prod_others = (prod_others * gj) % gi
        g, sinv, _ = polymodp.xgcd_modp(prod_others, gi)
        if g.degree != 0:
            raise ArithmeticError("modular factors are not pairwise coprime")
        ws.append(sinv % gi)

    lifted = [list(gi.coeffs) for gi in gs]
    modulus = q
    n = s.degree
    while modulus < target:
        step = modulus * q
        prod = [1]
        for Li in lifted:
            prod = _mul_mod(prod, Li, step)
        diff = [(s[i] - (prod[i] if i < len(prod) else 0)) % step for i in range(n + 1)]
        if any(d % modulus for d in diff):
            raise ArithmeticError("lift invariant broken: product mismatch below modulus")
        err = [(d // modulus) % q for d in diff]
        while err and err[-1] == 0:
            err.pop()
        ebar = polymodp.ModPoly._raw(q, err)
        for i, gi in enumerate(gs):
            delta = (ebar * ws[i]) % gi
            Li = lifted[i]
            for e, c in enumerate(delta.coeffs):
                Li[e] += modulus * c
        modulus = step
    return lifted, modulus


def _balanced(cs: list[int], modulus: int) -> IntPoly:
    half = modulus // 2
    return IntPoly([c - modulus if c > half else c for c in cs])


def _factor_squarefree(s: IntPoly) -> list[IntPoly]:
    """Irreducible factors of a monic squarefree polynomial over Q."""
    if s.degree <= 1:
        return [s] if s.degree == 1 else []
    q = _pick_lift_prime(s)
    modular = [f for f, _ in polymodp.factor_modp(polymodp.reduce(s, q))]
    if len(modular) == 1:
        return [s]
    target = _mignotte_modulus(s, q)
    lifted, modulus = _hensel_lift(s, modular, q, target)

    result: list[IntPoly] = []
    pool = list(range(len(lifted)))
    fw = s
    t = 1
    while 2 * t <= len(pool) and fw.degree > 0:
        found = False
        for subset in combinations(pool, t):
            c0 = 1
            for i in subset:
                c0 = c0 * lifted[i][0] % modulus
            c0 = c0 - modulus if c0 > modulus // 2 else c0
            fw0 = fw.coeffs[0]
            if fw0 != 0 and (c0 == 0 or fw0 % c0 != 0):
                continue
            prod = [1]
            for i in subset:
                prod = _mul_mod(prod, lifted[i], modulus)
            cand = _balanced(prod, modulus)
            if cand.degree < 1:
                continue
            quot = try_div(fw, cand)
            if quot is not None:
                result.append(cand)
                fw = quot
                pool = [i for i in pool if i not in subset]
                found = True
                break
        if not found:
            t += 1
    if fw.degree > 0:
        result.append(fw)
    return result


def factor_q(p: IntPoly) -> list[tuple[IntPoly, int]]:
    """Complete factorization into monic irreducibles over Q with multiplicities.

    Requires a monic input of degree <= 12; the factors are integer
    polynomials by Gauss's lemma.  Output is sorted by degree, then by
    coefficient list, and the product over all (factor, multiplicity) pairs
    reassembles the input exactly.
    """
    if not p.is_monic:
        raise ValueError("factor_q supports monic polynomials only")
    if p.degree > MAX_DEGREE:
        raise ValueError(f"degree {p.degree} exceeds the supported bound {MAX_DEGREE}")
    if p.degree == 0:
        return []
    out: list[tuple[IntPoly, int]] = []
    for part, mult in _yun_squarefree(p):
        for irr in _factor_squarefree(part):
            out.append((irr, mult))
    out.sort(key=lambda fm: (fm[0].degree, fm[0].coeffs))
    return out


def is_irreducible_q(p: IntPoly) -> bool:
    """Irreducibility over Q for monic p.

    Fast path: p irreducible modulo some prime q (q not dividing the
    discriminant) among the first 25 primes.  Slow path: full factorization.
    """
    if not p.is_monic:
        raise ValueError("is_irreducible_q supports monic polynomials only")
    if p.degree < 1:
        raise ValueError("irreducibility of a constant is undefined")
    if p.degree == 1:
        return True
    if p.degree > MAX_DEGREE:
        raise ValueError(f"degree {p.degree} exceeds the supported bound {MAX_DEGREE}")
    disc = discriminant(p)
    if disc == 0:
        return False  # repeated factor
    for q in _SHORTCUT_PRIMES:
        if disc % q != 0 and polymodp.is_irreducible_modp(polymodp.reduce(p, q)):
            return True
    factors = factor_q(p)
    return len(factors) == 1 and factors[0][1] == 1


def proper_factor(p: IntPoly) -> IntPoly | None:
    """A proper monic factor of p, or None when p is irreducible."""
    factors = factor_q(p)
    if len(factors) == 1 and factors[0][1] == 1:
        return None
    return factors[0][0]
