"""Polynomial arithmetic and complete factorization over prime fields F_p.

Factorization runs squarefree decomposition, then distinct-degree splitting,
then equal-degree splitting.  Equal-degree splitting is an exhaustive search
over monic candidate divisors whenever the candidate space p**d is tiny
(deterministic, seed-independent); otherwise it is the usual randomized
split, seeded from (global seed, p, coefficients) so runs are reproducible.
"""

from __future__ import annotations

from functools import lru_cache

from .backend import kernel
from .config import derived_rng
from .intkit import is_prime
from .polyz import IntPoly

# Largest candidate space p**d still searched exhaustively in equal-degree
# splitting.  Covers every small-characteristic case this project meets.
_EDF_EXHAUSTIVE_CAP = 1 << 16


@lru_cache(maxsize=512)
def _check_prime_modulus(p: int) -> None:
    if p < 2 or not is_prime(p):
        raise ValueError(f"modulus must be prime, got {p}")


class ModPoly:
    """Dense polynomial over F_p; coeffs[i] is the x**i coefficient in [0, p)."""

    __slots__ = ("p", "coeffs")

    def __init__(self, p: int, coeffs=()):
        self.p = p
        cs = [int(c) % p for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def _raw(cls, p: int, cs: list[int]) -> "ModPoly":
        """Wrap an already-reduced, normalized kernel list without rescanning."""
        obj = object.__new__(cls)
        obj.p = p
        obj.coeffs = tuple(cs)
        return obj

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lc(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    @property
    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def _k(self):
        return kernel(self.p)

    def _match(self, other: "ModPoly") -> None:
        if self.p != other.p:
            raise ValueError(f"modulus mismatch: {self.p} vs {other.p}")

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, ModPoly)
            and self.p == other.p
            and self.coeffs == other.coeffs
        )

    def __hash__(self) -> int:
        return hash((self.p, self.coeffs))

    def __repr__(self) -> str:
        return f"ModPoly(p={self.p}, coeffs={list(self.coeffs)})"

    def __add__(self, other: "ModPoly") -> "ModPoly":
        self._match(other)
        return ModPoly._raw(self.p, self._k().nadd(list(self.coeffs), list(other.coeffs), self.p))

    def __sub__(self, other: "ModPoly") -> "ModPoly":
        self._match(other)
        return ModPoly._raw(self.p, self._k().nsub(list(self.coeffs), list(other.coeffs), self.p))

    def __mul__(self, other: "ModPoly") -> "ModPoly":
        self._match(other)
        return ModPoly._raw(self.p, self._k().nmul(list(self.coeffs), list(other.coeffs), self.p))

    def __divmod__(self, other: "ModPoly") -> tuple["ModPoly", "ModPoly"]:
        self._match(other)
        q, r = self._k().ndivmod(list(self.coeffs), list(other.coeffs), self.p)
        return ModPoly._raw(self.p, q), ModPoly._raw(self.p, r)

    def __floordiv__(self, other: "ModPoly") -> "ModPoly":
        return divmod(self, other)[0]

    def __mod__(self, other: "ModPoly") -> "ModPoly":
        self._match(other)
        return ModPoly._raw(self.p, self._k().nrem(list(self.coeffs), list(other.coeffs), self.p))

    def monic(self) -> "ModPoly":
        return ModPoly._raw(self.p, self._k().nmonic(list(self.coeffs), self.p))

    def derivative(self) -> "ModPoly":
        return ModPoly._raw(self.p, self._k().nderiv(list(self.coeffs), self.p))

    def powmod(self, e: int, mod: "ModPoly") -> "ModPoly":
        self._match(mod)
        return ModPoly._raw(
            self.p, self._k().npowmod(list(self.coeffs), e, list(mod.coeffs), self.p)
        )

    def __call__(self, x0: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = (acc * x0 + c) % self.p
        return acc

    def to_int_poly(self, balanced: bool = False) -> IntPoly:
        """Lift to Z[x], coefficients in [0, p) or balanced into (-p/2, p/2]."""
        if not balanced:
            return IntPoly(self.coeffs)
        half = self.p // 2
        return IntPoly([c - self.p if c > half else c for c in self.coeffs])


def reduce(p_int: IntPoly, p: int) -> ModPoly:
    """Coefficientwise reduction of an integer polynomial modulo the prime p."""
    _check_prime_modulus(p)
    return ModPoly(p, p_int.coeffs)


def _x(p: int) -> ModPoly:
    return ModPoly._raw(p, [0, 1])


def gcd_modp(u: ModPoly, v: ModPoly) -> ModPoly:
    """Monic gcd; gcd(0, v) is monic(v)."""
    u._match(v)
    return ModPoly._raw(u.p, kernel(u.p).ngcd(list(u.coeffs), list(v.coeffs), u.p))


def xgcd_modp(u: ModPoly, v: ModPoly) -> tuple[ModPoly, ModPoly, ModPoly]:
    """Extended Euclid: returns (g, s, t) with s*u + t*v = g, g monic."""
    u._match(v)
    p = u.p
    one = ModPoly._raw(p, [1])
    zero = ModPoly._raw(p, [])
    r0, r1 = u, v
    s0, s1 = one, zero
    t0, t1 = zero, one
    while not r1.is_zero:
        q, r = divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if r0.is_zero:
        return r0, s0, t0
    lc = r0.lc
    if lc != 1:
        inv = pow(lc, p - 2, p)
        scale = ModPoly._raw(p, [inv])
        r0, s0, t0 = scale * r0, scale * s0, scale * t0
    return r0, s0, t0


def is_squarefree_modp(u: ModPoly) -> bool:
    """True iff gcd(u, u') is constant."""
    if u.is_zero:
        raise ValueError("squarefreeness of the zero polynomial is undefined")
    if u.degree <= 0:
        return True
    g = gcd_modp(u, u.derivative())
    return g.degree == 0


def _pth_root(u: ModPoly) -> ModPoly:
    # u = v(x**p) with coefficients in F_p, so the root just decimates indices
    p = u.p
    return ModPoly._raw(p, [u.coeffs[i] for i in range(0, len(u.coeffs), p)])


def _sqf_parts(u: ModPoly) -> list[tuple[ModPoly, int]]:
    """Squarefree decomposition of monic u: [(monic squarefree, multiplicity)]."""
    p = u.p
    one = ModPoly._raw(p, [1])
    out: list[tuple[ModPoly, int]] = []
    n = 1
    f = u
    while True:
        d = f.derivative()
        sqf = False
        if not d.is_zero:
            g = gcd_modp(f, d)
            h = f // g
            i = 1
            while h != one:
                G = gcd_modp(g, h)
                H = h // G
                if H.degree > 0:
                    out.append((H, i * n))
                g, h, i = g // G, G, i + 1
            if g == one:
                sqf = True
            else:
                f = g
        if sqf:
            break
        f = _pth_root(f)
        n *= p
        if f.degree == 0:
            break
    return out


def _ddf(u: ModPoly) -> list[tuple[ModPoly, int]]:
    """Distinct-degree split of monic squarefree u: [(product, factor degree)]."""
    p = u.p
    out: list[tuple[ModPoly, int]] = []
    x = _x(p)
    h = x
    v = u
    d = 0
    while v.degree > 2 * (d + 1) - 1:
        d += 1
        h = h.powmod(p, v)
        g = gcd_modp(h - x, v)
        if g.degree > 0:
            out.append((g, d))
            v = v // g
            h = h % v
        if v.degree == 0:
            return out
    if v.degree > 0:
        out.append((v, v.degree))
    return out


def _edf_exhaustive(u: ModPoly, d: int) -> list[ModPoly]:
    """Deterministic split by scanning monic degree-d candidates in lex order."""
    p = u.p
    out: list[ModPoly] = []
    w = u
    idx = 0
    space = p**d
    while w.degree > d:
        if idx >= space:
            raise AssertionError("equal-degree search exhausted its space")
        digits = []
        t = idx
        for _ in range(d):
            digits.append(t % p)
            t //= p
        idx += 1
        cand = ModPoly._raw(p, digits + [1])
        q, r = divmod(w, cand)
        if r.is_zero:
            out.append(cand)
            w = q
    out.append(w)
    return out


def _edf_random(u: ModPoly, d: int) -> list[ModPoly]:
    """Cantor-Zassenhaus equal-degree split (trace map in characteristic 2)."""
    p = u.p
    rng = derived_rng("edf", p, d, ",".join(map(str, u.coeffs)))
    one = ModPoly._raw(p, [1])
    out: list[ModPoly] = []
    stack = [u]
    while stack:
        w = stack.pop()
        if w.degree == d:
            out.append(w)
            continue
        while True:
            coeffs = [rng.randrange(p) for _ in range(w.degree)]
            v = ModPoly(p, coeffs)
            if v.degree < 1:
                continue
            if p == 2:
                t = v
                s = v
                for _ in range(d - 1):
                    s = s.powmod(2, w)
                    t = t + s
                g = gcd_modp(t, w)
            else:
                t = v.powmod((p**d - 1) // 2, w) - one
                g = gcd_modp(t, w)
            if 0 < g.degree < w.degree:
                stack.append(g)
                stack.append(w // g)
                break
    return out


def _edf(u: ModPoly, d: int) -> list[ModPoly]:
    if u.degree == d:
        return [u]
    if u.p**d <= _EDF_EXHAUSTIVE_CAP:
        return _edf_exhaustive(u, d)
    return _edf_random(u, d)


def factor_modp(u: ModPoly) -> list[tuple[ModPoly, int]]:
    """Complete factorization of u (made monic) into monic irreducibles.

    Output is deterministic: sorted by degree, then by coefficient list.
    """
    if u.is_zero:
        raise ValueError("cannot factor the zero polynomial")
    if u.degree == 0:
        return []
    out: list[tuple[ModPoly, int]] = []
    for part, mult in _sqf_parts(u.monic()):
        for prod, d in _ddf(part):
            for irr in _edf(prod, d):
                out.append((irr, mult))
    out.sort(key=lambda fm: (fm[0].degree, fm[0].coeffs))
    return out


def _compose_mod(f: ModPoly, g: ModPoly, mod: ModPoly) -> ModPoly:
    """f(g) mod `mod`, by Horner over F_p[x]/(mod)."""
    p = mod.p
    k = kernel(p)
    acc: list[int] = []
    gl = list(g.coeffs)
    ml = list(mod.coeffs)
    for c in reversed(f.coeffs):
        acc = k.nmul(acc, gl, p)
        if c:
            acc = k.nadd(acc, [c], p)
        acc = k.nrem(acc, ml, p)
    return ModPoly._raw(p, acc)


def is_irreducible_modp(u: ModPoly) -> bool:
    """Rabin irreducibility test; requires degree >= 1.

    The Frobenius powers x**(p**k) mod u are built by modular composition
    from the first one, which costs O(deg**2) multiplications total instead
    of a fresh exponentiation per step.
    """
    n = u.degree
    if n < 1:
        raise ValueError("irreducibility of a constant is undefined")
    if n == 1:
        return True
    p = u.p
    w = u.monic()
    x = _x(p)
    need = {n // r for r in _prime_divisors(n)}
    frob1 = x.powmod(p, w)
    fro = frob1
    for k in range(1, n):
        if k in need and gcd_modp(fro - x, w).degree != 0:
            return False
        fro = _compose_mod(fro, frob1, w)
    return (fro - x).is_zero


def _prime_divisors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out
