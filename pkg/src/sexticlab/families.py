"""Parametric quadrinomial families, their membership tests and witnesses.

Four families live here: two two-parameter C6 shapes certified by a square
integer (F1: 4a**3 b - 27 b**2, F2: 4a b**3 - 27), a one-parameter C6 family,
and a one-parameter A4 family whose monogenicity is governed by the
squarefreeness of 9n**2 + 15n + 13.  The reducibility-witness search turns
the power-compositional splitting identity

    (x**3 + m x**2 + n x + C)(x**3 - m x**2 + n x - C)
        = x**6 + (2n - m**2) x**4 + (n**2 - 2mC) x**2 - C**2

into a constructive certificate in both directions.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from . import zfactor
from .errors import ReduciblePolynomialError
from .intkit import is_square
from .polyz import IntPoly, discriminant
from .sextic import EvenSextic


class Family(Enum):
    F1 = "f1"
    F2 = "f2"
    F3 = "f3"
    A4FAM = "a4"


@dataclass(frozen=True)
class FamilyMember:
    family: Family
    params: tuple[int, ...]
    poly: EvenSextic
    certificate: int | None


def f1_certificate(a: int, b: int) -> int:
    return 4 * a**3 * b - 27 * b**2


def f1_member(a: int, b: int) -> FamilyMember | None:
    """Membership test for x**6 + 2a x**4 + a**2 x**2 + b.

    Some iff the polynomial is irreducible and 4a**3 b - 27 b**2 is a square;
    the square test runs first since it is far cheaper.
    """
    cert = f1_certificate(a, b)
    if not is_square(cert):
        return None
    f = EvenSextic(2 * a, a * a, b)
    if not zfactor.is_irreducible_q(f.as_poly()):
        return None
    return FamilyMember(Family.F1, (a, b), f, cert)


def f1_witness(n: int) -> tuple[int, int]:
    """The (a, b) = (9n**2 + 3n + 7, a**2) subfamily, defined for n >= 1."""
    if n < 1:
        raise ValueError("f1_witness requires n >= 1")
    a = 9 * n * n + 3 * n + 7
    return a, a * a


def f2_certificate(a: int, b: int) -> int:
    return 4 * a * b**3 - 27


def f2_member(a: int, b: int) -> FamilyMember | None:
    """Membership test for x**6 + a b**2 x**4 + 2ab x**2 + a."""
    cert = f2_certificate(a, b)
    if not is_square(cert):
        return None
    f = EvenSextic(a * b * b, 2 * a * b, a)
    if not zfactor.is_irreducible_q(f.as_poly()):
        return None
    return FamilyMember(Family.F2, (a, b), f, cert)


def f2_witness(n: int) -> tuple[int, int]:
    """The (a, b) = (9n**2 + 15n + 13, 1) subfamily, defined for all n."""
    return 9 * n * n + 15 * n + 13, 1


def f3_poly(n: int) -> EvenSextic:
    """x**6 + (n**2+5) x**4 + (n**2+2n+6) x**2 + 1."""
    return EvenSextic(n * n + 5, n * n + 2 * n + 6, 1)


def a4_poly(n: int) -> tuple[EvenSextic, int]:
    """x**6 + (3n+4) x**4 + (3n+1) x**2 - 1 together with 9n**2 + 15n + 13."""
    return EvenSextic(3 * n + 4, 3 * n + 1, -1), 9 * n * n + 15 * n + 13


def default_hjms_bound(A: int, B: int, C: int) -> int:
    return 4 * max(abs(A), abs(B), abs(C), 10)


def hjms_witness(
    A: int, B: int, C: int, bound: int | None = None
) -> tuple[int, int] | None:
    """Search |m|, |n| <= bound for A = 2n - m**2 and B = n**2 - 2mC.

    Requires G = x**3 + A x**2 + B x - C**2 irreducible over Q.  A found pair
    certifies, via the splitting identity above, that G(x**2) is reducible;
    None means no witness exists within the bound.
    """
    G = IntPoly((-C * C, B, A, 1))
    if not zfactor.is_irreducible_q(G):
        raise ReduciblePolynomialError(G, zfactor.proper_factor(G))
    if bound is None:
        bound = default_hjms_bound(A, B, C)
    if bound < 1:
        raise ValueError("bound must be positive")
    for m in range(-bound, bound + 1):
        num = A + m * m
        if num % 2:
            continue
        n = num // 2
        if abs(n) > bound:
            continue
        if B == n * n - 2 * m * C:
            return m, n
    return None


def hjms_cofactors(m: int, n: int, C: int) -> tuple[IntPoly, IntPoly]:
    """The two cubic cofactors certified by an (m, n) witness."""
    return IntPoly((C, n, m, 1)), IntPoly((-C, n, -m, 1))


def _monic_reciprocal(p: IntPoly) -> IntPoly | None:
    """Monic normalization of x**deg * p(1/x), or None when not integral."""
    if p.is_zero or p.coeffs[0] == 0:
        return None
    rev = p.reverse()
    if rev.lc == 1:
        return rev
    if rev.lc == -1:
        return rev.scale(-1)
    return None


def field_classes(
    polys: list[IntPoly],
) -> tuple[list[list[int]], list[tuple[int, int]]]:
    """Group indices of monogenic polynomials into same-splitting-field classes.

    Distinct discriminants force distinct fields; equal discriminants merge
    only under a reciprocal certificate (one polynomial is the monic reversal
    of the other, so their roots generate the same field).  Equal-discriminant
    pairs without such a certificate land in the undetermined list rather
    than being guessed either way.
    """
    n = len(polys)
    discs = [discriminant(p) for p in polys]
    parent = list(range(n))

    def find(i: int) -> int:
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    def union(i: int, j: int) -> None:
        parent[find(i)] = find(j)

    for i in range(n):
        rec = _monic_reciprocal(polys[i])
        for j in range(i + 1, n):
            if discs[i] != discs[j]:
                continue
            if polys[i] == polys[j] or (rec is not None and rec == polys[j]):
                union(i, j)
    undetermined = [
        (i, j)
        for i in range(n)
        for j in range(i + 1, n)
        if discs[i] == discs[j] and find(i) != find(j)
    ]
    groups: dict[int, list[int]] = {}
    for i in range(n):
        groups.setdefault(find(i), []).append(i)
    return sorted(groups.values()), undetermined
