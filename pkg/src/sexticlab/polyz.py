"""Dense integer polynomials with exact resultants and discriminants.

The coefficient list is little-endian: coeffs[i] is the x**i coefficient,
the top stored coefficient is nonzero, and the zero polynomial is the empty
tuple.  Everything is exact integer arithmetic; degrees in this project stay
tiny (<= 12), so the dense representation is the right one.
"""

from __future__ import annotations

import math
from typing import Iterable, Iterator


class IntPoly:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        cs = [int(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    # -- basic structure ---------------------------------------------------

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lc(self) -> int:
        """Leading coefficient (0 for the zero polynomial)."""
        return self.coeffs[-1] if self.coeffs else 0

    @property
    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __iter__(self) -> Iterator[int]:
        return iter(self.coeffs)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, IntPoly) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"IntPoly({list(self.coeffs)})"

    @classmethod
    def monomial(cls, c: int, e: int) -> IntPoly:
        return cls([0] * e + [c])

    @classmethod
    def x(cls) -> IntPoly:
        return cls((0, 1))

    # -- ring arithmetic ----------------------------------------------------

    def __add__(self, other: IntPoly) -> IntPoly:
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPoly(out)

    def __neg__(self) -> IntPoly:
        return IntPoly([-c for c in self.coeffs])

    def __sub__(self, other: IntPoly) -> IntPoly:
        return self + (-other)

    def __mul__(self, other: IntPoly) -> IntPoly:
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return IntPoly()
        out = [0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca:
                for j, cb in enumerate(b):
                    out[i + j] += ca * cb
        return IntPoly(out)

    def __pow__(self, e: int) -> IntPoly:
        if e < 0:
            raise ValueError("negative power of a polynomial")
        result = IntPoly((1,))
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def scale(self, k: int) -> IntPoly:
        return IntPoly([c * k for c in self.coeffs])

    def __call__(self, x0: int) -> int:
        """Horner evaluation."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x0 + c
        return acc

    # -- the structural operations the rest of the package leans on ---------

    def derivative(self) -> IntPoly:
        return IntPoly([i * c for i, c in enumerate(self.coeffs)][1:])

    def compose_x2(self) -> IntPoly:
        """Return self(x**2): degree doubles, odd coefficients vanish."""
        out = [0] * (2 * len(self.coeffs) - 1) if self.coeffs else []
        for i, c in enumerate(self.coeffs):
            out[2 * i] = c
        return IntPoly(out)

    def reverse(self) -> IntPoly:
        """Return x**deg * self(1/x), i.e. the reversed coefficient list."""
        if self.is_zero or self.coeffs[0] == 0:
            raise ValueError("reverse requires a nonzero constant term")
        return IntPoly(tuple(reversed(self.coeffs)))


# -- contents, division, gcd ------------------------------------------------


def content(p: IntPoly) -> int:
    """Positive gcd of the coefficients (0 for the zero polynomial)."""
    g = 0
    for c in p.coeffs:
        g = math.gcd(g, c)
        if g == 1:
            break
    return g


def primitive_part(p: IntPoly) -> IntPoly:
    c = content(p)
    if c <= 1:
        return p
    return IntPoly([x // c for x in p.coeffs])


def try_div(a: IntPoly, b: IntPoly) -> IntPoly | None:
    """Quotient a/b over Z when b divides a exactly, else None."""
    if b.is_zero:
        raise ZeroDivisionError("polynomial division by zero")
    if a.is_zero:
        return IntPoly()
    if a.degree < b.degree:
        return None
    rem = list(a.coeffs)
    lb = b.lc
    qdeg = a.degree - b.degree
    quot = [0] * (qdeg + 1)
    for k in range(qdeg, -1, -1):
        top = rem[k + b.degree]
        if top % lb != 0:
            return None
        q = top // lb
        quot[k] = q
        if q:
            for i, c in enumerate(b.coeffs):
                rem[k + i] -= q * c
    if any(rem[: b.degree]):
        return None
    return IntPoly(quot)


def exact_div(a: IntPoly, b: IntPoly) -> IntPoly:
    """Quotient a/b over Z; raises if the division is not exact."""
    q = try_div(a, b)
    if q is None:
        raise ValueError("polynomial division is not exact")
    return q


def pseudo_rem(a: IntPoly, b: IntPoly) -> IntPoly:
    """Pseudo-remainder: lc(b)**(deg a - deg b + 1) * a mod b, exactly."""
    if b.is_zero:
        raise ZeroDivisionError("pseudo-remainder by zero")
    da, db = a.degree, b.degree
    if da < db:
        return a
    lb = b.lc
    rem = list(a.coeffs)
    steps = 0
    for k in range(da - db, -1, -1):
        top = rem[k + db]
        for i in range(k + db):
            rem[i] *= lb
        if top:
            for i, c in enumerate(b.coeffs[:-1]):
                rem[k + i] -= top * c
        rem[k + db] = 0
        steps += 1
    r = IntPoly(rem)
    # classical prem is lc(b)**(da-db+1) * a mod b; steps == da-db+1 here
    return r


def gcd(a: IntPoly, b: IntPoly) -> IntPoly:
    """Polynomial gcd over Z, primitive-PRS style, positive leading coefficient."""
    if a.is_zero and b.is_zero:
        return IntPoly()
    if a.is_zero:
        a, b = b, a
    if b.is_zero:
        g = primitive_part(a)
        return g.scale(-1) if g.lc < 0 else g
    c = math.gcd(content(a), content(b))
    u, v = primitive_part(a), primitive_part(b)
    if u.degree < v.degree:
        u, v = v, u
    while not v.is_zero:
        r = primitive_part(pseudo_rem(u, v))
        u, v = v, r
    if u.lc < 0:
        u = u.scale(-1)
    return u.scale(c) if c > 1 else u


# -- resultants and discriminants --------------------------------------------


def resultant(a: IntPoly, b: IntPoly) -> int:
    """Exact resultant via the subresultant polynomial remainder sequence."""
    if a.is_zero or b.is_zero:
        raise ValueError("resultant requires nonzero polynomials")
    if a.degree == 0 and b.degree == 0:
        return 1
    if a.degree == 0:
        return a.lc ** b.degree
    if b.degree == 0:
        return b.lc ** a.degree
    s = 1
    ca, cb = content(a), content(b)
    t = ca**b.degree * cb**a.degree
    a, b = primitive_part(a), primitive_part(b)
    if a.degree < b.degree:
        if (a.degree * b.degree) % 2:
            s = -s
        a, b = b, a
    g = h = 1
    while True:
        da, db = a.degree, b.degree
        delta = da - db
        if da % 2 and db % 2:
            s = -s
        r = pseudo_rem(a, b)
        if r.is_zero:
            return 0  # common factor of positive degree
        a = b
        divisor = g * h**delta
        if any(c % divisor for c in r.coeffs):
            raise ArithmeticError("subresultant divisor does not divide the remainder")
        b = IntPoly([c // divisor for c in r.coeffs])
        g = a.lc
        if delta > 0:
            h = g**delta // h ** (delta - 1)
        if b.degree == 0:
            break
    da = a.degree
    return s * t * (b.lc**da // h ** (da - 1))


def sylvester_resultant(a: IntPoly, b: IntPoly) -> int:
    """Resultant as the Bareiss determinant of the Sylvester matrix.

    Independent of the PRS path; meant for cross-checks at small degree.
    """
    if a.is_zero or b.is_zero:
        raise ValueError("resultant requires nonzero polynomials")
    m, n = a.degree, b.degree
    if m == 0 and n == 0:
        return 1
    if m == 0:
        return a.lc**n
    if n == 0:
        return b.lc**m
    size = m + n
    rows: list[list[int]] = []
    arev = list(reversed(a.coeffs))
    brev = list(reversed(b.coeffs))
    for i in range(n):
        rows.append([0] * i + arev + [0] * (size - i - m - 1))
    for i in range(m):
        rows.append([0] * i + brev + [0] * (size - i - n - 1))
    sign = 1
    prev = 1
    for k in range(size - 1):
        if rows[k][k] == 0:
            pivot = next((i for i in range(k + 1, size) if rows[i][k] != 0), None)
            if pivot is None:
                return 0
            rows[k], rows[pivot] = rows[pivot], rows[k]
            sign = -sign
        for i in range(k + 1, size):
            for j in range(k + 1, size):
                rows[i][j] = (rows[i][j] * rows[k][k] - rows[i][k] * rows[k][j]) // prev
            rows[i][k] = 0
        prev = rows[k][k]
    return sign * rows[size - 1][size - 1]


def discriminant(p: IntPoly) -> int:
    """Discriminant with the (-1)**(n(n-1)/2) * Res(p, p') / lc convention."""
    n = p.degree
    if n < 2:
        raise ValueError("discriminant requires degree >= 2")
    res = resultant(p, p.derivative())
    sign = -1 if (n * (n - 1) // 2) % 2 else 1
    num = sign * res
    if num % p.lc != 0:
        raise ArithmeticError("discriminant normalization failed")
    return num // p.lc
