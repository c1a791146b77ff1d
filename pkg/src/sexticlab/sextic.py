"""The even-sextic domain model x**6 + a x**4 + b x**2 + c and its classifier.

Classification into C6 / A4 / Other runs off three booleans: whether -c is a
square, whether the resolvent cubic has square discriminant, and whether the
auxiliary sextic x**6 - b x**4 + ac x**2 - c**2 is reducible over Q.  C6 and
A4 are mutually exclusive because they demand opposite answers on the first
test.  Anything not matching either pattern is reported as Other.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from . import zfactor
from .errors import ReduciblePolynomialError
from .intkit import is_square
from .polyz import IntPoly, discriminant


class GaloisClass(Enum):
    C6 = "C6"
    A4 = "A4"
    OTHER = "Other"


@dataclass(frozen=True)
class EvenSextic:
    """The coefficient triple (a, b, c) of x**6 + a x**4 + b x**2 + c."""

    a: int
    b: int
    c: int

    def as_poly(self) -> IntPoly:
        return IntPoly((self.c, 0, self.b, 0, self.a, 0, 1))

    @classmethod
    def from_poly(cls, p: IntPoly) -> "EvenSextic":
        if p.degree != 6 or not p.is_monic or p[1] or p[3] or p[5]:
            raise ValueError(f"{p!r} is not a monic even sextic")
        return cls(p[4], p[2], p[0])


def resolvent_cubic(f: EvenSextic) -> IntPoly:
    """g(x) = x**3 + a x**2 + b x + c, so that f(x) = g(x**2)."""
    return IntPoly((f.c, f.b, f.a, 1))


def aux_sextic(f: EvenSextic) -> IntPoly:
    """h(x) = x**6 - b x**4 + ac x**2 - c**2, the reducibility separator."""
    return IntPoly((-f.c * f.c, 0, f.a * f.c, 0, -f.b, 0, 1))


@dataclass(frozen=True)
class Classification:
    """Verdict plus the three condition booleans behind it.

    ``h_reducible`` is None when the other two conditions already settle the
    verdict and the (comparatively expensive) reducibility test was skipped;
    pass ``full=True`` to classify() to force it.
    """

    galois: GaloisClass
    minus_c_square: bool
    disc_g_square: bool
    h_reducible: bool | None


def classify(f: EvenSextic, full: bool = False) -> Classification:
    """Classify an irreducible even sextic as C6, A4, or Other.

    Irreducibility is verified here rather than trusted; a reducible input
    raises ReduciblePolynomialError carrying a proper factor.
    """
    poly = f.as_poly()
    if not zfactor.is_irreducible_q(poly):
        raise ReduciblePolynomialError(poly, zfactor.proper_factor(poly))
    minus_c_square = is_square(-f.c)
    disc_g_square = is_square(discriminant(resolvent_cubic(f)))
    h_reducible: bool | None = None
    if disc_g_square or full:
        h_reducible = not zfactor.is_irreducible_q(aux_sextic(f))
    if disc_g_square and not minus_c_square and h_reducible:
        verdict = GaloisClass.C6
    elif disc_g_square and minus_c_square and not h_reducible:
        verdict = GaloisClass.A4
    else:
        verdict = GaloisClass.OTHER
    return Classification(verdict, minus_c_square, disc_g_square, h_reducible)
