"""sexticlab: exact classification and monogenicity testing of even sextics."""

from .errors import ReduciblePolynomialError
from .families import (
    Family,
    FamilyMember,
    a4_poly,
    f1_member,
    f1_witness,
    f2_member,
    f2_witness,
    f3_poly,
    field_classes,
    hjms_witness,
)
from .intkit import (
    PrimeFactorization,
    factorize,
    is_prime,
    is_square,
    is_squarefree,
    isqrt,
    valuation,
)
from .monogenic import (
    MonogenicStatus,
    MonogenicVerdict,
    dedekind_prime_ok,
    is_monogenic_generic,
    jkk_check,
    jly_check,
)
from .polyz import IntPoly, discriminant, resultant
from .sextic import Classification, EvenSextic, GaloisClass, aux_sextic, classify, resolvent_cubic
from .zfactor import factor_q, is_irreducible_q, rational_roots

__version__ = "0.1.0"

__all__ = [
    "Classification",
    "EvenSextic",
    "Family",
    "FamilyMember",
    "GaloisClass",
    "IntPoly",
    "MonogenicStatus",
    "MonogenicVerdict",
    "PrimeFactorization",
    "ReduciblePolynomialError",
    "a4_poly",
    "aux_sextic",
    "classify",
    "dedekind_prime_ok",
    "discriminant",
    "f1_member",
    "f1_witness",
    "f2_member",
    "f2_witness",
    "f3_poly",
    "factor_q",
    "factorize",
    "field_classes",
    "hjms_witness",
    "is_irreducible_q",
    "is_monogenic_generic",
    "is_prime",
    "is_square",
    "is_squarefree",
    "isqrt",
    "jkk_check",
    "jly_check",
    "rational_roots",
    "resolvent_cubic",
    "resultant",
    "valuation",
]
