"""Bounded verification harness for the headline quantitative claims.

Each check is self-contained, returns a CheckResult, and runs at the default
ranges unless an override is supplied; ``run_paper_checks`` drives them all
and is what the ``verify paper`` CLI subcommand prints.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Callable

from . import families, zfactor
from .intkit import is_square, is_squarefree
from .monogenic import (
    MonogenicStatus,
    is_monogenic_generic,
    jkk_check,
    jly_check,
    jly_poly,
    jkk_poly,
)
from .polyz import discriminant
from .sextic import EvenSextic, GaloisClass, classify, resolvent_cubic


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str
    seconds: float


def _timed(name: str, fn: Callable[[], tuple[bool, str]]) -> CheckResult:
    start = time.perf_counter()
    try:
        passed, detail = fn()
    except Exception as exc:  # a crash is a failure, not an abort
        passed, detail = False, f"exception: {exc!r}"
    return CheckResult(name, passed, detail, time.perf_counter() - start)


# The six golden quadrinomials with their exact discriminants.  The third
# discriminant is positive: all six roots are real and the closed form
# -2**6 a**5 (4ab**3-27)**2 at (a, b) = (-7, -1) gives +2**6 * 7**5.
GOLDEN_SEXTET = (
    (EvenSextic(-6, 9, -3), 2**6 * 3**9),
    (EvenSextic(6, 9, 1), -(2**6) * 3**8),
    (EvenSextic(-7, 14, -7), 2**6 * 7**5),
    (EvenSextic(9, 6, 1), -(2**6) * 3**8),
    (EvenSextic(5, 6, 1), -(2**6) * 7**4),
    (EvenSextic(6, 5, 1), -(2**6) * 7**4),
)


def check_golden_sextet() -> tuple[bool, str]:
    problems = []
    polys = []
    for sext, want_disc in GOLDEN_SEXTET:
        poly = sext.as_poly()
        polys.append(poly)
        if not zfactor.is_irreducible_q(poly):
            problems.append(f"{sext} reducible")
            continue
        cls = classify(sext)
        if cls.galois is not GaloisClass.C6:
            problems.append(f"{sext} classified {cls.galois.value}")
        verdict = is_monogenic_generic(poly, assume_irreducible=True)
        if verdict.status is not MonogenicStatus.MONOGENIC:
            problems.append(f"{sext} not monogenic ({verdict.status.value})")
        disc = discriminant(poly)
        if disc != want_disc:
            problems.append(f"{sext} disc {disc} != {want_disc}")
        if abs(disc) != abs(want_disc):
            problems.append(f"{sext} |disc| mismatch")
    classes, undetermined = families.field_classes(polys)
    if undetermined:
        problems.append(f"undetermined field pairs: {undetermined}")
    if len(classes) != 4:
        problems.append(f"{len(classes)} field classes, expected 4")
    detail = f"6 polynomials, {len(classes)} distinct fields"
    if problems:
        detail += "; " + "; ".join(problems[:5])
    return not problems, detail


def check_binomial_trinomial(radius: int = 20) -> tuple[bool, str]:
    """No irreducible even sextic with ab = 0 classifies as C6."""
    violations = []
    tested = 0
    pairs = [(0, b) for b in range(-radius, radius + 1)]
    pairs += [(a, 0) for a in range(-radius, radius + 1) if a != 0]
    for a, b in pairs:
        for c in range(-radius, radius + 1):
            sext = EvenSextic(a, b, c)
            if not zfactor.is_irreducible_q(sext.as_poly()):
                continue
            tested += 1
            if classify(sext).galois is GaloisClass.C6:
                violations.append((a, b, c))
    detail = f"{tested} irreducible cells, {len(violations)} C6 hits"
    return not violations, detail


def check_f1_grid(radius: int = 60) -> tuple[bool, str]:
    """Square certificate <=> C6, and the monogenic members of the family."""
    equiv_bad = []
    monogenic_members = set()
    unknowns = 0
    tested = 0
    for a in range(-radius, radius + 1):
        for b in range(-radius, radius + 1):
            f = jly_poly(a, b)
            if not zfactor.is_irreducible_q(f):
                continue
            tested += 1
            cert_square = is_square(families.f1_certificate(a, b))
            cls = classify(EvenSextic(2 * a, a * a, b))
            if (cls.galois is GaloisClass.C6) != cert_square:
                equiv_bad.append((a, b))
            if cert_square:
                verdict = jly_check(a, b, assume_irreducible=True)
                if verdict.status is MonogenicStatus.UNKNOWN:
                    unknowns += 1
                elif verdict.status is MonogenicStatus.MONOGENIC:
                    monogenic_members.add((a, b))
    expected = {(-3, -3), (3, 1)}
    expected = {ab for ab in expected if max(abs(ab[0]), abs(ab[1])) <= radius}
    ok = not equiv_bad and not unknowns and monogenic_members == expected
    detail = (
        f"{tested} irreducible cells, {len(equiv_bad)} equivalence failures, "
        f"monogenic members {sorted(monogenic_members)}"
    )
    return ok, detail


def check_f2_grid(a_radius: int = 60, b_radius: int = 20) -> tuple[bool, str]:
    equiv_bad = []
    monogenic_members = set()
    unknowns = 0
    tested = 0
    for a in range(-a_radius, a_radius + 1):
        for b in range(-b_radius, b_radius + 1):
            f = jkk_poly(a, b)
            if f.degree != 6:
                continue  # a = 0 collapses the shape
            if not zfactor.is_irreducible_q(f):
                continue
            tested += 1
            cert_square = is_square(families.f2_certificate(a, b))
            cls = classify(EvenSextic(a * b * b, 2 * a * b, a))
            if (cls.galois is GaloisClass.C6) != cert_square:
                equiv_bad.append((a, b))
            if cert_square:
                verdict = jkk_check(a, b, assume_irreducible=True)
                if verdict.status is MonogenicStatus.UNKNOWN:
                    unknowns += 1
                elif verdict.status is MonogenicStatus.MONOGENIC:
                    monogenic_members.add((a, b))
    expected = {(-7, -1), (1, 3)}
    expected = {
        ab for ab in expected if abs(ab[0]) <= a_radius and abs(ab[1]) <= b_radius
    }
    ok = not equiv_bad and not unknowns and monogenic_members == expected
    detail = (
        f"{tested} irreducible cells, {len(equiv_bad)} equivalence failures, "
        f"monogenic members {sorted(monogenic_members)}"
    )
    return ok, detail


def check_f3_range(radius: int = 50) -> tuple[bool, str]:
    problems = []
    monogenic_set = set()
    for n in range(-radius, radius + 1):
        sext = families.f3_poly(n)
        poly = sext.as_poly()
        if not zfactor.is_irreducible_q(poly):
            problems.append(f"n={n} reducible")
            continue
        if classify(sext).galois is not GaloisClass.C6:
            problems.append(f"n={n} not C6")
        u, v = n * n + n - 1, n * n + n + 7
        if discriminant(poly) != -(2**6) * u**4 * v**4:
            problems.append(f"n={n} disc formula mismatch")
        verdict = is_monogenic_generic(poly, assume_irreducible=True)
        if verdict.status is MonogenicStatus.MONOGENIC:
            monogenic_set.add(n)
        elif verdict.status is MonogenicStatus.UNKNOWN:
            problems.append(f"n={n} unknown verdict")
    expected = {n for n in (-2, -1, 0, 1) if abs(n) <= radius}
    if monogenic_set != expected:
        problems.append(f"monogenic set {sorted(monogenic_set)} != {sorted(expected)}")
    detail = f"{2 * radius + 1} cells, monogenic at n in {sorted(monogenic_set)}"
    if problems:
        detail += "; " + "; ".join(problems[:5])
    return not problems, detail


def check_a4_range(radius: int = 100) -> tuple[bool, str]:
    problems = []
    monogenic_discs: list[int] = []
    monogenic_count = 0
    for n in range(-radius, radius + 1):
        sext, D = families.a4_poly(n)
        poly = sext.as_poly()
        if not zfactor.is_irreducible_q(poly):
            problems.append(f"n={n} reducible")
            continue
        if classify(sext).galois is not GaloisClass.A4:
            problems.append(f"n={n} not A4")
        disc = discriminant(poly)
        if disc != 2**6 * D**4:
            problems.append(f"n={n} disc != 2^6 D^4")
        verdict = is_monogenic_generic(poly, assume_irreducible=True)
        sqfree = is_squarefree(D)
        if sqfree is None or verdict.status is MonogenicStatus.UNKNOWN:
            problems.append(f"n={n} undecided")
            continue
        if (verdict.status is MonogenicStatus.MONOGENIC) != sqfree:
            problems.append(f"n={n} monogenic<->squarefree mismatch")
        if verdict.status is MonogenicStatus.MONOGENIC:
            monogenic_count += 1
            monogenic_discs.append(disc)
        if n == 34:
            if verdict.status is not MonogenicStatus.NOT_MONOGENIC:
                problems.append("n=34 should be NotMonogenic")
            elif verdict.witness_prime != 7:
                problems.append(f"n=34 witness {verdict.witness_prime} != 7")
    if len(set(monogenic_discs)) != len(monogenic_discs):
        problems.append("monogenic members do not have pairwise distinct discriminants")
    detail = f"{2 * radius + 1} cells, {monogenic_count} monogenic, all discs distinct"
    if problems:
        detail += "; " + "; ".join(problems[:5])
    return not problems, detail


def check_witness_families(f1_max: int = 50, f2_radius: int = 50) -> tuple[bool, str]:
    problems = []
    for n in range(1, f1_max + 1):
        a, b = families.f1_witness(n)
        member = families.f1_member(a, b)
        if member is None:
            problems.append(f"f1 witness n={n} not a member")
            continue
        g = resolvent_cubic(member.poly)
        if discriminant(g) != (6 * n + 1) ** 2 * a**4:
            problems.append(f"f1 witness n={n} resolvent disc mismatch")
    for n in range(-f2_radius, f2_radius + 1):
        a, b = families.f2_witness(n)
        member = families.f2_member(a, b)
        if member is None:
            problems.append(f"f2 witness n={n} not a member")
            continue
        g = resolvent_cubic(member.poly)
        if discriminant(g) != (6 * n + 5) ** 2 * a**2:
            problems.append(f"f2 witness n={n} resolvent disc mismatch")
    detail = f"{f1_max} f1 witnesses, {2 * f2_radius + 1} f2 witnesses"
    if problems:
        detail += "; " + "; ".join(problems[:5])
    return not problems, detail


def check_oracle_agreement(
    f1_radius: int = 60, f2_a_radius: int = 60, f2_b_radius: int = 20
) -> tuple[bool, str]:
    """Specialized criteria must match the generic prime-index test everywhere."""
    disagreements = []
    compared = 0
    for a in range(-f1_radius, f1_radius + 1):
        for b in range(-f1_radius, f1_radius + 1):
            f = jly_poly(a, b)
            if not zfactor.is_irreducible_q(f):
                continue
            s1 = jly_check(a, b, assume_irreducible=True)
            s2 = is_monogenic_generic(f, assume_irreducible=True)
            if (
                s1.status is MonogenicStatus.UNKNOWN
                or s2.status is MonogenicStatus.UNKNOWN
            ):
                continue
            compared += 1
            if s1.status is not s2.status:
                disagreements.append(("f1", a, b, s1.status.value, s2.status.value))
    for a in range(-f2_a_radius, f2_a_radius + 1):
        for b in range(-f2_b_radius, f2_b_radius + 1):
            f = jkk_poly(a, b)
            if f.degree != 6 or not zfactor.is_irreducible_q(f):
                continue
            s1 = jkk_check(a, b, assume_irreducible=True)
            s2 = is_monogenic_generic(f, assume_irreducible=True)
            if (
                s1.status is MonogenicStatus.UNKNOWN
                or s2.status is MonogenicStatus.UNKNOWN
            ):
                continue
            compared += 1
            if s1.status is not s2.status:
                disagreements.append(("f2", a, b, s1.status.value, s2.status.value))
    detail = f"{compared} cells compared, {len(disagreements)} disagreements"
    if disagreements:
        detail += f"; first: {disagreements[0]}"
    return not disagreements, detail


def run_paper_checks(range_override: int | None = None) -> list[CheckResult]:
    """Run every bounded verification; an override replaces all scan radii."""
    r = range_override
    checks = [
        ("1 golden sextet", lambda: check_golden_sextet()),
        ("2 binomials/trinomials never C6", lambda: check_binomial_trinomial(r or 20)),
        ("3 square-certificate family 1", lambda: check_f1_grid(r or 60)),
        ("4 square-certificate family 2", lambda: check_f2_grid(r or 60, r or 20)),
        ("5 one-parameter C6 family", lambda: check_f3_range(r or 50)),
        ("6 one-parameter A4 family", lambda: check_a4_range(r or 100)),
        ("7 witness subfamilies", lambda: check_witness_families(r or 50, r or 50)),
        (
            "8 specialized vs generic criteria",
            lambda: check_oracle_agreement(r or 60, r or 60, r or 20),
        ),
    ]
    return [_timed(name, fn) for name, fn in checks]
