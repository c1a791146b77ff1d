"""Polynomial expression parsing and rendering for the command line.

Grammar: a polynomial is a signed sequence of terms, each term an optional
integer coefficient, an optional ``x``, and an optional ``^exponent``;
whitespace is ignored and repeated exponents are summed.  A comma anywhere
switches to the alternate input form: a plain coefficient list
``c0,c1,...,cn`` ordered by ascending power.
"""

from __future__ import annotations

from dataclasses import dataclass

from .polyz import IntPoly

MAX_EXPONENT = 64


class PolyParseError(ValueError):
    """Syntax error with the offending position in the source text."""

    def __init__(self, message: str, position: int):
        self.position = position
        super().__init__(f"{message} (at position {position})")


def _parse_coeff_list(text: str) -> IntPoly:
    coeffs = []
    pos = 0
    for piece in text.split(","):
        stripped = piece.strip()
        if not stripped:
            raise PolyParseError("empty entry in coefficient list", pos)
        try:
            coeffs.append(int(stripped))
        except ValueError:
            raise PolyParseError(f"bad integer {stripped!r}", pos) from None
        pos += len(piece) + 1
    return IntPoly(coeffs)


def parse_poly(text: str) -> IntPoly:
    """Parse an expression like ``x^6-6x^4+9x^2-3`` (or a coefficient list)."""
    if "," in text:
        return _parse_coeff_list(text)
    n = len(text)
    i = 0

    def skip_ws() -> None:
        nonlocal i
        while i < n and text[i].isspace():
            i += 1

    def read_int() -> int | None:
        nonlocal i
        start = i
        while i < n and text[i].isdigit():
            i += 1
        if i == start:
            return None
        return int(text[start:i])

    terms: dict[int, int] = {}
    skip_ws()
    if i >= n:
        raise PolyParseError("empty polynomial", i)
    sign = 1
    if text[i] in "+-":
        sign = -1 if text[i] == "-" else 1
        i += 1
    while True:
        skip_ws()
        coeff = read_int()
        skip_ws()
        exponent = 0
        if i < n and text[i] in "xX":
            i += 1
            exponent = 1
            skip_ws()
            if i < n and text[i] == "^":
                i += 1
                skip_ws()
                epos = i
                evalue = read_int()
                if evalue is None:
                    raise PolyParseError("expected an exponent after '^'", epos)
                if evalue > MAX_EXPONENT:
                    raise PolyParseError(
                        f"exponent {evalue} exceeds the limit {MAX_EXPONENT}", epos
                    )
                exponent = evalue
        elif coeff is None:
            raise PolyParseError("expected a term", i)
        value = coeff if coeff is not None else 1
        terms[exponent] = terms.get(exponent, 0) + sign * value
        skip_ws()
        if i >= n:
            break
        if text[i] not in "+-":
            raise PolyParseError(f"expected '+' or '-', found {text[i]!r}", i)
        sign = -1 if text[i] == "-" else 1
        i += 1
        skip_ws()
        if i >= n:
            raise PolyParseError("dangling sign", i)
    if not terms:
        raise PolyParseError("empty polynomial", 0)
    out = [0] * (max(terms) + 1)
    for e, c in terms.items():
        out[e] = c
    return IntPoly(out)


def render_poly(p: IntPoly) -> str:
    """Canonical rendering; parse_poly(render_poly(p)) round-trips exactly."""
    if p.is_zero:
        return "0"
    pieces: list[str] = []
    for e in range(p.degree, -1, -1):
        c = p[e]
        if c == 0:
            continue
        mag = abs(c)
        if e == 0:
            body = str(mag)
        else:
            xpart = "x" if e == 1 else f"x^{e}"
            body = xpart if mag == 1 else f"{mag}{xpart}"
        if not pieces:
            pieces.append(f"-{body}" if c < 0 else body)
        else:
            pieces.append(f"-{body}" if c < 0 else f"+{body}")
    return "".join(pieces)


@dataclass(frozen=True)
class PolyExpr:
    """A source string together with its parsed polynomial."""

    source: str
    parsed: IntPoly

    @classmethod
    def parse(cls, text: str) -> "PolyExpr":
        return cls(text, parse_poly(text))

    def render(self) -> str:
        return render_poly(self.parsed)
