"""Parse and format polynomial expressions in the single variable x.

Grammar (whitespace allowed anywhere between tokens)::

    expr   := ['+'|'-'] term (('+'|'-') term)*
    term   := factor ('*' factor)*
    factor := base ('^' uint)?
    base   := uint | 'x' | '(' expr ')'

'^' binds tighter than '*', which binds tighter than '+'/'-'.  '^' is
non-associative, so "x^2^3" is rejected.  Multiplication is always
explicit: "2x" is an error, write "2*x".  A '-' is either binary or a
single leading sign of an expression; "(x + -1)" is an error.
"""

from __future__ import annotations

from .polycore import IntPoly, ONE, X, ZERO


class PolyParseError(ValueError):
    """Syntax error in a polynomial expression, with the offending position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


_OPERATORS = "+-*^()"


def _tokenize(s: str) -> list[tuple[str, str, int]]:
    """Split into (kind, text, position) triples; kinds: int, x, op, end."""
    tokens = []
    i = 0
    n = len(s)
    while i < n:
        ch = s[i]
        if ch.isspace():
            i += 1
        elif ch.isdigit():
            j = i
            while j < n and s[j].isdigit():
                j += 1
            tokens.append(("int", s[i:j], i))
            i = j
        elif ch.isalpha():
            j = i
            while j < n and s[j].isalnum():
                j += 1
            name = s[i:j]
            if name != "x":
                raise PolyParseError(f"unknown identifier '{name}'", i)
            tokens.append(("x", name, i))
            i = j
        elif ch in _OPERATORS:
            tokens.append(("op", ch, i))
            i += 1
        else:
            raise PolyParseError(f"unexpected character '{ch}'", i)
    tokens.append(("end", "", n))
    return tokens


class _Parser:
    def __init__(self, tokens: list[tuple[str, str, int]]):
        self.tokens = tokens
        self.pos = 0

    def peek(self) -> tuple[str, str, int]:
        return self.tokens[self.pos]

    def advance(self) -> tuple[str, str, int]:
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expr(self) -> IntPoly:
        negate = False
        kind, text, _ = self.peek()
        if kind == "op" and text in "+-":
            self.advance()
            negate = text == "-"
        acc = self.term()
        if negate:
            acc = -acc
        while True:
            kind, text, _ = self.peek()
            if kind == "op" and text in "+-":
                self.advance()
                rhs = self.term()
                acc = acc - rhs if text == "-" else acc + rhs
            else:
                return acc

    def term(self) -> IntPoly:
        acc = self.factor()
        while True:
            kind, text, _ = self.peek()
            if kind == "op" and text == "*":
                self.advance()
                acc = acc * self.factor()
            else:
                return acc

    def factor(self) -> IntPoly:
        base = self.base()
        kind, text, _ = self.peek()
        if kind == "op" and text == "^":
            self.advance()
            ekind, etext, epos = self.advance()
            if ekind != "int":
                raise PolyParseError("exponent must be a nonnegative integer", epos)
            result = base ** int(etext)
            kind, text, pos = self.peek()
            if kind == "op" and text == "^":
                raise PolyParseError("'^' is non-associative; parenthesize", pos)
            return result
        return base

    def base(self) -> IntPoly:
        kind, text, pos = self.advance()
        if kind == "int":
            return IntPoly((int(text),))
        if kind == "x":
            return X
        if kind == "op" and text == "(":
            inner = self.expr()
            kind, text, pos = self.advance()
            if not (kind == "op" and text == ")"):
                raise PolyParseError("expected ')'", pos)
            return inner
        raise PolyParseError(f"expected integer, 'x' or '(', got '{text or 'end of input'}'", pos)


def parse_poly(s: str) -> IntPoly:
    """Parse a polynomial expression into its fully expanded form."""
    parser = _Parser(_tokenize(s))
    result = parser.expr()
    kind, text, pos = parser.peek()
    if kind != "end":
        raise PolyParseError(f"unexpected token '{text}'", pos)
    return result


def format_poly(p: IntPoly) -> str:
    """Canonical descending-degree rendering; inverse of parse_poly.

    Coefficient 1 is suppressed on nonconstant terms, x^1 prints as "x",
    and the zero polynomial prints as "0".
    """
    if p.is_zero:
        return "0"
    parts: list[str] = []
    for k in range(p.degree, -1, -1):
        c = p.coeffs[k]
        if c == 0:
            continue
        if not parts:
            sign = "-" if c < 0 else ""
        else:
            sign = " - " if c < 0 else " + "
        mag = abs(c)
        if k == 0:
            body = str(mag)
        else:
            xpart = "x" if k == 1 else f"x^{k}"
            body = xpart if mag == 1 else f"{mag}*{xpart}"
        parts.append(sign + body)
    return "".join(parts)
