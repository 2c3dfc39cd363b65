"""Text syntax for polynomials.

    poly   := term (('+'|'-') term)*
    term   := [coeff '*'?] factor ('*' factor)* | coeff
    factor := var ('^' uint)?
    coeff  := int ('/' uint)?
    var    := ('x'|'y') uint

Whitespace is ignored.  A leading sign on the first term is accepted.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .ring import QQ, Poly, format_poly

_TOKEN = re.compile(r"\s*(?:(?P<num>\d+)|(?P<var>[xy]\d+)|(?P<op>[-+*/^]))")


class PolySyntaxError(ValueError):
    def __init__(self, message: str, text: str, offset: int):
        line = text.count("\n", 0, offset) + 1
        col = offset - (text.rfind("\n", 0, offset) + 1) + 1
        super().__init__(f"{message} at offset {offset} (line {line}, column {col})")
        self.offset = offset
        self.line = line
        self.column = col


def _tokenize(text: str):
    pos = 0
    toks = []
    while pos < len(text):
        if text[pos].isspace():
            pos += 1
            continue
        m = _TOKEN.match(text, pos)
        if not m:
            raise PolySyntaxError(f"unexpected character {text[pos]!r}", text, pos)
        kind = m.lastgroup
        start = m.start(kind)
        toks.append((kind, m.group(kind), start))
        pos = m.end()
    toks.append(("end", "", len(text)))
    return toks


class _Parser:
    def __init__(self, text):
        self.text = text
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i]

    def take(self):
        tok = self.toks[self.i]
        self.i += 1
        return tok

    def fail(self, msg, tok=None):
        tok = tok or self.peek()
        raise PolySyntaxError(msg, self.text, tok[2])

    def expect(self, kind, value=None):
        tok = self.peek()
        if tok[0] != kind or (value is not None and tok[1] != value):
            what = value or kind
            found = "end of input" if tok[0] == "end" else repr(tok[1])
            self.fail(f"expected {what}, found {found}")
        return self.take()

    def poly(self):
        terms = []
        sign = 1
        if self.peek()[0] == "op" and self.peek()[1] in "+-":
            sign = -1 if self.take()[1] == "-" else 1
        terms.append((sign, *self.term()))
        while self.peek()[0] == "op" and self.peek()[1] in "+-":
            sign = -1 if self.take()[1] == "-" else 1
            terms.append((sign, *self.term()))
        if self.peek()[0] != "end":
            self.fail(f"unexpected {self.peek()[1]!r}")
        return terms

    def term(self):
        coeff = Fraction(1)
        factors = []
        tok = self.peek()
        if tok[0] == "num":
            coeff = self.coeff()
            if self.peek()[0] == "op" and self.peek()[1] == "*":
                self.take()
                factors.append(self.factor())
            elif self.peek()[0] == "var":
                factors.append(self.factor())
            else:
                return coeff, factors
        else:
            factors.append(self.factor())
        while self.peek()[0] == "op" and self.peek()[1] == "*":
            self.take()
            factors.append(self.factor())
        return coeff, factors

    def coeff(self):
        num = int(self.expect("num")[1])
        if self.peek()[0] == "op" and self.peek()[1] == "/":
            self.take()
            tok = self.expect("num")
            den = int(tok[1])
            if den == 0:
                self.fail("zero denominator", tok)
            return Fraction(num, den)
        return Fraction(num)

    def factor(self):
        tok = self.peek()
        if tok[0] != "var":
            found = "end of input" if tok[0] == "end" else repr(tok[1])
            self.fail(f"expected a variable, found {found}")
        self.take()
        power = 1
        if self.peek()[0] == "op" and self.peek()[1] == "^":
            self.take()
            power = int(self.expect("num")[1])
        return tok[1][0], int(tok[1][1:]), power, tok[2]


def parse_poly(text: str, field=QQ, nvars: int | None = None) -> Poly:
    """Parse a polynomial in x0..xN (a form) or y0..yN (an operator).

    The ring has ``nvars`` variables, or one more than the largest index used.
    """
    p = _Parser(text)
    terms = p.poly()
    sides = {f[0] for _, _, fs in terms for f in fs}
    if len(sides) > 1:
        first_y = next(f[3] for _, _, fs in terms for f in fs if f[0] == "y")
        raise PolySyntaxError("cannot mix x and y variables", text, first_y)
    side = sides.pop() if sides else "x"
    top = max((f[1] for _, _, fs in terms for f in fs), default=-1)
    if nvars is None:
        nvars = max(top + 1, 1)
    elif top >= nvars:
        off = next(f[3] for _, _, fs in terms for f in fs if f[1] == top)
        raise PolySyntaxError(f"unknown variable {side}{top} (ring has {nvars} variables)", text, off)
    out: dict = {}
    for sign, coeff, factors in terms:
        exps = [0] * nvars
        for _, idx, power, _ in factors:
            exps[idx] += power
        key = tuple(exps)
        out[key] = out.get(key, 0) + sign * coeff
    return Poly(out, nvars, field, side)


def parse_list(text: str, field=QQ, nvars: int | None = None) -> list[Poly]:
    """Comma-separated polynomials sharing one ring."""
    parts = [s for s in text.split(",") if s.strip()]
    if nvars is None:
        nvars = max(parse_poly(s, field).nvars for s in parts) if parts else 1
    return [parse_poly(s, field, nvars) for s in parts]


__all__ = ["PolySyntaxError", "format_poly", "parse_poly", "parse_list"]
