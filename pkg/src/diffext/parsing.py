"""Expression parser for field elements and twisted polynomials.

Grammar, standard precedence (loosest first):

    expr   := term (('+' | '-') term)*
    term   := unary (('*' | '/') unary)*
    unary  := '-' unary | power
    power  := atom ('^' INT)?
    atom   := INT | 'x' | 't' | '(' expr ')'

Two modes share the machinery.  In field mode 't' is rejected and the value
is a rational function; in poly mode values are twisted polynomials, with
division restricted to divisors free of t (TInDenominator otherwise).
Division by zero raises ZeroDivisionError; anything unparseable raises
ExprSyntaxError carrying the offset.
"""

from __future__ import annotations

from .diffpoly import DiffPoly
from .errors import ExprSyntaxError, TInDenominator
from .scalars import RatFunc
from .towers import DerivedField

__all__ = ["parse_expr", "parse_field_element", "parse_diffpoly"]


_OPS = set("+-*/^()")


def _tokenize(s: str):
    tokens = []
    i = 0
    n = len(s)
    while i < n:
        ch = s[i]
        if ch.isspace():
            i += 1
            continue
        if ch in _OPS:
            tokens.append((ch, i))
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < n and s[j].isdigit():
                j += 1
            tokens.append((("INT", int(s[i:j])), i))
            i = j
            continue
        if ch in ("x", "t"):
            # Bare variable; a following letter means an unknown name.
            if i + 1 < n and s[i + 1].isalnum():
                raise ExprSyntaxError("unknown name %r" % s[i:], i)
            tokens.append((ch, i))
            i += 1
            continue
        raise ExprSyntaxError("unexpected character %r" % ch, i)
    tokens.append((("END", None), n))
    return tokens


class _Parser:
    def __init__(self, tokens, K: DerivedField, allow_t: bool):
        self.tokens = tokens
        self.pos = 0
        self.K = K
        self.allow_t = allow_t

    def peek(self):
        return self.tokens[self.pos][0]

    def where(self):
        return self.tokens[self.pos][1]

    def advance(self):
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect(self, kind):
        tok, at = self.advance()
        if tok != kind:
            raise ExprSyntaxError("expected %r" % kind, at)
        return tok

    def parse(self) -> DiffPoly:
        v = self.expr()
        tok, at = self.advance()
        if tok != ("END", None):
            raise ExprSyntaxError("trailing input", at)
        return v

    def expr(self) -> DiffPoly:
        v = self.term()
        while self.peek() in ("+", "-"):
            op, _ = self.advance()
            rhs = self.term()
            v = v + rhs if op == "+" else v - rhs
        return v

    def term(self) -> DiffPoly:
        v = self.unary()
        while self.peek() in ("*", "/"):
            op, at = self.advance()
            rhs = self.unary()
            if op == "*":
                v = v * rhs
            else:
                v = self._divide(v, rhs, at)
        return v

    def _divide(self, v: DiffPoly, rhs: DiffPoly, at: int) -> DiffPoly:
        if rhs.degree() > 0:
            raise TInDenominator("cannot divide by a polynomial in t")
        if not rhs:
            raise ZeroDivisionError("division by zero in expression")
        inv = self.K.invert(rhs.coeff(0))
        return v.map_coeffs(lambda c: c * inv)

    def unary(self) -> DiffPoly:
        if self.peek() == "-":
            self.advance()
            return -self.unary()
        return self.power()

    def power(self) -> DiffPoly:
        v = self.atom()
        if self.peek() == "^":
            _, at = self.advance()
            tok, iat = self.advance()
            if not (isinstance(tok, tuple) and tok[0] == "INT"):
                raise ExprSyntaxError("exponent must be a literal integer", iat)
            return v ** tok[1]
        return v

    def atom(self) -> DiffPoly:
        tok, at = self.advance()
        if isinstance(tok, tuple) and tok[0] == "INT":
            return DiffPoly.constant(self.K, self.K.from_int(tok[1]))
        if tok == "x":
            return DiffPoly.constant(self.K, self.K.x())
        if tok == "t":
            if not self.allow_t:
                raise ExprSyntaxError("t is not allowed in a field expression", at)
            return DiffPoly.t(self.K)
        if tok == "(":
            v = self.expr()
            self.expect(")")
            return v
        raise ExprSyntaxError("expected a value", at)


def parse_expr(s: str, K: DerivedField, mode: str = "field"):
    """Parse s over K; mode is "field" (RatFunc) or "poly" (DiffPoly)."""
    if mode not in ("field", "poly"):
        raise ValueError("mode must be 'field' or 'poly'")
    tokens = _tokenize(s)
    poly = _Parser(tokens, K, allow_t=(mode == "poly")).parse()
    if mode == "poly":
        return poly
    return poly.coeff(0) if poly else K.zero()


def parse_field_element(s: str, K: DerivedField) -> RatFunc:
    return parse_expr(s, K, "field")


def parse_diffpoly(s: str, K: DerivedField) -> DiffPoly:
    return parse_expr(s, K, "poly")
