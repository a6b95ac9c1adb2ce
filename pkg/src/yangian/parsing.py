"""Expression parser for the command-line front end.

Grammar (whitespace insensitive):

    expr    := term (('+' | '-') term)*
    term    := factor (('*')? factor)*          -- juxtaposition multiplies
    factor  := '-' factor | postfix
    postfix := atom ('^' signed-int)*
    atom    := rational
             | 't' '[' int ',' int ',' int ']'
             | 't' '(' int ',' int ')' shift?
             | ('d' | 'e' | 'f') '(' int ')' shift?
             | 'ber' shift? | 'qdet' shift?
             | '[' expr ',' expr ']'            -- supercommutator
             | '(' expr ')'
    shift   := '@' '(' 'u' ('-' | '+') rational ')'

Atoms evaluate to exact rationals, algebra elements, or truncated series
bound to the invocation's shape and order; mixing elements with series is
an error rather than a silent re-truncation.  Parse errors carry the
offending position and what was expected there.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .algebra import Element, Shape, algebra, supercommutator
from .series import Series, series_supercommutator, t_series


class ExprError(ValueError):
    """Parse or evaluation error with source position."""

    def __init__(self, message: str, pos: int):
        super().__init__(f"{message} (at position {pos})")
        self.pos = pos


_TOKEN = re.compile(
    r"\s*(?:(?P<int>\d+)|(?P<name>[A-Za-z_]+)|(?P<op>[-+*/^()\[\],@]))"
)


def tokenize(text: str):
    toks = []
    pos = 0
    while pos < len(text):
        mo = _TOKEN.match(text, pos)
        if mo is None:
            stripped = text[pos:].lstrip()
            if not stripped:
                break
            raise ExprError(f"unexpected character {stripped[0]!r}",
                            len(text) - len(stripped))
        kind = mo.lastgroup
        toks.append((kind, mo.group(kind), mo.start(kind)))
        pos = mo.end()
    toks.append(("end", "", len(text)))
    return toks


@dataclass
class EvalContext:
    shape: Shape
    order: int
    convention: str = "plain"

    @property
    def alg(self):
        return algebra(self.shape.m, self.shape.n)


class Parser:
    def __init__(self, text: str, ctx: EvalContext):
        self.text = text
        self.ctx = ctx
        self.toks = tokenize(text)
        self.i = 0

    # -- token plumbing ----------------------------------------------------

    def peek(self):
        return self.toks[self.i]

    def next(self):
        tok = self.toks[self.i]
        self.i += 1
        return tok

    def expect(self, value: str):
        kind, val, pos = self.peek()
        if val != value:
            raise ExprError(f"expected {value!r}, found {val or 'end of input'!r}",
                            pos)
        return self.next()

    def expect_int(self) -> int:
        kind, val, pos = self.peek()
        if kind != "int":
            raise ExprError(f"expected integer, found {val or 'end of input'!r}",
                            pos)
        self.next()
        return int(val)

    # -- grammar -----------------------------------------------------------

    def parse(self):
        value = self.expr()
        kind, val, pos = self.peek()
        if kind != "end":
            raise ExprError(f"unexpected trailing input {val!r}", pos)
        return value

    def expr(self):
        value = self.term()
        while self.peek()[1] in ("+", "-"):
            op = self.next()[1]
            rhs = self.term()
            value = self.add(value, rhs) if op == "+" else self.add(
                value, self.negate(rhs))
        return value

    _ATOM_STARTS = ("int", "name")

    def term(self):
        value = self.factor()
        while True:
            kind, val, pos = self.peek()
            if val == "*":
                self.next()
                value = self.multiply(value, self.factor(), pos)
            elif kind in self._ATOM_STARTS or val in ("(", "["):
                value = self.multiply(value, self.factor(), pos)
            else:
                return value

    def factor(self):
        if self.peek()[1] == "-":
            self.next()
            return self.negate(self.factor())
        return self.postfix()

    def postfix(self):
        value = self.atom()
        while self.peek()[1] == "^":
            _, _, pos = self.next()
            neg = False
            if self.peek()[1] == "-":
                self.next()
                neg = True
            k = self.expect_int()
            value = self.power(value, -k if neg else k, pos)
        return value

    def atom(self):
        kind, val, pos = self.next()
        if kind == "int":
            num = Fraction(int(val))
            if self.peek()[1] == "/":
                self.next()
                num /= self.expect_int()
            return num
        if kind == "name":
            return self.named_atom(val, pos)
        if val == "(":
            inner = self.expr()
            self.expect(")")
            return inner
        if val == "[":
            lhs = self.expr()
            self.expect(",")
            rhs = self.expr()
            self.expect("]")
            return self.bracket(lhs, rhs, pos)
        raise ExprError(f"expected an atom, found {val or 'end of input'!r}", pos)

    def named_atom(self, name: str, pos: int):
        ctx = self.ctx
        M = ctx.shape.size
        if name == "t":
            if self.peek()[1] == "[":
                self.next()
                i = self.expect_int()
                self.expect(",")
                j = self.expect_int()
                self.expect(",")
                r = self.expect_int()
                self.expect("]")
                self.check_index(i, pos)
                self.check_index(j, pos)
                if r < 1:
                    raise ExprError("generator level must be >= 1", pos)
                return ctx.alg.gen(i, j, r)
            self.expect("(")
            i = self.expect_int()
            self.expect(",")
            j = self.expect_int()
            self.expect(")")
            self.check_index(i, pos)
            self.check_index(j, pos)
            return self.maybe_shift(t_series(ctx.alg, i, j, ctx.order))
        if name in ("d", "e", "f"):
            from .matrixops import defe_series

            self.expect("(")
            i = self.expect_int()
            self.expect(")")
            hi = M if name == "d" else M - 1
            if not 1 <= i <= hi:
                raise ExprError(f"{name}-index {i} out of range for shape "
                                f"{ctx.shape}", pos)
            return self.maybe_shift(
                defe_series(ctx.shape, ctx.order, name, i, ctx.convention))
        if name == "ber":
            from .berezinian import berezinian_sum

            return self.maybe_shift(
                berezinian_sum(ctx.shape, ctx.order, ctx.convention))
        if name == "qdet":
            from .berezinian import quantum_determinant

            return self.maybe_shift(quantum_determinant(ctx.shape, ctx.order))
        if name == "u":
            raise ExprError("'u' is only valid inside a shift suffix @(u-c)",
                            pos)
        raise ExprError(f"unknown identifier {name!r}", pos)

    def maybe_shift(self, series: Series) -> Series:
        if self.peek()[1] != "@":
            return series
        _, _, pos = self.next()
        self.expect("(")
        kind, val, upos = self.next()
        if val != "u":
            raise ExprError(f"expected 'u', found {val!r}", upos)
        sign_tok = self.next()
        if sign_tok[1] not in ("-", "+"):
            raise ExprError("expected '+' or '-' in shift suffix", sign_tok[2])
        c = Fraction(self.expect_int())
        if self.peek()[1] == "/":
            self.next()
            c /= self.expect_int()
        self.expect(")")
        return series.shift(c if sign_tok[1] == "-" else -c)

    def check_index(self, i: int, pos: int):
        if not 1 <= i <= self.ctx.shape.size:
            raise ExprError(
                f"index {i} out of range for shape {self.ctx.shape}", pos)

    # -- value combination -------------------------------------------------

    def coerce_pair(self, a, b, pos: int):
        if isinstance(a, Fraction):
            if isinstance(b, Element):
                a = b.alg.scalar(a)
            elif isinstance(b, Series):
                a = Series.scalar(b.alg, a, b.order)
        if isinstance(b, Fraction):
            if isinstance(a, Element):
                b = a.alg.scalar(b)
            elif isinstance(a, Series):
                b = Series.scalar(a.alg, b, a.order)
        if isinstance(a, Element) and isinstance(b, Series) or (
                isinstance(a, Series) and isinstance(b, Element)):
            raise ExprError("cannot mix a bare element with a series", pos)
        return a, b

    def add(self, a, b):
        a, b = self.coerce_pair(a, b, 0)
        return a + b

    def negate(self, a):
        return -a

    def multiply(self, a, b, pos: int):
        a, b = self.coerce_pair(a, b, pos)
        return a * b

    def power(self, a, k: int, pos: int):
        if isinstance(a, Fraction):
            return a ** k
        if isinstance(a, Element) and k < 0:
            raise ExprError("elements have no inverse; '^-1' needs a series",
                            pos)
        return a ** k

    def bracket(self, a, b, pos: int):
        a, b = self.coerce_pair(a, b, pos)
        if isinstance(a, Element):
            return supercommutator(a, b)
        if isinstance(a, Series):
            return series_supercommutator(a, b)
        return a * b - b * a


def parse_expression(text: str, shape: Shape, order: int,
                     convention: str = "plain"):
    """Parse and evaluate an expression; returns a Fraction, Element, or
    Series bound to the given shape and order."""
    return Parser(text, EvalContext(shape, order, convention)).parse()
