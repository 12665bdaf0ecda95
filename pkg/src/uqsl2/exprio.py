"""Parser and canonical printer for noncommutative algebra expressions.

Grammar (whitespace ignored, error positions are 1-based):

    expr   := term (('+' | '-') term)*
    term   := '-' term | factor (('*' | '/') factor)*
    factor := atom ('^' ['-'] INT)*
    atom   := '(' expr ')' | INT | NAME

NAME is a generator letter of the active presentation (k, e, f or x, y, z;
inverses are spelled k^-1, x^-1) or the distinguished scalar q.  '*' is
mandatory; juxtaposition is not multiplication.  '/' requires its right
operand to be (or fold to) a nonzero scalar.  Subexpressions built only
from q and numbers fold into ScalarLiteral nodes during parsing, so a
parsed tree is always in folded form and render/parse round-trip exactly.
"""

import re
from dataclasses import dataclass
from fractions import Fraction

from .qfield import RF_ONE, RF_Q, RF_ZERO, RatFunc

CHEVALLEY = "chevalley"
EQUITABLE = "equitable"

_LETTERS = {CHEVALLEY: ("k", "e", "f"), EQUITABLE: ("x", "y", "z")}
_INVERSE_OF = {"k": "k^-1", "k^-1": "k", "x": "x^-1", "x^-1": "x"}


class ParseError(ValueError):
    def __init__(self, message, position):
        super().__init__("%s (at position %d)" % (message, position))
        self.message = message
        self.position = position


@dataclass(frozen=True)
class ScalarLiteral:
    value: RatFunc


@dataclass(frozen=True)
class Generator:
    presentation: str
    name: str


@dataclass(frozen=True)
class Sum:
    terms: tuple


@dataclass(frozen=True)
class Product:
    factors: tuple


@dataclass(frozen=True)
class IntPower:
    base: object
    exp: int


@dataclass(frozen=True)
class Negate:
    child: object


def make_negate(t):
    if isinstance(t, ScalarLiteral):
        return ScalarLiteral(-t.value)
    if isinstance(t, Negate):
        return t.child
    return Negate(t)


def make_sum(terms):
    flat = []
    for t in terms:
        if isinstance(t, Sum):
            flat.extend(t.terms)
        else:
            flat.append(t)
    if len(flat) == 1:
        return flat[0]
    if all(isinstance(t, ScalarLiteral) for t in flat):
        v = RF_ZERO
        for t in flat:
            v = v + t.value
        return ScalarLiteral(v)
    return Sum(tuple(flat))


def make_product(factors):
    flat = []
    for f in factors:
        if isinstance(f, Product):
            flat.extend(f.factors)
        else:
            flat.append(f)
    if len(flat) == 1:
        return flat[0]
    if all(isinstance(f, ScalarLiteral) for f in flat):
        v = RF_ONE
        for f in flat:
            v = v * f.value
        return ScalarLiteral(v)
    return Product(tuple(flat))


def make_power(base, e, pos=0):
    if isinstance(base, ScalarLiteral):
        if e < 0 and base.value.is_zero():
            raise ParseError("zero raised to a negative power", pos)
        return ScalarLiteral(base.value ** e)
    if e == 0:
        return ScalarLiteral(RF_ONE)
    if e == 1:
        return base
    if isinstance(base, Generator):
        if e < 0:
            inv = _INVERSE_OF.get(base.name)
            if inv is None:
                raise ParseError(
                    "negative power of non-invertible generator '%s'" % base.name, pos)
            base = Generator(base.presentation, inv)
            e = -e
            if e == 1:
                return base
        return IntPower(base, e)
    if e < 0:
        raise ParseError("negative power of a non-invertible expression", pos)
    return IntPower(base, e)


def _tokenize(text):
    toks = []
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            toks.append(("int", int(text[i:j]), i + 1))
            i = j
            continue
        if ch.isalpha():
            j = i
            while j < n and text[j].isalpha():
                j += 1
            toks.append(("name", text[i:j], i + 1))
            i = j
            continue
        if ch in "+-*/^()":
            toks.append((ch, ch, i + 1))
            i += 1
            continue
        raise ParseError("unexpected character '%s'" % ch, i + 1)
    toks.append(("end", None, n + 1))
    return toks


class _Parser:
    def __init__(self, text, presentation):
        if presentation not in _LETTERS:
            raise ValueError("unknown presentation %r" % (presentation,))
        self.presentation = presentation
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i]

    def advance(self):
        t = self.toks[self.i]
        self.i += 1
        return t

    def expr(self):
        terms = [self.term()]
        while self.peek()[0] in ("+", "-"):
            op, _, _ = self.advance()
            t = self.term()
            terms.append(make_negate(t) if op == "-" else t)
        return make_sum(terms)

    def term(self):
        if self.peek()[0] == "-":
            self.advance()
            return make_negate(self.term())
        factors = [self.factor()]
        while self.peek()[0] in ("*", "/"):
            op, _, oppos = self.advance()
            f = self.factor()
            if op == "/":
                if not isinstance(f, ScalarLiteral):
                    raise ParseError("division requires a scalar divisor", oppos)
                if f.value.is_zero():
                    raise ParseError("division by zero", oppos)
                f = ScalarLiteral(f.value.inverse())
            factors.append(f)
        return make_product(factors)

    def factor(self):
        base = self.atom()
        while self.peek()[0] == "^":
            _, _, cpos = self.advance()
            sign = 1
            if self.peek()[0] == "-":
                self.advance()
                sign = -1
            kind, val, pos = self.peek()
            if kind != "int":
                raise ParseError("expected an integer exponent", pos)
            self.advance()
            base = make_power(base, sign * val, cpos)
        return base

    def atom(self):
        kind, val, pos = self.advance()
        if kind == "(":
            e = self.expr()
            kind2, _, pos2 = self.advance()
            if kind2 != ")":
                raise ParseError("expected ')'", pos2)
            return e
        if kind == "int":
            return ScalarLiteral(RF_ONE * val)
        if kind == "name":
            if val == "q":
                return ScalarLiteral(RF_Q)
            if val in _LETTERS[self.presentation]:
                return Generator(self.presentation, val)
            raise ParseError(
                "unknown symbol '%s' for %s presentation" % (val, self.presentation), pos)
        raise ParseError("expected an expression", pos)


def parse(text, presentation):
    """Parse text into a folded NCExpr tree for the given presentation."""
    p = _Parser(text, presentation)
    e = p.expr()
    kind, _, pos = p.peek()
    if kind != "end":
        raise ParseError("unexpected trailing input", pos)
    return e


_BARE_SCALAR = re.compile(r"\d+|q(\^-?\d+)?")


def _scalar_str(v):
    s = str(v)
    if _BARE_SCALAR.fullmatch(s):
        return s
    return "(%s)" % s


def _factor_str(f):
    if isinstance(f, (Sum, Negate)):
        return "(%s)" % render(f)
    return render(f)


def _term_str(t):
    if isinstance(t, Sum):
        return "(%s)" % render(t)
    return render(t)


def render(expr):
    """Print an NCExpr so that parse(render(e)) is structurally equal to e."""
    if isinstance(expr, ScalarLiteral):
        return _scalar_str(expr.value)
    if isinstance(expr, Generator):
        return expr.name
    if isinstance(expr, IntPower):
        base = expr.base
        if isinstance(base, Generator):
            if base.name in ("k^-1", "x^-1"):
                return "%s^-%d" % (base.name[0], expr.exp)
            return "%s^%d" % (base.name, expr.exp)
        return "(%s)^%d" % (render(base), expr.exp)
    if isinstance(expr, Negate):
        return "-" + _term_str(expr.child)
    if isinstance(expr, Product):
        return "*".join(_factor_str(f) for f in expr.factors)
    if isinstance(expr, Sum):
        parts = []
        for idx, t in enumerate(expr.terms):
            if isinstance(t, Negate):
                sign, body = "-", _term_str(t.child)
            elif isinstance(t, ScalarLiteral) and t.value.leading_negative():
                sign, body = "-", _scalar_str(-t.value)
            else:
                sign, body = "+", _term_str(t)
            if idx == 0:
                parts.append(body if sign == "+" else "-" + body)
            else:
                parts.append((" + " if sign == "+" else " - ") + body)
        return "".join(parts)
    raise TypeError("not an NCExpr node: %r" % (expr,))


def scalar(value):
    """Wrap a field element (or int/Fraction) as a ScalarLiteral."""
    if not isinstance(value, RatFunc):
        value = RF_ONE * Fraction(value)
    return ScalarLiteral(value)
