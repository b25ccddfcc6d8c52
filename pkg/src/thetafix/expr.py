"""Expression trees over named abstract generators.

Relations, generator substitutions and serialized witnesses all share this
one small language:

    expr   := term (("+" | "-") term)*
    term   := factor (("*" | ".") factor)*            # "·" is accepted too
    factor := "-"* atom ("^" INT)?
    atom   := RATIONAL | NAME | "(" expr ")" | "[" expr "," expr "]"

RATIONAL is an integer or integer/integer (e.g. 1/2); NAME matches
[A-Za-z_][A-Za-z0-9_]*; "[a, b]" is the commutator bracket.  There is no
implicit juxtaposition: products are always written out.

Trees are immutable; Python operators (+, -, *, **) build them, so relation
suites read close to their printed form:

    e[1] ** 2 * f[1] - 2 * e[1] * f[1] * e[1] + f[1] * e[1] ** 2 + 4 * e[1]
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .linalg import as_q


class ExprError(ValueError):
    pass


class Expr:
    __slots__ = ()

    def __add__(self, other):
        return _sum(self, _coerce(other))

    def __radd__(self, other):
        return _sum(_coerce(other), self)

    def __sub__(self, other):
        return _sum(self, _neg(_coerce(other)))

    def __rsub__(self, other):
        return _sum(_coerce(other), _neg(self))

    def __mul__(self, other):
        return _prod(self, _coerce(other))

    def __rmul__(self, other):
        return _prod(_coerce(other), self)

    def __neg__(self):
        return _neg(self)

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ExprError("powers must be nonnegative integers")
        return Power(self, k)


@dataclass(frozen=True)
class Sym(Expr):
    name: str


@dataclass(frozen=True)
class Const(Expr):
    value: Fraction


@dataclass(frozen=True)
class Sum(Expr):
    terms: tuple


@dataclass(frozen=True)
class Prod(Expr):
    factors: tuple


@dataclass(frozen=True)
class Bracket(Expr):
    left: Expr
    right: Expr


@dataclass(frozen=True)
class Power(Expr):
    base: Expr
    exp: int


def sym(name: str) -> Sym:
    return Sym(name)


def const(x) -> Const:
    return Const(as_q(x))


def bracket(a: Expr, b: Expr) -> Bracket:
    return Bracket(a, b)


ZERO = Const(Fraction(0))
ONE = Const(Fraction(1))


def _coerce(x) -> Expr:
    if isinstance(x, Expr):
        return x
    return const(x)


def _sum(a: Expr, b: Expr) -> Expr:
    terms = []
    for t in (a, b):
        terms.extend(t.terms if isinstance(t, Sum) else (t,))
    return Sum(tuple(terms))


def _prod(a: Expr, b: Expr) -> Expr:
    factors = []
    for f in (a, b):
        factors.extend(f.factors if isinstance(f, Prod) else (f,))
    return Prod(tuple(factors))


def _neg(a: Expr) -> Expr:
    return _prod(Const(Fraction(-1)), a)


def symbols_of(expr: Expr) -> set:
    out: set = set()
    _collect(expr, out)
    return out


def _collect(expr: Expr, out: set) -> None:
    if isinstance(expr, Sym):
        out.add(expr.name)
    elif isinstance(expr, Sum):
        for t in expr.terms:
            _collect(t, out)
    elif isinstance(expr, Prod):
        for f in expr.factors:
            _collect(f, out)
    elif isinstance(expr, Bracket):
        _collect(expr.left, out)
        _collect(expr.right, out)
    elif isinstance(expr, Power):
        _collect(expr.base, out)


def substitute(expr: Expr, table) -> Expr:
    """Simultaneous substitution of symbols; unmapped symbols are an error."""
    if isinstance(expr, Sym):
        try:
            return table[expr.name]
        except KeyError:
            raise ExprError(f"symbol {expr.name!r} is not in the substitution table") from None
    if isinstance(expr, Const):
        return expr
    if isinstance(expr, Sum):
        return Sum(tuple(substitute(t, table) for t in expr.terms))
    if isinstance(expr, Prod):
        return Prod(tuple(substitute(f, table) for f in expr.factors))
    if isinstance(expr, Bracket):
        return Bracket(substitute(expr.left, table), substitute(expr.right, table))
    if isinstance(expr, Power):
        return Power(substitute(expr.base, table), expr.exp)
    raise ExprError(f"not an expression: {expr!r}")


# ---------------------------------------------------------------------------
# Text form
# ---------------------------------------------------------------------------

def to_text(expr: Expr) -> str:
    return _fmt(expr, 0)


_PREC_SUM, _PREC_PROD, _PREC_POW = 1, 2, 3


def _fmt(expr: Expr, parent_prec: int) -> str:
    if isinstance(expr, Sym):
        return expr.name
    if isinstance(expr, Const):
        v = expr.value
        s = str(v)
        if v < 0 and parent_prec >= _PREC_PROD:
            return f"({s})"
        return s
    if isinstance(expr, Sum):
        if not expr.terms:
            return "0"
        parts = [_fmt(expr.terms[0], _PREC_SUM)]
        for t in expr.terms[1:]:
            s = _fmt(t, _PREC_SUM)
            if s.startswith("-"):
                parts.append(" - " + s[1:])
            else:
                parts.append(" + " + s)
        body = "".join(parts)
        return f"({body})" if parent_prec > _PREC_SUM else body
    if isinstance(expr, Prod):
        if not expr.factors:
            return "1"
        body = "*".join(_fmt(f, _PREC_PROD) for f in expr.factors)
        # pull a leading (-1)* out as a sign
        if body.startswith("(-1)*"):
            body = "-" + body[len("(-1)*"):]
        return f"({body})" if parent_prec > _PREC_PROD and not body.startswith("-") else (
            f"({body})" if parent_prec > _PREC_SUM and body.startswith("-") else body)
    if isinstance(expr, Bracket):
        return f"[{_fmt(expr.left, 0)}, {_fmt(expr.right, 0)}]"
    if isinstance(expr, Power):
        return f"{_fmt(expr.base, _PREC_POW)}^{expr.exp}"
    raise ExprError(f"not an expression: {expr!r}")


_TOKEN = re.compile(
    r"\s*(?:(?P<number>\d+(?:\s*/\s*\d+)?)|(?P<name>[A-Za-z_][A-Za-z0-9_]*)"
    r"|(?P<op>[+\-*^()\[\],.·]))"
)


def _tokenize(text: str):
    pos = 0
    out = []
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ExprError(f"cannot tokenize {text[pos:pos + 12]!r}")
        if m.lastgroup == "number":
            out.append(("num", m.group("number").replace(" ", "")))
        elif m.lastgroup == "name":
            out.append(("name", m.group("name")))
        else:
            op = m.group("op")
            out.append(("op", "*" if op in ".·" else op))
        pos = m.end()
    out.append(("end", ""))
    return out


class _Parser:
    def __init__(self, tokens):
        self.tokens = tokens
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self, kind=None, value=None):
        tok = self.tokens[self.i]
        if kind and tok[0] != kind or value and tok[1] != value:
            raise ExprError(f"unexpected token {tok[1]!r}")
        self.i += 1
        return tok

    def parse_expr(self) -> Expr:
        node = self.parse_term()
        while self.peek() == ("op", "+") or self.peek() == ("op", "-"):
            op = self.take()[1]
            rhs = self.parse_term()
            node = node + rhs if op == "+" else node - rhs
        return node

    def parse_term(self) -> Expr:
        node = self.parse_factor()
        while self.peek() == ("op", "*"):
            self.take()
            node = node * self.parse_factor()
        return node

    def parse_factor(self) -> Expr:
        neg = False
        while self.peek() == ("op", "-"):
            self.take()
            neg = not neg
        node = self.parse_atom()
        if self.peek() == ("op", "^"):
            self.take()
            kind, val = self.take("num")
            if "/" in val:
                raise ExprError("exponents must be integers")
            node = Power(node, int(val))
        return -node if neg else node

    def parse_atom(self) -> Expr:
        kind, val = self.peek()
        if kind == "num":
            self.take()
            return const(Fraction(val))
        if kind == "name":
            self.take()
            return Sym(val)
        if (kind, val) == ("op", "("):
            self.take()
            node = self.parse_expr()
            self.take("op", ")")
            return node
        if (kind, val) == ("op", "["):
            self.take()
            left = self.parse_expr()
            self.take("op", ",")
            right = self.parse_expr()
            self.take("op", "]")
            return Bracket(left, right)
        raise ExprError(f"unexpected token {val!r}")


def parse(text: str) -> Expr:
    parser = _Parser(_tokenize(text))
    node = parser.parse_expr()
    parser.take("end")
    return node


def suite_to_text(suite) -> str:
    """Serialize a named relation list, one 'name: expr' line each."""
    return "\n".join(f"{name}: {to_text(expr)}" for name, expr in suite) + "\n"


def suite_from_text(text: str):
    out = []
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        name, _, body = line.partition(":")
        if not body:
            raise ExprError(f"malformed suite line {line!r}")
        out.append((name.strip(), parse(body)))
    return out
