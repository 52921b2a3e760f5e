"""Text syntax for elements: a small recursive-descent parser and a canonical printer.

Grammar::

    expr   := ['+'|'-'] term (('+'|'-') term)*
    term   := factor ('*' factor)*
    factor := rational | symbol | '(' expr ')' | 'd(' expr ')'
            | '[' expr ',' expr ']' | 'cyc(' expr ')' | 'tr(' expr ')'
            | 'star(' expr ',' expr ')'

``rational`` is ``p`` or ``p/q``.  Juxtaposition is not multiplication, so
``xy`` is one symbol.  Whitespace is insignificant.
"""

from dataclasses import dataclass
from fractions import Fraction
import re

from .errors import NcalcError


class ParseError(NcalcError):
    """Lexical, syntax or unknown-symbol error at a given line and column."""

    def __init__(self, message, line=1, col=1):
        super().__init__(f"{message} (line {line}, column {col})")
        self.line = line
        self.col = col


# --------------------------------------------------------------------------
# AST


@dataclass(frozen=True)
class Num:
    value: Fraction


@dataclass(frozen=True)
class Sym:
    name: str


@dataclass(frozen=True)
class Add:
    """Signed summands; ``terms`` is a tuple of ``(sign, expr)`` with sign +1 or -1."""

    terms: tuple


@dataclass(frozen=True)
class Mul:
    factors: tuple


@dataclass(frozen=True)
class Commutator:
    left: object
    right: object


@dataclass(frozen=True)
class D:
    arg: object


@dataclass(frozen=True)
class Cyc:
    arg: object


@dataclass(frozen=True)
class Tr:
    arg: object


@dataclass(frozen=True)
class Star:
    left: object
    right: object


FUNCTIONS = {"d": (D, 1), "cyc": (Cyc, 1), "tr": (Tr, 1), "star": (Star, 2)}


# --------------------------------------------------------------------------
# lexer

_TOKEN = re.compile(r"""
    (?P<ws>\s+)
  | (?P<num>\d+(?:/\d+)?)
  | (?P<name>[A-Za-z_][A-Za-z0-9_]*(?:\{[0-9, ]*\})?)
  | (?P<op>[-+*(),\[\]])
""", re.VERBOSE)


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    line: int
    col: int


def tokenize(text):
    out = []
    pos, line, line_start = 0, 1, 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ParseError(f"unexpected character {text[pos]!r}", line, pos - line_start + 1)
        kind = m.lastgroup
        if kind == "ws":
            for i, ch in enumerate(m.group(), start=pos):
                if ch == "\n":
                    line, line_start = line + 1, i + 1
        else:
            out.append(Token(kind, m.group(), line, pos - line_start + 1))
        pos = m.end()
    out.append(Token("end", "", line, pos - line_start + 1))
    return out


# --------------------------------------------------------------------------
# parser


class Env:
    """Declared symbols; ``None`` accepts any name."""

    def __init__(self, symbols=None):
        self.symbols = None if symbols is None else list(symbols)

    def knows(self, name):
        return self.symbols is None or name in self.symbols


class _Parser:
    def __init__(self, text, env):
        self.toks = tokenize(text)
        self.i = 0
        self.env = env or Env()

    @property
    def tok(self):
        return self.toks[self.i]

    def fail(self, msg, tok=None):
        tok = tok or self.tok
        raise ParseError(msg, tok.line, tok.col)

    def eat(self, text):
        if self.tok.text != text:
            self.fail(f"expected {text!r}, found {self.tok.text or 'end of input'!r}")
        self.i += 1

    def expr(self):
        terms = []
        sign = 1
        if self.tok.text in "+-" and self.tok.kind == "op":
            sign = -1 if self.tok.text == "-" else 1
            self.i += 1
        terms.append((sign, self.term()))
        while self.tok.kind == "op" and self.tok.text in ("+", "-"):
            sign = -1 if self.tok.text == "-" else 1
            self.i += 1
            terms.append((sign, self.term()))
        if len(terms) == 1 and terms[0][0] == 1:
            return terms[0][1]
        return Add(tuple(terms))

    def term(self):
        factors = [self.factor()]
        while self.tok.text == "*":
            self.i += 1
            factors.append(self.factor())
        return factors[0] if len(factors) == 1 else Mul(tuple(factors))

    def factor(self):
        tok = self.tok
        if tok.kind == "num":
            self.i += 1
            return Num(Fraction(tok.text))
        if tok.kind == "name":
            self.i += 1
            if tok.text in FUNCTIONS and self.tok.text == "(":
                node, arity = FUNCTIONS[tok.text]
                self.eat("(")
                args = [self.expr()]
                for _ in range(arity - 1):
                    self.eat(",")
                    args.append(self.expr())
                self.eat(")")
                return node(*args)
            if not self.env.knows(tok.text):
                self.fail(f"unknown symbol {tok.text!r}", tok)
            return Sym(tok.text)
        if tok.text == "(":
            self.i += 1
            e = self.expr()
            self.eat(")")
            return e
        if tok.text == "[":
            self.i += 1
            a = self.expr()
            self.eat(",")
            b = self.expr()
            self.eat("]")
            return Commutator(a, b)
        self.fail(f"unexpected {tok.text or 'end of input'!r}")


def parse(text, env=None):
    """Parse ``text`` into an AST, resolving symbols against ``env``."""
    p = _Parser(text, env)
    e = p.expr()
    if p.tok.kind != "end":
        p.fail(f"unexpected {p.tok.text!r} after expression")
    return e


# --------------------------------------------------------------------------
# printing


def _num_str(q):
    return str(q) if q.denominator == 1 else f"({q})"


def to_str(e):
    """Canonical text; ``parse(to_str(e)) == e`` for every parsed ``e``."""
    if isinstance(e, Num):
        return _num_str(e.value)
    if isinstance(e, Sym):
        return e.name
    if isinstance(e, Add):
        out = ""
        for k, (s, t) in enumerate(e.terms):
            body = f"({to_str(t)})" if isinstance(t, Add) else to_str(t)
            if k == 0:
                out = "-" + body if s < 0 else body
            else:
                out += (" - " if s < 0 else " + ") + body
        return out
    if isinstance(e, Mul):
        return "*".join(f"({to_str(f)})" if isinstance(f, Add) else to_str(f) for f in e.factors)
    if isinstance(e, Commutator):
        return f"[{to_str(e.left)}, {to_str(e.right)}]"
    if isinstance(e, Star):
        return f"star({to_str(e.left)}, {to_str(e.right)})"
    for name, (node, _) in FUNCTIONS.items():
        if isinstance(e, node):
            return f"{name}({to_str(e.arg)})"
    raise NcalcError(f"not an expression node: {e!r}")


# --------------------------------------------------------------------------
# evaluation


class Evaluator:
    """Fold an AST into a target domain.

    Subclasses supply ``symbol``, ``number`` and whichever of ``d``, ``cyc``,
    ``tr``, ``star`` make sense; ``add``, ``neg`` and ``mul`` default to the
    Python operators.
    """

    def symbol(self, name):
        raise NcalcError(f"symbol {name!r} has no meaning here")

    def number(self, q):
        raise NcalcError("numbers are not supported here")

    def add(self, a, b):
        return a + b

    def neg(self, a):
        return a.scale(-1)

    def mul(self, a, b):
        return a * b

    def scalar_mul(self, q, a):
        return a.scale(q)

    def commutator(self, a, b):
        return self.add(self.mul(a, b), self.neg(self.mul(b, a)))

    def unsupported(self, what):
        raise NcalcError(f"{what}(...) is not supported here")

    def d(self, a):
        self.unsupported("d")

    def cyc(self, a):
        self.unsupported("cyc")

    def tr(self, a):
        self.unsupported("tr")

    def star(self, a, b):
        self.unsupported("star")

    def __call__(self, e):
        return self._eval(e)[1]

    def _eval(self, e):
        """Returns ``(is_scalar, value)`` so rational factors scale instead of multiplying."""
        if isinstance(e, Num):
            return True, e.value
        if isinstance(e, Sym):
            return False, self.symbol(e.name)
        if isinstance(e, Add):
            acc = None
            for s, t in e.terms:
                sc, v = self._eval(t)
                if sc:
                    v = self.number(v)
                if s < 0:
                    v = self.neg(v)
                acc = v if acc is None else self.add(acc, v)
            return False, acc
        if isinstance(e, Mul):
            q, acc = Fraction(1), None
            for f in e.factors:
                sc, v = self._eval(f)
                if sc:
                    q *= v
                else:
                    acc = v if acc is None else self.mul(acc, v)
            if acc is None:
                return True, q
            return False, acc if q == 1 else self.scalar_mul(q, acc)
        if isinstance(e, Commutator):
            return False, self.commutator(self._value(e.left), self._value(e.right))
        if isinstance(e, Star):
            return False, self.star(self._value(e.left), self._value(e.right))
        if isinstance(e, D):
            return False, self.d(self._value(e.arg))
        if isinstance(e, Cyc):
            return False, self.cyc(self._value(e.arg))
        if isinstance(e, Tr):
            return False, self.tr(self._value(e.arg))
        raise NcalcError(f"not an expression node: {e!r}")

    def _value(self, e):
        sc, v = self._eval(e)
        return self.number(v) if sc else v
