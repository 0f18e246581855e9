"""Problem files: two definitions ``f = ...`` and ``theta = ...``.

Grammar (whitespace other than newlines is insignificant, ``//`` starts a
comment)::

    file       := defn newline defn
    defn       := name "=" expr
    name       := "f" | "theta"
    expr       := term (("+" | "-") term)*
    term       := factor ("*" factor)*
    factor     := rational | "#" | patterntok | var ("^" nat)?
    patterntok := "(" var "^" nat ")"
    rational   := ("-")? nat ("/" nat)?

A file containing only rational coefficients is CONCRETE.  Any ``#`` (one
generic coefficient) or ``(x^d)`` (a generic polynomial of degree d) makes it
a PATTERN; concrete terms in such a file become generic support members and
the result is flagged with ``mixed=True``.
"""
from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from fractions import Fraction

from .errors import DegenerateInput, MixedVariables, PolySyntaxError
from .pattern import PatternPoly
from .poly import BiPoly, format_rat

DEFAULT_VARIABLES = ("x", "y")
DEFINITION_NAMES = ("f", "theta")


class Mode(enum.Enum):
    CONCRETE = "concrete"
    PATTERN = "pattern"


@dataclass(frozen=True)
class ProblemSpec:
    f: BiPoly | PatternPoly
    theta: BiPoly | PatternPoly
    mode: Mode
    variables: tuple = DEFAULT_VARIABLES
    mixed: bool = False

    def __eq__(self, other):
        # ``mixed`` is a parse-time diagnostic, not part of the problem
        if not isinstance(other, ProblemSpec):
            return NotImplemented
        return (self.f, self.theta, self.mode, self.variables) == (
            other.f, other.theta, other.mode, other.variables)

    def __hash__(self):
        return hash((self.f, self.theta, self.mode, self.variables))


# ---------------------------------------------------------------------------
# tokenizer
# ---------------------------------------------------------------------------

_TOKEN = re.compile(r"""
    (?P<ws>[ \t\r\f\v]+)
  | (?P<comment>//[^\n]*)
  | (?P<newline>\n)
  | (?P<nat>[0-9]+)
  | (?P<name>[A-Za-z_][A-Za-z_0-9]*)
  | (?P<op>[=+\-*^/()\#])
""", re.VERBOSE)


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    pos: int


def _line_col(text: str, pos: int) -> tuple[int, int]:
    line = text.count("\n", 0, pos) + 1
    col = pos - (text.rfind("\n", 0, pos) + 1) + 1
    return line, col


def tokenize(text: str) -> list[Token]:
    tokens = []
    pos = 0
    while pos < len(text):
        mt = _TOKEN.match(text, pos)
        if mt is None:
            line, col = _line_col(text, pos)
            raise PolySyntaxError(f"unexpected character {text[pos]!r}", pos, line, col,
                                  expected="a token")
        kind = mt.lastgroup
        if kind == "op":
            kind = mt.group()
        if kind not in ("ws", "comment"):
            tokens.append(Token(kind, mt.group(), pos))
        pos = mt.end()
    tokens.append(Token("eof", "", len(text)))
    return tokens


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------

@dataclass
class _Term:
    """One product of factors.  ``monomials`` is the set of (x-exp, y-exp)
    exponent vectors the term can contribute to (a Minkowski sum when
    pattern tokens are multiplied)."""
    coeff: Fraction
    monomials: frozenset
    generic: bool


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = tokenize(text)
        self.i = 0
        self.names: list[str] = []  # variable names in order of appearance

    def peek(self) -> Token:
        return self.tokens[self.i]

    def advance(self) -> Token:
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def error(self, expected: str, tok: Token | None = None):
        tok = tok or self.peek()
        line, col = _line_col(self.text, tok.pos)
        found = "end of input" if tok.kind == "eof" else repr(tok.text)
        raise PolySyntaxError(f"expected {expected}, found {found}", tok.pos, line, col,
                              expected=expected)

    def expect(self, kind: str, expected: str | None = None) -> Token:
        if self.peek().kind != kind:
            self.error(expected or repr(kind))
        return self.advance()

    def skip_newlines(self) -> None:
        while self.peek().kind == "newline":
            self.advance()

    def file(self) -> dict:
        defs = {}
        self.skip_newlines()
        for k in range(2):
            if k:
                if self.peek().kind != "newline":
                    self.error("newline")
                self.skip_newlines()
            tok = self.peek()
            name = self.expect("name", "'f' or 'theta'").text
            if name not in DEFINITION_NAMES or name in defs:
                self.error("'theta'" if "f" in defs else "'f'" if "theta" in defs
                           else "'f' or 'theta'", tok)
            self.expect("=", "'='")
            defs[name] = self.expr()
        self.skip_newlines()
        if self.peek().kind != "eof":
            self.error("end of input")
        return defs

    def expr(self) -> list[_Term]:
        terms = [self.term(1)]
        while self.peek().kind in ("+", "-"):
            sign = 1 if self.advance().kind == "+" else -1
            terms.append(self.term(sign))
        return terms

    def term(self, sign: int) -> _Term:
        t = _Term(Fraction(sign), frozenset({(0, 0)}), False)
        self.factor(t)
        while self.peek().kind == "*":
            self.advance()
            self.factor(t)
        return t

    def nat(self) -> int:
        return int(self.expect("nat", "a natural number").text)

    def var(self) -> int:
        """Consume a variable name; returns its index of first appearance."""
        tok = self.peek()
        name = self.expect("name", "a variable").text
        if name in DEFINITION_NAMES:
            self.error("a variable", tok)
        if name not in self.names:
            self.names.append(name)
        return self.names.index(name)

    def factor(self, t: _Term) -> None:
        tok = self.peek()
        if tok.kind in ("nat", "-"):
            negative = tok.kind == "-"
            if negative:
                self.advance()
            num = self.nat()
            den = 1
            if self.peek().kind == "/":
                self.advance()
                den_tok = self.peek()
                den = self.nat()
                if den == 0:
                    self.error("a nonzero denominator", den_tok)
            t.coeff *= Fraction(-num if negative else num, den)
        elif tok.kind == "#":
            self.advance()
            t.generic = True
        elif tok.kind == "(":
            self.advance()
            v = self.var()
            self.expect("^", "'^'")
            d = self.nat()
            self.expect(")", "')'")
            t.generic = True
            t.monomials = frozenset(_shift(mono, v, e) for mono in t.monomials
                                    for e in range(d + 1))
        elif tok.kind == "name":
            v = self.var()
            e = 1
            if self.peek().kind == "^":
                self.advance()
                e = self.nat()
            t.monomials = frozenset(_shift(mono, v, e) for mono in t.monomials)
        else:
            self.error("a coefficient, '#', '(' or a variable")


def _shift(mono: tuple, var_index: int, e: int) -> tuple:
    out = list(mono)
    while len(out) <= var_index:
        out.append(0)
    out[var_index] += e
    return tuple(out)


def _resolve_variables(names: list[str], variables) -> tuple[tuple, list[int]]:
    """Pick the (x, y) pair and map each appearance index to an axis."""
    if len(names) > 2:
        raise MixedVariables(f"more than two variables: {names}")
    if variables is not None:
        pair = tuple(variables)
        extra = [n for n in names if n not in pair]
        if extra:
            raise MixedVariables(f"unexpected variable(s) {extra}; expected {pair}")
    elif set(names) <= set(DEFAULT_VARIABLES):
        pair = DEFAULT_VARIABLES
    elif len(names) == 2:
        pair = tuple(sorted(names))
    else:
        # a lone unfamiliar name is the eliminated variable
        pair = ("x", names[0])
    return pair, [pair.index(n) for n in names]


def _to_axes(mono: tuple, axis_of: list[int]) -> tuple[int, int]:
    out = [0, 0]
    for idx, e in enumerate(mono):
        if e:
            out[axis_of[idx]] += e
    return out[0], out[1]


def parse_problem(text: str, variables=None) -> ProblemSpec:
    """Parse a problem file.  ``variables`` fixes the (x, y) pair; by default
    it is (x, y) or, for other names, the two names in sorted order."""
    parser = _Parser(text)
    defs = parser.file()
    pair, axis_of = _resolve_variables(parser.names, variables)
    pattern_mode = any(t.generic for terms in defs.values() for t in terms)

    polys = {}
    mixed = False
    for name in DEFINITION_NAMES:
        concrete: dict = {}
        generic: set = set()
        for t in defs[name]:
            monos = {_to_axes(mono, axis_of) for mono in t.monomials}
            if t.generic:
                if t.coeff:
                    generic |= monos
            else:
                (mono,) = monos
                concrete[mono] = concrete.get(mono, 0) + t.coeff
        cpoly = BiPoly(concrete, pair)
        if pattern_mode:
            if not cpoly.is_zero():
                mixed = True
            polys[name] = PatternPoly(frozenset(generic) | cpoly.support, pair)
        else:
            polys[name] = cpoly

    for name, p in polys.items():
        if p.is_zero() or p.degree_in(pair[1]) < 1:
            raise DegenerateInput(f"{name} has degree 0 in {pair[1]}")
    return ProblemSpec(polys["f"], polys["theta"],
                       Mode.PATTERN if pattern_mode else Mode.CONCRETE, pair, mixed)


# ---------------------------------------------------------------------------
# canonical printer
# ---------------------------------------------------------------------------

def _mono_text(i: int, j: int, variables) -> list[str]:
    x, y = variables
    out = []
    for v, e in ((x, i), (y, j)):
        if e == 1:
            out.append(v)
        elif e > 1:
            out.append(f"{v}^{e}")
    return out


def format_concrete(p: BiPoly) -> str:
    parts = []
    for (i, j), c in sorted(p.terms.items(), key=lambda kv: (-kv[0][1], -kv[0][0])):
        factors = _mono_text(i, j, p.variables)
        mag = abs(c)
        if mag != 1 or not factors:
            factors.insert(0, format_rat(mag))
        body = "*".join(factors)
        if not parts:
            if c < 0:
                body = "-" + (body if factors[0][0].isdigit() else "1*" + body)
            parts.append(body)
        else:
            parts.append(("+ " if c > 0 else "- ") + body)
    return " ".join(parts) if parts else "0"


def format_pattern(p: PatternPoly) -> str:
    """Dense coefficients print as ``(x^d)``, everything else as ``#``."""
    x, y = p.variables
    parts = []
    for j, xs in sorted(p.support_sets.items(), reverse=True):
        ypow = _mono_text(0, j, p.variables)
        d = max(xs)
        if d >= 1 and xs == frozenset(range(d + 1)):
            parts.append("*".join([f"({x}^{d})"] + ypow))
        else:
            for i in sorted(xs, reverse=True):
                parts.append("*".join(["#"] + _mono_text(i, j, p.variables)))
    return " + ".join(parts)


def format_problem(spec: ProblemSpec) -> str:
    """Canonical text that :func:`parse_problem` maps back to ``spec``."""
    fmt = format_pattern if spec.mode is Mode.PATTERN else format_concrete
    return f"f = {fmt(spec.f)}\ntheta = {fmt(spec.theta)}\n"
