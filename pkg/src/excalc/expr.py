"""Expression language over the algebra: lexer, parser, evaluator.

Surface syntax: `^` wedge, `v` vee, prefix `*` star complement, prefix `~`
conjugation, `+`/`-` sums, `E` top blade, `1` vacuum scalar, `i` the imaginary
unit, numeric literals with optional `i` suffix, `scalar * expr` scaling,
`ip(a, b)` scalar product, names bound in an environment.  Precedence from
tightest: prefix operators, `^`, `v`, then `+`/`-`; the binary products are
left associative and prefix operators take an atomic or parenthesized operand.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from .errors import EvalError, ExprSyntaxError, IndexRangeError
from .multivector import (
    Multivector,
    check_dim,
    conjugate,
    hodge,
    scalar_product,
    vee,
    wedge,
)

# ---- tokens -------------------------------------------------------------------

_NUMBER = re.compile(r"\d+(?:\.\d+)?(?:[eE][+-]?\d+)?")
_WORD = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")
_BASIS = re.compile(r"e(\d+)$")
_OPS = set("^*~+-")


@dataclass(frozen=True)
class Token:
    kind: str  # basis | top | scalar | op | lparen | rparen | comma | ident | ip | end
    text: str
    line: int
    col: int
    value: complex = 0j
    index: int = 0


def tokenize(source: str) -> list[Token]:
    """Longest-match lexing; raises ExprSyntaxError on any unknown character."""
    tokens: list[Token] = []
    line, col = 1, 1
    pos = 0
    n = len(source)
    while pos < n:
        ch = source[pos]
        if ch == "\n":
            line += 1
            col = 1
            pos += 1
            continue
        if ch.isspace():
            pos += 1
            col += 1
            continue
        start_line, start_col = line, col
        if "0" <= ch <= "9":
            m = _NUMBER.match(source, pos)
            text = m.group(0)
            pos = m.end()
            imag = False
            if pos < n and source[pos] == "i":
                # an 'i' that starts a longer word belongs to that word
                rest = _WORD.match(source, pos)
                if rest and rest.group(0) == "i":
                    imag = True
                    pos += 1
                    text += "i"
            value = complex(0.0, float(text[:-1])) if imag else complex(float(text))
            tokens.append(Token("scalar", text, start_line, start_col, value=value))
            col += len(text)
            continue
        if ("a" <= ch <= "z") or ("A" <= ch <= "Z") or ch == "_":
            m = _WORD.match(source, pos)
            word = m.group(0)
            pos = m.end()
            col += len(word)
            if word == "E":
                tokens.append(Token("top", word, start_line, start_col))
            elif word == "v":
                tokens.append(Token("op", "v", start_line, start_col))
            elif word == "i":
                tokens.append(Token("scalar", word, start_line, start_col, value=1j))
            elif word == "ip":
                tokens.append(Token("ip", word, start_line, start_col))
            else:
                basis = _BASIS.match(word)
                if basis:
                    tokens.append(
                        Token("basis", word, start_line, start_col, index=int(basis.group(1)))
                    )
                else:
                    tokens.append(Token("ident", word, start_line, start_col))
            continue
        if ch in _OPS:
            tokens.append(Token("op", ch, start_line, start_col))
        elif ch == "(":
            tokens.append(Token("lparen", ch, start_line, start_col))
        elif ch == ")":
            tokens.append(Token("rparen", ch, start_line, start_col))
        elif ch == ",":
            tokens.append(Token("comma", ch, start_line, start_col))
        else:
            raise ExprSyntaxError(f"unknown character {ch!r}", line, col)
        pos += 1
        col += 1
    tokens.append(Token("end", "", line, col))
    return tokens


# ---- syntax tree ----------------------------------------------------------------


@dataclass(frozen=True)
class BasisVector:
    index: int


@dataclass(frozen=True)
class TopBlade:
    pass


@dataclass(frozen=True)
class ScalarLit:
    value: complex


@dataclass(frozen=True)
class Var:
    name: str


@dataclass(frozen=True)
class Wedge:
    left: object
    right: object


@dataclass(frozen=True)
class Vee:
    left: object
    right: object


@dataclass(frozen=True)
class Star:
    operand: object


@dataclass(frozen=True)
class Conj:
    operand: object


@dataclass(frozen=True)
class Add:
    left: object
    right: object


@dataclass(frozen=True)
class Sub:
    left: object
    right: object


@dataclass(frozen=True)
class ScalarMul:
    coeff: complex
    operand: object


@dataclass(frozen=True)
class InnerProduct:
    left: object
    right: object


class _Parser:
    def __init__(self, tokens: list[Token]):
        self.tokens = tokens
        self.pos = 0

    @property
    def here(self) -> Token:
        return self.tokens[self.pos]

    def advance(self) -> Token:
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def fail(self, expected: tuple[str, ...]):
        tok = self.here
        what = "end of input" if tok.kind == "end" else f"{tok.text!r}"
        raise ExprSyntaxError(f"unexpected {what}", tok.line, tok.col, expected)

    def expect(self, kind: str, expected: tuple[str, ...]) -> Token:
        if self.here.kind != kind:
            self.fail(expected)
        return self.advance()

    def parse(self):
        node = self.sum()
        if self.here.kind != "end":
            self.fail(("operator", "end of input"))
        return node

    def sum(self):
        node = self.veeterm()
        while self.here.kind == "op" and self.here.text in "+-":
            op = self.advance().text
            rhs = self.veeterm()
            node = Add(node, rhs) if op == "+" else Sub(node, rhs)
        return node

    def veeterm(self):
        node = self.wedgeterm()
        while self.here.kind == "op" and self.here.text == "v":
            self.advance()
            node = Vee(node, self.wedgeterm())
        return node

    def wedgeterm(self):
        node = self.unary()
        while self.here.kind == "op" and self.here.text == "^":
            self.advance()
            node = Wedge(node, self.unary())
        return node

    def unary(self):
        tok = self.here
        if tok.kind == "op" and tok.text in "*~-":
            self.advance()
            operand = self.unary()
            if tok.text == "*":
                return Star(operand)
            if tok.text == "~":
                return Conj(operand)
            return ScalarMul(-1.0 + 0j, operand)
        return self.scaled()

    def scaled(self):
        if self.here.kind == "scalar":
            tok = self.advance()
            if self.here.kind == "op" and self.here.text == "*":
                self.advance()
                return ScalarMul(tok.value, self.unary())
            return ScalarLit(tok.value)
        return self.atom()

    def atom(self):
        tok = self.here
        if tok.kind == "basis":
            self.advance()
            return BasisVector(tok.index)
        if tok.kind == "top":
            self.advance()
            return TopBlade()
        if tok.kind == "ident":
            self.advance()
            return Var(tok.text)
        if tok.kind == "ip":
            self.advance()
            self.expect("lparen", ("(",))
            left = self.sum()
            self.expect("comma", (",",))
            right = self.sum()
            self.expect("rparen", (")",))
            return InnerProduct(left, right)
        if tok.kind == "lparen":
            self.advance()
            node = self.sum()
            self.expect("rparen", (")",))
            return node
        self.fail(("basis vector", "E", "scalar", "name", "ip(", "("))


def parse(tokens: list[Token]):
    return _Parser(tokens).parse()


def parse_text(source: str):
    return parse(tokenize(source))


# ---- evaluation -------------------------------------------------------------------


@dataclass
class Environment:
    d: int
    bindings: dict[str, Multivector] = field(default_factory=dict)

    def __post_init__(self):
        check_dim(self.d)

    def bind(self, name: str, value: Multivector) -> None:
        if value.d != self.d:
            raise EvalError(f"cannot bind {name}: value has dimension {value.d}, not {self.d}")
        self.bindings[name] = value


def _as_mv(value: Multivector | complex, d: int) -> Multivector:
    if isinstance(value, Multivector):
        return value
    return Multivector.scalar(d, value)


def evaluate(node, env: Environment) -> Multivector | complex:
    """Bottom-up evaluation; only a top-level ip(...) stays a bare scalar."""
    d = env.d
    match node:
        case BasisVector(index=i):
            if not 1 <= i <= d:
                raise IndexRangeError(f"e{i} does not exist in dimension {d}")
            return Multivector.from_indices(d, (i,))
        case TopBlade():
            return Multivector.top(d)
        case ScalarLit(value=v):
            return Multivector.scalar(d, v)
        case Var(name=name):
            if name not in env.bindings:
                raise EvalError(f"unbound name {name!r}")
            return env.bindings[name]
        case Wedge(left=l, right=r):
            return wedge(_as_mv(evaluate(l, env), d), _as_mv(evaluate(r, env), d))
        case Vee(left=l, right=r):
            return vee(_as_mv(evaluate(l, env), d), _as_mv(evaluate(r, env), d))
        case Star(operand=x):
            return hodge(_as_mv(evaluate(x, env), d))
        case Conj(operand=x):
            return conjugate(_as_mv(evaluate(x, env), d))
        case Add(left=l, right=r):
            return _as_mv(evaluate(l, env), d) + _as_mv(evaluate(r, env), d)
        case Sub(left=l, right=r):
            return _as_mv(evaluate(l, env), d) - _as_mv(evaluate(r, env), d)
        case ScalarMul(coeff=c, operand=x):
            return c * _as_mv(evaluate(x, env), d)
        case InnerProduct(left=l, right=r):
            return scalar_product(_as_mv(evaluate(l, env), d), _as_mv(evaluate(r, env), d))
    raise EvalError(f"cannot evaluate node {node!r}")


def evaluate_text(source: str, env: Environment) -> Multivector | complex:
    return evaluate(parse_text(source), env)
