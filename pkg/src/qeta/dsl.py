"""The eta-quotient expression language: AST, parser, formatter, evaluator.

Grammar (whitespace-insensitive)::

    expr    := ("-")? term (("+" | "-") term)*
    term    := factor (("*" | "/") factor | factor_implicit)*
    factor  := atom ("^" sint)?
    atom    := uint | "q" | "f" uint | "(" expr ")" | func
    func    := "extract" "(" expr "," uint "," uint ")"
             | "inflate" "(" expr "," uint ")"
             | "mod"     "(" expr "," uint ")"
    sint    := ("-")? uint
    uint    := [0-9]+

The ``*`` may be left implicit after an integer or q-power factor, so
``2q^3 f6^2`` reads as ``2*q^3*f6^2``.  The leading ``-`` exists so that
negated expressions have a canonical printable form; no shipped identity
needs it.

``format_expr`` produces canonical text with ``parse(format_expr(x)) == x``
(structural equality).  The one canonicalization: a unary minus on a bare
integer literal folds into a signed literal while parsing, and
``format_expr`` applies the same fold before printing.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .errors import (
    DomainError,
    ExprSyntaxError,
    NegativeValuationError,
    NonExactDivisionError,
)
from .eta import expand_f
from .series import Series

__all__ = [
    "IntLiteral", "QPower", "FAtom", "Neg", "Add", "Sub", "Mul", "Div",
    "Pow", "Extract", "Inflate", "ModRed", "ExprAST",
    "parse", "format_expr", "evaluate",
]

MAX_POW_EXPONENT = 64  # larger exponents are almost certainly input errors


# ---------------------------------------------------------------------------
# AST
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class IntLiteral:
    value: int


@dataclass(frozen=True)
class QPower:
    exponent: int

    def __post_init__(self):
        if self.exponent < 0:
            raise DomainError("q-power exponent must be non-negative")


@dataclass(frozen=True)
class FAtom:
    r: int

    def __post_init__(self):
        if self.r < 1:
            raise DomainError("f subscript must be a positive integer")


@dataclass(frozen=True)
class Neg:
    child: "ExprAST"


@dataclass(frozen=True)
class Add:
    left: "ExprAST"
    right: "ExprAST"


@dataclass(frozen=True)
class Sub:
    left: "ExprAST"
    right: "ExprAST"


@dataclass(frozen=True)
class Mul:
    left: "ExprAST"
    right: "ExprAST"


@dataclass(frozen=True)
class Div:
    left: "ExprAST"
    right: "ExprAST"


@dataclass(frozen=True)
class Pow:
    base: "ExprAST"
    exponent: int

    def __post_init__(self):
        if abs(self.exponent) > MAX_POW_EXPONENT:
            raise DomainError(
                f"exponent {self.exponent} exceeds the sanity bound |k| <= {MAX_POW_EXPONENT}"
            )


@dataclass(frozen=True)
class Extract:
    child: "ExprAST"
    m: int
    j: int

    def __post_init__(self):
        if self.m < 1:
            raise DomainError("extract modulus must be positive")
        if not 0 <= self.j < self.m:
            raise DomainError(
                f"extract residue must satisfy 0 <= j < m, got j={self.j}, m={self.m}"
            )


@dataclass(frozen=True)
class Inflate:
    child: "ExprAST"
    m: int

    def __post_init__(self):
        if self.m < 1:
            raise DomainError("inflate step must be positive")


@dataclass(frozen=True)
class ModRed:
    child: "ExprAST"
    modulus: int

    def __post_init__(self):
        if self.modulus < 2:
            raise DomainError("reduction modulus must be at least 2")


ExprAST = Union[
    IntLiteral, QPower, FAtom, Neg, Add, Sub, Mul, Div,
    Pow, Extract, Inflate, ModRed,
]


# ---------------------------------------------------------------------------
# Lexer
# ---------------------------------------------------------------------------

_PUNCT = {"+": "PLUS", "-": "MINUS", "*": "STAR", "/": "SLASH",
          "^": "CARET", "(": "LPAREN", ")": "RPAREN", ",": "COMMA"}
_FUNC_NAMES = ("extract", "inflate", "mod")


@dataclass(frozen=True)
class _Token:
    kind: str           # INT | Q | F | NAME | one of _PUNCT values | EOF
    value: int | str | None
    pos: int


def _tokenize(text: str) -> list[_Token]:
    toks: list[_Token] = []
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch in _PUNCT:
            toks.append(_Token(_PUNCT[ch], ch, i))
            i += 1
            continue
        if ch.isdigit():
            start = i
            while i < n and text[i].isdigit():
                i += 1
            toks.append(_Token("INT", int(text[start:i]), start))
            continue
        if ch.isalpha():
            start = i
            while i < n and text[i].isalpha():
                i += 1
            word = text[start:i]
            if word == "q":
                toks.append(_Token("Q", word, start))
            elif word == "f":
                if i >= n or not text[i].isdigit():
                    raise ExprSyntaxError(
                        f"expected a subscript after 'f' at offset {start}",
                        offset=start, expected="digits",
                    )
                dstart = i
                while i < n and text[i].isdigit():
                    i += 1
                toks.append(_Token("F", int(text[dstart:i]), start))
            elif word in _FUNC_NAMES:
                toks.append(_Token("NAME", word, start))
            else:
                raise ExprSyntaxError(
                    f"unknown identifier '{word}' at offset {start}",
                    offset=start, expected="q, f<n>, extract, inflate or mod",
                )
            continue
        raise ExprSyntaxError(
            f"unexpected character {ch!r} at offset {i}",
            offset=i, expected="an operator, number, q, f<n> or parenthesis",
        )
    toks.append(_Token("EOF", None, n))
    return toks


# ---------------------------------------------------------------------------
# Parser
# ---------------------------------------------------------------------------

class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self) -> _Token:
        return self.toks[self.i]

    def advance(self) -> _Token:
        tok = self.toks[self.i]
        self.i += 1
        return tok

    def expect(self, kind: str, what: str) -> _Token:
        tok = self.peek()
        if tok.kind != kind:
            found = "end of input" if tok.kind == "EOF" else repr(str(tok.value))
            raise ExprSyntaxError(
                f"expected {what} at offset {tok.pos}, found {found}",
                offset=tok.pos, expected=what,
            )
        return self.advance()

    def domain_error(self, message: str, pos: int):
        raise DomainError(f"{message} (at offset {pos})")

    # expr := ("-")? term (("+" | "-") term)*
    def parse_expr(self) -> ExprAST:
        if self.peek().kind == "MINUS":
            self.advance()
            node = self.parse_term()
            node = IntLiteral(-node.value) if isinstance(node, IntLiteral) else Neg(node)
        else:
            node = self.parse_term()
        while self.peek().kind in ("PLUS", "MINUS"):
            op = self.advance()
            rhs = self.parse_term()
            node = Add(node, rhs) if op.kind == "PLUS" else Sub(node, rhs)
        return node

    # term := factor (("*" | "/") factor | factor_implicit)*
    def parse_term(self) -> ExprAST:
        node = self.parse_factor()
        last = node
        while True:
            kind = self.peek().kind
            if kind in ("STAR", "SLASH"):
                op = self.advance()
                rhs = self.parse_factor()
                node = Mul(node, rhs) if op.kind == "STAR" else Div(node, rhs)
                last = rhs
            elif kind in ("Q", "F", "NAME", "LPAREN") and isinstance(last, (IntLiteral, QPower)):
                rhs = self.parse_factor()
                node = Mul(node, rhs)
                last = rhs
            else:
                return node

    # factor := atom ("^" sint)?
    def parse_factor(self) -> ExprAST:
        bare_q = self.peek().kind == "Q"
        node = self.parse_atom()
        if self.peek().kind == "CARET":
            caret = self.advance()
            exp = self.parse_sint()
            if abs(exp) > MAX_POW_EXPONENT:
                self.domain_error(
                    f"exponent {exp} exceeds the sanity bound |k| <= {MAX_POW_EXPONENT}",
                    caret.pos,
                )
            if bare_q and exp >= 0:  # q^k is a monomial, not a Pow node
                return QPower(exp)
            return Pow(node, exp)
        return node

    def parse_atom(self) -> ExprAST:
        tok = self.peek()
        if tok.kind == "INT":
            self.advance()
            return IntLiteral(tok.value)
        if tok.kind == "Q":
            self.advance()
            return QPower(1)
        if tok.kind == "F":
            self.advance()
            if tok.value < 1:
                self.domain_error("f subscript must be a positive integer", tok.pos)
            return FAtom(tok.value)
        if tok.kind == "LPAREN":
            self.advance()
            node = self.parse_expr()
            self.expect("RPAREN", "')'")
            return node
        if tok.kind == "NAME":
            return self.parse_func()
        found = "end of input" if tok.kind == "EOF" else repr(str(tok.value))
        raise ExprSyntaxError(
            f"expected a number, q, f<n>, '(' or function at offset {tok.pos}, found {found}",
            offset=tok.pos, expected="a number, q, f<n>, '(' or function",
        )

    def parse_func(self) -> ExprAST:
        name_tok = self.advance()
        name = name_tok.value
        self.expect("LPAREN", "'('")
        child = self.parse_expr()
        self.expect("COMMA", "','")
        first = self.expect("INT", "an unsigned integer")
        if name == "extract":
            self.expect("COMMA", "','")
            second = self.expect("INT", "an unsigned integer")
            self.expect("RPAREN", "')'")
            if first.value < 1:
                self.domain_error("extract modulus must be positive", first.pos)
            if not 0 <= second.value < first.value:
                self.domain_error(
                    f"extract residue must satisfy 0 <= j < m, got j={second.value}, m={first.value}",
                    second.pos,
                )
            return Extract(child, first.value, second.value)
        self.expect("RPAREN", "')'")
        if name == "inflate":
            if first.value < 1:
                self.domain_error("inflate step must be positive", first.pos)
            return Inflate(child, first.value)
        if first.value < 2:
            self.domain_error("reduction modulus must be at least 2", first.pos)
        return ModRed(child, first.value)

    def parse_sint(self) -> int:
        if self.peek().kind == "MINUS":
            self.advance()
            return -self.expect("INT", "an unsigned integer").value
        return self.expect("INT", "an unsigned integer").value


def parse(text: str) -> ExprAST:
    """Parse expression text into an AST.

    Raises ExprSyntaxError (with offset) on malformed text and DomainError
    on structurally valid but meaningless arguments.
    """
    parser = _Parser(text)
    node = parser.parse_expr()
    tok = parser.peek()
    if tok.kind != "EOF":
        raise ExprSyntaxError(
            f"unexpected {str(tok.value)!r} after a complete expression at offset {tok.pos}",
            offset=tok.pos, expected="end of input, an operator, or an atom",
        )
    return node


# ---------------------------------------------------------------------------
# Formatter
# ---------------------------------------------------------------------------

_P_ADD, _P_MUL, _P_ATOM = 1, 2, 3

# Nodes whose rendering is self-delimiting as a power base.
_SELF_DELIMITED = (FAtom, Extract, Inflate, ModRed, Neg, IntLiteral)


def _fmt(node: ExprAST, ctx: int) -> str:
    if isinstance(node, IntLiteral):
        return f"({node.value})" if node.value < 0 else str(node.value)
    if isinstance(node, QPower):
        return "q" if node.exponent == 1 else f"q^{node.exponent}"
    if isinstance(node, FAtom):
        return f"f{node.r}"
    if isinstance(node, Neg):
        if isinstance(node.child, IntLiteral):  # canonical form is a signed literal
            return _fmt(IntLiteral(-node.child.value), ctx)
        return f"(-{_fmt(node.child, _P_MUL)})"
    if isinstance(node, Add):
        s = f"{_fmt(node.left, _P_ADD)} + {_fmt(node.right, _P_ADD + 1)}"
        return f"({s})" if ctx > _P_ADD else s
    if isinstance(node, Sub):
        s = f"{_fmt(node.left, _P_ADD)} - {_fmt(node.right, _P_ADD + 1)}"
        return f"({s})" if ctx > _P_ADD else s
    if isinstance(node, Mul):
        s = f"{_fmt(node.left, _P_MUL)}*{_fmt(node.right, _P_MUL + 1)}"
        return f"({s})" if ctx > _P_MUL else s
    if isinstance(node, Div):
        s = f"{_fmt(node.left, _P_MUL)}/{_fmt(node.right, _P_MUL + 1)}"
        return f"({s})" if ctx > _P_MUL else s
    if isinstance(node, Pow):
        base = _fmt(node.base, 0)
        if not isinstance(node.base, _SELF_DELIMITED):
            base = f"({base})"
        return f"{base}^{node.exponent}"
    if isinstance(node, Extract):
        return f"extract({_fmt(node.child, 0)}, {node.m}, {node.j})"
    if isinstance(node, Inflate):
        return f"inflate({_fmt(node.child, 0)}, {node.m})"
    if isinstance(node, ModRed):
        return f"mod({_fmt(node.child, 0)}, {node.modulus})"
    raise TypeError(f"not an expression node: {node!r}")


def format_expr(node: ExprAST) -> str:
    """Canonical text for an AST; parse(format_expr(x)) == x."""
    return _fmt(node, 0)


# ---------------------------------------------------------------------------
# Evaluator
# ---------------------------------------------------------------------------

def _divide(a: Series, b: Series) -> Series:
    v_b = b.valuation()
    if v_b is None:
        raise NonExactDivisionError(
            f"denominator is the zero series to order {b.order}"
        )
    if v_b == 0 and b.coeff(0) in (1, -1):
        return a * b.invert()
    v_a = a.valuation()
    if v_a is not None and v_a < v_b:
        raise NegativeValuationError(
            f"numerator valuation {v_a} is below denominator valuation {v_b}"
        )
    if v_a is None and a.order < v_b:
        raise NegativeValuationError(
            f"numerator is zero to order {a.order}, too short to match "
            f"denominator valuation {v_b}"
        )
    a2 = Series._wrap(a.coeffs[v_b:])
    b2 = Series._wrap(b.coeffs[v_b:])
    if b2.coeff(0) in (1, -1):
        return a2 * b2.invert()
    # Term-by-term exact long division over the integers.
    d = b2.coeff(0)
    nz_tail = [(j, c) for j, c in b2.nonzero_terms() if j > 0]
    n1 = min(len(a2.coeffs), len(b2.coeffs))
    out: list[int] = []
    for n in range(n1):
        acc = a2.coeff(n)
        for j, c in nz_tail:
            if j > n:
                break
            acc -= c * out[n - j]
        quot, rem = divmod(acc, d)
        if rem:
            raise NonExactDivisionError(
                f"coefficient of q^{n} is not divisible by {d} in exact division"
            )
        out.append(quot)
    return Series._wrap(out)


def _eval(node: ExprAST, order: int) -> Series:
    if isinstance(node, IntLiteral):
        return Series.constant(node.value, order)
    if isinstance(node, QPower):
        return Series.q_power(node.exponent, order)
    if isinstance(node, FAtom):
        return expand_f(node.r, order)
    if isinstance(node, Neg):
        return -_eval(node.child, order)
    if isinstance(node, Add):
        return _eval(node.left, order) + _eval(node.right, order)
    if isinstance(node, Sub):
        return _eval(node.left, order) - _eval(node.right, order)
    if isinstance(node, Mul):
        return _eval(node.left, order) * _eval(node.right, order)
    if isinstance(node, Div):
        return _divide(_eval(node.left, order), _eval(node.right, order))
    if isinstance(node, Pow):
        return _eval(node.base, order) ** node.exponent
    if isinstance(node, Extract):
        # The child must be known far enough for the full extracted range.
        return _eval(node.child, node.m * order + node.j).extract(node.m, node.j)
    if isinstance(node, Inflate):
        child = _eval(node.child, -(-order // node.m))
        inflated = child.inflate(node.m)
        # a shrunken child (valuation-shifted division below) may leave the
        # inflated series legitimately shorter than requested
        return inflated.truncate(order) if inflated.order > order else inflated
    if isinstance(node, ModRed):
        return _eval(node.child, order).reduce_mod(node.modulus)
    raise TypeError(f"not an expression node: {node!r}")


def evaluate(expr: ExprAST | str, order: int) -> Series:
    """Evaluate an expression (AST or text) to a series of the given order.

    extract/inflate nodes expand their child to whatever higher order the
    requested range demands; a division whose denominator has positive
    valuation may return a shorter series than requested, reflecting what
    the inputs actually determine.
    """
    if order < 0:
        raise DomainError("truncation order must be non-negative")
    node = parse(expr) if isinstance(expr, str) else expr
    result = _eval(node, order)
    return result.truncate(order) if result.order > order else result
