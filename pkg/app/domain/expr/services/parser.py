"""
Expression parser

Recursive-descent parser for utility expressions:

    expr   := signed (('+' | '-') term)*
    signed := '-' signed | term
    term   := factor (('*' | '/') factor)*
    factor := '-' factor | base ('^' uint)?
    base   := number | ident | '(' expr ')' | func '(' expr ')'

A leading minus negates the whole term ("-x*y" is -(x*y)), and unary minus
binds looser than '^' ("-x^2" is -(x^2)). Binary operators associate left.
"""
import re
from dataclasses import dataclass
from typing import AbstractSet, List, Optional

from app.core.exceptions import (
    ExpressionSyntaxError,
    InvalidExponentError,
    UnknownFunctionError,
    UnknownIdentifierError,
)
from app.domain.expr.entities import (
    BUILTIN_FUNCTIONS,
    Add,
    Call,
    Const,
    Div,
    Expr,
    Mul,
    Neg,
    Pow,
    Sub,
    Var,
)

_TOKEN_RE = re.compile(
    r"""
    (?P<ws>\s+)
  | (?P<number>(?:\d+(?:\.\d*)?|\.\d+)(?:[eE][+-]?\d+)?)
  | (?P<ident>[A-Za-z][A-Za-z0-9_]*)
  | (?P<op>[-+*/^()])
    """,
    re.VERBOSE,
)


@dataclass(frozen=True)
class Token:
    kind: str  # number | ident | op | end
    text: str
    offset: int


def _byte_offset(text: str, index: int) -> int:
    return len(text[:index].encode("utf-8"))


def tokenize(text: str) -> List[Token]:
    """Split expression text into tokens; offsets are byte offsets"""
    tokens: List[Token] = []
    index = 0
    while index < len(text):
        match = _TOKEN_RE.match(text, index)
        if match is None:
            raise ExpressionSyntaxError(
                f"Unexpected character {text[index]!r}", _byte_offset(text, index), text
            )
        kind = match.lastgroup or ""
        if kind != "ws":
            tokens.append(Token(kind, match.group(), _byte_offset(text, index)))
        index = match.end()
    tokens.append(Token("end", "", _byte_offset(text, len(text))))
    return tokens


class _Parser:
    def __init__(self, text: str, variables: AbstractSet[str]):
        self.text = text
        self.variables = variables
        self.tokens = tokenize(text)
        self.position = 0

    @property
    def current(self) -> Token:
        return self.tokens[self.position]

    def _peek_op(self, *ops: str) -> Optional[str]:
        token = self.current
        if token.kind == "op" and token.text in ops:
            return token.text
        return None

    def _advance(self) -> Token:
        token = self.current
        self.position += 1
        return token

    def _error(self, message: str, token: Optional[Token] = None) -> ExpressionSyntaxError:
        token = token or self.current
        return ExpressionSyntaxError(message, token.offset, self.text)

    def _expect(self, op: str) -> None:
        if self._peek_op(op) is None:
            found = "end of input" if self.current.kind == "end" else repr(self.current.text)
            raise self._error(f"Expected {op!r}, found {found}")
        self._advance()

    def parse(self) -> Expr:
        node = self.parse_expr()
        if self.current.kind != "end":
            raise self._error(f"Unexpected token {self.current.text!r}")
        return node

    def parse_expr(self) -> Expr:
        node = self.parse_signed()
        while (op := self._peek_op("+", "-")) is not None:
            self._advance()
            right = self.parse_term()
            node = Add(node, right) if op == "+" else Sub(node, right)
        return node

    def parse_signed(self) -> Expr:
        if self._peek_op("-"):
            self._advance()
            return Neg(self.parse_signed())
        return self.parse_term()

    def parse_term(self) -> Expr:
        node = self.parse_factor()
        while (op := self._peek_op("*", "/")) is not None:
            self._advance()
            right = self.parse_factor()
            node = Mul(node, right) if op == "*" else Div(node, right)
        return node

    def parse_factor(self) -> Expr:
        if self._peek_op("-"):
            self._advance()
            return Neg(self.parse_factor())
        base = self.parse_base()
        if self._peek_op("^"):
            self._advance()
            return Pow(base, self._parse_exponent())
        return base

    def _parse_exponent(self) -> int:
        token = self.current
        if token.kind == "op" and token.text == "-":
            raise InvalidExponentError("Negative exponent", token.offset, self.text)
        if token.kind != "number":
            raise InvalidExponentError("Exponent must be an integer literal", token.offset, self.text)
        if not token.text.isdigit():
            raise InvalidExponentError(
                f"Exponent must be a nonnegative integer, got {token.text!r}", token.offset, self.text
            )
        self._advance()
        return int(token.text)

    def parse_base(self) -> Expr:
        token = self.current
        if token.kind == "number":
            self._advance()
            return Const(float(token.text))
        if token.kind == "ident":
            self._advance()
            if self._peek_op("("):
                if token.text not in BUILTIN_FUNCTIONS:
                    raise UnknownFunctionError(f"Unknown function {token.text!r}", token.offset, self.text)
                self._advance()
                argument = self.parse_expr()
                self._expect(")")
                return Call(token.text, argument)
            if token.text not in self.variables:
                raise UnknownIdentifierError(f"Unknown identifier {token.text!r}", token.offset, self.text)
            return Var(token.text)
        if self._peek_op("("):
            self._advance()
            node = self.parse_expr()
            self._expect(")")
            return node
        if token.kind == "end":
            raise self._error("Unexpected end of input")
        raise self._error(f"Unexpected token {token.text!r}")


def parse(text: str, variables: AbstractSet[str]) -> Expr:
    """
    Parse an expression string

    Args:
        text: Expression source
        variables: Identifiers allowed as variables

    Returns:
        The expression tree

    Raises:
        ExpressionSyntaxError: with the byte offset of the offending token
    """
    return _Parser(text, variables).parse()
