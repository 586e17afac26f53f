"""
Operator-precedence parser for the ternary expression language.

Grammar, tightest binding first:

    prefix  ~   ROTATE
    infix   *   ALPHA   (left-associative)
    infix   +   BETA    (left-associative)
    infix   @   GAMMA   (left-associative)

Atoms are the constants 0, 1, 2, identifiers ([A-Za-z][A-Za-z0-9_]*) and
parenthesized expressions. Error offsets are byte offsets into the UTF-8
encoding of the input.
"""
import re
from dataclasses import dataclass
from typing import Callable, List, Optional

from ..models.expr import BINARY_BY_SYMBOL, Const, Expr, Rotate, Var
from ..utils.exceptions import ParseError

# Binding power of each infix operator; higher binds tighter
INFIX_PRECEDENCE = {'@': 1, '+': 2, '*': 3}

_TOKEN_PATTERN = re.compile(r'\s*(?:(?P<number>[0-9]+)|(?P<name>[A-Za-z][A-Za-z0-9_]*)|(?P<op>[~*+@()]))')


@dataclass(frozen=True)
class Token:
    kind: str      # 'number', 'name', 'op' or 'end'
    text: str
    offset: int    # byte offset


def tokenize(text: str) -> List[Token]:
    tokens: List[Token] = []
    position = 0
    byte_offset = 0

    def advance_to(new_position: int) -> None:
        nonlocal position, byte_offset
        byte_offset += len(text[position:new_position].encode('utf-8'))
        position = new_position

    while True:
        match = _TOKEN_PATTERN.match(text, position)
        if match is None:
            # Skip leading whitespace so the offset points at the culprit
            stripped = len(text) - len(text[position:].lstrip())
            advance_to(stripped)
            if position >= len(text):
                break
            raise ParseError(f"Unexpected character {text[position]!r}", byte_offset)
        kind = match.lastgroup
        start = match.start(kind)
        advance_to(start)
        token_offset = byte_offset
        advance_to(match.end())
        tokens.append(Token(kind, match.group(kind), token_offset))
    tokens.append(Token('end', '', byte_offset))
    return tokens


class _Parser:
    """Operator-precedence parser over explicit operand and operator stacks.

    Nesting depth is bounded only by memory. The pending stack holds infix,
    '(' and '~' tokens.
    """

    def __init__(self, text: str):
        self.tokens = tokenize(text)
        self.index = 0
        self.operands: List[Expr] = []
        self.pending: List[Token] = []

    def peek(self) -> Token:
        return self.tokens[self.index]

    def advance(self) -> Token:
        token = self.tokens[self.index]
        self.index += 1
        return token

    def parse(self) -> Expr:
        if self.peek().kind == 'end':
            raise ParseError("Empty expression", 0)
        while True:
            self.operand()
            token = self.advance()
            if token.kind == 'end':
                break
            if token.kind != 'op' or token.text not in INFIX_PRECEDENCE:
                raise ParseError(self._unexpected(token), token.offset)
            precedence = INFIX_PRECEDENCE[token.text]
            # Left-associative: equal precedence reduces first
            self.reduce(lambda top: INFIX_PRECEDENCE[top.text] >= precedence)
            self.pending.append(token)
        self.reduce()
        if self.pending:
            end = self.tokens[-1]
            raise ParseError(self._describe(end, "expected ')'"), end.offset)
        return self.operands.pop()

    def operand(self) -> None:
        """Consume prefixes, opening parentheses and one atom, then any closing parentheses."""
        token = self.advance()
        while token.kind == 'op' and token.text in ('~', '('):
            self.pending.append(token)
            token = self.advance()
        if token.kind == 'number':
            if token.text not in ('0', '1', '2'):
                raise ParseError(f"Invalid constant {token.text!r}", token.offset)
            self.push(Const(int(token.text)))
        elif token.kind == 'name':
            self.push(Var(token.text))
        else:
            raise ParseError(self._describe(token, "expected an operand"), token.offset)
        while self.peek().kind == 'op' and self.peek().text == ')':
            self.close_group(self.advance())

    def push(self, e: Expr) -> None:
        while self.pending and self.pending[-1].text == '~':
            self.pending.pop()
            e = Rotate(e)
        self.operands.append(e)

    def reduce(self, condition: Callable[[Token], bool] = lambda top: True) -> None:
        while self.pending and self.pending[-1].text in INFIX_PRECEDENCE and condition(self.pending[-1]):
            symbol = self.pending.pop().text
            right = self.operands.pop()
            left = self.operands.pop()
            self.operands.append(BINARY_BY_SYMBOL[symbol](left, right))

    def close_group(self, token: Token) -> None:
        self.reduce()
        if not self.pending or self.pending[-1].text != '(':
            raise ParseError(f"Unexpected {token.text!r}", token.offset)
        self.pending.pop()
        self.push(self.operands.pop())

    def _unexpected(self, token: Token) -> str:
        if any(pending.text == '(' for pending in self.pending):
            return self._describe(token, "expected ')'")
        return f"Unexpected {token.text!r}"

    @staticmethod
    def _describe(token: Token, expectation: str) -> str:
        if token.kind == 'end':
            return f"Unexpected end of input, {expectation}"
        return f"Unexpected {token.text!r}, {expectation}"


def parse(text: str) -> Expr:
    """Parse expression text into an AST."""
    if text is None or not text.strip():
        raise ParseError("Empty expression", 0)
    return _Parser(text).parse()


def try_parse(text: str) -> Optional[Expr]:
    try:
        return parse(text)
    except ParseError:
        return None
