"""Tokenizer and expression parser shared by scalar literals and scripts.

Grammar (precedence low to high)::

    expr    := term (('+' | '-') term)*
    term    := unary (('*' | '/') unary)*
    unary   := '-' unary | '+' unary | postfix
    postfix := atom ('.' NAME)*
    atom    := INT | STRING | NAME | NAME '(' args? ')' | '(' expr ')'
    args    := arg (',' arg)*
    arg     := (NAME ':')? expr

Decimal literals are rejected on purpose: exact inputs only.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Optional

from .errors import ScriptSyntaxError

_TOKEN_RE = re.compile(r"""
    (?P<ws>[ \t\r]+)
  | (?P<comment>\#[^\n]*)
  | (?P<nl>\n)
  | (?P<decimal>\d+\.\d*|\.\d+)
  | (?P<int>\d+)
  | (?P<string>"[^"\n]*")
  | (?P<name>[A-Za-z_][A-Za-z0-9_]*(?:-[A-Za-z][A-Za-z0-9_]*)*)
  | (?P<op>[-+*/(),:;.=])
""", re.VERBOSE)


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    line: int
    column: int


def tokenize(source: str) -> list[Token]:
    tokens = []
    pos, line, line_start = 0, 1, 0
    while pos < len(source):
        m = _TOKEN_RE.match(source, pos)
        col = pos - line_start + 1
        if m is None:
            raise ScriptSyntaxError(f"unexpected character {source[pos]!r}", line, col)
        kind = m.lastgroup
        text = m.group()
        if kind == "decimal":
            raise ScriptSyntaxError(
                f"decimal literal {text!r} not allowed; write an exact fraction", line, col)
        if kind == "nl":
            tokens.append(Token("nl", text, line, col))
            line += 1
            line_start = m.end()
        elif kind not in ("ws", "comment"):
            tokens.append(Token(kind, text, line, col))
        pos = m.end()
    tokens.append(Token("eof", "", line, pos - line_start + 1))
    return tokens


# -- AST -----------------------------------------------------------------

@dataclass(frozen=True)
class Node:
    line: int = field(compare=False)
    column: int = field(compare=False)


@dataclass(frozen=True)
class Num(Node):
    value: int


@dataclass(frozen=True)
class Str(Node):
    value: str


@dataclass(frozen=True)
class Name(Node):
    name: str


@dataclass(frozen=True)
class Attr(Node):
    target: Node
    attr: str


@dataclass(frozen=True)
class Neg(Node):
    operand: Node


@dataclass(frozen=True)
class BinOp(Node):
    op: str
    left: Node
    right: Node


@dataclass(frozen=True)
class Arg:
    name: Optional[str]
    value: Node


@dataclass(frozen=True)
class Call(Node):
    func: str
    args: tuple


_PREC = {"+": 1, "-": 1, "*": 2, "/": 2}


def unparse(node: Node, parent_prec: int = 0, right: bool = False) -> str:
    if isinstance(node, Num):
        return str(node.value)
    if isinstance(node, Str):
        return f'"{node.value}"'
    if isinstance(node, Name):
        return node.name
    if isinstance(node, Attr):
        return f"{unparse(node.target, 4)}.{node.attr}"
    if isinstance(node, Neg):
        text = "-" + unparse(node.operand, 3)
        return f"({text})" if parent_prec >= 2 else text
    if isinstance(node, BinOp):
        prec = _PREC[node.op]
        text = f"{unparse(node.left, prec)} {node.op} {unparse(node.right, prec, True)}"
        if prec < parent_prec or (right and prec == parent_prec):
            return f"({text})"
        return text
    if isinstance(node, Call):
        parts = []
        for arg in node.args:
            value = unparse(arg.value)
            parts.append(f"{arg.name}: {value}" if arg.name else value)
        return f"{node.func}({', '.join(parts)})"
    raise TypeError(node)


class Parser:
    """Recursive-descent parser over a token list."""

    def __init__(self, tokens: list[Token]):
        self.tokens = tokens
        self.pos = 0

    @property
    def current(self) -> Token:
        return self.tokens[self.pos]

    def advance(self) -> Token:
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def at(self, kind: str, text: Optional[str] = None) -> bool:
        tok = self.current
        return tok.kind == kind and (text is None or tok.text == text)

    def expect(self, kind: str, text: Optional[str] = None) -> Token:
        if not self.at(kind, text):
            tok = self.current
            want = text or kind
            got = tok.text or tok.kind
            raise ScriptSyntaxError(f"expected {want!r}, found {got!r}", tok.line, tok.column)
        return self.advance()

    def parse_expr(self) -> Node:
        node = self.parse_term()
        while self.at("op", "+") or self.at("op", "-"):
            tok = self.advance()
            node = BinOp(tok.line, tok.column, tok.text, node, self.parse_term())
        return node

    def parse_term(self) -> Node:
        node = self.parse_unary()
        while self.at("op", "*") or self.at("op", "/"):
            tok = self.advance()
            node = BinOp(tok.line, tok.column, tok.text, node, self.parse_unary())
        return node

    def parse_unary(self) -> Node:
        if self.at("op", "-"):
            tok = self.advance()
            return Neg(tok.line, tok.column, self.parse_unary())
        if self.at("op", "+"):
            self.advance()
            return self.parse_unary()
        return self.parse_postfix()

    def parse_postfix(self) -> Node:
        node = self.parse_atom()
        while self.at("op", "."):
            self.advance()
            tok = self.expect("name")
            node = Attr(tok.line, tok.column, node, tok.text)
        return node

    def parse_atom(self) -> Node:
        tok = self.current
        if tok.kind == "int":
            self.advance()
            return Num(tok.line, tok.column, int(tok.text))
        if tok.kind == "string":
            self.advance()
            return Str(tok.line, tok.column, tok.text[1:-1])
        if tok.kind == "name":
            self.advance()
            if self.at("op", "("):
                return Call(tok.line, tok.column, tok.text, self.parse_args())
            return Name(tok.line, tok.column, tok.text)
        if self.at("op", "("):
            self.advance()
            node = self.parse_expr()
            self.expect("op", ")")
            return node
        got = tok.text or tok.kind
        raise ScriptSyntaxError(f"unexpected {got!r}", tok.line, tok.column)

    def parse_args(self) -> tuple:
        self.expect("op", "(")
        args = []
        if not self.at("op", ")"):
            while True:
                name = None
                if self.at("name") and self.tokens[self.pos + 1].kind == "op" \
                        and self.tokens[self.pos + 1].text == ":":
                    name = self.advance().text
                    self.advance()
                args.append(Arg(name, self.parse_expr()))
                if not self.at("op", ","):
                    break
                self.advance()
        self.expect("op", ")")
        return tuple(args)


def parse_expression(text: str) -> Node:
    tokens = [t for t in tokenize(text) if t.kind != "nl"]
    parser = Parser(tokens)
    node = parser.parse_expr()
    parser.expect("eof")
    return node
