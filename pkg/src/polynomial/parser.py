# 多项式解析器
"""
多项式文本解析

文法:
    expr   := ['+'|'-'] term (('+'|'-') term)*
    term   := factor ('*' factor)*
    factor := atom ['^' INT]
    atom   := INT | VAR | '(' expr ')'
    VAR    := 标识符 | T(i)

不允许省略乘号 ("2T1" 或 "T1 T2" 都是错误)。错误位置以行、列报告。
"""

import re
from collections.abc import Iterable
from dataclasses import dataclass

from sympy.polys.rings import PolyElement

from src.core import ParseError

from .ring import PolynomialRing

_TOKEN_RE = re.compile(
    r"(?P<ws>[ \t\r\n]+)"
    r"|(?P<tvar>T\(\s*\d+\s*\))"
    r"|(?P<int>\d+)"
    r"|(?P<ident>[A-Za-z_][A-Za-z0-9_]*)"
    r"|(?P<op>[-+*^()])"
)


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    line: int
    col: int


def tokenize(text: str) -> list[Token]:
    """切分为记号，末尾附加 end 记号"""
    tokens: list[Token] = []
    pos = 0
    line, line_start = 1, 0
    while pos < len(text):
        match = _TOKEN_RE.match(text, pos)
        col = pos - line_start + 1
        if match is None:
            raise ParseError(f"unexpected character {text[pos]!r}", line, col)
        kind = match.lastgroup or ""
        value = match.group()
        if kind == "ws":
            for offset, ch in enumerate(value):
                if ch == "\n":
                    line += 1
                    line_start = pos + offset + 1
        elif kind == "tvar":
            index = re.sub(r"\s+", "", value)
            tokens.append(Token("var", index, line, col))
        elif kind == "ident":
            tokens.append(Token("var", value, line, col))
        else:
            tokens.append(Token(kind, value, line, col))
        pos = match.end()
    tokens.append(Token("end", "", line, pos - line_start + 1))
    return tokens


def variable_names(text: str) -> list[str]:
    """文本中出现的变量名 (按首次出现顺序)"""
    seen: dict[str, None] = {}
    for token in tokenize(text):
        if token.kind == "var":
            seen.setdefault(token.text, None)
    return list(seen)


class _Parser:
    def __init__(self, text: str, ring: PolynomialRing):
        self.tokens = tokenize(text)
        self.pos = 0
        self.ring = ring
        self.base = ring.sympy_ring()

    @property
    def current(self) -> Token:
        return self.tokens[self.pos]

    def _fail(self, message: str) -> ParseError:
        token = self.current
        found = token.text or "end of input"
        return ParseError(f"{message}, found {found!r}", token.line, token.col)

    def _advance(self) -> Token:
        token = self.current
        self.pos += 1
        return token

    def parse(self) -> PolyElement:
        if self.current.kind == "end":
            raise self._fail("expected a polynomial")
        result = self.expr()
        if self.current.kind != "end":
            raise self._fail("expected an operator")
        return result

    def expr(self) -> PolyElement:
        sign = 1
        if self.current.kind == "op" and self.current.text in "+-":
            sign = -1 if self._advance().text == "-" else 1
        result = self.term() * sign
        while self.current.kind == "op" and self.current.text in "+-":
            op = self._advance().text
            right = self.term()
            result = result + right if op == "+" else result - right
        return result

    def term(self) -> PolyElement:
        result = self.factor()
        while self.current.kind == "op" and self.current.text == "*":
            self._advance()
            result = result * self.factor()
        return result

    def factor(self) -> PolyElement:
        base = self.atom()
        if self.current.kind == "op" and self.current.text == "^":
            self._advance()
            if self.current.kind != "int":
                raise self._fail("expected a non-negative integer exponent")
            base = base ** int(self._advance().text)
        return base

    def atom(self) -> PolyElement:
        token = self.current
        if token.kind == "int":
            self._advance()
            return self.base(int(token.text))
        if token.kind == "var":
            if token.text not in self.ring.names:
                raise self._fail("unknown variable")
            self._advance()
            return self.base.gens[self.ring.index(token.text)]
        if token.kind == "op" and token.text == "(":
            self._advance()
            inner = self.expr()
            if not (self.current.kind == "op" and self.current.text == ")"):
                raise self._fail("expected ')'")
            self._advance()
            return inner
        raise self._fail("expected a number, a variable or '('")


def parse_polynomial(text: str, ring: PolynomialRing) -> PolyElement:
    """把文本解析为 ring 中的多项式

    Raises:
        ParseError: 语法错误或未知变量 (带行列位置)
    """
    return _Parser(text, ring).parse()


def parse_polynomials(texts: Iterable[str], ring: PolynomialRing) -> list[PolyElement]:
    return [parse_polynomial(text, ring) for text in texts]


def t_variables(count: int) -> list[str]:
    """标准变量名 T(1), …, T(count)"""
    return [f"T({i})" for i in range(1, count + 1)]
