"""Text grammar for formulas.

    formula := implies
    implies := or ("->" implies)?            right-associative
    or      := and ("|" and)*
    and     := unary ("&" unary)*
    unary   := "!" unary | "Alw(" formula ")" | "Som(" formula ")"
             | "Dist(" formula "," int ")" | atom | "(" formula ")"
    atom    := ident | ident "=" ident | ident "<=" int

``Alw``, ``Som`` and ``Dist`` are reserved words.  ``ident = ident`` is
variable/constant equality when the right side is a domain value of the left
variable, and variable/variable equality when it names another declared
variable.  Every identifier must be declared in the symbol table.
"""

from __future__ import annotations

from dataclasses import dataclass

from .logic import (
    Alw,
    And,
    Atom,
    Dist,
    Eq,
    EqVar,
    FiniteVariable,
    Formula,
    Implies,
    LeConst,
    Not,
    Or,
    Proposition,
    Som,
    SymbolTable,
)

__all__ = ["ParseError", "parse_formula"]

_RESERVED = ("Alw", "Som", "Dist")


class ParseError(ValueError):
    """Syntax or symbol error, carrying the 1-based line and column."""

    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"{message} (line {line}, column {column})")
        self.line = line
        self.column = column


@dataclass(frozen=True)
class _Token:
    kind: str
    text: str
    line: int
    column: int


def _tokenize(text: str) -> list[_Token]:
    tokens: list[_Token] = []
    line, col = 1, 1
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch == "\n":
            line += 1
            col = 1
            i += 1
            continue
        if ch in " \t\r":
            i += 1
            col += 1
            continue
        start_col = col

        def emit(kind: str, length: int) -> None:
            nonlocal i, col
            tokens.append(_Token(kind, text[i : i + length], line, start_col))
            i += length
            col += length

        if text.startswith("->", i):
            emit("ARROW", 2)
        elif text.startswith("<=", i):
            emit("LE", 2)
        elif ch in "!&|(),=":
            emit({"!": "NOT", "&": "AND", "|": "OR", "(": "LPAREN", ")": "RPAREN",
                  ",": "COMMA", "=": "EQ"}[ch], 1)
        elif ch == "-" and i + 1 < n and text[i + 1].isdigit():
            j = i + 1
            while j < n and text[j].isdigit():
                j += 1
            emit("INT", j - i)
        elif ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            emit("INT", j - i)
        elif ch.isalpha() or ch == "_":
            j = i
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            emit("IDENT", j - i)
        else:
            raise ParseError(f"unexpected character {ch!r}", line, start_col)
    tokens.append(_Token("EOF", "", line, col))
    return tokens


class _Parser:
    def __init__(self, tokens: list[_Token], symbols: SymbolTable):
        self.tokens = tokens
        self.pos = 0
        self.symbols = symbols

    def peek(self) -> _Token:
        return self.tokens[self.pos]

    def advance(self) -> _Token:
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect(self, kind: str, what: str) -> _Token:
        tok = self.peek()
        if tok.kind != kind:
            shown = tok.text or "end of input"
            raise ParseError(f"expected {what}, found {shown!r}", tok.line, tok.column)
        return self.advance()

    def fail(self, message: str) -> ParseError:
        tok = self.peek()
        return ParseError(message, tok.line, tok.column)

    # Grammar productions, lowest precedence first.

    def formula(self) -> Formula:
        left = self.or_expr()
        if self.peek().kind == "ARROW":
            self.advance()
            return Implies(left, self.formula())
        return left

    def or_expr(self) -> Formula:
        node = self.and_expr()
        while self.peek().kind == "OR":
            self.advance()
            node = Or(node, self.and_expr())
        return node

    def and_expr(self) -> Formula:
        node = self.unary()
        while self.peek().kind == "AND":
            self.advance()
            node = And(node, self.unary())
        return node

    def unary(self) -> Formula:
        tok = self.peek()
        if tok.kind == "NOT":
            self.advance()
            return Not(self.unary())
        if tok.kind == "LPAREN":
            self.advance()
            node = self.formula()
            self.expect("RPAREN", "')'")
            return node
        if tok.kind == "IDENT" and tok.text in _RESERVED:
            return self.temporal()
        if tok.kind == "IDENT":
            return self.atom()
        raise self.fail(f"expected a formula, found {tok.text or 'end of input'!r}")

    def temporal(self) -> Formula:
        op = self.advance()
        self.expect("LPAREN", "'('")
        body = self.formula()
        if op.text == "Dist":
            self.expect("COMMA", "','")
            offset_tok = self.peek()
            if offset_tok.kind != "INT":
                raise ParseError(
                    f"Dist offset must be an integer literal, found {offset_tok.text!r}",
                    offset_tok.line,
                    offset_tok.column,
                )
            self.advance()
            self.expect("RPAREN", "')'")
            return Dist(body, int(offset_tok.text))
        self.expect("RPAREN", "')'")
        return Alw(body) if op.text == "Alw" else Som(body)

    def atom(self) -> Formula:
        name_tok = self.advance()
        symbol = self._resolve(name_tok)
        nxt = self.peek()
        if nxt.kind == "EQ":
            if not isinstance(symbol, FiniteVariable):
                raise ParseError(
                    f"{name_tok.text!r} is not a finite variable", name_tok.line, name_tok.column
                )
            self.advance()
            rhs = self.expect("IDENT", "a domain value or variable name")
            other = self.symbols.lookup(rhs.text)
            if isinstance(other, FiniteVariable):
                return EqVar(symbol.name, other.name)
            if rhs.text in symbol.domain:
                return Eq(symbol.name, rhs.text)
            raise ParseError(
                f"{rhs.text!r} is neither a domain value of {symbol.name!r} nor a declared variable",
                rhs.line,
                rhs.column,
            )
        if nxt.kind == "LE":
            if not isinstance(symbol, FiniteVariable):
                raise ParseError(
                    f"{name_tok.text!r} is not a finite variable", name_tok.line, name_tok.column
                )
            if not _integer_domain(symbol):
                raise ParseError(
                    f"variable {symbol.name!r} has a non-integer domain; <= not applicable",
                    name_tok.line,
                    name_tok.column,
                )
            self.advance()
            bound = self.expect("INT", "an integer literal")
            return LeConst(symbol.name, int(bound.text))
        if not isinstance(symbol, Proposition):
            raise ParseError(
                f"{name_tok.text!r} is a finite variable and needs '=' or '<='",
                name_tok.line,
                name_tok.column,
            )
        return Atom(symbol.name)

    def _resolve(self, tok: _Token) -> Proposition | FiniteVariable:
        symbol = self.symbols.lookup(tok.text)
        if symbol is None:
            raise ParseError(f"undeclared identifier {tok.text!r}", tok.line, tok.column)
        return symbol


def _integer_domain(var: FiniteVariable) -> bool:
    try:
        for value in var.domain:
            int(value)
    except ValueError:
        return False
    return True


def parse_formula(text: str, symbols: SymbolTable) -> Formula:
    """Parse text into a Formula, resolving identifiers against symbols."""
    parser = _Parser(_tokenize(text), symbols)
    node = parser.formula()
    tail = parser.peek()
    if tail.kind != "EOF":
        raise ParseError(f"unexpected trailing input {tail.text!r}", tail.line, tail.column)
    return node
