"""Syntax of a tiny boolean imperative language: values, expressions,
statements, a parser and a printer.

Concrete grammar, right-associative ';', mandatory braces:

    program := stmt EOF
    stmt    := basic (';' stmt)?
    basic   := 'skip'
             | IDENT ':=' literal
             | 'if' '(' expr ')' '{' stmt '}' 'else' '{' stmt '}'
             | 'while' '(' expr ')' '{' stmt '}'
    expr    := literal | IDENT
    literal := 'true' | 'false' | 'null'

Assignment right-hand sides are literals only.  Whitespace and '//' line
comments are ignored.  Identifiers are [A-Za-z][A-Za-z0-9_]* minus the
keywords.
"""

import re
from dataclasses import dataclass


def cached_hash(cls):
    """Memoize the structural hash per instance.

    Cursors, paths and node sets get hashed millions of times during
    closure computation; the recursive dataclass hash would walk the whole
    subtree on every call.  Instances are frozen, so caching is safe.
    """
    base_hash = cls.__hash__

    def __hash__(self):
        try:
            return self._hash_cache
        except AttributeError:
            h = base_hash(self)
            object.__setattr__(self, "_hash_cache", h)
            return h

    cls.__hash__ = __hash__
    return cls


class Value:
    """Runtime value: a boolean or null."""


@dataclass(frozen=True)
class Bool(Value):
    value: bool


@dataclass(frozen=True)
class Null(Value):
    pass


TRUE = Bool(True)
FALSE = Bool(False)
NULL = Null()


class Expr:
    """Expression: a literal value or a variable read."""


@dataclass(frozen=True)
class Lit(Expr):
    value: Value


@dataclass(frozen=True)
class Var(Expr):
    name: str


class Stmt:
    """Statement."""


@dataclass(frozen=True)
class Skip(Stmt):
    pass


@dataclass(frozen=True)
class Assign(Stmt):
    name: str
    value: Value


@cached_hash
@dataclass(frozen=True)
class Seq(Stmt):
    first: Stmt
    second: Stmt


@cached_hash
@dataclass(frozen=True)
class Cond(Stmt):
    test: Expr
    then_branch: Stmt
    else_branch: Stmt


@cached_hash
@dataclass(frozen=True)
class While(Stmt):
    test: Expr
    body: Stmt


KEYWORDS = frozenset({"skip", "if", "else", "while", "true", "false", "null"})

_IDENT_RE = re.compile(r"[A-Za-z][A-Za-z0-9_]*\Z")


def is_valid_name(s: str) -> bool:
    """Variable names are identifiers and never keywords."""
    return bool(_IDENT_RE.match(s)) and s not in KEYWORDS


def value_literal(v: Value) -> str:
    if isinstance(v, Bool):
        return "true" if v.value else "false"
    if isinstance(v, Null):
        return "null"
    raise TypeError(f"not a value: {v!r}")


def parse_value_literal(s: str) -> Value:
    if s == "true":
        return TRUE
    if s == "false":
        return FALSE
    if s == "null":
        return NULL
    raise ValueError(f"expected one of true, false, null: {s!r}")


def print_expr(e: Expr) -> str:
    if isinstance(e, Lit):
        return value_literal(e.value)
    if isinstance(e, Var):
        return e.name
    raise TypeError(f"not an expression: {e!r}")


def print_program(c: Stmt) -> str:
    """Render a statement in canonical single-line concrete syntax.

    Total on all ASTs.  A Seq nested on the left has no source form in the
    grammar, so its rendering re-parses right-nested; everything the parser
    can produce round-trips to an equal tree.
    """
    if isinstance(c, Skip):
        return "skip"
    if isinstance(c, Assign):
        return f"{c.name} := {value_literal(c.value)}"
    if isinstance(c, Seq):
        return f"{print_program(c.first)}; {print_program(c.second)}"
    if isinstance(c, Cond):
        return (f"if ({print_expr(c.test)}) {{ {print_program(c.then_branch)} }}"
                f" else {{ {print_program(c.else_branch)} }}")
    if isinstance(c, While):
        return f"while ({print_expr(c.test)}) {{ {print_program(c.body)} }}"
    raise TypeError(f"not a statement: {c!r}")


def subterm_count(c: Stmt) -> int:
    """Number of statement subterms, the statement itself included."""
    if isinstance(c, (Skip, Assign)):
        return 1
    if isinstance(c, Seq):
        return 1 + subterm_count(c.first) + subterm_count(c.second)
    if isinstance(c, Cond):
        return 1 + subterm_count(c.then_branch) + subterm_count(c.else_branch)
    if isinstance(c, While):
        return 1 + subterm_count(c.body)
    raise TypeError(f"not a statement: {c!r}")


class ParseError(Exception):
    def __init__(self, message: str, line: int, column: int):
        super().__init__(message)
        self.message = message
        self.line = line
        self.column = column

    def __str__(self):
        return f"line {self.line}, column {self.column}: {self.message}"


@dataclass(frozen=True)
class _Token:
    kind: str  # "ident", "keyword", "symbol", "eof"
    text: str
    line: int
    column: int


_TOKEN_RE = re.compile(
    r"""(?P<ws>[ \t\r\n]+)
      | (?P<comment>//[^\n]*)
      | (?P<word>[A-Za-z][A-Za-z0-9_]*)
      | (?P<assign>:=)
      | (?P<symbol>[;(){}])
    """,
    re.VERBOSE,
)


def _tokenize(text: str) -> list[_Token]:
    tokens = []
    pos = 0
    line = 1
    line_start = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            raise ParseError(f"unexpected character {text[pos]!r}",
                             line, pos - line_start + 1)
        col = pos - line_start + 1
        kind = m.lastgroup
        chunk = m.group()
        if kind == "word":
            tokens.append(_Token("keyword" if chunk in KEYWORDS else "ident",
                                 chunk, line, col))
        elif kind in ("assign", "symbol"):
            tokens.append(_Token("symbol", chunk, line, col))
        # whitespace and comments fall through; keep line accounting
        for i, ch in enumerate(chunk):
            if ch == "\n":
                line += 1
                line_start = pos + i + 1
        pos = m.end()
    tokens.append(_Token("eof", "", line, pos - line_start + 1))
    return tokens


class _Parser:
    def __init__(self, tokens: list[_Token]):
        self.tokens = tokens
        self.pos = 0

    def peek(self) -> _Token:
        return self.tokens[self.pos]

    def next(self) -> _Token:
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def fail(self, message: str, tok: _Token | None = None):
        tok = tok or self.peek()
        what = "end of input" if tok.kind == "eof" else repr(tok.text)
        raise ParseError(f"{message}, found {what}", tok.line, tok.column)

    def expect(self, text: str) -> _Token:
        tok = self.peek()
        if tok.kind == "symbol" and tok.text == text:
            return self.next()
        self.fail(f"expected {text!r}")

    def expect_keyword(self, word: str) -> _Token:
        tok = self.peek()
        if tok.kind == "keyword" and tok.text == word:
            return self.next()
        self.fail(f"expected {word!r}")

    def parse_stmt(self) -> Stmt:
        # stmt := basic (';' stmt)?  collected iteratively, folded to the right
        parts = [self.parse_basic()]
        while self.peek().kind == "symbol" and self.peek().text == ";":
            self.next()
            parts.append(self.parse_basic())
        stmt = parts[-1]
        for part in reversed(parts[:-1]):
            stmt = Seq(part, stmt)
        return stmt

    def parse_basic(self) -> Stmt:
        tok = self.peek()
        if tok.kind == "keyword" and tok.text == "skip":
            self.next()
            return Skip()
        if tok.kind == "keyword" and tok.text == "if":
            self.next()
            self.expect("(")
            test = self.parse_expr()
            self.expect(")")
            self.expect("{")
            then_branch = self.parse_stmt()
            self.expect("}")
            self.expect_keyword("else")
            self.expect("{")
            else_branch = self.parse_stmt()
            self.expect("}")
            return Cond(test, then_branch, else_branch)
        if tok.kind == "keyword" and tok.text == "while":
            self.next()
            self.expect("(")
            test = self.parse_expr()
            self.expect(")")
            self.expect("{")
            body = self.parse_stmt()
            self.expect("}")
            return While(test, body)
        if tok.kind == "ident":
            name = self.next().text
            self.expect(":=")
            return Assign(name, self.parse_literal())
        self.fail("expected a statement")

    def parse_expr(self) -> Expr:
        tok = self.peek()
        if tok.kind == "keyword" and tok.text in ("true", "false", "null"):
            self.next()
            return Lit(parse_value_literal(tok.text))
        if tok.kind == "ident":
            return Var(self.next().text)
        self.fail("expected an expression")

    def parse_literal(self) -> Value:
        tok = self.peek()
        if tok.kind == "keyword" and tok.text in ("true", "false", "null"):
            self.next()
            return parse_value_literal(tok.text)
        self.fail("expected a literal (true, false or null)")


def parse_program(text: str) -> Stmt:
    """Parse source text into a statement tree.

    Raises ParseError with line and column information on bad input.
    """
    parser = _Parser(_tokenize(text))
    stmt = parser.parse_stmt()
    tok = parser.peek()
    if tok.kind != "eof":
        parser.fail("expected end of input")
    return stmt
