"""Text syntax for terms, environments, and closures.

Grammar (ASCII only, whitespace free between tokens):

    term        :=  *NAT  |  NAME  |  @( term ). term
                 |  [ NAME : term ]. term  |  [ NAME = term ]. term
                 |  < term >. term  |  ( term )
    entry       :=  NAME : term  |  NAME = term  |  NAME !
    environment :=  entry ( ; entry )*
    closure     :=  [environment] |- term  |  term

Applications are written argument first, so a redex reads @(V).[x:W].T.
Names bind innermost-first and may shadow; Void entries bind a name too,
even though a reference to one is semantically unbound. The printer invents
the names x0, x1, ... by binder position and never needs parentheses.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .terms import (
    Abbr,
    Abst,
    Appl,
    Cast,
    Closure,
    Decl,
    Defn,
    Env,
    Ref,
    Sort,
    Term,
    VOID,
    Void,
)


class ParseError(Exception):
    def __init__(self, message: str, line: int, col: int):
        super().__init__(f"{message} (line {line}, column {col})")
        self.line = line
        self.col = col


class UnboundName(ParseError):
    pass


@dataclass(frozen=True)
class Token:
    kind: str  # "sort" | "ident" | "end" | a punctuation literal
    text: str
    line: int
    col: int


_PUNCT = "@()[]<>.:;=!"


def tokenize(text: str) -> list:
    tokens = []
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
        if ch.isspace():
            col += 1
            i += 1
            continue
        start_col = col
        if ch == "|":
            if text[i : i + 2] != "|-":
                raise ParseError("expected |-", line, col)
            tokens.append(Token("|-", "|-", line, start_col))
            i += 2
            col += 2
            continue
        if ch == "*":
            j = i + 1
            while j < n and text[j].isdigit():
                j += 1
            if j == i + 1:
                raise ParseError("expected a sort degree after *", line, col)
            tokens.append(Token("sort", text[i + 1 : j], line, start_col))
            col += j - i
            i = j
            continue
        if ch.isalpha() or ch == "_":
            j = i + 1
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            tokens.append(Token("ident", text[i:j], line, start_col))
            col += j - i
            i = j
            continue
        if ch in _PUNCT:
            tokens.append(Token(ch, ch, line, start_col))
            i += 1
            col += 1
            continue
        raise ParseError(f"stray character {ch!r}", line, col)
    tokens.append(Token("end", "", line, col))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.tokens = tokenize(text)
        self.pos = 0

    def peek(self) -> Token:
        return self.tokens[self.pos]

    def next(self) -> Token:
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect(self, kind: str) -> Token:
        tok = self.next()
        if tok.kind != kind:
            raise ParseError(
                f"expected {kind!r}, found {tok.text or 'end of input'!r}",
                tok.line,
                tok.col,
            )
        return tok

    def term(self, scope: list) -> Term:
        tok = self.next()
        if tok.kind == "sort":
            return Sort(int(tok.text))
        if tok.kind == "ident":
            for depth, name in enumerate(reversed(scope)):
                if name == tok.text:
                    return Ref(depth)
            raise UnboundName(f"unbound name {tok.text!r}", tok.line, tok.col)
        if tok.kind == "@":
            self.expect("(")
            arg = self.term(scope)
            self.expect(")")
            self.expect(".")
            fun = self.term(scope)
            return Appl(arg, fun)
        if tok.kind == "[":
            name = self.expect("ident").text
            marker = self.next()
            if marker.kind not in (":", "="):
                raise ParseError(
                    "expected : or = in binder", marker.line, marker.col
                )
            left = self.term(scope)
            self.expect("]")
            self.expect(".")
            scope.append(name)
            right = self.term(scope)
            scope.pop()
            return Abst(left, right) if marker.kind == ":" else Abbr(left, right)
        if tok.kind == "<":
            ty = self.term(scope)
            self.expect(">")
            self.expect(".")
            body = self.term(scope)
            return Cast(ty, body)
        if tok.kind == "(":
            inner = self.term(scope)
            self.expect(")")
            return inner
        raise ParseError(
            f"expected a term, found {tok.text or 'end of input'!r}",
            tok.line,
            tok.col,
        )

    def environment(self, scope: list) -> Env:
        entries = []
        while True:
            name = self.expect("ident").text
            marker = self.next()
            if marker.kind == "!":
                entries.append(VOID)
            elif marker.kind == ":":
                entries.append(Decl(self.term(scope)))
            elif marker.kind == "=":
                entries.append(Defn(self.term(scope)))
            else:
                raise ParseError(
                    "expected :, =, or ! in environment entry",
                    marker.line,
                    marker.col,
                )
            scope.append(name)
            if self.peek().kind != ";":
                return tuple(entries)
            self.next()


def parse_closure_with_names(text: str):
    """Parse a closure and also return the names its environment entries
    were given, outermost first (useful to parse further terms in the same
    scope)."""
    parser = _Parser(text)
    scope: list = []
    env: Env = ()
    tok = parser.peek()
    if tok.kind == "|-":
        parser.next()
    elif tok.kind == "ident" and parser.tokens[parser.pos + 1].kind in (
        ":",
        "=",
        "!",
    ):
        env = parser.environment(scope)
        parser.expect("|-")
    names = tuple(scope)
    subject = parser.term(scope)
    parser.expect("end")
    return Closure(env, subject), names


def parse_closure(text: str) -> Closure:
    return parse_closure_with_names(text)[0]


def parse_term_in_scope(text: str, names) -> Term:
    """A term whose free names refer to the given scope, outermost first."""
    parser = _Parser(text)
    term = parser.term(list(names))
    parser.expect("end")
    return term


def parse_term(text: str) -> Term:
    """A term with no environment and no free names."""
    parser = _Parser(text)
    term = parser.term([])
    parser.expect("end")
    return term


def print_term(t: Term, names: tuple = ()) -> str:
    """Render with invented names; names lists the identifiers already in
    scope, outermost first. Raises on references escaping that scope."""
    if isinstance(t, Sort):
        return f"*{t.s}"
    if isinstance(t, Ref):
        if t.i >= len(names):
            raise ValueError(f"reference {t.i} escapes the printing scope")
        return names[len(names) - 1 - t.i]
    if isinstance(t, Appl):
        return f"@({print_term(t.arg, names)}).{print_term(t.fun, names)}"
    if isinstance(t, Cast):
        return f"<{print_term(t.ty, names)}>.{print_term(t.body, names)}"
    fresh = f"x{len(names)}"
    marker = ":" if isinstance(t, Abst) else "="
    left = t.ty if isinstance(t, Abst) else t.defn
    body = print_term(t.body, names + (fresh,))
    return f"[{fresh}{marker}{print_term(left, names)}].{body}"


def print_env(env: Env) -> str:
    pieces = []
    names: tuple = ()
    for e in env:
        fresh = f"x{len(names)}"
        if isinstance(e, Void):
            pieces.append(f"{fresh}!")
        elif isinstance(e, Decl):
            pieces.append(f"{fresh}:{print_term(e.ty, names)}")
        else:
            pieces.append(f"{fresh}={print_term(e.body, names)}")
        names += (fresh,)
    return "; ".join(pieces)


def env_names(env: Env) -> tuple:
    return tuple(f"x{k}" for k in range(len(env)))


def print_closure(c: Closure) -> str:
    subject = print_term(c.subject, env_names(c.env))
    if not c.env:
        return f"|- {subject}"
    return f"{print_env(c.env)} |- {subject}"
