"""Text syntax for game forms and universes.

Grammar (whitespace-insensitive)::

    expr   := term ('+' term)*
    term   := INT 'x' factor | factor
    factor := '~' factor | '-' INT | atom
    atom   := INT | '*' | '(' expr ')' | '{' list '|' list '}'
    list   := '' | '.' | item (',' item)*
    item   := expr | '#'

``~`` conjugates, ``#`` is a tombstone, ``.`` marks an empty side.
Universes are ``D``, ``E``, ``M`` or ``cl(expr; expr; ...)``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .games import STAR, Game, add, as_integer, conjugate, integer, mk_aug, times


class ParseError(ValueError):
    def __init__(self, msg: str, pos: int):
        super().__init__(f"{msg} at position {pos}")
        self.pos = pos


# --------------------------------------------------------------------------
# AST

@dataclass(frozen=True)
class Int:
    value: int


@dataclass(frozen=True)
class Star:
    pass


@dataclass(frozen=True)
class Braces:
    left: tuple
    right: tuple
    left_tomb: bool = False
    right_tomb: bool = False


@dataclass(frozen=True)
class Conj:
    arg: object


@dataclass(frozen=True)
class Sum:
    a: object
    b: object


@dataclass(frozen=True)
class Repeat:
    count: int
    arg: object


Expr = Int | Star | Braces | Conj | Sum | Repeat

_TOKEN = re.compile(r"\s*(?:(\d+)|(.))", re.S)
_PUNCT = set("*~-+x(){}|,.#;·")


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    toks = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m.group(1) is not None:
            toks.append(("INT", m.group(1), m.start(1)))
        else:
            ch = m.group(2)
            if ch.isspace():
                pos = m.end()
                continue
            if ch not in _PUNCT:
                raise ParseError(f"unexpected character {ch!r}", m.start(2))
            toks.append((("." if ch == "·" else ch), ch, m.start(2)))
        pos = m.end()
    toks.append(("EOF", "", len(text)))
    return toks


class _Parser:
    def __init__(self, text: str):
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self, k: int = 0) -> str:
        return self.toks[min(self.i + k, len(self.toks) - 1)][0]

    def pos(self) -> int:
        return self.toks[self.i][2]

    def take(self, kind: str) -> str:
        tok = self.toks[self.i]
        if tok[0] != kind:
            want = "end of input" if kind == "EOF" else repr(kind)
            got = "end of input" if tok[0] == "EOF" else repr(tok[1])
            raise ParseError(f"expected {want}, found {got}", tok[2])
        self.i += 1
        return tok[1]

    def expr(self):
        e = self.term()
        while self.peek() == "+":
            self.take("+")
            e = Sum(e, self.term())
        return e

    def term(self):
        if self.peek() == "INT" and self.peek(1) == "x":
            n = int(self.take("INT"))
            self.take("x")
            return Repeat(n, self.factor())
        if self.peek() == "-" and self.peek(1) == "INT" and self.peek(2) == "x":
            raise ParseError("negative repetition count", self.pos())
        return self.factor()

    def factor(self):
        if self.peek() == "~":
            self.take("~")
            return Conj(self.factor())
        if self.peek() == "-":
            self.take("-")
            return Conj(Int(int(self.take("INT"))))
        return self.atom()

    def atom(self):
        kind = self.peek()
        if kind == "INT":
            return Int(int(self.take("INT")))
        if kind == "*":
            self.take("*")
            return Star()
        if kind == "(":
            self.take("(")
            e = self.expr()
            self.take(")")
            return e
        if kind == "{":
            self.take("{")
            left, lt = self.side()
            self.take("|")
            right, rt = self.side()
            self.take("}")
            return Braces(tuple(left), tuple(right), lt, rt)
        if kind == "#":
            raise ParseError("tombstone outside braces", self.pos())
        raise ParseError("expected a game", self.pos())

    def side(self):
        if self.peek() in ("|", "}"):
            return [], False
        if self.peek() == "." and self.peek(1) in ("|", "}"):
            self.take(".")
            return [], False
        items, tomb = [], False
        while True:
            if self.peek() == "#":
                if tomb:
                    raise ParseError("duplicate tombstone", self.pos())
                self.take("#")
                tomb = True
            else:
                items.append(self.expr())
            if self.peek() != ",":
                return items, tomb
            self.take(",")


def parse(text: str) -> Expr:
    p = _Parser(text)
    e = p.expr()
    p.take("EOF")
    return e


def elaborate(e: Expr) -> Game:
    if isinstance(e, Int):
        return integer(e.value)
    if isinstance(e, Star):
        return STAR
    if isinstance(e, Braces):
        return mk_aug([elaborate(x) for x in e.left], [elaborate(x) for x in e.right],
                      e.left_tomb, e.right_tomb)
    if isinstance(e, Conj):
        return conjugate(elaborate(e.arg))
    if isinstance(e, Sum):
        return add(elaborate(e.a), elaborate(e.b))
    if isinstance(e, Repeat):
        return times(e.count, elaborate(e.arg))
    raise TypeError(f"not an expression: {e!r}")


def game(text: str) -> Game:
    """Parse and elaborate in one step."""
    return elaborate(parse(text))


# --------------------------------------------------------------------------
# printing

def _short(g: Game) -> str:
    if g is STAR:
        return "*"
    n = as_integer(g)
    if n is not None:
        return str(n) if n >= 0 else f"~{-n}"
    return _braces(g)


def _braces(g: Game) -> str:
    left = (["#"] if g.left_tomb else []) + [_short(o) for o in g.left]
    right = [_short(o) for o in g.right] + (["#"] if g.right_tomb else [])
    return "{" + (",".join(left) or ".") + "|" + (",".join(right) or ".") + "}"


def to_text(g: Game, short: bool = False) -> str:
    """Canonical text for g.

    The outermost form is always written in braces unless ``short`` is set;
    options use integer and ``*`` abbreviations.
    """
    return _short(g) if short else _braces(g)


# --------------------------------------------------------------------------
# universes

def parse_universe(text: str, **kwargs):
    """``D``, ``E``, ``M`` or ``cl(expr;...)`` into a UniverseSpec."""
    from .universes import UniverseSpec

    t = text.strip()
    if t in ("D", "E", "M"):
        return UniverseSpec.named(t, **kwargs)
    m = re.fullmatch(r"cl\((.*)\)", t, re.S)
    if not m:
        raise ParseError(f"unknown universe {text!r}", 0)
    body = m.group(1)
    gens = []
    offset = t.index("(") + 1
    for part in body.split(";"):
        if part.strip():
            try:
                gens.append(game(part))
            except ParseError as err:
                raise ParseError(str(err).rsplit(" at position", 1)[0], offset + err.pos) from None
        offset += len(part) + 1
    return UniverseSpec.end_closure(gens, **kwargs)


def universe_text(u) -> str:
    if u.generators:
        return "cl(" + ";".join(to_text(g) for g in u.generators) + ")"
    return u.kind.value
