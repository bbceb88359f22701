"""Reader and printer for the construction wire format.

Grammar (whitespace-insensitive):

    term     :=  z | (s term) | (+ term term) | (* term term)
              |  #b<bits>            MSB-first binary literal
              |  identifier          a variable
    formula  :=  tt | ff | (and f f) | (or f f) | (not f) | (imp f f)
              |  (= term term) | (forall v f) | (exists v f)
    abstr    :=  (lambda v f)

Printing is the exact inverse on canonical output: parse(print(c)) == c.
"""

from __future__ import annotations

from .binum import BinDigit, BinNum, normalize, to_construction
from .errors import ParseError
from .syntax import (
    Abs, And, Construction, Eq, Exists, FF, Forall, Implies, Not, Or,
    Plus, Succ, TT, Times, Var, Zero,
)

_RESERVED = {
    "z", "tt", "ff", "s", "and", "or", "not", "imp", "=",
    "+", "*", "forall", "exists", "lambda",
}

_ATOM_CHARS = set("abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789_-'+*=#")


def _tokenize(text: str):
    tokens: list[tuple[str, int]] = []
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
        elif ch in "()":
            tokens.append((ch, i))
            i += 1
        elif ch in _ATOM_CHARS:
            start = i
            while i < n and text[i] in _ATOM_CHARS:
                i += 1
            tokens.append((text[start:i], start))
        else:
            raise ParseError(f"unexpected character {ch!r}", i)
    return tokens


def _parse_binary_literal(token: str, pos: int) -> Construction:
    bits = token[2:]
    if not bits or any(b not in "01" for b in bits):
        raise ParseError(f"bad binary literal {token!r}", pos)
    digits = tuple(BinDigit(int(b)) for b in reversed(bits))
    return to_construction(BinNum(digits))


def _read(tokens: list[tuple[str, int]], i: int):
    """One expression starting at token ``i``; returns (node, next index)."""
    if i >= len(tokens):
        position = tokens[-1][1] + len(tokens[-1][0]) if tokens else 0
        raise ParseError("unexpected end of input", position)
    token, pos = tokens[i]
    if token == ")":
        raise ParseError("unexpected ')'", pos)
    if token != "(":
        return _atom(token, pos), i + 1

    if i + 1 >= len(tokens):
        raise ParseError("unclosed '('", pos)
    head, head_pos = tokens[i + 1]
    if head in "()":
        raise ParseError("a form starts with an operator name", head_pos)
    i += 2
    args = []
    while i < len(tokens) and tokens[i][0] != ")":
        node, i = _read(tokens, i)
        args.append(node)
    if i >= len(tokens):
        raise ParseError("unclosed '('", pos)
    i += 1  # consume ')'
    return _form(head, head_pos, args), i


_UNARY = {"s": Succ, "not": Not}
_BINARY = {"+": Plus, "*": Times, "and": And, "or": Or, "imp": Implies, "=": Eq}
_BINDER = {"forall": Forall, "exists": Exists, "lambda": Abs}


def _form(head: str, pos: int, args: list) -> Construction:
    if head in _UNARY:
        if len(args) != 1:
            raise ParseError(f"({head} ...) takes one argument", pos)
        return _UNARY[head](args[0])
    if head in _BINARY:
        if len(args) != 2:
            raise ParseError(f"({head} ...) takes two arguments", pos)
        return _BINARY[head](args[0], args[1])
    if head in _BINDER:
        if len(args) != 2 or not isinstance(args[0], Var):
            raise ParseError(f"({head} ...) takes a variable and a body", pos)
        return _BINDER[head](args[0].name, args[1])
    raise ParseError(f"unknown form {head!r}", pos)


def _atom(token: str, pos: int) -> Construction:
    if token == "z":
        return Zero()
    if token == "tt":
        return TT()
    if token == "ff":
        return FF()
    if token.startswith("#b"):
        return _parse_binary_literal(token, pos)
    if token in _RESERVED or token.startswith("#"):
        raise ParseError(f"{token!r} cannot stand alone", pos)
    if not (token[0].isalpha() and all(ch.isalnum() or ch in "_-'" for ch in token)):
        raise ParseError(f"bad identifier {token!r}", pos)
    return Var(token)


def parse_construction(text: str) -> Construction:
    """Parse one construction; trailing input is an error."""
    tokens = _tokenize(text)
    if not tokens:
        raise ParseError("empty input", 0)
    node, i = _read(tokens, 0)
    if i != len(tokens):
        raise ParseError(f"trailing input {tokens[i][0]!r}", tokens[i][1])
    return node


def to_sexpr(c: Construction) -> str:
    match c:
        case Zero():
            return "z"
        case TT():
            return "tt"
        case FF():
            return "ff"
        case Var(v):
            return v
        case Succ(a):
            return f"(s {to_sexpr(a)})"
        case Not(a):
            return f"(not {to_sexpr(a)})"
        case Plus(l, r):
            return f"(+ {to_sexpr(l)} {to_sexpr(r)})"
        case Times(l, r):
            return f"(* {to_sexpr(l)} {to_sexpr(r)})"
        case And(l, r):
            return f"(and {to_sexpr(l)} {to_sexpr(r)})"
        case Or(l, r):
            return f"(or {to_sexpr(l)} {to_sexpr(r)})"
        case Implies(l, r):
            return f"(imp {to_sexpr(l)} {to_sexpr(r)})"
        case Eq(l, r):
            return f"(= {to_sexpr(l)} {to_sexpr(r)})"
        case Forall(v, b):
            return f"(forall {v} {to_sexpr(b)})"
        case Exists(v, b):
            return f"(exists {v} {to_sexpr(b)})"
        case Abs(v, b):
            return f"(lambda {v} {to_sexpr(b)})"
    raise TypeError(f"not a construction: {c!r}")


def parse_binnum(text: str, pos: int = 0) -> BinNum:
    """A numeral argument: a ``#b`` literal or a decimal natural."""
    text = text.strip()
    if text.startswith("#b"):
        bits = text[2:]
        if not bits or any(b not in "01" for b in bits):
            raise ParseError(f"bad binary literal {text!r}", pos)
        return BinNum(tuple(BinDigit(int(b)) for b in reversed(bits)))
    if text.isdigit():
        from .binum import of_nat

        return of_nat(int(text))
    raise ParseError(f"bad numeral {text!r}", pos)


def binnum_literal(b: BinNum) -> str:
    """Canonical ``#b`` form, most-significant bit first."""
    b = normalize(b)
    return "#b" + "".join(str(int(d)) for d in reversed(b.digits))
