"""Binary numerals and the numeral arithmetic transformers.

Two routes compute sums of numerals and are cross-checked against each
other: a direct recursive algorithm (:func:`bplus`), and a conditional
rewrite engine (:func:`bplus_rewrite`) that applies the eleven numeral
addition rules with first-match rule order and leftmost-innermost redex
selection.  The rule set is implemented exactly as stated, including a
rule whose left-hand side duplicates an earlier rule's; as a result the
rewrite route is not complete and can report a stuck term, which callers
are expected to surface rather than hide.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Optional, Union

from .errors import NotBnum, StuckRewrite
from .syntax import Construction, Plus, Succ, Zero


class BinDigit(enum.IntEnum):
    D0 = 0
    D1 = 1


_DIGIT_OF = (BinDigit.D0, BinDigit.D1)


@dataclass(frozen=True)
class BinNum:
    """Non-empty digit sequence, least-significant digit first.

    Most-significant zeros are legal: numerals compare by value via
    :func:`to_nat` unless structure is explicitly at stake.
    """

    digits: tuple[BinDigit, ...]

    def __post_init__(self):
        if not self.digits:
            raise ValueError("a numeral has at least one digit")
        object.__setattr__(
            self,
            "digits",
            tuple(d if type(d) is BinDigit else BinDigit(d) for d in self.digits),
        )

    def __len__(self):
        return len(self.digits)


def binnum(digits: Iterable[int]) -> BinNum:
    return BinNum(tuple(digits))


# Raw-tuple helpers carry the recursions; public operations wrap them.

def _succ(d: tuple[int, ...]) -> tuple[int, ...]:
    if d[0] == 0:
        return (1,) + d[1:]
    if len(d) == 1:
        return (0, 1)
    return (0,) + _succ(d[1:])


def _shift(d: tuple[int, ...]) -> tuple[int, ...]:
    return (0,) + d


def _bplus(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    if a == (0,):
        return b
    if a == (1,):
        return _succ(b)
    if len(b) == 1:
        return a if b == (0,) else _succ(a)
    low = _shift(_bplus(a[1:], b[1:]))
    if a[0] and b[0]:
        return _succ(_succ(low))
    if a[0] or b[0]:
        return _succ(low)
    return low


def _btimes(x: tuple[int, ...], y: tuple[int, ...]) -> tuple[int, ...]:
    if y == (0,):
        return (0,)
    if y == (1,):
        return x
    if x == (0,):
        return (0,)
    if x == (1,):
        return y
    if x[0] == 0:
        return _shift(_btimes(x[1:], y))
    return _bplus(_shift(_btimes(x[1:], y)), y)


def to_nat(b: BinNum) -> int:
    """Positional value: sum of digit * 2^position from the low end."""
    value = 0
    for d in reversed(b.digits):
        value = value + value + d
    return int(value)


def of_nat(n: int) -> BinNum:
    """Canonical numeral for ``n``: no high zeros except for 0 itself."""
    if n < 0:
        raise ValueError("naturals only")
    if n == 0:
        return BinNum((BinDigit.D0,))
    digits = []
    while n:
        digits.append(BinDigit(n & 1))
        n >>= 1
    return BinNum(tuple(digits))


# The raw helpers treat digits as ints; BinDigit members are ints, so
# public wrappers pass the digit tuples through unconverted.

def succ_b(b: BinNum) -> BinNum:
    return BinNum(_succ(b.digits))


def shift(b: BinNum) -> BinNum:
    return BinNum(_shift(b.digits))


def bplus(a: BinNum, b: BinNum) -> BinNum:
    return BinNum(_bplus(a.digits, b.digits))


def btimes(a: BinNum, b: BinNum) -> BinNum:
    return BinNum(_btimes(a.digits, b.digits))


def normalize(b: BinNum) -> BinNum:
    """Drop most-significant zeros, keeping at least one digit."""
    digits = list(b.digits)
    while len(digits) > 1 and digits[-1] == BinDigit.D0:
        digits.pop()
    return BinNum(tuple(digits))


# ---------------------------------------------------------------------------
# Bridging numerals and constructions.

_ZERO = Zero()
_ONE = Succ(Zero())


def to_construction(b: BinNum) -> Construction:
    """Quote a numeral as nested ``(x + x) + digit`` terms.

    Builds the nodes directly: every layer is well-sorted by
    construction, so the checked :func:`biforge.syntax.bnat` round would
    only re-walk the shared subterm.
    """
    term: Optional[Construction] = None
    for d in reversed(b.digits):
        digit = _ONE if d else _ZERO
        high = term if term is not None else _ZERO
        term = Plus(Plus(high, high), digit)
    assert term is not None
    return term


def is_bnum(c: Construction) -> bool:
    """Recognize binary-numeral terms: ``(v + v) + w`` with ``w`` a digit
    term and ``v`` either zero or itself a numeral term."""
    while True:
        if not isinstance(c, Plus):
            return False
        inner = c.lhs
        if not isinstance(inner, Plus):
            return False
        v1, v2, w = inner.lhs, inner.rhs, c.rhs
        if v1 is not v2 and v1 != v2:
            return False
        if w != _ZERO and w != _ONE:
            return False
        if v1 == _ZERO:
            return True
        c = v1


def from_construction(c: Construction) -> BinNum:
    if not is_bnum(c):
        raise NotBnum(f"not a binary-numeral term: {c!r}")
    digits: list[BinDigit] = []
    node = c
    while True:
        high = node.lhs.lhs
        low = node.rhs
        digits.append(BinDigit.D1 if low == _ONE else BinDigit.D0)
        if high == _ZERO:
            return BinNum(tuple(digits))
        node = high


# ---------------------------------------------------------------------------
# The conditional rewrite engine for numeral addition.
#
# Mixed terms interleave pending additions and digit skeletons whose high
# part is still being rewritten.  Rules fire on additions whose operands
# are plain constructions, tried in their stated order; the first stuck
# redex aborts the whole rewrite.

@dataclass(frozen=True)
class _Add:
    lhs: "RewriteTerm"
    rhs: "RewriteTerm"


@dataclass(frozen=True)
class _Digit:
    high: "RewriteTerm"
    low: Construction  # zero or one term


RewriteTerm = Union[_Add, _Digit, Construction]

_ZERO2 = Plus(Plus(_ZERO, _ZERO), _ZERO)   # the (0) numeral term
_ONE2 = Plus(Plus(_ZERO, _ZERO), _ONE)     # the (1) numeral term
_TWO2 = Plus(Plus(_ONE2, _ONE2), _ZERO)    # the (10) numeral term


def _split_bnat(c: Construction):
    """High part and digit of a ``(v + v) + w`` node, else None."""
    match c:
        case Plus(Plus(v1, v2), w) if v1 == v2 and (w == _ZERO or w == _ONE):
            return v1, w
    return None


def _rule_right_zero(a, b):
    if b == _ZERO2 and is_bnum(a):
        return a
    return None


def _rule_left_zero(a, b):
    if a == _ZERO2 and is_bnum(b):
        return b
    return None


def _rule_one_one(a, b):
    if a == _ONE2 and b == _ONE2:
        return _TWO2
    return None


def _rule_even_plus_one(a, b):
    if b != _ONE2:
        return None
    parts = _split_bnat(a)
    if parts and parts[1] == _ZERO and is_bnum(parts[0]):
        return Plus(Plus(parts[0], parts[0]), _ONE)
    return None


def _rule_odd_plus_one(a, b):
    if b != _ONE2:
        return None
    parts = _split_bnat(a)
    if parts and parts[1] == _ONE and is_bnum(parts[0]):
        return _Digit(_Add(parts[0], _ONE2), _ZERO)
    return None


def _rule_one_plus_even(a, b):
    if a != _ONE2:
        return None
    parts = _split_bnat(b)
    if parts and parts[1] == _ZERO and is_bnum(parts[0]):
        return Plus(Plus(parts[0], parts[0]), _ONE)
    return None


def _rule_one_plus_even_carry(a, b):
    # Stated with the same left-hand side as _rule_one_plus_even, so it
    # never fires under first-match order; kept for rule-set fidelity.
    if a != _ONE2:
        return None
    parts = _split_bnat(b)
    if parts and parts[1] == _ZERO and is_bnum(parts[0]):
        return _Digit(_Add(parts[0], _ONE2), _ZERO)
    return None


def _binary_rule(da: Construction, db: Construction, carry: bool):
    def rule(a, b):
        pa = _split_bnat(a)
        pb = _split_bnat(b)
        if not pa or not pb or pa[1] != da or pb[1] != db:
            return None
        if not (is_bnum(pa[0]) and is_bnum(pb[0])):
            return None
        total = _Add(pa[0], pb[0])
        if carry:
            return _Digit(_Add(total, _ONE2), _ZERO)
        return _Digit(total, _ONE if (da == _ONE) != (db == _ONE) else _ZERO)

    return rule


_RULES = (
    _rule_right_zero,           # u + (0) = u
    _rule_left_zero,            # (0) + u = u
    _rule_one_one,              # (1) + (1) = (10)
    _rule_even_plus_one,        # [u 0] + (1) = [u 1]
    _rule_odd_plus_one,         # [u 1] + (1) = [u+(1) 0]
    _rule_one_plus_even,        # (1) + [u 0] = [u 1]
    _rule_one_plus_even_carry,  # shadowed duplicate of the previous rule
    _binary_rule(_ZERO, _ZERO, carry=False),   # [u 0] + [v 0] = [u+v 0]
    _binary_rule(_ZERO, _ONE, carry=False),    # [u 0] + [v 1] = [u+v 1]
    _binary_rule(_ONE, _ZERO, carry=False),    # [u 1] + [v 0] = [u+v 1]
    _binary_rule(_ONE, _ONE, carry=True),      # [u 1] + [v 1] = [(u+v)+(1) 0]
)


def _render(t: RewriteTerm) -> str:
    from .sexpr import to_sexpr  # deferred: sexpr imports this module

    match t:
        case _Add(l, r):
            return f"(bplus {_render(l)} {_render(r)})"
        case _Digit(h, low):
            return f"(digit {_render(h)} {to_sexpr(low)})"
        case _:
            return to_sexpr(t)


def _reduce(t: RewriteTerm) -> Construction:
    match t:
        case _Add(l, r):
            lhs = _reduce(l)
            rhs = _reduce(r)
            for rule in _RULES:
                out = rule(lhs, rhs)
                if out is not None:
                    return _reduce(out)
            raise StuckRewrite(_Add(lhs, rhs), _render(_Add(lhs, rhs)))
        case _Digit(h, low):
            high = _reduce(h)
            return Plus(Plus(high, high), low)
        case _:
            return t


def bplus_rewrite(a: Construction, b: Construction) -> Construction:
    """Add two numeral terms by conditional rewriting.

    Raises :class:`StuckRewrite` when the rule set covers no redex; the
    stuck term is preserved on the exception as a completeness
    counterexample.
    """
    if not is_bnum(a):
        raise NotBnum(f"left operand is not a numeral term: {a!r}")
    if not is_bnum(b):
        raise NotBnum(f"right operand is not a numeral term: {b!r}")
    result = _reduce(_Add(a, b))
    if not is_bnum(result):
        raise StuckRewrite(result, _render(result))
    return result
