"""Universal syntax trees for natural-number arithmetic.

A single inductive type covers all three shapes the kernel manipulates:
terms over zero / successor / sum / product / variables, first-order
formulas over those terms, and unary predicate abstractions.  Everything
downstream (evaluation, numeral transformers, recognizers, decision
procedures) works on these trees.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Union

from .errors import NotAnAbstraction, SortError


class Sort(enum.Enum):
    """Classification returned by :func:`sort_of`.

    ``NAT`` and ``BOOL`` are the two sorts proper; ``ABS_PRED`` is the
    distinguished classification of abstraction nodes (a unary
    nat-to-bool predicate), which may only occur at the top of a tree.
    """

    NAT = "nat"
    BOOL = "bool"
    ABS_PRED = "abs-pred"


@dataclass(frozen=True, slots=True)
class Zero:
    pass


@dataclass(frozen=True, slots=True)
class Succ:
    arg: "Construction"


@dataclass(frozen=True, slots=True)
class Plus:
    lhs: "Construction"
    rhs: "Construction"


@dataclass(frozen=True, slots=True)
class Times:
    lhs: "Construction"
    rhs: "Construction"


@dataclass(frozen=True, slots=True)
class Var:
    name: str

    def __post_init__(self):
        if not self.name:
            raise ValueError("variable names must be non-empty")


@dataclass(frozen=True, slots=True)
class TT:
    pass


@dataclass(frozen=True, slots=True)
class FF:
    pass


@dataclass(frozen=True, slots=True)
class And:
    lhs: "Construction"
    rhs: "Construction"


@dataclass(frozen=True, slots=True)
class Or:
    lhs: "Construction"
    rhs: "Construction"


@dataclass(frozen=True, slots=True)
class Not:
    arg: "Construction"


@dataclass(frozen=True, slots=True)
class Implies:
    lhs: "Construction"
    rhs: "Construction"


@dataclass(frozen=True, slots=True)
class Eq:
    lhs: "Construction"
    rhs: "Construction"


@dataclass(frozen=True, slots=True)
class Forall:
    var: str
    body: "Construction"

    def __post_init__(self):
        if not self.var:
            raise ValueError("variable names must be non-empty")


@dataclass(frozen=True, slots=True)
class Exists:
    var: str
    body: "Construction"

    def __post_init__(self):
        if not self.var:
            raise ValueError("variable names must be non-empty")


@dataclass(frozen=True, slots=True)
class Abs:
    """Unary predicate abstraction: a variable abstracted out of a formula."""

    var: str
    body: "Construction"

    def __post_init__(self):
        if not self.var:
            raise ValueError("variable names must be non-empty")


Construction = Union[
    Zero, Succ, Plus, Times, Var,
    TT, FF, And, Or, Not, Implies, Eq, Forall, Exists, Abs,
]

_BINDERS = (Forall, Exists, Abs)


def _expect(child: Construction, want: Sort, context: str) -> None:
    got = sort_of(child)
    if got is not want:
        raise SortError(f"{context} needs a {want.value} argument, got {got.value}")


def sort_of(c: Construction) -> Sort:
    """Classify a tree as a term (NAT), a formula (BOOL) or an abstraction.

    Raises :class:`SortError` if any subtree is ill-sorted, e.g. a
    successor applied to a truth constant.
    """
    match c:
        case Zero() | Var(_):
            return Sort.NAT
        case Succ(a):
            _expect(a, Sort.NAT, "s")
            return Sort.NAT
        case Plus(l, r):
            _expect(l, Sort.NAT, "+")
            _expect(r, Sort.NAT, "+")
            return Sort.NAT
        case Times(l, r):
            _expect(l, Sort.NAT, "*")
            _expect(r, Sort.NAT, "*")
            return Sort.NAT
        case TT() | FF():
            return Sort.BOOL
        case Eq(l, r):
            _expect(l, Sort.NAT, "=")
            _expect(r, Sort.NAT, "=")
            return Sort.BOOL
        case And(l, r):
            _expect(l, Sort.BOOL, "and")
            _expect(r, Sort.BOOL, "and")
            return Sort.BOOL
        case Or(l, r):
            _expect(l, Sort.BOOL, "or")
            _expect(r, Sort.BOOL, "or")
            return Sort.BOOL
        case Not(a):
            _expect(a, Sort.BOOL, "not")
            return Sort.BOOL
        case Implies(l, r):
            _expect(l, Sort.BOOL, "imp")
            _expect(r, Sort.BOOL, "imp")
            return Sort.BOOL
        case Forall(_, b):
            _expect(b, Sort.BOOL, "forall")
            return Sort.BOOL
        case Exists(_, b):
            _expect(b, Sort.BOOL, "exists")
            return Sort.BOOL
        case Abs(_, b):
            _expect(b, Sort.BOOL, "lambda")
            return Sort.ABS_PRED
    raise SortError(f"not a construction: {c!r}")


def is_well_sorted(c: Construction) -> bool:
    try:
        sort_of(c)
        return True
    except SortError:
        return False


def quote_unary(n: int) -> Construction:
    """The canonical unary numeral: ``n`` successors stacked on zero."""
    if n < 0:
        raise ValueError("naturals only")
    t: Construction = Zero()
    for _ in range(n):
        t = Succ(t)
    return t


def bnat(x: Construction, y: Construction) -> Construction:
    """Binary-digit building block ``(x + x) + y``.

    Nesting these encodes base-2 numerals: ``y`` is the low digit (zero
    or one as a term), ``x`` encodes the remaining digits.
    """
    _expect(x, Sort.NAT, "bnat")
    _expect(y, Sort.NAT, "bnat")
    return Plus(Plus(x, x), y)


def free_vars(c: Construction) -> frozenset[str]:
    match c:
        case Var(v):
            return frozenset((v,))
        case Zero() | TT() | FF():
            return frozenset()
        case Succ(a) | Not(a):
            return free_vars(a)
        case Plus(l, r) | Times(l, r) | And(l, r) | Or(l, r) | Implies(l, r) | Eq(l, r):
            return free_vars(l) | free_vars(r)
        case Forall(v, b) | Exists(v, b) | Abs(v, b):
            return free_vars(b) - {v}
    raise TypeError(f"not a construction: {c!r}")


def is_closed(c: Construction) -> bool:
    return not free_vars(c)


def is_abs(c: Construction) -> bool:
    return isinstance(c, Abs)


def abs_body(c: Construction) -> Construction:
    """Body of an abstraction, with the bound variable left free."""
    if not isinstance(c, Abs):
        raise NotAnAbstraction(f"abs_body needs an abstraction, got {type(c).__name__}")
    return c.body


def fresh_name(base: str, avoid: frozenset[str]) -> str:
    """Smallest numeric-suffixed variant of ``base`` not in ``avoid``."""
    k = 1
    while f"{base}{k}" in avoid:
        k += 1
    return f"{base}{k}"


def substitute(c: Construction, v: str, t: Construction) -> Construction:
    """Replace every free occurrence of ``v`` in ``c`` by the term ``t``.

    Capture-avoiding: a binder whose variable occurs free in ``t`` is
    renamed to a fresh variable before descending.
    """
    _expect(t, Sort.NAT, "substitute")
    return _subst(c, v, t, free_vars(t))


def _subst(c: Construction, v: str, t: Construction, fv_t: frozenset[str]) -> Construction:
    match c:
        case Var(w):
            return t if w == v else c
        case Zero() | TT() | FF():
            return c
        case Succ(a):
            return Succ(_subst(a, v, t, fv_t))
        case Not(a):
            return Not(_subst(a, v, t, fv_t))
        case Plus(l, r):
            return Plus(_subst(l, v, t, fv_t), _subst(r, v, t, fv_t))
        case Times(l, r):
            return Times(_subst(l, v, t, fv_t), _subst(r, v, t, fv_t))
        case And(l, r):
            return And(_subst(l, v, t, fv_t), _subst(r, v, t, fv_t))
        case Or(l, r):
            return Or(_subst(l, v, t, fv_t), _subst(r, v, t, fv_t))
        case Implies(l, r):
            return Implies(_subst(l, v, t, fv_t), _subst(r, v, t, fv_t))
        case Eq(l, r):
            return Eq(_subst(l, v, t, fv_t), _subst(r, v, t, fv_t))
        case Forall(w, b) | Exists(w, b) | Abs(w, b):
            ctor = type(c)
            if w == v:
                return c
            if w in fv_t and v in free_vars(b):
                w2 = fresh_name(w, free_vars(b) | fv_t | {v})
                b = _subst(b, w, Var(w2), frozenset((w2,)))
                w = w2
            return ctor(w, _subst(b, v, t, fv_t))
    raise TypeError(f"not a construction: {c!r}")


def alpha_equal(a: Construction, b: Construction) -> bool:
    """Structural equality up to consistent renaming of bound variables."""
    return _alpha(a, b, {}, {}, 0)


def _alpha(a, b, env_a, env_b, depth) -> bool:
    if type(a) is not type(b):
        return False
    match a:
        case Var(v):
            return env_a.get(v, v) == env_b.get(b.name, b.name)
        case Zero() | TT() | FF():
            return True
        case Succ(x) | Not(x):
            return _alpha(x, b.arg, env_a, env_b, depth)
        case Plus(l, r) | Times(l, r) | And(l, r) | Or(l, r) | Implies(l, r) | Eq(l, r):
            return _alpha(l, b.lhs, env_a, env_b, depth) and _alpha(r, b.rhs, env_a, env_b, depth)
        case Forall(v, body) | Exists(v, body) | Abs(v, body):
            ea = dict(env_a)
            eb = dict(env_b)
            ea[v] = depth
            eb[b.var] = depth
            return _alpha(body, b.body, ea, eb, depth + 1)
    raise TypeError(f"not a construction: {a!r}")
