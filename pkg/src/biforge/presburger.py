"""Quantifier-elimination decision procedures for the successor and
successor-plus-addition languages.

Formulas are first translated into a linear normal form (sums collapse
to integer coefficient maps, successor chains to constants), then bound
variables are eliminated innermost-first by a Cooper-style procedure
relativized to the naturals: every eliminated variable carries an
implicit ``v >= 0`` constraint, so the lower-bound test-point set is
never empty and the minus-infinity branch vanishes.  Divisibility atoms
exist only inside the elimination; surface formulas never contain them.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from math import gcd, lcm
from typing import Iterator, Mapping, Optional, Union

from .errors import LanguageError, SortError
from .recognizers import LangLevel, is_fo
from .semantics import Bounded, Environment, eval_bool
from .syntax import (
    And, Construction, Eq, Exists, FF, Forall, Implies, Not, Or,
    Plus, Sort, Succ, TT, Times, Var, Zero,
    free_vars, quote_unary, sort_of, substitute,
)


class TruthValue(enum.Enum):
    TRUE = "tt"
    FALSE = "ff"

    @staticmethod
    def of(flag: bool) -> "TruthValue":
        return TruthValue.TRUE if flag else TruthValue.FALSE


# ---------------------------------------------------------------------------
# Linear terms and atoms.

@dataclass(frozen=True)
class LinearTerm:
    """Integer-linear combination of variables plus a constant.

    Zero coefficients are never stored; coefficient order is fixed by
    the variable name, so equal terms are structurally equal.
    """

    coeffs: tuple[tuple[str, int], ...]
    const: int

    @staticmethod
    def make(coeffs: Mapping[str, int], const: int) -> "LinearTerm":
        return LinearTerm(tuple(sorted((v, c) for v, c in coeffs.items() if c)), const)

    @staticmethod
    def constant(k: int) -> "LinearTerm":
        return LinearTerm((), k)

    @staticmethod
    def variable(v: str, coeff: int = 1) -> "LinearTerm":
        return LinearTerm.make({v: coeff}, 0)

    def coeff(self, v: str) -> int:
        for name, c in self.coeffs:
            if name == v:
                return c
        return 0

    def drop(self, v: str) -> "LinearTerm":
        return LinearTerm(tuple(p for p in self.coeffs if p[0] != v), self.const)

    def plus_var(self, v: str, coeff: int) -> "LinearTerm":
        d = dict(self.coeffs)
        d[v] = d.get(v, 0) + coeff
        return LinearTerm.make(d, self.const)

    def __add__(self, other: "LinearTerm") -> "LinearTerm":
        d = dict(self.coeffs)
        for v, c in other.coeffs:
            d[v] = d.get(v, 0) + c
        return LinearTerm.make(d, self.const + other.const)

    def __sub__(self, other: "LinearTerm") -> "LinearTerm":
        return self + other.scale(-1)

    def __neg__(self) -> "LinearTerm":
        return self.scale(-1)

    def scale(self, k: int) -> "LinearTerm":
        if k == 0:
            return LinearTerm((), 0)
        return LinearTerm(tuple((v, c * k) for v, c in self.coeffs), self.const * k)

    def shift(self, k: int) -> "LinearTerm":
        return LinearTerm(self.coeffs, self.const + k)

    def value(self, env: Mapping[str, int]) -> int:
        return self.const + sum(c * env[v] for v, c in self.coeffs)

    @property
    def is_constant(self) -> bool:
        return not self.coeffs

    def variables(self) -> frozenset[str]:
        return frozenset(v for v, _ in self.coeffs)


@dataclass(frozen=True)
class EqZero:
    term: LinearTerm


@dataclass(frozen=True)
class LtZero:
    term: LinearTerm


@dataclass(frozen=True)
class Divides:
    d: int
    term: LinearTerm

    def __post_init__(self):
        if self.d < 1:
            raise ValueError("divisor must be positive")


LinearAtom = Union[EqZero, LtZero, Divides]


# ---------------------------------------------------------------------------
# Quantifier-structured formulas over linear atoms (negation-normal form:
# negation never appears as a node, it is pushed into the atoms).

@dataclass(frozen=True)
class QTrue:
    pass


@dataclass(frozen=True)
class QFalse:
    pass


@dataclass(frozen=True)
class QAtom:
    atom: LinearAtom


@dataclass(frozen=True)
class QAnd:
    lhs: "QFormula"
    rhs: "QFormula"


@dataclass(frozen=True)
class QOr:
    lhs: "QFormula"
    rhs: "QFormula"


@dataclass(frozen=True)
class QForall:
    var: str
    body: "QFormula"


@dataclass(frozen=True)
class QExists:
    var: str
    body: "QFormula"


QFormula = Union[QTrue, QFalse, QAtom, QAnd, QOr, QForall, QExists]

_TRUE = QTrue()
_FALSE = QFalse()


def q_and(l: QFormula, r: QFormula) -> QFormula:
    if isinstance(l, QFalse) or isinstance(r, QFalse):
        return _FALSE
    if isinstance(l, QTrue):
        return r
    if isinstance(r, QTrue):
        return l
    return QAnd(l, r)


def q_or(l: QFormula, r: QFormula) -> QFormula:
    if isinstance(l, QTrue) or isinstance(r, QTrue):
        return _TRUE
    if isinstance(l, QFalse):
        return r
    if isinstance(r, QFalse):
        return l
    return QOr(l, r)


def _gather(cls, f: QFormula, seen: set, out: list) -> None:
    if isinstance(f, cls):
        _gather(cls, f.lhs, seen, out)
        _gather(cls, f.rhs, seen, out)
    elif f not in seen:
        seen.add(f)
        out.append(f)


def q_or_all(parts: list[QFormula]) -> QFormula:
    """Disjunction with constant folding, flattening and duplicate
    elimination; elimination residues shrink substantially under it."""
    seen: set = set()
    flat: list[QFormula] = []
    for p in parts:
        _gather(QOr, p, seen, flat)
    kept = [p for p in flat if not isinstance(p, QFalse)]
    if any(isinstance(p, QTrue) for p in kept):
        return _TRUE
    if not kept:
        return _FALSE
    out = kept[0]
    for p in kept[1:]:
        out = QOr(out, p)
    return out


def _mk_eq(t: LinearTerm) -> QFormula:
    if t.is_constant:
        return _TRUE if t.const == 0 else _FALSE
    g = gcd(*(abs(c) for _, c in t.coeffs), abs(t.const))
    if g > 1:
        t = LinearTerm(tuple((v, c // g) for v, c in t.coeffs), t.const // g)
    return QAtom(EqZero(t))


def _mk_lt(t: LinearTerm) -> QFormula:
    if t.is_constant:
        return _TRUE if t.const < 0 else _FALSE
    g = gcd(*(abs(c) for _, c in t.coeffs), abs(t.const))
    if g > 1:
        t = LinearTerm(tuple((v, c // g) for v, c in t.coeffs), t.const // g)
    return QAtom(LtZero(t))


def _mk_div(d: int, t: LinearTerm) -> QFormula:
    if t.is_constant:
        return _TRUE if t.const % d == 0 else _FALSE
    g = gcd(d, *(abs(c) for _, c in t.coeffs), abs(t.const))
    if g > 1:
        d //= g
        t = LinearTerm(tuple((v, c // g) for v, c in t.coeffs), t.const // g)
    if d == 1:
        return _TRUE
    return QAtom(Divides(d, t))


def negate(f: QFormula) -> QFormula:
    """Negation-normal-form complement; negated divisibility expands into
    a disjunction over the nonzero remainders."""
    match f:
        case QTrue():
            return _FALSE
        case QFalse():
            return _TRUE
        case QAtom(EqZero(t)):
            return q_or(_mk_lt(t), _mk_lt(-t))
        case QAtom(LtZero(t)):
            return _mk_lt((-t).shift(-1))
        case QAtom(Divides(d, t)):
            return q_or_all([_mk_div(d, t.shift(r)) for r in range(1, d)])
        case QAnd(l, r):
            return q_or(negate(l), negate(r))
        case QOr(l, r):
            return q_and(negate(l), negate(r))
        case QForall(v, b):
            return QExists(v, negate(b))
        case QExists(v, b):
            return QForall(v, negate(b))
    raise TypeError(f"not a formula: {f!r}")


# ---------------------------------------------------------------------------
# Translation from constructions.

def _linear_of_term(c: Construction) -> LinearTerm:
    match c:
        case Zero():
            return LinearTerm.constant(0)
        case Succ(a):
            return _linear_of_term(a).shift(1)
        case Plus(l, r):
            return _linear_of_term(l) + _linear_of_term(r)
        case Var(v):
            return LinearTerm.variable(v)
        case Times(_, _):
            raise LanguageError("products are outside the decidable language")
    raise SortError(f"not a term: {c!r}")


def linearize(c: Construction) -> QFormula:
    """Translate a level-2 formula into quantifier-structured linear atoms.

    Structure-preserving: the quantifier prefix survives, negations are
    pushed to the atoms, and a negated equality splits into the two
    strict orderings.
    """
    if not is_fo(LangLevel.L2, c):
        raise LanguageError("linearize needs a first-order formula over 0, successor and +")
    if sort_of(c) is not Sort.BOOL:
        raise SortError("linearize needs a formula, not a term")
    return _linearize(c, False)


def _linearize(c: Construction, neg: bool) -> QFormula:
    match c:
        case TT():
            return _FALSE if neg else _TRUE
        case FF():
            return _TRUE if neg else _FALSE
        case Eq(l, r):
            t = _linear_of_term(l) - _linear_of_term(r)
            if neg:
                return q_or(_mk_lt(t), _mk_lt(-t))
            return _mk_eq(t)
        case Not(a):
            return _linearize(a, not neg)
        case And(l, r):
            if neg:
                return q_or(_linearize(l, True), _linearize(r, True))
            return q_and(_linearize(l, False), _linearize(r, False))
        case Or(l, r):
            if neg:
                return q_and(_linearize(l, True), _linearize(r, True))
            return q_or(_linearize(l, False), _linearize(r, False))
        case Implies(l, r):
            if neg:
                return q_and(_linearize(l, False), _linearize(r, True))
            return q_or(_linearize(l, True), _linearize(r, False))
        case Forall(v, b):
            body = _linearize(b, neg)
            return QExists(v, body) if neg else QForall(v, body)
        case Exists(v, b):
            body = _linearize(b, neg)
            return QForall(v, body) if neg else QExists(v, body)
    raise SortError(f"not a formula: {c!r}")


# ---------------------------------------------------------------------------
# Cooper-style elimination over the naturals.

@dataclass(frozen=True)
class Elimination:
    """Record of one eliminated variable: the lower-boundary test terms
    (over variables still quantified outside it) and the period."""

    var: str
    tests: tuple[LinearTerm, ...]
    delta: int


def _atoms(f: QFormula) -> Iterator[LinearAtom]:
    match f:
        case QAtom(a):
            yield a
        case QAnd(l, r) | QOr(l, r):
            yield from _atoms(l)
            yield from _atoms(r)
        case QTrue() | QFalse():
            return
        case _:
            raise AssertionError("quantifier inside a matrix")


def _map_atoms(fn, f: QFormula) -> QFormula:
    match f:
        case QAtom(a):
            return fn(a)
        case QAnd(l, r):
            return q_and(_map_atoms(fn, l), _map_atoms(fn, r))
        case QOr(l, r):
            return q_or(_map_atoms(fn, l), _map_atoms(fn, r))
        case QTrue() | QFalse():
            return f
        case _:
            raise AssertionError("quantifier inside a matrix")


def _lower_equality(atom: LinearAtom, v: str) -> QFormula:
    # t = 0 becomes t - 1 < 0 and -t - 1 < 0, but only where v occurs.
    if isinstance(atom, EqZero) and atom.term.coeff(v):
        t = atom.term
        return q_and(_mk_lt(t.shift(-1)), _mk_lt((-t).shift(-1)))
    return QAtom(atom)


def _unify_coefficient(atom: LinearAtom, v: str, m: int) -> QFormula:
    c = atom.term.coeff(v)
    if c == 0:
        return QAtom(atom)
    k = m // abs(c)
    sign = 1 if c > 0 else -1
    if isinstance(atom, LtZero):
        t = atom.term.scale(k).drop(v).plus_var(v, sign)
        return QAtom(LtZero(t))
    if isinstance(atom, Divides):
        t = atom.term.scale(k).drop(v).plus_var(v, sign)
        if sign < 0:
            t = -t
        return QAtom(Divides(atom.d * k, t))
    raise AssertionError("equalities must be lowered before coefficient unification")


def _substitute_test(atom: LinearAtom, v: str, b: LinearTerm, j: int) -> QFormula:
    c = atom.term.coeff(v)
    if c == 0:
        return QAtom(atom)
    t = atom.term.drop(v) + b.shift(j).scale(c)
    if isinstance(atom, LtZero):
        return _mk_lt(t)
    if isinstance(atom, Divides):
        return _mk_div(atom.d, t)
    raise AssertionError("equalities must be lowered before substitution")


def cooper_eliminate(
    v: str,
    matrix: QFormula,
    _record: Optional[list[Elimination]] = None,
) -> QFormula:
    """Eliminate ``exists v`` from a quantifier-free matrix over the
    naturals.  The result never mentions ``v`` and is equivalent over
    natural-number assignments to the existential it replaces.

    The existential distributes over top-level disjunctions, processed
    left to right; each branch then gets its own, smaller test-point
    set, which keeps nested eliminations from multiplying out.
    """
    if isinstance(matrix, QOr):
        seen: set = set()
        flat: list[QFormula] = []
        _gather(QOr, matrix, seen, flat)
        return q_or_all([cooper_eliminate(v, part, _record) for part in flat])
    matrix = _map_atoms(lambda a: _lower_equality(a, v), matrix)
    # Relativize to the naturals: v >= 0, i.e. -v - 1 < 0.  This always
    # contributes a lower bound, so the minus-infinity branch is empty.
    matrix = q_and(matrix, QAtom(LtZero(LinearTerm.variable(v, -1).shift(-1))))
    if isinstance(matrix, (QTrue, QFalse)):
        if _record is not None:
            _record.append(Elimination(v, (), 1))
        return matrix

    coefficients = {abs(a.term.coeff(v)) for a in _atoms(matrix) if a.term.coeff(v)}
    m = lcm(*coefficients) if coefficients else 1
    matrix = _map_atoms(lambda a: _unify_coefficient(a, v, m), matrix)
    if m > 1:
        matrix = q_and(matrix, QAtom(Divides(m, LinearTerm.variable(v))))

    lowers: list[LinearTerm] = []
    moduli = [1]
    for atom in _atoms(matrix):
        c = atom.term.coeff(v)
        if c == 0:
            continue
        if isinstance(atom, LtZero) and c == -1:
            lowers.append(atom.term.drop(v))
        elif isinstance(atom, Divides):
            moduli.append(atom.d)
    delta = lcm(*moduli)
    tests = sorted(set(lowers), key=lambda t: (t.coeffs, t.const))

    branches = []
    for b in tests:
        for j in range(1, delta + 1):
            branches.append(_map_atoms(lambda a, _b=b, _j=j: _substitute_test(a, v, _b, _j), matrix))
    if _record is not None:
        _record.append(Elimination(v, tuple(tests), delta))
    return q_or_all(branches)


def eliminate_quantifiers(
    f: QFormula,
    _record: Optional[list[Elimination]] = None,
) -> QFormula:
    """Innermost-first elimination; universals go through their duals."""
    match f:
        case QExists(v, b):
            return cooper_eliminate(v, eliminate_quantifiers(b, _record), _record)
        case QForall(v, b):
            inner = eliminate_quantifiers(b, _record)
            return negate(cooper_eliminate(v, negate(inner), _record))
        case QAnd(l, r):
            return q_and(eliminate_quantifiers(l, _record), eliminate_quantifiers(r, _record))
        case QOr(l, r):
            return q_or(eliminate_quantifiers(l, _record), eliminate_quantifiers(r, _record))
        case _:
            return f


def evaluate(f: QFormula, env: Mapping[str, int]) -> bool:
    """Truth of a quantifier-free linear formula under an assignment."""
    match f:
        case QTrue():
            return True
        case QFalse():
            return False
        case QAtom(EqZero(t)):
            return t.value(env) == 0
        case QAtom(LtZero(t)):
            return t.value(env) < 0
        case QAtom(Divides(d, t)):
            return t.value(env) % d == 0
        case QAnd(l, r):
            return evaluate(l, env) and evaluate(r, env)
        case QOr(l, r):
            return evaluate(l, env) or evaluate(r, env)
    raise ValueError("formula still contains quantifiers")


# ---------------------------------------------------------------------------
# The decision procedures.

def _ground(c: Construction, e: Environment) -> Construction:
    for v in sorted(free_vars(c)):
        c = substitute(c, v, quote_unary(e[v]))
    return c


def _decide(c: Construction, e: Environment, record: Optional[list[Elimination]] = None) -> TruthValue:
    grounded = _ground(c, e)
    q = linearize(grounded)
    q = eliminate_quantifiers(q, record)
    return TruthValue.of(evaluate(q, {}))


def decide_bt6(c: Construction, e: Optional[Environment] = None) -> TruthValue:
    """Decide a formula of the 0/successor/+ language, grounding free
    variables through ``e``.  Always returns one of the two truth values
    and agrees with standard-model truth."""
    e = e if e is not None else Environment()
    if sort_of(c) is not Sort.BOOL:
        raise SortError("decide_bt6 needs a formula")
    if not is_fo(LangLevel.L2, c):
        raise LanguageError("decide_bt6 needs a first-order formula over 0, successor and +")
    return _decide(c, e)


def decide_bt5(c: Construction, e: Optional[Environment] = None) -> TruthValue:
    """Decide a formula of the 0/successor language (restriction of
    :func:`decide_bt6` to the smaller language)."""
    e = e if e is not None else Environment()
    if sort_of(c) is not Sort.BOOL:
        raise SortError("decide_bt5 needs a formula")
    if not is_fo(LangLevel.L1, c):
        raise LanguageError("decide_bt5 needs a first-order formula over 0 and successor")
    return _decide(c, e)


def bounded_oracle(c: Construction, e: Environment, bound: int) -> bool:
    """Brute-force reference: quantifiers enumerate 0..bound inclusive."""
    if sort_of(c) is not Sort.BOOL:
        raise SortError("bounded_oracle needs a formula")
    return eval_bool(c, e, Bounded(bound))


def sufficiency_bound(records: list[Elimination]) -> Optional[int]:
    """Smallest uniform quantifier range that provably reproduces the
    decision, derived from the elimination data.

    A true existential has a witness among its recorded test points
    shifted by at most the period, so a uniform range B works when every
    test term's value stays within B whenever the outer variables do.
    Terms whose positive coefficients sum to zero demand
    ``B >= const + delta``; a sum of one is harmless only when
    ``const + delta <= 0``; anything larger admits no uniform range and
    yields None.
    """
    bound = 0
    for rec in records:
        for t in rec.tests:
            slope = sum(c for _, c in t.coeffs if c > 0)
            need = t.const + rec.delta
            if slope == 0:
                bound = max(bound, need)
            elif slope == 1:
                if need > 0:
                    return None
            else:
                return None
    return bound


def decide_bt6_with_bound(
    c: Construction, e: Optional[Environment] = None
) -> tuple[TruthValue, Optional[int]]:
    """Like :func:`decide_bt6` but also reports the per-sentence
    sufficiency bound for the bounded oracle (None when no uniform
    bound exists)."""
    e = e if e is not None else Environment()
    if sort_of(c) is not Sort.BOOL:
        raise SortError("decide_bt6 needs a formula")
    if not is_fo(LangLevel.L2, c):
        raise LanguageError("decide_bt6 needs a first-order formula over 0, successor and +")
    records: list[Elimination] = []
    verdict = _decide(c, e, records)
    return verdict, sufficiency_bound(records)
