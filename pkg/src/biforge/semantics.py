"""Evaluation of constructions in the standard model of the naturals.

The bounded strategy is a testing oracle: quantifiers range over a
finite initial segment, so its verdicts only approximate real truth.
Sound decisions live in :mod:`biforge.presburger`.

Evaluation compiles the tree to nested closures over a mutable scratch
environment; a bounded quantifier then re-enters only its own body
closure instead of re-walking the tree, which keeps exhaustive oracle
enumerations affordable.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Mapping, Optional, Union

from .errors import ParseError, QuantifierEncountered, SortError
from .syntax import (
    Abs, And, Construction, Eq, Exists, FF, Forall, Implies, Not, Or,
    Plus, Succ, TT, Times, Var, Zero,
)


class Environment:
    """Total valuation from variable names to naturals.

    Finite overrides over a default-zero base; lookup never fails.
    Instances are immutable: ``override`` returns a new environment.
    """

    __slots__ = ("_bindings",)

    def __init__(self, bindings: Optional[Mapping[str, int]] = None):
        bound = dict(bindings or {})
        for name, value in bound.items():
            if value < 0:
                raise ValueError(f"environments map to naturals, got {name}={value}")
        self._bindings = bound

    def __getitem__(self, name: str) -> int:
        return self._bindings.get(name, 0)

    def override(self, name: str, value: int) -> "Environment":
        if value < 0:
            raise ValueError("environments map to naturals")
        updated = dict(self._bindings)
        updated[name] = value
        return Environment(updated)

    def items(self):
        return self._bindings.items()

    def __repr__(self):
        inner = ",".join(f"{k}={v}" for k, v in sorted(self._bindings.items()))
        return f"Environment({inner})"


def override(e: Environment, v: str, n: int) -> Environment:
    return e.override(v, n)


def parse_environment(text: str) -> Environment:
    """Parse the ``name=value,name=value`` environment literal form."""
    bindings: dict[str, int] = {}
    text = text.strip()
    if not text:
        return Environment()
    offset = 0
    for part in text.split(","):
        name, sep, value = part.partition("=")
        name = name.strip()
        value = value.strip()
        if not sep or not name or not value.isdigit():
            raise ParseError(f"bad environment entry {part!r}", offset)
        bindings[name] = int(value)
        offset += len(part) + 1
    return Environment(bindings)


@dataclass(frozen=True)
class QuantifierFree:
    """Strategy that refuses quantifiers outright."""


@dataclass(frozen=True)
class Bounded:
    """Strategy where quantifiers range over 0..bound inclusive."""

    bound: int

    def __post_init__(self):
        if self.bound < 0:
            raise ValueError("bound must be a natural")


EvalStrategy = Union[QuantifierFree, Bounded]

QUANTIFIER_FREE = QuantifierFree()

_Scope = dict
_MISSING = object()


def _compile_term(c: Construction) -> Callable[[_Scope], int]:
    t = type(c)
    if t is Zero:
        return lambda env: 0
    if t is Var:
        name = c.name
        return lambda env: env.get(name, 0)
    if t is Succ:
        f = _compile_term(c.arg)
        return lambda env: f(env) + 1
    if t is Plus:
        f, g = _compile_term(c.lhs), _compile_term(c.rhs)
        return lambda env: f(env) + g(env)
    if t is Times:
        f, g = _compile_term(c.lhs), _compile_term(c.rhs)
        return lambda env: f(env) * g(env)
    raise SortError(f"eval_nat needs a term, got {t.__name__}")


def _compile_quantifier(c, bound: Optional[int], existential: bool):
    if bound is None:
        kind = "exists" if existential else "forall"

        def refuse(env):
            raise QuantifierEncountered(f"{kind} under the quantifier-free strategy")

        return refuse
    name = c.var
    body = _compile_formula(c.body, bound)

    if existential:
        def scan(env):
            saved = env.get(name, _MISSING)
            try:
                for k in range(bound + 1):
                    env[name] = k
                    if body(env):
                        return True
                return False
            finally:
                if saved is _MISSING:
                    del env[name]
                else:
                    env[name] = saved
    else:
        def scan(env):
            saved = env.get(name, _MISSING)
            try:
                for k in range(bound + 1):
                    env[name] = k
                    if not body(env):
                        return False
                return True
            finally:
                if saved is _MISSING:
                    del env[name]
                else:
                    env[name] = saved

    return scan


def _compile_formula(c: Construction, bound: Optional[int]) -> Callable[[_Scope], bool]:
    t = type(c)
    if t is TT:
        return lambda env: True
    if t is FF:
        return lambda env: False
    if t is Eq:
        f, g = _compile_term(c.lhs), _compile_term(c.rhs)
        return lambda env: f(env) == g(env)
    if t is And:
        f, g = _compile_formula(c.lhs, bound), _compile_formula(c.rhs, bound)
        return lambda env: f(env) and g(env)
    if t is Or:
        f, g = _compile_formula(c.lhs, bound), _compile_formula(c.rhs, bound)
        return lambda env: f(env) or g(env)
    if t is Not:
        f = _compile_formula(c.arg, bound)
        return lambda env: not f(env)
    if t is Implies:
        f, g = _compile_formula(c.lhs, bound), _compile_formula(c.rhs, bound)
        return lambda env: (not f(env)) or g(env)
    if t is Forall:
        return _compile_quantifier(c, bound, existential=False)
    if t is Exists:
        return _compile_quantifier(c, bound, existential=True)
    if t is Abs:
        raise SortError("eval_bool cannot evaluate an abstraction")
    raise SortError(f"eval_bool needs a formula, got {t.__name__}")


def eval_nat(c: Construction, e: Environment) -> int:
    """Value of a term: zero, successor, sum, product, variable lookup."""
    return _compile_term(c)(dict(e.items()))


def eval_bool(c: Construction, e: Environment, s: EvalStrategy = QUANTIFIER_FREE) -> bool:
    """Classical two-valued truth of a formula under ``e``."""
    bound = s.bound if isinstance(s, Bounded) else None
    return _compile_formula(c, bound)(dict(e.items()))
