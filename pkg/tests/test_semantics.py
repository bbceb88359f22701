import pytest

from biforge.errors import ParseError, QuantifierEncountered, SortError
from biforge.semantics import (
    Bounded, Environment, QUANTIFIER_FREE, eval_bool, eval_nat, override,
    parse_environment,
)
from biforge.syntax import (
    And, Eq, Exists, Forall, Implies, Not, Or, Plus, Succ, Times, Var, Zero,
)
from .conftest import random_matrix

x = Var("x")
y = Var("y")


def test_eval_nat_basics():
    e = Environment()
    assert eval_nat(Succ(Succ(Zero())), e) == 2
    e = Environment({"x": 3, "y": 4})
    assert eval_nat(Plus(x, Succ(y)), e) == 8
    assert eval_nat(Plus(x, Succ(y)), e) == eval_nat(Succ(Plus(x, y)), e)
    assert eval_nat(Times(x, y), e) == 12


def test_eval_nat_binary_literal():
    from biforge.sexpr import parse_construction

    # 101 in binary, by positional weights: 1*4 + 0*2 + 1*1
    assert eval_nat(parse_construction("#b101"), Environment()) == 5


def test_eval_nat_rejects_formulas():
    with pytest.raises(SortError):
        eval_nat(Eq(Zero(), Zero()), Environment())


def test_eval_bool_basics():
    e = Environment()
    assert eval_bool(Eq(Zero(), Succ(Zero())), e, QUANTIFIER_FREE) is False
    assert eval_bool(Forall("x", Eq(Plus(x, Zero()), x)), e, Bounded(5)) is True
    assert eval_bool(Exists("y", Eq(Succ(y), Zero())), e, Bounded(100)) is False


def test_quantifier_free_strategy_refuses_binders():
    with pytest.raises(QuantifierEncountered):
        eval_bool(Forall("x", Eq(x, x)), Environment(), QUANTIFIER_FREE)


def test_override():
    e = Environment()
    assert override(e, "x", 3)["x"] == 3
    assert override(override(e, "x", 3), "x", 5)["x"] == 5
    assert override(e, "x", 3)["y"] == 0


def test_environment_literals():
    e = parse_environment("x=3, y=4")
    assert e["x"] == 3 and e["y"] == 4 and e["w"] == 0
    assert parse_environment("")["anything"] == 0
    with pytest.raises(ParseError):
        parse_environment("x=")
    with pytest.raises(ValueError):
        Environment({"x": -1})


def test_de_morgan(rng):
    for _ in range(500):
        p = random_matrix(rng, ["x", "y"], 2)
        q = random_matrix(rng, ["x", "y"], 2)
        e = Environment({"x": rng.randint(0, 3), "y": rng.randint(0, 3)})
        assert eval_bool(Not(And(p, q)), e) == eval_bool(Or(Not(p), Not(q)), e)


def test_axiom_suite_in_standard_model():
    e = Environment()
    for vx in range(51):
        ex = e.override("x", vx)
        assert eval_bool(Not(Eq(Succ(x), Zero())), ex)
        assert eval_bool(Eq(Plus(x, Zero()), x), ex)
        assert eval_bool(Eq(Times(x, Zero()), Zero()), ex)
        for vy in range(51):
            exy = ex.override("y", vy)
            assert eval_bool(Implies(Eq(Succ(x), Succ(y)), Eq(x, y)), exy)
            assert eval_bool(Eq(Plus(x, Succ(y)), Succ(Plus(x, y))), exy)
            assert eval_bool(Eq(Times(x, Succ(y)), Plus(Times(x, y), x)), exy)


def test_predecessor_axiom_bounded():
    body = Or(Eq(x, Zero()), Exists("y", Eq(Succ(y), x)))
    for vx in range(51):
        assert eval_bool(body, Environment({"x": vx}), Bounded(51))


def test_bound_monotonicity():
    witness_at_7 = Exists("x", Eq(x, Succ(Succ(Succ(Succ(Succ(Succ(Succ(Zero())))))))))
    e = Environment()
    assert not eval_bool(witness_at_7, e, Bounded(5))
    assert eval_bool(witness_at_7, e, Bounded(7))
    for b in range(8, 20):
        assert eval_bool(witness_at_7, e, Bounded(b))
    falsified_at_7 = Forall("x", Not(Eq(x, Succ(Succ(Succ(Succ(Succ(Succ(Succ(Zero()))))))))))
    assert eval_bool(falsified_at_7, e, Bounded(5))
    assert not eval_bool(falsified_at_7, e, Bounded(7))
    for b in range(8, 20):
        assert not eval_bool(falsified_at_7, e, Bounded(b))
