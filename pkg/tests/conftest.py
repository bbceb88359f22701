import random

import pytest

from biforge.syntax import (
    And, Eq, Exists, Forall, Implies, Not, Or, Plus, Succ, Var, Zero,
)


def random_term(rng: random.Random, variables, depth: int):
    """Level-2 term with small successor chains."""
    r = rng.random()
    if depth <= 0 or r < 0.35:
        if variables and rng.random() < 0.7:
            t = Var(rng.choice(variables))
        else:
            t = Zero()
    else:
        t = Plus(random_term(rng, variables, depth - 1),
                 random_term(rng, variables, depth - 1))
    for _ in range(rng.randint(0, 3)):
        t = Succ(t)
    return t


def random_matrix(rng: random.Random, variables, depth: int):
    """Quantifier-free level-2 formula."""
    r = rng.random()
    if depth <= 0 or r < 0.4:
        return Eq(random_term(rng, variables, 1), random_term(rng, variables, 1))
    if r < 0.55:
        return And(random_matrix(rng, variables, depth - 1),
                   random_matrix(rng, variables, depth - 1))
    if r < 0.7:
        return Or(random_matrix(rng, variables, depth - 1),
                  random_matrix(rng, variables, depth - 1))
    if r < 0.85:
        return Not(random_matrix(rng, variables, depth - 1))
    return Implies(random_matrix(rng, variables, depth - 1),
                   random_matrix(rng, variables, depth - 1))


def random_sentence(rng: random.Random, max_quantifiers: int = 3):
    """Closed level-2 sentence with at most ``max_quantifiers`` binders."""
    n = rng.randint(1, max_quantifiers)
    names = ["x", "y", "w"][:n]
    body = random_matrix(rng, names, 2)
    for v in reversed(names):
        body = (Forall if rng.random() < 0.5 else Exists)(v, body)
    return body


@pytest.fixture
def rng():
    return random.Random(0xB1F0)
