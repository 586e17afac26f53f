import random

import pytest

from src.models.expr import Alpha, Beta, Const, Gamma, Rotate, Var
from src.models.truth_table import TruthTable

BINARY_NODES = (Alpha, Beta, Gamma)


def make_random_expr(rng: random.Random, depth: int, names=('x', 'y', 'z')):
    """Random AST of at most `depth` levels over `names` and the constants."""
    if depth <= 0 or rng.random() < 0.25:
        if rng.random() < 0.3:
            return Const(rng.randrange(3))
        return Var(rng.choice(names))
    if rng.random() < 0.25:
        return Rotate(make_random_expr(rng, depth - 1, names))
    node = rng.choice(BINARY_NODES)
    return node(make_random_expr(rng, depth - 1, names), make_random_expr(rng, depth - 1, names))


def make_random_table(rng: random.Random, arity: int, names=('x', 'y', 'z', 'w')):
    return TruthTable(arity, tuple(rng.randrange(3) for _ in range(3 ** arity)), tuple(names[:arity]))


@pytest.fixture
def rng():
    return random.Random(20240917)


@pytest.fixture
def random_expr(rng):
    def factory(depth=4, names=('x', 'y', 'z')):
        return make_random_expr(rng, depth, names)
    return factory


@pytest.fixture
def random_table(rng):
    def factory(arity):
        return make_random_table(rng, arity)
    return factory
