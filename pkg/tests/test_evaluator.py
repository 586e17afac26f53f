from itertools import product

import pytest

from src.algebra.operators import alpha, beta, gamma, rotate
from src.expr import evaluate, evaluate_columns, free_vars, parse, postorder, substitute
from src.expr.evaluator import variable_column
from src.models.expr import Alpha, Beta, Const, Gamma, Rotate, Var
from src.models.trit import Trit
from src.utils.exceptions import UnboundVariableError, ValidationError


@pytest.mark.parametrize("text, env, expected", [
    ("~0", {}, 2),
    ("~~0", {}, 1),
    ("1*2+0@1", {}, 1),
    ("1+0*0", {}, 1),
    ("x*y", {'x': 2, 'y': 1}, 1),
    ("x@y", {'x': 0, 'y': 2}, 2),
    ("~x*1+2@~~x*1", {'x': 1}, 2),
    ("x", {'x': '2'}, 2),
])
def test_evaluate(text, env, expected):
    assert evaluate(parse(text), env) == expected


def test_evaluate_returns_trits():
    assert evaluate(parse("x+y"), {'x': 0, 'y': 0}) is Trit.ZERO


def test_unbound_variable():
    with pytest.raises(UnboundVariableError) as exc_info:
        evaluate(parse("x*y"), {'x': 1})
    assert exc_info.value.name == 'y'


def test_invalid_assignment_value():
    with pytest.raises(ValidationError):
        evaluate(parse("x"), {'x': 3})


def test_extra_bindings_are_ignored():
    assert evaluate(parse("x"), {'x': 1, 'unused': 2}) == 1


def test_evaluation_is_compositional(random_expr):
    ops = {Alpha: alpha, Beta: beta, Gamma: gamma}
    for _ in range(200):
        e = random_expr(depth=5)
        for env in ({'x': a, 'y': b, 'z': c} for a, b, c in product(range(3), repeat=3)):
            if isinstance(e, Rotate):
                assert evaluate(e, env) == rotate(evaluate(e.child, env))
            elif type(e) in ops:
                assert evaluate(e, env) == ops[type(e)](evaluate(e.left, env), evaluate(e.right, env))


def test_free_vars_sorted_and_distinct():
    assert free_vars(parse("z*x@~x+y")) == ['x', 'y', 'z']
    assert free_vars(parse("~1@2")) == []


def test_postorder_visits_shared_nodes_once():
    e = parse("~x*1@~x*1")
    order = postorder(e)
    assert order[-1] == e
    assert len(order) == len(set(order)) == 5
    assert order.index(Var('x')) < order.index(Rotate(Var('x')))


def test_variable_columns():
    assert variable_column(0, 2) == bytes([0, 0, 0, 1, 1, 1, 2, 2, 2])
    assert variable_column(1, 2) == bytes([0, 1, 2, 0, 1, 2, 0, 1, 2])


def test_columns_agree_with_pointwise_evaluation(random_expr):
    names = ('x', 'y', 'z')
    for _ in range(100):
        e = random_expr(depth=6)
        columns = evaluate_columns(e, names)
        rows = list(product(range(3), repeat=3))
        assert list(columns) == [evaluate(e, dict(zip(names, row))) for row in rows]


def test_columns_need_every_variable():
    with pytest.raises(UnboundVariableError):
        evaluate_columns(parse("x+y"), ('x',))


def test_substitute_is_simultaneous():
    e = substitute(parse("x*y"), {'x': Var('y'), 'y': Const(2)})
    assert e == Alpha(Var('y'), Const(2))
    assert substitute(parse("~z"), {'x': Const(0)}) == parse("~z")
