import pytest

from src.expr.evaluator import evaluate
from src.expr.parser import parse, tokenize, try_parse
from src.expr.printer import pretty_print
from src.models.expr import Alpha, Beta, Const, Gamma, Rotate, Var
from src.utils.exceptions import ParseError

x, y, z = Var('x'), Var('y'), Var('z')


@pytest.mark.parametrize("text, expected", [
    ("0", Const(0)),
    ("x", x),
    ("~x", Rotate(x)),
    ("~~x", Rotate(Rotate(x))),
    ("x*y", Alpha(x, y)),
    ("x+y*z", Beta(x, Alpha(y, z))),
    ("x@y+z", Gamma(x, Beta(y, z))),
    ("x*y*z", Alpha(Alpha(x, y), z)),
    ("x@y@z", Gamma(Gamma(x, y), z)),
    ("~x*1", Alpha(Rotate(x), Const(1))),
    ("~(x*1)", Rotate(Alpha(x, Const(1)))),
    ("(x+y)*1", Alpha(Beta(x, y), Const(1))),
    ("x*(y*z)", Alpha(x, Alpha(y, z))),
    ("  x  +\t2 ", Beta(x, Const(2))),
    ("in_1*A2", Alpha(Var('in_1'), Var('A2'))),
])
def test_parse(text, expected):
    assert parse(text) == expected


def test_selector_term_shape():
    assert parse("~x*1+2") == Beta(Alpha(Rotate(x), Const(1)), Const(2))


@pytest.mark.parametrize("text, offset", [
    ("", 0),
    ("   ", 0),
    ("x**y", 2),
    ("(x", 2),
    ("x)", 1),
    ("x$", 1),
    ("3", 0),
    ("x+12", 2),
    ("x y", 2),
    ("é+x", 0),
    ("x+é", 2),
    ("~", 1),
    ("\u00a0x$", 3),
])
def test_parse_errors_report_byte_offsets(text, offset):
    with pytest.raises(ParseError) as exc_info:
        parse(text)
    assert exc_info.value.offset == offset
    assert f"at byte {offset}" in str(exc_info.value)


def test_tokens_carry_byte_offsets():
    # the non-breaking space is two bytes in UTF-8
    tokens = tokenize("\u00a0x+1")
    assert [(t.kind, t.text, t.offset) for t in tokens] == [
        ('name', 'x', 2), ('op', '+', 3), ('number', '1', 4), ('end', '', 5)]


def test_try_parse():
    assert try_parse("x@") is None
    assert try_parse("x@y") == Gamma(x, y)


@pytest.mark.parametrize("e, text", [
    (Gamma(Beta(Alpha(Rotate(x), Const(1)), Const(2)), y), "~x*1+2@y"),
    (Alpha(Beta(x, y), Const(1)), "(x+y)*1"),
    (Alpha(x, Alpha(y, z)), "x*(y*z)"),
    (Gamma(Gamma(x, y), z), "x@y@z"),
    (Rotate(Rotate(Gamma(x, y))), "~~(x@y)"),
    (Rotate(Rotate(Rotate(x))), "~~~x"),
    (Beta(x, Gamma(y, z)), "x+(y@z)"),
])
def test_pretty_print(e, text):
    assert pretty_print(e) == text
    assert parse(text) == e


def test_random_round_trips(random_expr):
    for _ in range(1000):
        e = random_expr(depth=8)
        text = pretty_print(e)
        assert parse(text) == e, text
        assert ' ' not in text


def test_deeply_nested_parentheses():
    depth = 400
    assert parse("(" * depth + "x" + ")" * depth) == x
    assert parse("~(" * depth + "x" + ")" * depth) == parse("~" * depth + "x")


def test_deep_right_nested_chain():
    depth = 400
    e = parse("x*(" * depth + "y" + ")" * depth)
    expected = y
    for _ in range(depth):
        expected = Alpha(x, expected)
    assert e == expected
    assert evaluate(e, {'x': 2, 'y': 1}) == 1
    assert parse(pretty_print(e)) == e


def test_deep_unbalanced_parentheses():
    depth = 400
    with pytest.raises(ParseError) as exc_info:
        parse("(" * depth + "x")
    assert exc_info.value.offset == depth + 1
    with pytest.raises(ParseError) as exc_info:
        parse("x" + ")" * depth)
    assert exc_info.value.offset == 1
