import pytest

from src.expr import parse, pretty_print
from src.models.expr import Const, Var
from src.models.truth_table import Equal, TruthTable
from src.rewrite import canonicalize, cost, lookup_rule, rewrite_pass, rule_catalog, simplify
from src.rewrite import matching as matching_module
from src.rewrite import simplifier as simplifier_module
from src.rewrite.matching import apply_rule, match
from src.rewrite.resynthesis import best_form, cube_cover, resynthesize_cones
from src.rewrite.rules import RULE_DEFINITIONS, make_rule
from src.synth import synthesize
from src.truthtab import equivalent, realizes, table_of
from src.utils.exceptions import RuleError, ValidationError

TNAND = "(x*1@y*1)+2@(~~x+~~y)*1"


@pytest.mark.parametrize("text, expected", [
    ("y*x", "x*y"),
    ("x*0", "0*x"),
    ("z@(y@x)", "x@y@z"),
    ("~(y+x)", "~(x+y)"),
])
def test_canonicalize(text, expected):
    assert canonicalize(parse(text)) == parse(expected)


def test_canonical_form_is_idempotent_and_sound(random_expr):
    for _ in range(200):
        e = random_expr(depth=6)
        c = canonicalize(e)
        assert canonicalize(c) == c
        assert equivalent(e, c) == Equal()


def test_commuted_chains_share_a_canonical_form():
    assert canonicalize(parse("(x+~y)+z*1")) == canonicalize(parse("z*1+(~y+x)"))


@pytest.mark.parametrize("text, expected", [
    ("x", 0),
    ("2", 0),
    ("~x", 1),
    ("~x*1", 2),
    ("~~x*1@x*1+2", 6),
    ("~x*1@~x*1", 3),
    (TNAND, 11),
])
def test_cost_counts_distinct_operator_nodes(text, expected):
    assert cost(parse(text)) == expected


def test_rule_catalog():
    rules = rule_catalog()
    assert len(rules) == len(RULE_DEFINITIONS)
    assert rules[0].name == "fold-rotate-0"
    assert len({rule.name for rule in rules}) == len(rules)


@pytest.mark.parametrize("name, family", [
    ("bounded-alpha", "boundedness"),
    ("involution", "involution"),
    ("fusion-rotate-reverse", "selector fusion"),
    ("complement-selector", "complementation"),
    ("demorgan-gamma", "De Morgan"),
    ("factor-beta-alpha", "distributivity"),
])
def test_lookup_rule(name, family):
    rule = lookup_rule(name)
    assert rule.family == family
    assert equivalent(rule.lhs, rule.rhs) == Equal()


@pytest.mark.parametrize("name, lhs, rhs", [
    ("identity-gamma", "x@1", "x"),
    ("demorgan-alpha", "~(x*y)", "~x@~y"),
    ("fusion-identity", "x*1 @ ~~x*1+2", "x"),
])
def test_catalog_rule_sides(name, lhs, rhs):
    rule = lookup_rule(name)
    assert rule.lhs == canonicalize(parse(lhs))
    assert rule.rhs == canonicalize(parse(rhs))


def test_unknown_rule():
    with pytest.raises(RuleError):
        lookup_rule("no-such-rule")


def test_distributivity_is_only_used_for_factoring():
    expansion = canonicalize(parse("x+y*z"))
    for rule in rule_catalog():
        assert rule.lhs != expansion
        if rule.family == "distributivity":
            assert cost(rule.rhs) < cost(rule.lhs)


@pytest.mark.parametrize("text", [
    "x+(y*z) -> (x+y)*(x+z)",
    "x*y -> x",
])
def test_unsound_rules_are_rejected(text):
    with pytest.raises(RuleError) as exc_info:
        make_rule("bad", "test", text, "none")
    assert "unsound" in str(exc_info.value)


@pytest.mark.parametrize("text", ["x -> x*2", "x*0 -> y", "x*0", "x*(0 -> 0"])
def test_malformed_rules_are_rejected(text):
    with pytest.raises(RuleError):
        make_rule("bad", "test", text, "none")


def test_match_binds_pattern_variables():
    bindings = list(match(parse("~x"), parse("~(a*b)"), {}))
    assert bindings == [{'x': parse("a*b")}]
    assert list(match(parse("x*x"), parse("a*b"), {})) == []


def test_long_chains_look_up_bound_operands(mocker):
    rule = lookup_rule("complement-selector")
    terms = [f"v{i}*1" for i in range(60)]
    target = canonicalize(parse("@".join(terms)))
    spy = mocker.spy(matching_module, "match")
    assert list(apply_rule(rule, target)) == []
    assert spy.call_count < 1000

    target = canonicalize(parse("@".join(terms) + "@~v7*1@~~v7*1"))
    results = list(apply_rule(rule, target))
    rest = [term for term in terms if term != "v7*1"]
    assert [canonicalize(result) for result in results] == [canonicalize(parse("0@" + "@".join(rest)))]


def test_apply_rule_keeps_unmatched_operands():
    rule = lookup_rule("bounded-alpha")
    results = list(apply_rule(rule, canonicalize(parse("a*0*b"))))
    assert results
    assert all(equivalent(result, Const(0)) == Equal() for result in results)


def test_rewrite_pass_records_trace():
    trace = []
    assert rewrite_pass(canonicalize(parse("x*0")), trace=trace) == Const(0)
    assert trace[0].rule == "bounded-alpha"
    assert (trace[0].cost_before, trace[0].cost_after) == (1, 0)


@pytest.mark.parametrize("text, expected", [
    ("x*0", "0"),
    ("x*1@~~x*1+2", "x"),
    ("x*1@~x*1@~~x*1", "0"),
    ("y*x", "x*y"),
    ("~~~x", "x"),
])
def test_simplify_small_cases(text, expected):
    assert simplify(parse(text)) == parse(expected)


def test_simplify_reaches_nand_cost():
    raw = synthesize(TruthTable(2, (2, 2, 2, 2, 1, 1, 2, 1, 0), ('x', 'y')))
    result = simplify(raw)
    assert cost(raw) > 11
    assert equivalent(result, parse(TNAND)) == Equal()
    assert cost(result) <= 11


def test_simplify_never_increases_cost(random_expr):
    for _ in range(40):
        e = random_expr(depth=5)
        result = simplify(e, budget=4)
        assert cost(result) <= cost(e)
        assert equivalent(result, e) == Equal()


def test_simplify_trace_lists_cost_reductions():
    trace = []
    simplify(parse("x*1@~x*1@~~x*1@y"), trace=trace)
    assert trace
    assert all(step.cost_after < step.cost_before for step in trace)
    assert "cost" in str(trace[0])


@pytest.mark.parametrize("budget", [0, -3])
def test_simplify_rejects_empty_budget(budget):
    with pytest.raises(ValidationError):
        simplify(parse("x"), budget=budget)


def test_budget_defaults_from_config(mocker):
    mocker.patch("src.config.SIMPLIFY_BUDGET", 1)
    spy = mocker.spy(simplifier_module, "rewrite_pass")
    simplify(parse("x*1@~x*1@~~x*1@(y+~y)*1+z"))
    assert spy.call_count == 1


@pytest.mark.parametrize("outputs, ceiling", [
    ((2, 1, 0), 6),
    ((2, 0, 0), 2),
    ((2, 2, 0), 3),
    ((0, 2, 1), 5),
    ((2, 0, 1), 1),
    ((1, 2, 0), 2),
    ((0, 1, 2), 0),
])
def test_monadic_best_forms(outputs, ceiling):
    e = best_form(outputs, ('x',))
    assert table_of(e, ('x',)).outputs == outputs
    assert cost(e) <= ceiling


def test_best_form_drops_unused_variables():
    e = best_form((2, 0, 1) * 3, ('x', 'y'))
    assert e == parse("~y")


def test_best_form_for_and():
    assert cost(best_form((0, 0, 0, 0, 1, 1, 0, 1, 2), ('x', 'y'))) == 1


def test_cube_cover_realizes_random_tables(random_table):
    for _ in range(40):
        table = random_table(2)
        assert realizes(cube_cover(table), table)


def test_resynthesis_keeps_expensive_cones_only_if_cheaper():
    e = parse("(x*1+2@~x*1+1@~~x*1+0)@z")
    result = resynthesize_cones(e)
    assert cost(result) < cost(e)
    assert equivalent(result, e) == Equal()
    assert resynthesize_cones(Var('x')) == Var('x')


def test_pretty_output_of_simplified_inverter_parses():
    result = simplify(parse("x*1+2@~x*1+1@~~x*1+0"))
    assert parse(pretty_print(result)) == result
    assert cost(result) <= 6
