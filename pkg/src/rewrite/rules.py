"""
Rewrite-rule catalog.

Rules are written as "lhs -> rhs" in the expression syntax; identifiers are
pattern variables. The catalog order is the order rules are tried in: cheap
constant reductions first, factoring last. Every rule is checked for
soundness over all assignments of its variables when the catalog is built.
"""
from functools import lru_cache
from typing import Dict, Tuple

from ..expr.evaluator import free_vars
from ..expr.parser import parse
from ..models.expr import Var
from ..models.rule import RewriteRule
from ..models.truth_table import Equal
from ..truthtab.tables import equivalent
from ..utils.exceptions import ParseError, RuleError
from ..utils.logger import CustomLogger
from .canonical import canonicalize

logger = CustomLogger("RewriteRules")

# name, family, rule text, law reference
RULE_DEFINITIONS: Tuple[Tuple[str, str, str, str], ...] = (
    ("fold-rotate-0", "constant folding", "~0 -> 2", "ROTATE table"),
    ("fold-rotate-1", "constant folding", "~1 -> 0", "ROTATE table"),
    ("fold-rotate-2", "constant folding", "~2 -> 1", "ROTATE table"),

    ("bounded-alpha", "boundedness", "x*0 -> 0", "boundedness: x*0 = 0"),
    ("bounded-beta", "boundedness", "x+1 -> 1", "boundedness: x+1 = 1"),
    ("bounded-gamma", "boundedness", "x@2 -> 2", "boundedness: x@2 = 2"),

    ("identity-alpha", "identity", "x*2 -> x", "identity: x*2 = x"),
    ("identity-beta", "identity", "x+0 -> x", "identity: x+0 = x"),
    ("identity-gamma", "identity", "x@1 -> x", "identity: x@1 = x"),

    ("idempotent-alpha", "idempotency", "x*x -> x", "idempotency: x*x = x"),
    ("idempotent-beta", "idempotency", "x+x -> x", "idempotency: x+x = x"),
    ("idempotent-gamma", "idempotency", "x@x -> x", "idempotency: x@x = x"),

    ("involution", "involution", "~~~x -> x", "involution: ~~~x = x"),

    ("fusion-identity", "selector fusion", "x*1@~~x*1+2 -> x", "reconstruction of x"),
    ("fusion-rotate", "selector fusion", "~x*1@x*1+2 -> ~x", "reconstruction of ~x"),
    ("fusion-rotate2", "selector fusion", "~~x*1@~x*1+2 -> ~~x", "reconstruction of ~~x"),
    ("fusion-reverse", "selector fusion", "~(~x*1@~~x*1+2) -> x*1@~x*1+2",
     "reconstruction of the reverse"),
    ("fusion-rotate-reverse", "selector fusion", "~(x*1@~x*1+2) -> ~~x*1@x*1+2",
     "reconstruction of the rotated reverse"),
    ("fusion-rotate2-reverse", "selector fusion", "~(~~x*1@x*1+2) -> ~x*1@~~x*1+2",
     "reconstruction of the twice-rotated reverse"),

    ("complement-alpha", "complementation", "x*~x*~~x -> 0", "complementation: x*~x*~~x = 0"),
    ("complement-beta", "complementation", "x+~x+~~x -> 1", "complementation: x+~x+~~x = 1"),
    ("complement-gamma", "complementation", "x@~x@~~x -> 2", "complementation: x@~x@~~x = 2"),
    ("complement-selector", "complementation", "x*1@~x*1@~~x*1 -> 0",
     "selector complementation: x*1@~x*1@~~x*1 = 0"),
    ("complement-selector-payload", "complementation", "x*1+y@~x*1+y@~~x*1+y -> y",
     "selector complementation with a shared payload"),

    ("demorgan-alpha", "De Morgan", "~(x*y) -> ~x@~y", "De Morgan: ~(x*y) = ~x@~y"),
    ("demorgan-beta", "De Morgan", "~(x+y) -> ~x*~y", "De Morgan: ~(x+y) = ~x*~y"),
    ("demorgan-gamma", "De Morgan", "~(x@y) -> ~x+~y", "De Morgan: ~(x@y) = ~x+~y"),

    ("factor-beta-alpha", "distributivity", "x*y+x*z -> x*(y+z)",
     "distributivity: x*(y+z) = x*y+x*z"),
    ("factor-gamma-beta", "distributivity", "(x+y)@(x+z) -> x+(y@z)",
     "distributivity: x+(y@z) = (x+y)@(x+z)"),
    ("factor-alpha-gamma", "distributivity", "(x@y)*(x@z) -> x@(y*z)",
     "distributivity: x@(y*z) = (x@y)*(x@z)"),
)


def make_rule(name: str, family: str, text: str, law_ref: str) -> RewriteRule:
    """Parse and check one rule; raises RuleError if it is malformed or unsound."""
    sides = text.split('->')
    if len(sides) != 2:
        raise RuleError(f"Rule '{name}' must have the form 'lhs -> rhs'", name)
    try:
        lhs, rhs = (canonicalize(parse(side)) for side in sides)
    except ParseError as e:
        raise RuleError(f"Rule '{name}' does not parse: {e.message}", name)
    if isinstance(lhs, Var):
        raise RuleError(f"Rule '{name}' has a bare variable on the left", name)
    unbound = set(free_vars(rhs)) - set(free_vars(lhs))
    if unbound:
        raise RuleError(f"Rule '{name}' introduces {sorted(unbound)} on the right", name)
    result = equivalent(lhs, rhs)
    if not isinstance(result, Equal):
        raise RuleError(
            f"Rule '{name}' is unsound: {result.assignment} gives {result.va} and {result.vb}", name)
    return RewriteRule(name, family, lhs, rhs, law_ref)


@lru_cache(maxsize=None)
def rule_catalog() -> Tuple[RewriteRule, ...]:
    """All rewrite rules in the order they are tried."""
    rules = tuple(make_rule(*definition) for definition in RULE_DEFINITIONS)
    logger.info(f"Built rule catalog with {len(rules)} rules")
    return rules


def rules_by_name() -> Dict[str, RewriteRule]:
    return {rule.name: rule for rule in rule_catalog()}


def lookup_rule(name: str) -> RewriteRule:
    rules = rules_by_name()
    if name not in rules:
        raise RuleError(f"Unknown rule '{name}'", name)
    return rules[name]
