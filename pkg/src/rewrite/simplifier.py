from typing import Dict, List, Optional, Sequence

from src import config
from ..models.expr import Const, Expr, Rotate, Var
from ..models.rule import RewriteRule, TraceStep
from ..utils.decorators import log_timing
from ..utils.exceptions import ValidationError
from ..utils.logger import CustomLogger
from .canonical import build_chain, canonicalize, flatten
from .cost import cost
from .matching import apply_rule
from .resynthesis import form_key, resynthesize_cones
from .rules import rule_catalog

logger = CustomLogger("Simplifier")

RESYNTHESIS_STEP = "resynthesize-cones"
RESYNTHESIS_REF = "truth-table resynthesis"


def rewrite_pass(e: Expr, rules: Optional[Sequence[RewriteRule]] = None,
                 trace: Optional[List[TraceStep]] = None) -> Expr:
    """
    One innermost rewriting pass.

    Children are normalized before their parent. At each node the rules are
    tried in catalog order and a rewrite is kept only if it strictly lowers
    the node's cost; the node is retried until no rule applies.
    """
    rules = rule_catalog() if rules is None else rules
    memo: Dict[Expr, Expr] = {}

    def normalize_children(node: Expr) -> Expr:
        if isinstance(node, Rotate):
            return canonicalize(Rotate(normalize(node.child)))
        return canonicalize(build_chain(type(node), [normalize(operand) for operand in flatten(node)]))

    def improve(rule: RewriteRule, current: Expr) -> Optional[Expr]:
        before = cost(current)
        for candidate in apply_rule(rule, current):
            candidate = canonicalize(candidate)
            if not isinstance(candidate, (Const, Var)):
                candidate = normalize_children(candidate)
            if cost(candidate) < before:
                if trace is not None:
                    trace.append(TraceStep(rule.name, rule.law_ref, before, cost(candidate)))
                return candidate
        return None

    def normalize(node: Expr) -> Expr:
        if isinstance(node, (Const, Var)):
            return node
        if node in memo:
            return memo[node]
        current = normalize_children(node)
        changed = True
        while changed and not isinstance(current, (Const, Var)):
            changed = False
            for rule in rules:
                rewritten = improve(rule, current)
                if rewritten is not None:
                    current = rewritten
                    changed = True
                    break
        memo[node] = current
        memo[current] = current
        return current

    return normalize(e)


@log_timing(logger)
def simplify(e: Expr, budget: Optional[int] = None, trace: Optional[List[TraceStep]] = None) -> Expr:
    """
    Equivalent expression of no greater cost.

    Each pass canonicalizes, rewrites and resynthesizes small cones. Passes
    stop at the budget or when a pass fails to lower the cost. The cheapest
    expression seen is returned, ties going to the smaller printed text.
    """
    budget = config.SIMPLIFY_BUDGET if budget is None else budget
    if budget < 1:
        raise ValidationError(f"Budget must be at least 1, got {budget}")
    rules = rule_catalog()
    best = e
    current = e
    for number in range(1, budget + 1):
        rewritten = rewrite_pass(canonicalize(current), rules, trace)
        resynthesized = resynthesize_cones(rewritten)
        if trace is not None and cost(resynthesized) < cost(rewritten):
            trace.append(TraceStep(RESYNTHESIS_STEP, RESYNTHESIS_REF, cost(rewritten), cost(resynthesized)))
        candidate = canonicalize(resynthesized)
        for seen in (rewritten, resynthesized, candidate):
            if form_key(seen) < form_key(best):
                best = seen
        logger.debug(f"Pass {number}: cost {cost(current)} -> {cost(candidate)}")
        if cost(candidate) >= cost(current):
            break
        current = candidate
    return best
