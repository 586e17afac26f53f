"""
Pattern matching modulo associativity and commutativity.

Identifiers in a pattern are pattern variables, each matching one operand.
Chains of the same operator are matched as operand multisets. At the root
of a rule the target chain may be longer than the pattern; the unmatched
operands are carried over unchanged next to the rewritten part.
"""
from typing import Dict, FrozenSet, Iterable, Iterator, List, Optional, Tuple

from ..expr.evaluator import free_vars
from ..expr.transform import substitute
from ..models.expr import Binary, Const, Expr, Rotate, Var
from ..models.rule import RewriteRule
from .canonical import build_chain, canonicalize, flatten

Bindings = Dict[str, Expr]


def match(pattern: Expr, target: Expr, bindings: Bindings) -> Iterator[Bindings]:
    """Every extension of `bindings` under which `pattern` equals `target`."""
    if isinstance(pattern, Var):
        bound = bindings.get(pattern.name)
        if bound is None:
            yield {**bindings, pattern.name: target}
        elif bound == target:
            yield bindings
    elif isinstance(pattern, Const):
        if pattern == target:
            yield bindings
    elif isinstance(pattern, Rotate):
        if isinstance(target, Rotate):
            yield from match(pattern.child, target.child, bindings)
    elif isinstance(pattern, Binary) and type(target) is type(pattern):
        patterns = flatten(pattern)
        operands = flatten(target)
        if len(patterns) == len(operands):
            for extended, _ in match_operands(patterns, operands, bindings):
                yield extended


def match_operands(patterns: List[Expr], operands: List[Expr],
                   bindings: Bindings) -> Iterator[Tuple[Bindings, FrozenSet[int]]]:
    """Injective assignments of operands to patterns; yields bindings and the used operand positions."""
    # Structured patterns bind variables before bare variables are tried
    ordered = [p for p in patterns if not isinstance(p, Var)] + [p for p in patterns if isinstance(p, Var)]
    needed = [frozenset(free_vars(p)) for p in ordered]
    by_form: Optional[Dict[Expr, List[int]]] = None

    def positions_of(instance: Expr) -> List[int]:
        nonlocal by_form
        if by_form is None:
            by_form = {}
            for index, operand in enumerate(operands):
                by_form.setdefault(canonicalize(operand), []).append(index)
        return by_form.get(canonicalize(instance), [])

    def candidates(k: int, current: Bindings) -> Iterable[int]:
        # A fully bound pattern can only match operands with its canonical form
        if needed[k] <= current.keys():
            return positions_of(substitute(ordered[k], current))
        return range(len(operands))

    def step(k: int, current: Bindings, used: FrozenSet[int]):
        if k == len(ordered):
            yield current, used
            return
        tried = set()
        for index in candidates(k, current):
            operand = operands[index]
            if index in used or operand in tried:
                continue
            tried.add(operand)
            for extended in match(ordered[k], operand, current):
                yield from step(k + 1, extended, used | {index})

    yield from step(0, bindings, frozenset())


def apply_rule(rule: RewriteRule, target: Expr) -> Iterator[Expr]:
    """Rewrites of `target` at its root by `rule`, in match order."""
    lhs = rule.lhs
    if isinstance(lhs, Binary):
        if type(target) is not type(lhs):
            return
        patterns = flatten(lhs)
        operands = flatten(target)
        if len(patterns) > len(operands):
            return
        for bindings, used in match_operands(patterns, operands, {}):
            result = substitute(rule.rhs, bindings)
            rest = [operand for index, operand in enumerate(operands) if index not in used]
            yield build_chain(type(target), [result] + rest) if rest else result
    else:
        for bindings in match(lhs, target, {}):
            yield substitute(rule.rhs, bindings)
