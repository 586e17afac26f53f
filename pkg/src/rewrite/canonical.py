"""
AC-canonical form.

ALPHA, BETA and GAMMA are associative and commutative, so a chain of one
operator is flattened into its operand list, the operands are sorted and
the chain is rebuilt left-nested. Constants sort first by value, then
variables by name, then compound nodes by operator rank and their own
operands.
"""
from functools import lru_cache, reduce
from typing import List, Tuple

from ..models.expr import Alpha, Beta, Binary, Const, Expr, Gamma, Rotate, Var

_RANKS = {Rotate: 0, Alpha: 1, Beta: 2, Gamma: 3}


def flatten(e: Expr) -> List[Expr]:
    """Operands of the maximal chain of `e`'s operator rooted at `e`, left to right."""
    if not isinstance(e, Binary):
        return [e]
    operator = type(e)
    operands = []
    stack = [e]
    while stack:
        node = stack.pop()
        if type(node) is operator:
            stack.append(node.right)
            stack.append(node.left)
        else:
            operands.append(node)
    return operands


def build_chain(operator, operands: List[Expr]) -> Expr:
    return reduce(operator, operands)


@lru_cache(maxsize=1 << 16)
def sort_key(e: Expr) -> Tuple:
    if isinstance(e, Const):
        return (0, e.value)
    if isinstance(e, Var):
        return (1, e.name)
    if isinstance(e, Rotate):
        return (2, _RANKS[Rotate], sort_key(e.child))
    return (2, _RANKS[type(e)], tuple(sort_key(operand) for operand in flatten(e)))


@lru_cache(maxsize=1 << 16)
def canonicalize(e: Expr) -> Expr:
    """Flatten, sort and left-nest every AC chain; idempotent."""
    if isinstance(e, (Const, Var)):
        return e
    if isinstance(e, Rotate):
        child = canonicalize(e.child)
        return e if child is e.child else Rotate(child)
    operands = sorted((canonicalize(operand) for operand in flatten(e)), key=sort_key)
    return build_chain(type(e), operands)
