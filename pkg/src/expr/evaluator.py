from typing import Dict, List, Sequence

from ..algebra.operators import DYADIC_TABLES, ROTATE_TABLE
from ..models.expr import Assignment, Binary, Const, Expr, Rotate, Var
from ..models.trit import TRITS, Trit
from ..utils.exceptions import UnboundVariableError

_ROTATE_BYTES = bytes.maketrans(bytes(range(3)), bytes(ROTATE_TABLE))


def postorder(e: Expr) -> List[Expr]:
    """Distinct nodes of `e`, every child before its parents."""
    order: List[Expr] = []
    seen = set()
    stack = [(e, False)]
    while stack:
        node, expanded = stack.pop()
        if expanded:
            order.append(node)
            continue
        if node in seen:
            continue
        seen.add(node)
        stack.append((node, True))
        for child in reversed(node.children()):
            if child not in seen:
                stack.append((child, False))
    return order


def evaluate(e: Expr, env: Assignment) -> Trit:
    """Value of `e` under `env`; every free variable must be bound."""
    values: Dict[Expr, int] = {}
    for node in postorder(e):
        if isinstance(node, Const):
            values[node] = node.value
        elif isinstance(node, Var):
            if node.name not in env:
                raise UnboundVariableError(node.name)
            values[node] = Trit.of(env[node.name])
        elif isinstance(node, Rotate):
            values[node] = ROTATE_TABLE[values[node.child]]
        else:
            table = DYADIC_TABLES[node.symbol]
            values[node] = table[3 * values[node.left] + values[node.right]]
    return TRITS[values[e]]


def free_vars(e: Expr) -> List[str]:
    """Distinct variable names of `e`, sorted."""
    return sorted({node.name for node in postorder(e) if isinstance(node, Var)})


def variable_column(position: int, arity: int) -> bytes:
    """Input column of variable `position` across all 3^arity rows, first variable most significant."""
    block = 3 ** (arity - 1 - position)
    return bytes((index // block) % 3 for index in range(3 ** arity))


def evaluate_columns(e: Expr, var_order: Sequence[str]) -> bytes:
    """
    Outputs of `e` over every row of `var_order`, one byte per row.

    Each distinct node is evaluated once over the whole column.
    """
    arity = len(var_order)
    rows = 3 ** arity
    positions = {name: k for k, name in enumerate(var_order)}
    columns: Dict[Expr, bytes] = {}
    for node in postorder(e):
        if isinstance(node, Const):
            columns[node] = bytes([node.value]) * rows
        elif isinstance(node, Var):
            if node.name not in positions:
                raise UnboundVariableError(node.name)
            columns[node] = variable_column(positions[node.name], arity)
        elif isinstance(node, Rotate):
            columns[node] = columns[node.child].translate(_ROTATE_BYTES)
        elif isinstance(node, Binary):
            table = DYADIC_TABLES[node.symbol]
            columns[node] = bytes(
                table[3 * a + b] for a, b in zip(columns[node.left], columns[node.right]))
    return columns[e]
