from typing import List

from ..models.expr import Binary, Const, Expr, Rotate, Var


def _spine(e: Binary) -> List[Expr]:
    """Operands of a left-nested chain of one operator, leftmost first."""
    operands = []
    node = e
    while type(node) is type(e):
        operands.append(node.right)
        node = node.left
    operands.append(node)
    operands.reverse()
    return operands


def pretty_print(e: Expr) -> str:
    """Render `e` without spaces and with the fewest parentheses that parse back to `e`."""
    if isinstance(e, Const):
        return str(e.value)
    if isinstance(e, Var):
        return e.name
    if isinstance(e, Rotate):
        depth = 0
        node: Expr = e
        while isinstance(node, Rotate):
            depth += 1
            node = node.child
        inner = pretty_print(node)
        if node.precedence < Rotate.precedence:
            inner = f"({inner})"
        return '~' * depth + inner
    if isinstance(e, Binary):
        parts = []
        for position, operand in enumerate(_spine(e)):
            text = pretty_print(operand)
            # Left operand may share the precedence; later ones may not
            if operand.precedence < e.precedence or (position > 0 and operand.precedence <= e.precedence):
                text = f"({text})"
            parts.append(text)
        return e.symbol.join(parts)
    raise TypeError(f"Not an expression: {e!r}")
