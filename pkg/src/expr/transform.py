from typing import Mapping, Sequence

from ..models.expr import Binary, Expr, Rotate, Var


def rebuild(node: Expr, children: Sequence[Expr]) -> Expr:
    """Same operator as `node` over new children; leaves come back unchanged."""
    if isinstance(node, Rotate):
        return node if children[0] is node.child else Rotate(children[0])
    if isinstance(node, Binary):
        left, right = children
        if left is node.left and right is node.right:
            return node
        return type(node)(left, right)
    return node


def substitute(e: Expr, mapping: Mapping[str, Expr]) -> Expr:
    """Replace variables simultaneously; names missing from `mapping` stay."""
    if isinstance(e, Var):
        return mapping.get(e.name, e)
    children = e.children()
    if not children:
        return e
    return rebuild(e, [substitute(child, mapping) for child in children])
