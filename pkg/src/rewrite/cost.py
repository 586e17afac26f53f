from functools import lru_cache

from ..expr.evaluator import postorder
from ..models.expr import Binary, Expr, Rotate


@lru_cache(maxsize=1 << 16)
def cost(e: Expr) -> int:
    """Operator nodes of `e` with identical subtrees counted once."""
    return sum(1 for node in postorder(e) if isinstance(node, (Rotate, Binary)))
