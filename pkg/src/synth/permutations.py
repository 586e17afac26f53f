"""
Two-selector reconstructions of the six bijections of {0, 1, 2}.

None of the dyadic operators combined with constants yields a permutation,
so each one is rebuilt from two selector terms over the same input.
"""
from functools import lru_cache

from ..expr.parser import parse
from ..expr.transform import substitute
from ..models.expr import Expr, Var
from ..models.trit import PermOp

RECONSTRUCTIONS = {
    PermOp.IDENTITY: "x*1@~~x*1+2",
    PermOp.ROTATE: "~x*1@x*1+2",
    PermOp.ROTATE2: "~~x*1@~x*1+2",
    PermOp.REVERSE: "x*1@~x*1+2",
    PermOp.ROTATE_REVERSE: "~~x*1@x*1+2",
    PermOp.ROTATE2_REVERSE: "~x*1@~~x*1+2",
}


@lru_cache(maxsize=None)
def _template(p: PermOp) -> Expr:
    return parse(RECONSTRUCTIONS[p])


def reconstruction(p: PermOp, variable: str = 'x') -> Expr:
    """Expression over `variable` computing the bijection `p`."""
    template = _template(p)
    if variable == 'x':
        return template
    return substitute(template, {'x': Var(variable)})
