"""
Exhaustive truth tables of expressions and the equivalence oracle.

Rows are ordered with the first variable most significant, so for two
variables the row index is 3 * x + y.
"""
from typing import Optional, Sequence

from src import config
from ..expr.evaluator import evaluate_columns, free_vars
from ..models.expr import Expr
from ..models.truth_table import Counterexample, Equal, EquivalenceResult, TruthTable, decode_row
from ..utils.decorators import log_timing
from ..utils.exceptions import UnboundVariableError
from ..utils.logger import CustomLogger
from ..utils.validators import check_arity

logger = CustomLogger("TruthTables")


@log_timing(logger)
def table_of(e: Expr, var_order: Optional[Sequence[str]] = None, limit: Optional[int] = None) -> TruthTable:
    """Evaluate `e` on every row of `var_order` (default: its sorted free variables)."""
    names = tuple(free_vars(e) if var_order is None else var_order)
    check_arity(len(names), limit or config.ARITY_LIMIT)
    missing = [name for name in free_vars(e) if name not in names]
    if missing:
        raise UnboundVariableError(missing[0])
    outputs = evaluate_columns(e, names)
    return TruthTable(len(names), tuple(outputs), names)


def realizes(e: Expr, table: TruthTable) -> bool:
    """Whether `e` computes `table` over the table's own variables."""
    try:
        return table_of(e, table.var_names, limit=max(table.arity, 1)).outputs == table.outputs
    except UnboundVariableError:
        return False


def equivalent(a: Expr, b: Expr, limit: Optional[int] = None) -> EquivalenceResult:
    """Compare `a` and `b` over the union of their free variables; report the least differing row."""
    names = tuple(sorted(set(free_vars(a)) | set(free_vars(b))))
    check_arity(len(names), limit or config.ARITY_LIMIT)
    left = evaluate_columns(a, names)
    right = evaluate_columns(b, names)
    if left == right:
        return Equal()
    index = next(i for i, (va, vb) in enumerate(zip(left, right)) if va != vb)
    env = tuple(zip(names, decode_row(index, len(names))))
    logger.debug(f"Expressions differ at row {index}: {env}")
    return Counterexample(env, left[index], right[index])
