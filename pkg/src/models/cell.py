from dataclasses import dataclass
from typing import Tuple

from .expr import Expr
from .truth_table import TruthTable


@dataclass(frozen=True)
class StdCell:
    """A named library operator with its reference table and final expression"""
    name: str
    arity: int
    reference_table: TruthTable
    expr: Expr
    # Hand-derivation steps, raw regular formula first; all equivalent to expr
    derivation: Tuple[Expr, ...] = ()
    # Other known forms of the same function
    alternates: Tuple[Expr, ...] = ()
    description: str = ""
