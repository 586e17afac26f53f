from dataclasses import dataclass

from .expr import Expr


@dataclass(frozen=True)
class RewriteRule:
    """Oriented lhs -> rhs pair; identifiers in lhs are pattern variables"""
    name: str
    family: str
    lhs: Expr
    rhs: Expr
    law_ref: str


@dataclass(frozen=True)
class TraceStep:
    """One accepted rewrite, with the cost of what it rewrote"""
    rule: str
    law_ref: str
    cost_before: int
    cost_after: int

    def __str__(self) -> str:
        return f"{self.rule} [{self.law_ref}] cost {self.cost_before} -> {self.cost_after}"
