"""
Regular-formula synthesis.

Every row of a truth table contributes one selector term

    (rot^c1(x1) + ... + rot^cn(xn)) * 1 + a

whose rotation counts equal the row's input values. The BETA of rotated
inputs is 0 only on that row, so the term yields the payload `a` there and
the GAMMA identity 1 everywhere else. GAMMA over all terms gives the table.
"""
from dataclasses import dataclass
from functools import reduce
from typing import List, Sequence, Tuple

from ..algebra.operators import alpha, beta, rotate
from ..models.expr import Alpha, Beta, Const, Expr, Gamma, Var, rotated
from ..models.trit import Trit
from ..models.truth_table import TruthTable
from ..utils.decorators import log_timing
from ..utils.exceptions import ValidationError
from ..utils.logger import CustomLogger

logger = CustomLogger("Synthesis")


@dataclass(frozen=True)
class SelectorTerm:
    rotations: Tuple[int, ...]
    payload: int

    def __post_init__(self):
        if any(c not in (0, 1, 2) for c in self.rotations):
            raise ValidationError(f"Rotation counts must be 0, 1 or 2, got {self.rotations}")
        object.__setattr__(self, 'rotations', tuple(self.rotations))
        object.__setattr__(self, 'payload', int(Trit.of(self.payload)))

    def core(self, var_names: Sequence[str]) -> Expr:
        """BETA spine of the rotated inputs."""
        literals = [rotated(Var(name), c) for name, c in zip(var_names, self.rotations)]
        return reduce(Beta, literals)

    def expr(self, var_names: Sequence[str]) -> Expr:
        if len(var_names) != len(self.rotations):
            raise ValidationError(f"Expected {len(self.rotations)} variable names, got {len(var_names)}")
        return Beta(Alpha(self.core(var_names), Const(1)), Const(self.payload))

    def value(self, inputs: Sequence[int]) -> Trit:
        return selector_value(self.rotations, self.payload, inputs)


def selector_value(rotations: Sequence[int], payload: int, inputs: Sequence[int]) -> Trit:
    """Value of one selector term: the payload when every rotated input is 0, otherwise 1."""
    if len(inputs) != len(rotations):
        raise ValidationError(f"Expected {len(rotations)} inputs, got {len(inputs)}")
    # 0 is the BETA identity
    selector = Trit.ZERO
    for count, value in zip(rotations, inputs):
        literal = Trit.of(value)
        for _ in range(count):
            literal = rotate(literal)
        selector = beta(selector, literal)
    return beta(alpha(selector, 1), payload)


def selector_terms(table: TruthTable) -> List[SelectorTerm]:
    """One term per row, in row order."""
    return [SelectorTerm(inputs, value) for inputs, value in table.rows()]


@log_timing(logger)
def synthesize(table: TruthTable) -> Expr:
    """Regular formula of `table`: a left-nested GAMMA of its selector terms."""
    if table.arity == 0:
        return Const(table.outputs[0])
    terms = [term.expr(table.var_names) for term in selector_terms(table)]
    logger.debug(f"Synthesized {len(terms)} selector terms over {list(table.var_names)}")
    return reduce(Gamma, terms)
