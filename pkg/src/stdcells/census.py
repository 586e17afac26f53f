"""
Monadic coverage census.

Every form (m(x) op1 c1) op2 c2, with m a rotation count and each (op, c)
one of (@, 0), (*, 1), (+, 2), is tabulated. The 27 forms give 21 distinct
one-variable functions; the six they miss are exactly the bijections, which
the two-selector reconstructions supply.
"""
from dataclasses import dataclass
from itertools import product
from typing import Dict, Tuple

from ..algebra.operators import apply_perm
from ..models.expr import Alpha, Beta, Const, Expr, Gamma, Var, rotated
from ..models.trit import PermOp
from ..synth.permutations import reconstruction
from ..truthtab.tables import table_of
from ..utils.decorators import log_timing
from ..utils.logger import CustomLogger

logger = CustomLogger("Census")

STEPS = ((Gamma, 0), (Alpha, 1), (Beta, 2))

# Columns per rotation count, first operator inner, second outer, in STEPS order
REFERENCE_COLUMNS: Dict[int, Tuple[Tuple[int, int, int], ...]] = {
    0: ((0, 0, 2), (0, 0, 1), (2, 2, 2), (0, 0, 0), (0, 1, 1), (2, 1, 1), (2, 0, 2), (1, 1, 1), (2, 1, 2)),
    1: ((2, 0, 0), (1, 0, 0), (2, 2, 2), (0, 0, 0), (1, 0, 1), (1, 2, 1), (2, 2, 0), (1, 1, 1), (2, 2, 1)),
    # The (~~x+2)@0 column is (0, 2, 2); it has been printed elsewhere as (0, 0, 2)
    2: ((0, 2, 0), (0, 1, 0), (2, 2, 2), (0, 0, 0), (1, 1, 0), (1, 1, 2), (0, 2, 2), (1, 1, 1), (1, 2, 2)),
}


@dataclass(frozen=True)
class CensusEntry:
    rotations: int
    form: Expr
    outputs: Tuple[int, ...]
    reference: Tuple[int, ...]

    @property
    def matches_reference(self) -> bool:
        return self.outputs == self.reference


@dataclass(frozen=True)
class MonadicCensus:
    entries: Tuple[CensusEntry, ...]
    distinct: Tuple[Tuple[int, ...], ...]
    uncovered: Tuple[Tuple[int, ...], ...]
    uncovered_perms: Tuple[PermOp, ...]
    reconstructions: Dict[PermOp, bool]

    @property
    def columns_match(self) -> bool:
        return all(entry.matches_reference for entry in self.entries)

    @property
    def uncovered_are_permutations(self) -> bool:
        return len(self.uncovered_perms) == len(self.uncovered) == len(PermOp)

    @property
    def passed(self) -> bool:
        return (self.columns_match and len(self.distinct) == 21 and self.uncovered_are_permutations
                and all(self.reconstructions.values()))


def census_forms():
    """(rotation count, form) for all 27 constant-composed forms, in reference order."""
    x = Var('x')
    for rotations in range(3):
        for (first, c1), (second, c2) in product(STEPS, STEPS):
            yield rotations, second(first(rotated(x, rotations), Const(c1)), Const(c2))


@log_timing(logger)
def monadic_census() -> MonadicCensus:
    entries = []
    position = {m: 0 for m in range(3)}
    for rotations, form in census_forms():
        reference = REFERENCE_COLUMNS[rotations][position[rotations]]
        position[rotations] += 1
        outputs = table_of(form, ('x',)).outputs
        entries.append(CensusEntry(rotations, form, outputs, reference))

    distinct = tuple(sorted({entry.outputs for entry in entries}))
    uncovered = tuple(outputs for outputs in product(range(3), repeat=3) if outputs not in distinct)
    uncovered_perms = tuple(p for p in PermOp if p.images in uncovered)
    reconstructions = {
        p: table_of(reconstruction(p), ('x',)).outputs == tuple(apply_perm(p, v) for v in range(3))
        for p in PermOp
    }
    census = MonadicCensus(tuple(entries), distinct, uncovered, uncovered_perms, reconstructions)
    logger.info(f"Census: {len(distinct)} distinct functions, {len(uncovered)} uncovered")
    return census
