"""
The ternary law suite.

Twenty-five identities in nine families, each checked over every assignment
of its variables, plus two facts about the operators: distributivity of
BETA over ALPHA fails, and on {0, 1} ALPHA and BETA are Boolean AND and OR.
"""
from dataclasses import dataclass, field
from itertools import product
from typing import Optional, Tuple

from ..algebra.operators import alpha, beta
from ..expr.parser import parse
from ..models.truth_table import Counterexample, Equal
from ..truthtab.tables import equivalent
from ..utils.decorators import log_timing
from ..utils.formatting import format_counterexample
from ..utils.logger import CustomLogger

logger = CustomLogger("Laws")

# family, lhs, rhs
LAWS: Tuple[Tuple[str, str, str], ...] = (
    ("involution", "~~~x", "x"),
    ("boundedness", "x*0", "0"),
    ("boundedness", "x+1", "1"),
    ("boundedness", "x@2", "2"),
    ("identity", "x*2", "x"),
    ("identity", "x+0", "x"),
    ("identity", "x@1", "x"),
    ("complementation", "x*~x*~~x", "0"),
    ("complementation", "x+~x+~~x", "1"),
    ("complementation", "x@~x@~~x", "2"),
    ("idempotency", "x*x", "x"),
    ("idempotency", "x+x", "x"),
    ("idempotency", "x@x", "x"),
    ("commutativity", "x*y", "y*x"),
    ("commutativity", "x+y", "y+x"),
    ("commutativity", "x@y", "y@x"),
    ("associativity", "(x*y)*z", "x*(y*z)"),
    ("associativity", "(x+y)+z", "x+(y+z)"),
    ("associativity", "(x@y)@z", "x@(y@z)"),
    ("distributivity", "x*(y+z)", "x*y+x*z"),
    ("distributivity", "x+(y@z)", "(x+y)@(x+z)"),
    ("distributivity", "x@(y*z)", "(x@y)*(x@z)"),
    ("De Morgan", "~(x*y)", "~x@~y"),
    ("De Morgan", "~(x+y)", "~x*~y"),
    ("De Morgan", "~(x@y)", "~x+~y"),
)

REVERSED_DISTRIBUTIVITY = ("x+(y*z)", "(x+y)*(x+z)")


@dataclass(frozen=True)
class LawCheck:
    family: str
    lhs: str
    rhs: str
    counterexample: Optional[Counterexample] = None

    @property
    def holds(self) -> bool:
        return self.counterexample is None

    def __str__(self) -> str:
        status = "holds" if self.holds else f"FAILS at {format_counterexample(self.counterexample)}"
        return f"{self.family}: {self.lhs} = {self.rhs} {status}"


@dataclass(frozen=True)
class LawReport:
    checks: Tuple[LawCheck, ...]
    reversed_distributivity: Optional[Counterexample]
    binary_restriction: bool
    families: Tuple[str, ...] = field(default=())

    @property
    def passed(self) -> bool:
        return (all(check.holds for check in self.checks)
                and self.reversed_distributivity is not None
                and self.binary_restriction)


def check_law(family: str, lhs: str, rhs: str) -> LawCheck:
    result = equivalent(parse(lhs), parse(rhs))
    return LawCheck(family, lhs, rhs, None if isinstance(result, Equal) else result)


def binary_restriction_holds() -> bool:
    """On {0, 1}, ALPHA is AND and BETA is OR."""
    return all(alpha(a, b) == (a and b) and beta(a, b) == (a or b) for a, b in product((0, 1), repeat=2))


@log_timing(logger)
def check_laws() -> LawReport:
    checks = tuple(check_law(*law) for law in LAWS)
    refuted = equivalent(*(parse(side) for side in REVERSED_DISTRIBUTIVITY))
    report = LawReport(
        checks=checks,
        reversed_distributivity=refuted if isinstance(refuted, Counterexample) else None,
        binary_restriction=binary_restriction_holds(),
        families=tuple(dict.fromkeys(family for family, _, _ in LAWS)),
    )
    logger.info(f"Checked {len(checks)} laws: {'all hold' if report.passed else 'FAILURES'}")
    return report
