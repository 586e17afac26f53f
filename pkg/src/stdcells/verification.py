from dataclasses import dataclass
from typing import List, Optional, Tuple

from ..expr.parser import parse
from ..expr.printer import pretty_print
from ..models.cell import StdCell
from ..models.truth_table import Equal
from ..rewrite.cost import cost
from ..rewrite.simplifier import simplify
from ..synth.regular_formula import synthesize
from ..truthtab.tables import equivalent, realizes, table_of
from ..utils.decorators import log_timing
from ..utils.logger import CustomLogger
from .library import all_cells, cell

logger = CustomLogger("Verification")

# Constant identities used inside the NAND and carry derivations
SELECTOR_LEMMAS = (
    ("x*1@~x*1@~~x*1", "0"),
    ("y*1@~y*1@~~y*1", "0"),
)

# (composite, inverter, base): composite is the inverter applied to base, pointwise
INVERTER_COMPOSITIONS = (
    ("TNAND", "STI", "TAND"),
    ("TNOR", "STI", "TOR"),
)


@dataclass(frozen=True)
class CellCheck:
    subject: str
    check: str
    passed: bool
    detail: str = ""

    def __str__(self) -> str:
        line = f"{self.subject:<10} {self.check:<16} {'PASS' if self.passed else 'FAIL'}"
        return f"{line}  {self.detail}" if self.detail else line


@dataclass(frozen=True)
class VerificationReport:
    checks: Tuple[CellCheck, ...]

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)

    @property
    def failures(self) -> Tuple[CellCheck, ...]:
        return tuple(check for check in self.checks if not check.passed)


def _check_table(c: StdCell) -> CellCheck:
    forms = (c.expr,) + c.derivation + c.alternates
    wrong = [pretty_print(form) for form in forms if not realizes(form, c.reference_table)]
    detail = f"{len(forms)} forms" if not wrong else f"mismatch: {wrong[0]}"
    return CellCheck(c.name, "table", not wrong, detail)


def _check_synthesis(c: StdCell, synthesized) -> CellCheck:
    result = equivalent(synthesized, c.expr)
    detail = "" if isinstance(result, Equal) else f"differs at {result.assignment}"
    return CellCheck(c.name, "synthesis", isinstance(result, Equal), detail)


def _check_simplification(c: StdCell, synthesized) -> CellCheck:
    simplified = simplify(synthesized)
    sound = isinstance(equivalent(simplified, c.expr), Equal)
    reached, target = cost(simplified), cost(c.expr)
    return CellCheck(c.name, "simplification", sound and reached <= target,
                     f"cost {reached} <= {target}: {pretty_print(simplified)}")


def _check_lemma(lhs: str, rhs: str) -> CellCheck:
    holds = isinstance(equivalent(parse(lhs), parse(rhs)), Equal)
    return CellCheck("lemma", "constant", holds, f"{lhs} = {rhs}")


def _check_composition(composite: str, inverter: str, base: str) -> CellCheck:
    inverted = table_of(cell(inverter).expr, ('x',)).outputs
    composed = tuple(inverted[v] for v in cell(base).reference_table.outputs)
    holds = composed == cell(composite).reference_table.outputs
    return CellCheck(composite, "composition", holds, f"{inverter} of {base}")


def verify_cell(c: StdCell, checks: Optional[List[CellCheck]] = None) -> List[CellCheck]:
    checks = [] if checks is None else checks
    synthesized = synthesize(c.reference_table)
    checks.append(_check_table(c))
    checks.append(_check_synthesis(c, synthesized))
    checks.append(_check_simplification(c, synthesized))
    return checks


@log_timing(logger)
def verify_all() -> VerificationReport:
    """Table, synthesis and simplification checks for every cell, plus library-wide identities."""
    checks: List[CellCheck] = []
    for c in all_cells():
        verify_cell(c, checks)
    checks.extend(_check_lemma(lhs, rhs) for lhs, rhs in SELECTOR_LEMMAS)
    checks.extend(_check_composition(*composition) for composition in INVERTER_COMPOSITIONS)
    report = VerificationReport(tuple(checks))
    if report.passed:
        logger.info(f"All {len(checks)} library checks passed")
    else:
        logger.warning(f"{len(report.failures)} of {len(checks)} library checks failed")
    return report
