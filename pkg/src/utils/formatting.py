"""Plain-text renderings of results for the command line."""
from typing import List, Mapping

from ..expr.printer import pretty_print
from ..models.truth_table import Counterexample


def format_trits(values) -> str:
    return ''.join(str(int(v)) for v in values)


def format_assignment(env: Mapping[str, int]) -> str:
    """'x=2 y=0' in name order."""
    return ' '.join(f"{name}={int(env[name])}" for name in sorted(env))


def format_counterexample(result: Counterexample) -> str:
    prefix = format_assignment(result.assignment)
    values = f"a={int(result.va)} b={int(result.vb)}"
    return f"{prefix} : {values}" if prefix else f": {values}"


def format_census(census) -> List[str]:
    lines = []
    for entry in census.entries:
        status = "ok" if entry.matches_reference else f"expected {format_trits(entry.reference)}"
        lines.append(f"{pretty_print(entry.form):<12} {format_trits(entry.outputs)}  {status}")
    lines.append(f"distinct functions: {len(census.distinct)}")
    lines.append(f"uncovered: {' '.join(format_trits(outputs) for outputs in census.uncovered)}")
    lines.append(f"uncovered permutations: {', '.join(p.value for p in census.uncovered_perms)}")
    for p, holds in census.reconstructions.items():
        lines.append(f"reconstruction {p.value}: {'ok' if holds else 'FAILED'}")
    return lines


def format_law_report(report) -> List[str]:
    lines = [str(check) for check in report.checks]
    refuted = report.reversed_distributivity
    if refuted is not None:
        lines.append(f"x+(y*z) = (x+y)*(x+z) refuted at {format_counterexample(refuted)}")
    else:
        lines.append("x+(y*z) = (x+y)*(x+z) was NOT refuted")
    lines.append(f"binary restriction: {'holds' if report.binary_restriction else 'FAILS'}")
    return lines
