"""
Library of named ternary cells.

Each cell stores its reference truth table, its final hand-derived
expression, the intermediate steps of that derivation (raw regular formula
first) and any other known forms. Everything is checked against the
reference table when the library is first loaded.
"""
from functools import lru_cache
from typing import Dict, Mapping, Tuple

from ..expr.parser import parse
from ..models.cell import StdCell
from ..models.expr import Expr
from ..models.truth_table import TruthTable
from ..truthtab.tables import realizes
from ..utils.exceptions import UnknownCellError, ValidationError
from ..utils.logger import CustomLogger

logger = CustomLogger("StdCells")

MONADIC = ('x',)
DYADIC = ('x', 'y')

# name: (variables, reference outputs, final expression, derivation steps, alternates, description)
CELL_DEFINITIONS: Dict[str, Tuple] = {
    "STI": (
        MONADIC, (2, 1, 0),
        "~~x*1@x*1+2",
        ("x*1+2@~x*1+1@~~x*1+0",
         "x*1+2@1@~~x*1"),
        (),
        "Standard ternary inverter; the rotated reverse",
    ),
    "NTI": (
        MONADIC, (2, 0, 0),
        "(~~x*1@x*1+2)@~x",
        ("x*1+2@~x*1+0@~~x*1+0",
         "x*1+2@x*1+2@~x*1@~~x*1",
         "(~~x*1@x*1+2)@(~x*1@x*1+2)"),
        ("~x@0",),
        "Negative ternary inverter",
    ),
    "PTI": (
        MONADIC, (2, 2, 0),
        "(~~x*1@x*1+2)@~~x",
        ("x*1+2@~x*1+2@~~x*1+0",
         "x*1+2@~x*1+2@~~x*1@~~x*1",
         "(~~x*1@x*1+2)@(~~x*1@~x*1+2)"),
        ("(~x+2)@0",),
        "Positive ternary inverter",
    ),
    "TNAND": (
        DYADIC, (2, 2, 2, 2, 1, 1, 2, 1, 0),
        "(x*1@y*1)+2@(~~x+~~y)*1",
        ("(x+y)*1+2@(x+~y)*1+2@(x+~~y)*1+2@(x+y)*1+2@(~x+y)*1+2@(~~x+y)*1+2@(~~x+~~y)*1",
         "(x*1+y*1@x*1+~y*1@x*1+~~y*1)+2@(x*1+y*1@~x*1+y*1@~~x*1+y*1)+2@(~~x+~~y)*1",
         "(y*1@~y*1@~~y*1)+x*1+2@(x*1@~x*1@~~x*1)+y*1+2@(~~x+~~y)*1",
         "x*1+2@y*1+2@(~~x+~~y)*1"),
        (),
        "Ternary NAND",
    ),
    "TNOR": (
        DYADIC, (2, 1, 0, 1, 1, 0, 0, 0, 0),
        "~~x*1@~~y*1@(x+y)*1+2",
        ("(~~x+y)*1@(~~x+~y)*1@(~~x+~~y)*1@(x+~~y)*1@(~x+~~y)*1@(~~x+~~y)*1@(x+y)*1+2",
         "~~x*1+y*1@~~x*1+~y*1@~~x*1+~~y*1@x*1+~~y*1@~x*1+~~y*1@~~x*1+~~y*1@(x+y)*1+2",
         "(y*1@~y*1@~~y*1)+~~x*1@(x*1@~x*1@~~x*1)+~~y*1@(x+y)*1+2"),
        (),
        "Ternary NOR",
    ),
    "TAND": (
        DYADIC, (0, 0, 0, 0, 1, 1, 0, 1, 2),
        "x*1@y*1@(~~x+~~y)*1+2",
        (),
        ("x*y",),
        "Ternary AND, the standard inversion of TNAND",
    ),
    "TOR": (
        DYADIC, (0, 1, 2, 1, 1, 2, 2, 2, 2),
        "(~~x*1@~~y*1)+2@(x+y)*1",
        (),
        (),
        "Ternary OR, the standard inversion of TNOR",
    ),
    "THA_CARRY": (
        DYADIC, (0, 0, 0, 0, 0, 1, 0, 1, 1),
        "x*1@y*1@(~x+~y)*1",
        ("(x+y)*1@(x+~y)*1@(x+~~y)*1@(~x+y)*1@(~x+~y)*1@(~~x+y)*1",
         "x*1+y*1@x*1+~y*1@x*1+~~y*1@~x*1+y*1@~x*1+~y*1@~~x*1+y*1",
         "(y*1@~y*1@~~y*1)+x*1@(x*1@~x*1@~~x*1)+y*1@(~x+~y)*1"),
        (),
        "Carry output of the ternary half-adder",
    ),
    "THA_SUM": (
        DYADIC, (0, 1, 2, 1, 2, 0, 2, 0, 1),
        "x*1+y@~x*1+~~y@~~x*1+~y",
        ("(x+y)*1@(x+~~y)*1+2@(~x+~~y)*1@(~x+~y)*1+2@(~~x+y)*1+2@(~~x+~y)*1",
         "x*1+y*1@x*1+~~y*1+2@~x*1+~~y*1@~x*1+~y*1+2@~~x*1+~y*1@~~x*1+y*1+2",
         "x*1+(y*1@~~y*1+2)@~x*1+(~~y*1@~y*1+2)@~~x*1+(~y*1@y*1+2)"),
        (),
        "Sum output of the ternary half-adder",
    ),
    "REVERSE": (
        MONADIC, (0, 2, 1),
        "x*1@~x*1+2",
        (),
        (),
        "Swaps 1 and 2, fixes 0",
    ),
    "ROT": (MONADIC, (2, 0, 1), "~x", (), (), "ROTATE"),
    "ROT2": (MONADIC, (1, 2, 0), "~~x", (), (), "ROTATE applied twice"),
}

# Multi-output circuits, output name -> cell name
CIRCUIT_DEFINITIONS: Dict[str, Dict[str, str]] = {
    "THA": {"carry": "THA_CARRY", "sum": "THA_SUM"},
}


def _build_cell(name: str) -> StdCell:
    names, outputs, text, steps, alternates, description = CELL_DEFINITIONS[name]
    table = TruthTable(len(names), outputs, names)
    stored = StdCell(
        name=name,
        arity=len(names),
        reference_table=table,
        expr=parse(text),
        derivation=tuple(parse(step) for step in steps),
        alternates=tuple(parse(alternate) for alternate in alternates),
        description=description,
    )
    if not realizes(stored.expr, table):
        raise ValidationError(f"Cell {name}: expression '{text}' does not match its reference table")
    return stored


@lru_cache(maxsize=None)
def _library() -> Dict[str, StdCell]:
    library = {name: _build_cell(name) for name in CELL_DEFINITIONS}
    logger.debug(f"Loaded {len(library)} library cells")
    return library


def cell_names() -> Tuple[str, ...]:
    return tuple(CELL_DEFINITIONS)


def circuit_names() -> Tuple[str, ...]:
    return tuple(CIRCUIT_DEFINITIONS)


def cell(name: str) -> StdCell:
    """Library cell by (case-insensitive) name."""
    key = name.upper() if isinstance(name, str) else name
    if key not in CELL_DEFINITIONS:
        raise UnknownCellError(name, cell_names())
    return _library()[key]


def circuit(name: str) -> Mapping[str, Expr]:
    """Named output expressions of a multi-output circuit, or of a single cell as 'out'."""
    key = name.upper() if isinstance(name, str) else name
    if key in CIRCUIT_DEFINITIONS:
        return {output: cell(member).expr for output, member in CIRCUIT_DEFINITIONS[key].items()}
    if key in CELL_DEFINITIONS:
        return {"out": cell(key).expr}
    raise UnknownCellError(name, cell_names() + circuit_names())


def all_cells() -> Tuple[StdCell, ...]:
    return tuple(_library().values())
