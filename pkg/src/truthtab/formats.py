"""
Text formats for truth tables.

Both formats start with a header naming the variables:

    vars: x y

followed either by the compact body, the 3^n outputs in row order
("222211210"), or by one "i1 i2 ... -> o" line per row in any order.
Blank lines and lines starting with '#' are ignored.
"""
from typing import Dict, List, Tuple

from src import config
from ..models.truth_table import TruthTable, decode_row, encode_row
from ..utils.exceptions import (DuplicateRowError, InvalidCharacterError, MissingRowError,
                                TableFormatError, TableLengthError)
from ..utils.validators import check_arity, is_valid_identifier, is_valid_trit_string

HEADER = 'vars:'
ROW_SEPARATOR = '->'


def _content_lines(text: str) -> List[Tuple[int, str]]:
    lines = []
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if line and not line.startswith('#'):
            lines.append((number, line))
    return lines


def _parse_header(number: int, line: str) -> Tuple[str, ...]:
    if not line.startswith(HEADER):
        raise TableFormatError(f"Expected header '{HEADER} ...', got {line!r}", number)
    names = tuple(line[len(HEADER):].split())
    for name in names:
        if not is_valid_identifier(name):
            raise TableFormatError(f"Invalid variable name {name!r}", number)
    if len(set(names)) != len(names):
        raise TableFormatError(f"Duplicate variable names in {list(names)}", number)
    return names


def _parse_compact(names: Tuple[str, ...], body: List[Tuple[int, str]]) -> TruthTable:
    digits = []
    for number, line in body:
        chunk = ''.join(line.split())
        if not is_valid_trit_string(chunk):
            bad = next(c for c in chunk if c not in '012')
            raise InvalidCharacterError(f"Invalid character {bad!r}", number)
        digits.append(chunk)
    outputs = ''.join(digits)
    expected = 3 ** len(names)
    if len(outputs) != expected:
        last = body[-1][0] if body else None
        raise TableLengthError(f"Expected {expected} outputs for {len(names)} variables, got {len(outputs)}", last)
    return TruthTable(len(names), tuple(int(c) for c in outputs), names)


def _parse_trit_field(field: str, number: int) -> int:
    if field not in ('0', '1', '2'):
        raise InvalidCharacterError(f"Invalid value {field!r}", number)
    return int(field)


def _parse_rows(names: Tuple[str, ...], body: List[Tuple[int, str]]) -> TruthTable:
    arity = len(names)
    check_arity(arity, config.ARITY_LIMIT)
    outputs: Dict[int, int] = {}
    for number, line in body:
        if ROW_SEPARATOR not in line:
            raise TableFormatError(f"Expected 'inputs {ROW_SEPARATOR} output', got {line!r}", number)
        left, right = line.split(ROW_SEPARATOR, 1)
        fields = left.split()
        if len(fields) != arity:
            raise TableLengthError(f"Expected {arity} inputs, got {len(fields)}", number)
        inputs = [_parse_trit_field(field, number) for field in fields]
        output_fields = right.split()
        if len(output_fields) != 1:
            raise TableLengthError(f"Expected one output, got {len(output_fields)}", number)
        index = encode_row(inputs)
        if index in outputs:
            raise DuplicateRowError(f"Row {' '.join(fields)} listed twice", number)
        outputs[index] = _parse_trit_field(output_fields[0], number)
    for index in range(3 ** arity):
        if index not in outputs:
            row = ' '.join(str(v) for v in decode_row(index, arity))
            raise MissingRowError(f"Row {row} is missing")
    return TruthTable(arity, tuple(outputs[i] for i in range(3 ** arity)), names)


def parse_table(text: str) -> TruthTable:
    """Read a truth table in compact or row format."""
    lines = _content_lines(text or '')
    if not lines:
        raise TableFormatError("Empty truth table")
    names = _parse_header(*lines[0])
    body = lines[1:]
    if any(ROW_SEPARATOR in line for _, line in body):
        return _parse_rows(names, body)
    return _parse_compact(names, body)


def format_table(table: TruthTable) -> str:
    """Compact format: header line, then the outputs in row order."""
    header = ' '.join((HEADER,) + table.var_names)
    return f"{header}\n{''.join(str(v) for v in table.outputs)}"


def format_rows(table: TruthTable) -> str:
    """Row format, one 'inputs -> output' line per row in row order."""
    lines = [' '.join((HEADER,) + table.var_names)]
    for inputs, value in table.rows():
        lines.append(f"{' '.join(str(v) for v in inputs)} {ROW_SEPARATOR} {value}".lstrip())
    return '\n'.join(lines)
