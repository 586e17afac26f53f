from dataclasses import dataclass
from typing import Dict, Iterator, Sequence, Tuple, Union

from ..utils.exceptions import TableLengthError, ValidationError
from ..utils.validators import is_valid_identifier, is_valid_trit


def decode_row(index: int, arity: int) -> Tuple[int, ...]:
    """Inputs of row `index`, first variable most significant."""
    digits = []
    for _ in range(arity):
        index, digit = divmod(index, 3)
        digits.append(digit)
    return tuple(reversed(digits))


def encode_row(inputs: Sequence[int]) -> int:
    index = 0
    for value in inputs:
        index = index * 3 + value
    return index


@dataclass(frozen=True)
class TruthTable:
    """An n-ary ternary function as 3^n outputs in canonical row order"""
    arity: int
    outputs: Tuple[int, ...]
    var_names: Tuple[str, ...]

    def __post_init__(self):
        outputs = tuple(int(v) if is_valid_trit(v) else v for v in self.outputs)
        names = tuple(self.var_names)
        if self.arity < 0:
            raise ValidationError(f"Arity must be non-negative, got {self.arity}")
        if len(outputs) != 3 ** self.arity:
            raise TableLengthError(
                f"Expected {3 ** self.arity} outputs for arity {self.arity}, got {len(outputs)}")
        bad = [v for v in outputs if not is_valid_trit(v)]
        if bad:
            raise ValidationError(f"Invalid output value {bad[0]!r}")
        if len(names) != self.arity:
            raise ValidationError(f"Expected {self.arity} variable names, got {len(names)}")
        for name in names:
            if not is_valid_identifier(name):
                raise ValidationError(f"Invalid variable name {name!r}")
        if len(set(names)) != len(names):
            raise ValidationError(f"Duplicate variable names in {list(names)}")
        object.__setattr__(self, 'outputs', outputs)
        object.__setattr__(self, 'var_names', names)

    @property
    def row_count(self) -> int:
        return len(self.outputs)

    def row_inputs(self, index: int) -> Tuple[int, ...]:
        return decode_row(index, self.arity)

    def output(self, inputs: Sequence[int]) -> int:
        return self.outputs[encode_row(inputs)]

    def rows(self) -> Iterator[Tuple[Tuple[int, ...], int]]:
        for index, value in enumerate(self.outputs):
            yield decode_row(index, self.arity), value

    def assignment(self, index: int) -> Dict[str, int]:
        return dict(zip(self.var_names, self.row_inputs(index)))

    def cofactor(self, position: int, value: int) -> "TruthTable":
        """Restrict variable `position` to `value`."""
        names = self.var_names[:position] + self.var_names[position + 1:]
        outputs = tuple(
            out for inputs, out in self.rows() if inputs[position] == value)
        return TruthTable(self.arity - 1, outputs, names)


@dataclass(frozen=True)
class Equal:
    """Both expressions denote the same function"""


@dataclass(frozen=True)
class Counterexample:
    """Least row on which two expressions differ"""
    env: Tuple[Tuple[str, int], ...]
    va: int
    vb: int

    @property
    def assignment(self) -> Dict[str, int]:
        return dict(self.env)


EquivalenceResult = Union[Equal, Counterexample]
