from dataclasses import dataclass, field
from typing import ClassVar, Mapping, Tuple

from ..utils.exceptions import ValidationError
from ..utils.validators import is_valid_identifier, is_valid_trit

# Variable name -> trit
Assignment = Mapping[str, int]


class Expr:
    """Immutable node of a ternary expression tree"""
    precedence: ClassVar[int] = 5

    def children(self) -> Tuple["Expr", ...]:
        return ()


@dataclass(frozen=True)
class Const(Expr):
    value: int
    _hash: int = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if not is_valid_trit(self.value):
            raise ValidationError(f"Invalid constant {self.value!r}")
        object.__setattr__(self, 'value', int(self.value))
        object.__setattr__(self, '_hash', hash(('Const', self.value)))

    def __hash__(self):
        return self._hash


@dataclass(frozen=True)
class Var(Expr):
    name: str
    _hash: int = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if not is_valid_identifier(self.name):
            raise ValidationError(f"Invalid variable name {self.name!r}")
        object.__setattr__(self, '_hash', hash(('Var', self.name)))

    def __hash__(self):
        return self._hash


@dataclass(frozen=True)
class Rotate(Expr):
    child: Expr
    _hash: int = field(init=False, repr=False, compare=False)

    precedence: ClassVar[int] = 4
    symbol: ClassVar[str] = '~'

    def __post_init__(self):
        if not isinstance(self.child, Expr):
            raise ValidationError(f"Rotate operand must be an expression, got {self.child!r}")
        object.__setattr__(self, '_hash', hash(('Rotate', self.child)))

    def __hash__(self):
        return self._hash

    def children(self) -> Tuple[Expr, ...]:
        return (self.child,)


@dataclass(frozen=True)
class Binary(Expr):
    """Dyadic node; concrete operators subclass this"""
    left: Expr
    right: Expr
    _hash: int = field(init=False, repr=False, compare=False)

    symbol: ClassVar[str] = ''

    def __post_init__(self):
        if type(self) is Binary:
            raise TypeError("Binary is abstract; use Alpha, Beta or Gamma")
        for operand in (self.left, self.right):
            if not isinstance(operand, Expr):
                raise ValidationError(f"{type(self).__name__} operand must be an expression, got {operand!r}")
        object.__setattr__(self, '_hash', hash((type(self).__name__, self.left, self.right)))

    def __hash__(self):
        return self._hash

    def children(self) -> Tuple[Expr, ...]:
        return (self.left, self.right)


class Alpha(Binary):
    """Minimum under 0 < 1 < 2"""
    precedence = 3
    symbol = '*'


class Beta(Binary):
    """Minimum under 1 < 2 < 0"""
    precedence = 2
    symbol = '+'


class Gamma(Binary):
    """Minimum under 2 < 0 < 1"""
    precedence = 1
    symbol = '@'


BINARY_BY_SYMBOL = {cls.symbol: cls for cls in (Alpha, Beta, Gamma)}


def rotated(e: Expr, times: int) -> Expr:
    """Wrap `e` in `times` rotations (0, 1 or 2)."""
    for _ in range(times):
        e = Rotate(e)
    return e
