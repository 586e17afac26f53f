import enum
from typing import Tuple

from ..utils.exceptions import ValidationError
from ..utils.validators import is_valid_trit


class Trit(enum.IntEnum):
    """One of the three logic values"""
    ZERO = 0
    ONE = 1
    TWO = 2

    @classmethod
    def of(cls, value) -> "Trit":
        """Checked construction; anything outside {0, 1, 2} is rejected."""
        if isinstance(value, Trit):
            return value
        if isinstance(value, str) and value in ('0', '1', '2'):
            return TRITS[int(value)]
        if not is_valid_trit(value):
            raise ValidationError(f"Invalid trit {value!r}: expected 0, 1 or 2")
        return TRITS[value]

    def __str__(self) -> str:
        return str(self.value)


TRITS: Tuple[Trit, Trit, Trit] = (Trit.ZERO, Trit.ONE, Trit.TWO)


class PermOp(enum.Enum):
    """The six bijections of {0, 1, 2}"""
    IDENTITY = "identity"
    ROTATE = "rotate"
    ROTATE2 = "rotate2"
    REVERSE = "reverse"
    ROTATE_REVERSE = "rotate-reverse"
    ROTATE2_REVERSE = "rotate2-reverse"

    @property
    def images(self) -> Tuple[int, int, int]:
        """Images of 0, 1, 2 in that order."""
        return _PERM_IMAGES[self]


_PERM_IMAGES = {
    PermOp.IDENTITY: (0, 1, 2),
    PermOp.ROTATE: (2, 0, 1),
    PermOp.ROTATE2: (1, 2, 0),
    PermOp.REVERSE: (0, 2, 1),
    PermOp.ROTATE_REVERSE: (2, 1, 0),
    PermOp.ROTATE2_REVERSE: (1, 0, 2),
}
