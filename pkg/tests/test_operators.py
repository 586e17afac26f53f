import pytest

from src.algebra.operators import (BOUNDS, IDENTITIES, alpha, apply_dyadic, apply_perm, beta, gamma,
                                   perm_of_images, rotate)
from src.models.trit import PermOp, Trit
from src.utils.exceptions import ValidationError

TRIT_VALUES = (0, 1, 2)


def test_rotate_table():
    assert [rotate(x) for x in TRIT_VALUES] == [2, 0, 1]


@pytest.mark.parametrize("op, expected", [
    (alpha, [0, 0, 0, 0, 1, 1, 0, 1, 2]),
    (beta, [0, 1, 2, 1, 1, 1, 2, 1, 2]),
    (gamma, [0, 0, 2, 0, 1, 2, 2, 2, 2]),
])
def test_dyadic_tables(op, expected):
    assert [op(x, y) for x in TRIT_VALUES for y in TRIT_VALUES] == expected


@pytest.mark.parametrize("symbol, op", [('*', alpha), ('+', beta), ('@', gamma)])
def test_apply_dyadic_matches_named_operator(symbol, op):
    for x in TRIT_VALUES:
        for y in TRIT_VALUES:
            assert apply_dyadic(symbol, x, y) == op(x, y)


@pytest.mark.parametrize("symbol, op", [('*', alpha), ('+', beta), ('@', gamma)])
def test_bounds_and_identities(symbol, op):
    for x in TRIT_VALUES:
        assert op(x, BOUNDS[symbol]) == BOUNDS[symbol]
        assert op(x, IDENTITIES[symbol]) == x


@pytest.mark.parametrize("order, op", [((0, 1, 2), alpha), ((1, 2, 0), beta), ((2, 0, 1), gamma)])
def test_dyadic_operators_are_rotated_minimums(order, op):
    rank = {value: position for position, value in enumerate(order)}
    for x in TRIT_VALUES:
        for y in TRIT_VALUES:
            assert op(x, y) == min(x, y, key=rank.__getitem__)


@pytest.mark.parametrize("p, images", [
    (PermOp.IDENTITY, (0, 1, 2)),
    (PermOp.ROTATE, (2, 0, 1)),
    (PermOp.ROTATE2, (1, 2, 0)),
    (PermOp.REVERSE, (0, 2, 1)),
    (PermOp.ROTATE_REVERSE, (2, 1, 0)),
    (PermOp.ROTATE2_REVERSE, (1, 0, 2)),
])
def test_permutations(p, images):
    assert tuple(apply_perm(p, x) for x in TRIT_VALUES) == images
    assert perm_of_images(images) is p


def test_rotations_agree_with_rotate():
    assert tuple(apply_perm(PermOp.ROTATE, x) for x in TRIT_VALUES) == tuple(rotate(x) for x in TRIT_VALUES)
    assert tuple(apply_perm(PermOp.ROTATE2, x) for x in TRIT_VALUES) == tuple(
        rotate(rotate(x)) for x in TRIT_VALUES)


def test_perm_of_images_rejects_non_bijection():
    with pytest.raises(ValueError):
        perm_of_images((0, 0, 1))


@pytest.mark.parametrize("value", [3, -1, True, 1.0, None, "3"])
def test_invalid_trits_are_rejected(value):
    with pytest.raises(ValidationError):
        alpha(value, 0)


def test_trit_of_accepts_digit_strings():
    assert Trit.of('2') is Trit.TWO
    assert str(Trit.of(1)) == '1'
