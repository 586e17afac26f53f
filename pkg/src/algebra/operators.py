"""
Ground-truth semantics of ROTATE, ALPHA, BETA and GAMMA.

Each dyadic operator is the minimum under a rotated ordering of the trits:
ALPHA uses 0 < 1 < 2, BETA uses 1 < 2 < 0 and GAMMA uses 2 < 0 < 1. The
nine-entry tables below are the normative definition; the ordering view is
only used to document them.
"""
from typing import Tuple

from ..models.trit import TRITS, PermOp, Trit

# Index with x; ROTATE maps 0 -> 2, 1 -> 0, 2 -> 1
ROTATE_TABLE: Tuple[int, ...] = (2, 0, 1)

# Index with 3 * x + y
ALPHA_TABLE: Tuple[int, ...] = (0, 0, 0,
                                0, 1, 1,
                                0, 1, 2)
BETA_TABLE: Tuple[int, ...] = (0, 1, 2,
                               1, 1, 1,
                               2, 1, 2)
GAMMA_TABLE: Tuple[int, ...] = (0, 0, 2,
                                0, 1, 2,
                                2, 2, 2)

# Absorbing element and identity element of each dyadic operator
BOUNDS = {'*': 0, '+': 1, '@': 2}
IDENTITIES = {'*': 2, '+': 0, '@': 1}

DYADIC_TABLES = {'*': ALPHA_TABLE, '+': BETA_TABLE, '@': GAMMA_TABLE}


def rotate(x: int) -> Trit:
    return TRITS[ROTATE_TABLE[Trit.of(x)]]


def alpha(x: int, y: int) -> Trit:
    return TRITS[ALPHA_TABLE[3 * Trit.of(x) + Trit.of(y)]]


def beta(x: int, y: int) -> Trit:
    return TRITS[BETA_TABLE[3 * Trit.of(x) + Trit.of(y)]]


def gamma(x: int, y: int) -> Trit:
    return TRITS[GAMMA_TABLE[3 * Trit.of(x) + Trit.of(y)]]


def apply_dyadic(symbol: str, x: int, y: int) -> Trit:
    return TRITS[DYADIC_TABLES[symbol][3 * Trit.of(x) + Trit.of(y)]]


def apply_perm(p: PermOp, x: int) -> Trit:
    return TRITS[p.images[Trit.of(x)]]


def perm_of_images(images) -> PermOp:
    """The PermOp with the given images of (0, 1, 2), if it is a bijection."""
    images = tuple(images)
    for p in PermOp:
        if p.images == images:
            return p
    raise ValueError(f"{images} is not a permutation of (0, 1, 2)")
