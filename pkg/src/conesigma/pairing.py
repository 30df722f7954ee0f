"""Cantor pairing ``N x N -> N`` and its inverse.

Index ``n`` is sent to ``(x, y)`` with ``n = (x+y)(x+y+1)/2 + y``, so the
anti-diagonals are enumerated with ``y`` increasing::

    0 -> (0,0)  1 -> (1,0)  2 -> (0,1)  3 -> (2,0)  4 -> (1,1)  5 -> (0,2)

All indices in the package are 0-based.
"""
from math import isqrt
from typing import Callable, NamedTuple


class PairPoint(NamedTuple):
    first: int
    second: int


def pair_index(x: int, y: int) -> int:
    if x < 0 or y < 0:
        raise ValueError("pairing is defined on naturals only")
    s = x + y
    return s * (s + 1) // 2 + y


def unpair_index(n: int) -> PairPoint:
    if n < 0:
        raise ValueError("pairing is defined on naturals only")
    w = (isqrt(8 * n + 1) - 1) // 2
    y = n - w * (w + 1) // 2
    return PairPoint(w - y, y)


class Pairing(NamedTuple):
    """A bijection ``N <-> N x N``; the cone constructions accept any of these."""

    pair: Callable[[int, int], int]
    unpair: Callable[[int], PairPoint]


CANTOR = Pairing(pair_index, unpair_index)
