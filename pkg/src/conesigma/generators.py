"""Seeded random elements for property checks.

Everything takes an explicit ``random.Random`` so runs are reproducible
from a seed.
"""
from __future__ import annotations

import random

from .coeff import AlgebraSpec
from .cone import (
    ConeMat, cone_add, cone_from_finite, cone_scalar, phi_map, pairing_shifts, cone_mul,
)
from .finmat import FinMat
from .sigma import LeftFraction


def random_coeff(rng: random.Random, ring, lo=-3, hi=3):
    if isinstance(ring, AlgebraSpec):
        return ring.convert([rng.randint(lo, hi) for _ in range(ring.dim)])
    return ring.convert(rng.randint(lo, hi))


def random_finmat(rng: random.Random, ring, size: int = 8, nnz: int | None = None) -> FinMat:
    """A finite matrix with indices below ``size``."""
    if nnz is None:
        nnz = rng.randint(0, max(1, size))
    entries = {}
    for _ in range(nnz):
        entries[(rng.randrange(size), rng.randrange(size))] = random_coeff(rng, ring)
    return FinMat(ring, entries)


def random_certified(rng: random.Random, ring, size: int = 8) -> ConeMat:
    """``c * I + F`` with ``F`` finite; carries a certificate."""
    F = cone_from_finite(random_finmat(rng, ring, size))
    return cone_add(cone_scalar(random_coeff(rng, ring), ring), F)


def random_banded(rng: random.Random, ring, max_offset: int = 3, max_terms: int = 3) -> ConeMat:
    """A lazy matrix made of periodic shifted diagonals and optionally one
    xor-permutation term; it has finitely many values and a fixed band but
    no finite-support certificate."""
    offsets = rng.sample(range(-max_offset, max_offset + 1), rng.randint(1, max_terms))
    diagonals = [
        (s, [random_coeff(rng, ring) for _ in range(rng.randint(1, 4))]) for s in offsets
    ]
    xor = None
    if rng.random() < 0.5:
        xor = (rng.randint(1, 7), [random_coeff(rng, ring) for _ in range(rng.randint(1, 3))])
    zero = ring.zero

    def add(acc, k, v):
        if ring.is_zero(v):
            return
        acc[k] = ring.add(acc[k], v) if k in acc else v

    def row(i):
        acc = {}
        for s, pat in diagonals:
            if i + s >= 0:
                add(acc, i + s, pat[i % len(pat)])
        if xor:
            mask, pat = xor
            add(acc, i ^ mask, pat[i % len(pat)])
        return {k: v for k, v in acc.items() if not ring.is_zero(v)}

    def col(j):
        acc = {}
        for s, pat in diagonals:
            i = j - s
            if i >= 0:
                add(acc, i, pat[i % len(pat)])
        if xor:
            mask, pat = xor
            i = j ^ mask
            add(acc, i, pat[i % len(pat)])
        return {k: v for k, v in acc.items() if not ring.is_zero(v)}

    values = {zero}
    for _, pat in diagonals:
        values.update(pat)
    band = len(diagonals) + (1 if xor else 0)
    # sums of a diagonal and the xor term can coincide on an entry
    return ConeMat(ring, row, col, band, None, None if xor else values)


def random_lazy(rng: random.Random, ring) -> ConeMat:
    """A banded matrix, possibly pushed through ``phi`` or multiplied by a shift."""
    A = random_banded(rng, ring)
    roll = rng.random()
    if roll < 0.2:
        return phi_map(A)
    if roll < 0.35:
        alpha, beta = pairing_shifts(ring)
        return cone_mul(A, rng.choice((alpha, beta)))
    return A


def random_cone(rng: random.Random, ring, kind: str | None = None) -> ConeMat:
    kind = kind or rng.choice(("finite", "certified", "lazy"))
    if kind == "finite":
        return cone_from_finite(random_finmat(rng, ring))
    if kind == "certified":
        return random_certified(rng, ring)
    return random_lazy(rng, ring)


def random_fraction(rng: random.Random, ring, max_denom: int = 16, certified: bool = True) -> LeftFraction:
    numer = random_certified(rng, ring, size=12) if certified else random_cone(rng, ring)
    return LeftFraction(rng.randint(0, max_denom), numer)
