"""Hochschild homology of finite-dimensional algebras via the bar complex.

``C_n = A^{(n+1)}`` (tensor powers over the base field) with

    b(a0 x ... x an) = sum_{i<n} (-1)^i a0 x ... x a_i a_{i+1} x ... x an
                       + (-1)^n (an a0) x a1 x ... x a_{n-1}

Basis tensors ``e_{k0} x ... x e_{kn}`` are numbered by reading
``(k0, ..., kn)`` as base-``dim`` digits, most significant first.

Only finite-dimensional algebras are handled; nothing here computes the
homology of the infinite matrix algebras themselves.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .coeff import AlgebraSpec, CoeffRing, alg_validate, as_algebra, matrix_algebra_spec
from .errors import BudgetExceeded, PreconditionError
from .finmat import FinMat
from .homology import ChainComplexSpec, homology_dims, rank

__all__ = [
    "DEFAULT_BUDGET", "HHResult", "ComparisonReport", "hochschild_complex",
    "hh_dims", "commutator_quotient_dim", "morita_compare",
]

DEFAULT_BUDGET = 10**6


def _prepare(A) -> AlgebraSpec:
    if isinstance(A, CoeffRing):
        A = as_algebra(A)
    if not A.base.is_field:
        raise PreconditionError("Hochschild dimensions need field coefficients")
    report = alg_validate(A)
    if not report.ok:
        raise PreconditionError(f"not a unital associative algebra: {report.failure} at {report.witness}")
    return A


def _bar_differential(A: AlgebraSpec, n: int) -> FinMat:
    """``b: C_n -> C_{n-1}`` as a ``dim^n x dim^(n+1)`` matrix."""
    R, d = A.base, A.dim
    prods = [[[(l, c) for l, c in enumerate(A.table[i][j]) if c != 0] for j in range(d)] for i in range(d)]
    neg = R.neg(R.one)
    entries: dict[tuple[int, int], object] = {}

    def index(digits):
        k = 0
        for x in digits:
            k = k * d + x
        return k

    for col, t in enumerate(product(range(d), repeat=n + 1)):
        sign = R.one
        for i in range(n):
            for l, c in prods[t[i]][t[i + 1]]:
                key = (index(t[:i] + (l,) + t[i + 2:]), col)
                v = R.mul(sign, c)
                entries[key] = R.add(entries[key], v) if key in entries else v
            sign = R.mul(sign, neg)
        for l, c in prods[t[n]][t[0]]:
            key = (index((l,) + t[1:n]), col)
            v = R.mul(sign, c)
            entries[key] = R.add(entries[key], v) if key in entries else v
    return FinMat(R, entries)


def hochschild_complex(A, N: int, budget: int = DEFAULT_BUDGET) -> ChainComplexSpec:
    """Bar complex ``C_0 <- ... <- C_N``; ``d o d = 0`` is verified on construction."""
    A = _prepare(A)
    if A.dim ** (N + 1) > budget:
        raise BudgetExceeded(f"dim(A)^{N + 1} = {A.dim ** (N + 1)} exceeds budget {budget}")
    dims = [A.dim ** (n + 1) for n in range(N + 1)]
    return ChainComplexSpec(dims, [_bar_differential(A, n) for n in range(1, N + 1)], A.base)


def commutator_quotient_dim(A) -> int:
    """``dim A - dim span{ab - ba}``, computed straight from the structure table."""
    A = _prepare(A)
    R, d = A.base, A.dim
    rows = {}
    for i, j in product(range(d), repeat=2):
        v = A.sub(A.mul(A.basis(i), A.basis(j)), A.mul(A.basis(j), A.basis(i)))
        for l, c in enumerate(v):
            if c != 0:
                rows[(i * d + j, l)] = c
    return d - rank(FinMat(R, rows))


@dataclass(frozen=True)
class HHResult:
    algebra: AlgebraSpec
    top_degree: int
    dims: tuple[int, ...]


def hh_dims(A, N: int, budget: int = DEFAULT_BUDGET) -> HHResult:
    """``dim HH_n(A)`` for ``n = 0..N``; ``HH_0`` is cross-checked against the commutator quotient."""
    A = _prepare(A)
    complex_ = hochschild_complex(A, N + 1, budget)
    dims = tuple(homology_dims(complex_)[: N + 1])
    hh0 = commutator_quotient_dim(A)
    if dims[0] != hh0:
        raise AssertionError(f"HH_0 = {dims[0]} but A/[A,A] has dimension {hh0}")
    return HHResult(A, N, dims)


@dataclass(frozen=True)
class ComparisonReport:
    n: int
    algebra: tuple[int, ...]
    matrices: tuple[int, ...]

    @property
    def per_degree(self) -> tuple[bool, ...]:
        return tuple(a == b for a, b in zip(self.algebra, self.matrices))

    @property
    def equal(self) -> bool:
        return all(self.per_degree)


def morita_compare(A, n: int, N: int, budget: int = DEFAULT_BUDGET) -> ComparisonReport:
    """Compare ``HH_*(A)`` with ``HH_*(M_n(A))`` in degrees ``0..N``."""
    A = _prepare(A)
    Mn = matrix_algebra_spec(n, A)
    if Mn.dim ** (N + 2) > budget:
        raise BudgetExceeded(f"dim(M_{n}(A))^{N + 2} exceeds budget {budget}")
    return ComparisonReport(n, hh_dims(A, N, budget).dims, hh_dims(Mn, N, budget).dims)
