"""Exact linear algebra for chain complexes.

Over ``Q`` ranks come from fraction-free elimination on integer rows (each
row is scaled to a primitive integer vector after every step); over ``Z/p``
from ordinary modular elimination.  Over ``Z`` homology is read off Smith
normal forms.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd, lcm
from typing import Sequence

from .coeff import CoeffRing, ValidationReport
from .errors import DimensionMismatch, UnverifiedComplex
from .finmat import FinMat, fin_mul

__all__ = [
    "ChainComplexSpec", "HomologyGroup", "verify_complex", "rank",
    "smith_normal_form", "homology_dims",
]


def _as_finmat(ring, M) -> FinMat:
    if isinstance(M, FinMat):
        if M.ring != ring:
            raise DimensionMismatch(f"differential over {M.ring}, complex over {ring}")
        return M
    return FinMat.from_dense(ring, M)


@dataclass
class ChainComplexSpec:
    """``0 <- C_0 <- C_1 <- ... <- C_N`` with ``differentials[n-1] = d_n``.

    ``d_n`` is a ``dims[n-1] x dims[n]`` matrix (columns are images of basis
    vectors of ``C_n``).  Dense nested lists are accepted and converted.
    ``d o d == 0`` is checked on construction unless ``check=False``.
    """

    dims: list[int]
    differentials: list
    ring: CoeffRing
    check: bool = field(default=True, repr=False)

    def __post_init__(self):
        self.differentials = [_as_finmat(self.ring, d) for d in self.differentials]
        if len(self.differentials) != len(self.dims) - 1:
            raise DimensionMismatch("need exactly one differential per positive degree")
        for n, d in enumerate(self.differentials, start=1):
            rows, cols = self.dims[n - 1], self.dims[n]
            if any(i >= rows or j >= cols for i, j in d.entries):
                raise DimensionMismatch(f"d_{n} does not fit in {rows}x{cols}")
        if self.check:
            report = verify_complex(self)
            if not report.ok:
                raise UnverifiedComplex(f"d_{report.witness[0]} o d_{report.witness[0] + 1} != 0")

    @property
    def top(self) -> int:
        return len(self.dims) - 1


def verify_complex(c: ChainComplexSpec) -> ValidationReport:
    ds = c.differentials
    for n in range(1, len(ds)):
        if not fin_mul(ds[n - 1], ds[n]).is_zero():
            return ValidationReport(False, n, "d o d != 0", (n,))
    return ValidationReport(True, max(len(ds) - 1, 0))


# -- rank ----------------------------------------------------------------------

def _primitive(row: dict[int, int]) -> dict[int, int]:
    g = 0
    for v in row.values():
        g = gcd(g, v)
    if g > 1:
        row = {k: v // g for k, v in row.items()}
    return row


def _rank_integer_rows(rows) -> int:
    pivots: dict[int, dict[int, int]] = {}
    for r in rows:
        while r:
            c = min(r)
            p = pivots.get(c)
            if p is None:
                pivots[c] = r
                break
            a, b = p[c], r[c]
            new = {k: a * v for k, v in r.items()}
            for k, v in p.items():
                new[k] = new.get(k, 0) - b * v
            r = _primitive({k: v for k, v in new.items() if v})
    return len(pivots)


def _rank_mod_p(rows, p: int) -> int:
    pivots: dict[int, dict[int, int]] = {}
    for r in rows:
        while r:
            c = min(r)
            piv = pivots.get(c)
            if piv is None:
                inv = pow(r[c], -1, p)
                pivots[c] = {k: v * inv % p for k, v in r.items()}
                break
            b = r[c]
            new = dict(r)
            for k, v in piv.items():
                new[k] = (new.get(k, 0) - b * v) % p
            r = {k: v for k, v in new.items() if v}
    return len(pivots)


def rank(M: FinMat) -> int:
    """Rank of a finite matrix over ``Z``, ``Q`` or ``Z/p`` (``Z`` ranks are taken over ``Q``)."""
    R = M.ring
    rows = M.rows().values()
    if R.kind == "Zp":
        return _rank_mod_p([dict(r) for r in rows], R.p)
    int_rows = []
    for r in rows:
        den = 1
        for v in r.values():
            den = lcm(den, getattr(v, "denominator", 1))
        int_rows.append(_primitive({k: int(v * den) for k, v in r.items()}))
    return _rank_integer_rows(int_rows)


# -- Smith normal form ---------------------------------------------------------

def smith_normal_form(M) -> tuple[int, ...]:
    """Nonzero invariant factors ``d_1 | d_2 | ...`` of an integer matrix.

    ``M`` is a dense list of rows or an integer :class:`FinMat`.
    """
    if isinstance(M, FinMat):
        n = 1 + max((i for i, _ in M.entries), default=-1)
        m = 1 + max((j for _, j in M.entries), default=-1)
        A = [[int(M[i, j]) for j in range(m)] for i in range(n)]
    else:
        A = [[int(x) for x in row] for row in M]
    rows = len(A)
    cols = len(A[0]) if rows else 0
    factors = []
    t = 0
    while t < min(rows, cols):
        # pivot on the least nonzero absolute value in the trailing block
        best = None
        for i in range(t, rows):
            for j in range(t, cols):
                if A[i][j] and (best is None or abs(A[i][j]) < abs(A[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        i, j = best
        A[t], A[i] = A[i], A[t]
        for row in A:
            row[t], row[j] = row[j], row[t]
        while True:
            p = A[t][t]
            for i in range(t + 1, rows):
                q = A[i][t] // p
                if q:
                    A[i] = [x - q * y for x, y in zip(A[i], A[t])]
            for j in range(t + 1, cols):
                q = A[t][j] // p
                if q:
                    for row in A:
                        row[j] -= q * row[t]
            rest = [(abs(A[i][t]), 0, i) for i in range(t + 1, rows) if A[i][t]]
            rest += [(abs(A[t][j]), 1, j) for j in range(t + 1, cols) if A[t][j]]
            if rest:
                # remainders are smaller than the pivot; promote the least one
                _, is_col, k = min(rest)
                if is_col:
                    for row in A:
                        row[t], row[k] = row[k], row[t]
                else:
                    A[t], A[k] = A[k], A[t]
                continue
            bad = next(
                (i for i in range(t + 1, rows) for j in range(t + 1, cols) if A[i][j] % p),
                None,
            )
            if bad is None:
                break
            A[t] = [x + y for x, y in zip(A[t], A[bad])]
        factors.append(abs(A[t][t]))
        t += 1
    return tuple(factors)


# -- homology ------------------------------------------------------------------

@dataclass(frozen=True)
class HomologyGroup:
    """``Z^rank`` plus ``Z/t`` for each ``t`` in ``torsion``."""

    rank: int
    torsion: tuple[int, ...] = ()

    def __str__(self):
        parts = [f"Z^{self.rank}"] if self.rank else []
        parts += [f"Z/{t}" for t in self.torsion]
        return " + ".join(parts) or "0"


def homology_dims(c: ChainComplexSpec) -> list:
    """Homology in degrees ``0..N``.

    Over a field: a list of dimensions.  Over ``Z``: a list of
    :class:`HomologyGroup`.
    """
    report = verify_complex(c)
    if not report.ok:
        raise UnverifiedComplex(f"complex fails d o d = 0 at degree {report.witness[0]}")
    N = c.top
    if c.ring.is_field:
        ranks = [0] + [rank(d) for d in c.differentials] + [0]
        return [c.dims[n] - ranks[n] - ranks[n + 1] for n in range(N + 1)]
    snf = [()] + [smith_normal_form(d) for d in c.differentials] + [()]
    return [
        HomologyGroup(
            c.dims[n] - len(snf[n]) - len(snf[n + 1]),
            tuple(f for f in snf[n + 1] if f > 1),
        )
        for n in range(N + 1)
    ]


def euler_characteristic(values: Sequence[int]) -> int:
    return sum((-1) ** n * v for n, v in enumerate(values))
