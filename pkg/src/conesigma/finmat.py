"""Finite sparse matrices: the non-unital algebra of finite ``N x N`` matrices.

A :class:`FinMat` stores only its nonzero entries, keyed by ``(row, col)``
and kept in lexicographic order, so two matrices are equal exactly when
their entry maps are equal.  There is deliberately no global identity: the
``I_n`` are ordinary finite elements and serve as idempotent local units.
"""
from __future__ import annotations

from collections import defaultdict
from types import MappingProxyType
from typing import Iterable, Mapping

from .coeff import QQ
from .errors import CoefficientMismatch, PreconditionError

__all__ = [
    "FinMat", "E", "I", "fin_mul", "transpose", "local_unit",
    "IdemObject", "idem_hom", "unit_iso_pair", "unit_decompose",
]


class FinMat:
    __slots__ = ("ring", "_entries", "_rows")

    def __init__(self, ring=QQ, entries: Mapping[tuple[int, int], object] | None = None):
        self.ring = ring
        clean = {}
        for (i, j), v in (entries or {}).items():
            if i < 0 or j < 0:
                raise ValueError(f"negative index ({i}, {j})")
            v = ring.convert(v)
            if not ring.is_zero(v):
                clean[(int(i), int(j))] = v
        self._entries = MappingProxyType(dict(sorted(clean.items())))
        self._rows = None

    @classmethod
    def _raw(cls, ring, entries):
        # entries already normalized and zero-free
        self = cls.__new__(cls)
        self.ring = ring
        self._entries = MappingProxyType(dict(sorted(entries.items())))
        self._rows = None
        return self

    @classmethod
    def from_dense(cls, ring, rows: Iterable[Iterable]) -> "FinMat":
        return cls(ring, {(i, j): v for i, row in enumerate(rows) for j, v in enumerate(row)})

    @property
    def entries(self) -> Mapping[tuple[int, int], object]:
        return self._entries

    @property
    def bound(self) -> int:
        """``1 +`` the largest row or column index in the support; 0 if empty."""
        if not self._entries:
            return 0
        return 1 + max(max(i, j) for i, j in self._entries)

    def rows(self) -> dict[int, dict[int, object]]:
        if self._rows is None:
            rows = defaultdict(dict)
            for (i, j), v in self._entries.items():
                rows[i][j] = v
            self._rows = dict(rows)
        return self._rows

    def is_zero(self) -> bool:
        return not self._entries

    def __getitem__(self, ij):
        return self._entries.get(ij, self.ring.zero)

    def __len__(self):
        return len(self._entries)

    def __iter__(self):
        return iter(self._entries.items())

    def __eq__(self, other):
        if not isinstance(other, FinMat):
            return NotImplemented
        return self.ring == other.ring and dict(self._entries) == dict(other._entries)

    def __hash__(self):
        return hash((self.ring, frozenset(self._entries.items())))

    def __repr__(self):
        body = ", ".join(f"({i},{j}): {self.ring.format(v)}" for (i, j), v in self._entries.items())
        return f"FinMat({{{body}}})"

    def _same_ring(self, other):
        if self.ring != other.ring:
            raise CoefficientMismatch(f"{self.ring} vs {other.ring}")

    def __add__(self, other: FinMat) -> FinMat:
        self._same_ring(other)
        R = self.ring
        out = dict(self._entries)
        for k, v in other._entries.items():
            s = R.add(out[k], v) if k in out else v
            if R.is_zero(s):
                out.pop(k, None)
            else:
                out[k] = s
        return FinMat._raw(R, out)

    def __neg__(self) -> FinMat:
        return FinMat._raw(self.ring, {k: self.ring.neg(v) for k, v in self._entries.items()})

    def __sub__(self, other: FinMat) -> FinMat:
        return self + (-other)

    def __mul__(self, other: FinMat) -> FinMat:
        return fin_mul(self, other)

    def scale(self, c) -> FinMat:
        """Left scalar multiple ``c * self``."""
        R = self.ring
        c = R.convert(c)
        out = {}
        for k, v in self._entries.items():
            w = R.mul(c, v)
            if not R.is_zero(w):
                out[k] = w
        return FinMat._raw(R, out)

    def transpose(self) -> FinMat:
        return FinMat._raw(self.ring, {(j, i): v for (i, j), v in self._entries.items()})

    @property
    def T(self) -> FinMat:
        return self.transpose()

    def to_dense(self, n: int | None = None, m: int | None = None) -> list[list]:
        n = self.bound if n is None else n
        m = n if m is None else m
        return [[self[i, j] for j in range(m)] for i in range(n)]


def E(k: int, l: int, ring=QQ) -> FinMat:
    """Matrix unit with a single one at ``(k, l)`` (0-based)."""
    return FinMat._raw(ring, {(k, l): ring.one})


def I(n: int, ring=QQ) -> FinMat:
    """The idempotent with ones at ``(0,0) .. (n-1,n-1)``; ``I(0)`` is zero."""
    return FinMat._raw(ring, {(i, i): ring.one for i in range(n)})


def fin_mul(A: FinMat, B: FinMat) -> FinMat:
    A._same_ring(B)
    R = A.ring
    brows = B.rows()
    out: dict[tuple[int, int], object] = {}
    for i, arow in A.rows().items():
        acc: dict[int, object] = {}
        for k, a in arow.items():
            brow = brows.get(k)
            if not brow:
                continue
            for j, b in brow.items():
                p = R.mul(a, b)
                acc[j] = R.add(acc[j], p) if j in acc else p
        for j, v in acc.items():
            if not R.is_zero(v):
                out[(i, j)] = v
    return FinMat._raw(R, out)


def transpose(A: FinMat) -> FinMat:
    return A.transpose()


def local_unit(family: Iterable[FinMat]) -> int:
    """Smallest ``m`` such that ``I_m`` is a two-sided unit for every member.

    The answer is verified by multiplication before it is returned.
    """
    family = list(family)
    if not family:
        raise PreconditionError("local_unit needs a nonempty family")
    m = max(A.bound for A in family)
    u = I(m, family[0].ring)
    for A in family:
        if fin_mul(u, A) != A or fin_mul(A, u) != A:
            raise AssertionError(f"I_{m} is not a local unit for {A!r}")
    return m


class IdemObject:
    """An object of the category of idempotents: a finite ``u`` with ``u*u == u``."""

    __slots__ = ("u",)

    def __init__(self, u: FinMat):
        if fin_mul(u, u) != u:
            raise PreconditionError(f"{u!r} is not idempotent")
        self.u = u

    def __repr__(self):
        return f"IdemObject({self.u!r})"

    def __eq__(self, other):
        return isinstance(other, IdemObject) and self.u == other.u

    def __hash__(self):
        return hash(self.u)


def _idem(x) -> FinMat:
    return x.u if isinstance(x, IdemObject) else IdemObject(x).u


def idem_hom(u, f: FinMat, v) -> bool:
    """Whether ``f`` is a morphism ``u -> v``, i.e. lies in ``u * Mat * v``."""
    u, v = _idem(u), _idem(v)
    return fin_mul(fin_mul(u, f), v) == f


def unit_iso_pair(n: int, ring=QQ) -> tuple[FinMat, FinMat]:
    """Mutually inverse morphisms ``E_00 -> E_nn`` and ``E_nn -> E_00``.

    Returns ``(E(0, n), E(n, 0))``; their products in the two orders are
    ``E(0, 0)`` and ``E(n, n)``.
    """
    if n < 0:
        raise PreconditionError("n must be a natural number")
    f, g = E(0, n, ring), E(n, 0, ring)
    assert fin_mul(f, g) == E(0, 0, ring) and fin_mul(g, f) == E(n, n, ring)
    return f, g


def unit_decompose(f: FinMat, m: int) -> list[FinMat]:
    """Split ``f`` (with ``f * I_m == f``) along ``I_m = E_00 + ... + E_{m-1,m-1}``."""
    R = f.ring
    if fin_mul(f, I(m, R)) != f:
        raise PreconditionError(f"f * I_{m} != f")
    return [fin_mul(f, E(n, n, R)) for n in range(m)]
