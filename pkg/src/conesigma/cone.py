"""The cone algebra: lazily represented ``N x N`` matrices with bounded bands.

A :class:`ConeMat` is defined by two oracles, ``row(i)`` and ``col(j)``,
each returning the finitely many nonzero entries of that line as a mapping.
Knowing the supports (and not just single entries) is what makes products
computable: ``(A*B)[i, :]`` is the finite combination of the rows of ``B``
indexed by the support of ``A[i, :]``.

Each matrix also carries

* ``band`` -- a bound on the number of nonzero entries in every row and
  column (sums add bands, products multiply them);
* ``value_bound`` -- an optional finite superset of its entry values,
  tracked for information only;
* ``cert`` -- ``None``, :class:`Finite` or :class:`ScalarPlusFinite`, a
  machine-checkable statement that the matrix is finite (or a scalar
  identity plus a finite matrix).  Certificates are what allow equality in
  the quotient by finite matrices to be decided.

Oracles must be deterministic; the per-instance row/column caches are an
implementation detail and never change results.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from types import MappingProxyType
from typing import Callable, Iterable, Mapping

from .coeff import ValidationReport
from .errors import CertificateRequired, CoefficientMismatch, WitnessVerificationError
from .finmat import FinMat
from .pairing import CANTOR, Pairing

__all__ = [
    "Finite", "ScalarPlusFinite", "ConeMat", "WElement",
    "cone_from_finite", "cone_identity", "cone_zero", "cone_scalar", "ibar",
    "cone_add", "cone_sub", "cone_neg", "cone_scale", "cone_mul", "cone_transpose",
    "phi_map", "pairing_shifts", "right_w_action", "w_iso_forward", "w_iso_backward",
    "window_render", "eq_on_window", "window_diff", "materialize_finite", "check_oracles",
]

_EMPTY = MappingProxyType({})
VALUE_BOUND_CAP = 512


@dataclass(frozen=True)
class Finite:
    """All nonzero entries lie in ``[0, bound) x [0, bound)``."""

    bound: int


@dataclass(frozen=True)
class ScalarPlusFinite:
    """The matrix is ``scalar * I`` plus a matrix certified ``Finite(bound)``."""

    scalar: object
    bound: int


def _normalize_cert(cert, ring):
    if isinstance(cert, ScalarPlusFinite) and ring.is_zero(cert.scalar):
        return Finite(cert.bound)
    return cert


def _spf(cert, ring):
    """View a certificate as ``(scalar, bound)`` or ``None``."""
    if isinstance(cert, Finite):
        return ring.zero, cert.bound
    if isinstance(cert, ScalarPlusFinite):
        return cert.scalar, cert.bound
    return None


class ConeMat:
    __slots__ = ("ring", "_row_fn", "_col_fn", "band", "value_bound", "cert", "_rcache", "_ccache")

    def __init__(
        self,
        ring,
        row: Callable[[int], Mapping[int, object]],
        col: Callable[[int], Mapping[int, object]],
        band: int,
        cert=None,
        value_bound: Iterable | None = None,
    ):
        self.ring = ring
        self._row_fn = row
        self._col_fn = col
        self.band = band
        self.cert = _normalize_cert(cert, ring)
        if value_bound is not None:
            value_bound = frozenset(value_bound) | {ring.zero}
            if len(value_bound) > VALUE_BOUND_CAP:
                value_bound = None
        self.value_bound = value_bound
        self._rcache: dict[int, Mapping] = {}
        self._ccache: dict[int, Mapping] = {}

    @classmethod
    def from_oracles(cls, ring, entry, row_support, col_support, band, cert=None, value_bound=None):
        """Build from an entry oracle plus (possibly loose) support oracles."""

        def row(i):
            return {j: v for j in row_support(i) if not ring.is_zero(v := entry(i, j))}

        def col(j):
            return {i: v for i in col_support(j) if not ring.is_zero(v := entry(i, j))}

        return cls(ring, row, col, band, cert, value_bound)

    def row(self, i: int) -> Mapping[int, object]:
        """Nonzero entries of row ``i`` as ``{column: value}``."""
        r = self._rcache.get(i)
        if r is None:
            r = self._row_fn(i)
            r = MappingProxyType(dict(r)) if r else _EMPTY
            self._rcache[i] = r
        return r

    def col(self, j: int) -> Mapping[int, object]:
        c = self._ccache.get(j)
        if c is None:
            c = self._col_fn(j)
            c = MappingProxyType(dict(c)) if c else _EMPTY
            self._ccache[j] = c
        return c

    def entry(self, i: int, j: int):
        return self.row(i).get(j, self.ring.zero)

    __getitem__ = lambda self, ij: self.entry(*ij)  # noqa: E731

    def row_support(self, i: int) -> list[int]:
        return sorted(self.row(i))

    def col_support(self, j: int) -> list[int]:
        return sorted(self.col(j))

    def __repr__(self):
        return f"<ConeMat over {self.ring} band={self.band} cert={self.cert}>"

    def __add__(self, other):
        return cone_add(self, other)

    def __sub__(self, other):
        return cone_sub(self, other)

    def __neg__(self):
        return cone_neg(self)

    def __mul__(self, other):
        return cone_mul(self, other)

    @property
    def T(self):
        return cone_transpose(self)


def _same_ring(A, B):
    if A.ring != B.ring:
        raise CoefficientMismatch(f"{A.ring} vs {B.ring}")


def _accumulate(ring, acc, key, value):
    acc[key] = ring.add(acc[key], value) if key in acc else value


def _drop_zeros(ring, acc):
    return {k: v for k, v in acc.items() if not ring.is_zero(v)}


# -- constructors ------------------------------------------------------------

def cone_from_finite(F: FinMat) -> ConeMat:
    R = F.ring
    rows = F.rows()
    cols = F.transpose().rows()
    band = max([len(r) for r in rows.values()] + [len(c) for c in cols.values()] + [0])
    return ConeMat(
        R, lambda i: rows.get(i, _EMPTY), lambda j: cols.get(j, _EMPTY), band,
        Finite(F.bound), set(F.entries.values()),
    )


def cone_zero(ring) -> ConeMat:
    return ConeMat(ring, lambda i: _EMPTY, lambda j: _EMPTY, 0, Finite(0), ())


def cone_scalar(c, ring) -> ConeMat:
    """``c * I``."""
    c = ring.convert(c)
    if ring.is_zero(c):
        return cone_zero(ring)
    line = lambda i: {i: c}  # noqa: E731
    return ConeMat(ring, line, line, 1, ScalarPlusFinite(c, 0), (c,))


def cone_identity(ring) -> ConeMat:
    return ibar(0, ring)


def ibar(n: int, ring) -> ConeMat:
    """``I - I_n``: ones on the diagonal from index ``n`` on."""
    one = ring.one
    line = lambda i: {i: one} if i >= n else _EMPTY  # noqa: E731
    return ConeMat(ring, line, line, 1, ScalarPlusFinite(one, n), (one,))


# -- value bounds ------------------------------------------------------------

def _vb_add(ring, va, vb):
    if va is None or vb is None or len(va) * len(vb) > VALUE_BOUND_CAP:
        return None
    return {ring.add(x, y) for x in va for y in vb}


def _vb_mul(ring, va, vb, terms):
    if va is None or vb is None or len(va) * len(vb) > VALUE_BOUND_CAP:
        return None
    prods = {ring.mul(x, y) for x in va for y in vb}
    sums = {ring.zero}
    for _ in range(terms):
        nxt = {ring.add(s, p) for s in sums for p in prods}
        if len(nxt) > VALUE_BOUND_CAP:
            return None
        if nxt == sums:
            break
        sums = nxt
    return sums


# -- arithmetic --------------------------------------------------------------

def cone_add(A: ConeMat, B: ConeMat) -> ConeMat:
    _same_ring(A, B)
    R = A.ring

    def merge(a, b):
        acc = dict(a)
        for k, v in b.items():
            _accumulate(R, acc, k, v)
        return _drop_zeros(R, acc)

    cert = None
    sa, sb = _spf(A.cert, R), _spf(B.cert, R)
    if sa is not None and sb is not None:
        cert = ScalarPlusFinite(R.add(sa[0], sb[0]), max(sa[1], sb[1]))
    return ConeMat(
        R, lambda i: merge(A.row(i), B.row(i)), lambda j: merge(A.col(j), B.col(j)),
        A.band + B.band, cert, _vb_add(R, A.value_bound, B.value_bound),
    )


def cone_scale(c, A: ConeMat) -> ConeMat:
    """Left scalar multiple ``c * A``."""
    R = A.ring
    c = R.convert(c)

    def scaled(line):
        return _drop_zeros(R, {k: R.mul(c, v) for k, v in line.items()})

    s = _spf(A.cert, R)
    cert = None if s is None else ScalarPlusFinite(R.mul(c, s[0]), s[1])
    vb = None if A.value_bound is None else {R.mul(c, v) for v in A.value_bound}
    return ConeMat(R, lambda i: scaled(A.row(i)), lambda j: scaled(A.col(j)), A.band, cert, vb)


def cone_neg(A: ConeMat) -> ConeMat:
    return cone_scale(A.ring.neg(A.ring.one), A)


def cone_sub(A: ConeMat, B: ConeMat) -> ConeMat:
    return cone_add(A, cone_neg(B))


def _finite_bound_rows(C: ConeMat, nrows: int) -> int:
    hi = 0
    for i in range(nrows):
        r = C.row(i)
        if r:
            hi = max(hi, i + 1, max(r) + 1)
    return hi


def _finite_bound_cols(C: ConeMat, ncols: int) -> int:
    hi = 0
    for j in range(ncols):
        c = C.col(j)
        if c:
            hi = max(hi, j + 1, max(c) + 1)
    return hi


def cone_mul(A: ConeMat, B: ConeMat) -> ConeMat:
    _same_ring(A, B)
    R = A.ring

    def row(i):
        acc = {}
        for k, a in A.row(i).items():
            for j, b in B.row(k).items():
                _accumulate(R, acc, j, R.mul(a, b))
        return _drop_zeros(R, acc)

    def col(j):
        acc = {}
        for k, b in B.col(j).items():
            for i, a in A.col(k).items():
                _accumulate(R, acc, i, R.mul(a, b))
        return _drop_zeros(R, acc)

    vb = _vb_mul(R, A.value_bound, B.value_bound, min(A.band, B.band))
    C = ConeMat(R, row, col, A.band * B.band, None, vb)
    # a finite factor forces a finite product; its bound is read off the
    # finitely many rows (or columns) that can be nonzero
    if isinstance(A.cert, Finite):
        C.cert = Finite(_finite_bound_rows(C, A.cert.bound))
    elif isinstance(B.cert, Finite):
        C.cert = Finite(_finite_bound_cols(C, B.cert.bound))
    else:
        sa, sb = _spf(A.cert, R), _spf(B.cert, R)
        if sa is not None and sb is not None:
            C.cert = _normalize_cert(ScalarPlusFinite(R.mul(sa[0], sb[0]), max(sa[1], sb[1])), R)
    return C


def cone_transpose(A: ConeMat) -> ConeMat:
    return ConeMat(A.ring, A.col, A.row, A.band, A.cert, A.value_bound)


def phi_map(A: ConeMat, pairing: Pairing = CANTOR) -> ConeMat:
    """The pairing endomorphism: ``phi(A)[i, j] = A[x, x']`` when ``i, j``
    unpair to ``(x, t)``, ``(x', t)`` with equal second coordinate, else 0.

    Row ``i`` of ``phi(A)`` is a relabelled copy of row ``x`` of ``A``.
    """
    pair, unpair = pairing

    def line(fetch):
        def get(i):
            x, t = unpair(i)
            return {pair(c, t): v for c, v in fetch(x).items()}
        return get

    cert = None
    if A.cert is not None and A.cert.bound == 0:
        cert = A.cert
    return ConeMat(A.ring, line(A.row), line(A.col), A.band, cert, A.value_bound)


@lru_cache(maxsize=None)
def pairing_shifts(ring, pairing: Pairing = CANTOR) -> tuple[ConeMat, ConeMat]:
    """The 0/1 matrices ``alpha`` and ``beta``.

    ``alpha[i, j] = 1`` iff ``j`` unpairs to ``(i, 0)``;
    ``beta[i, j] = 1`` iff ``unpair(j) = unpair(i) + (0, 1)``.
    """
    pair, unpair = pairing
    one = ring.one

    def alpha_col(j):
        x, t = unpair(j)
        return {x: one} if t == 0 else _EMPTY

    def beta_row(i):
        x, t = unpair(i)
        return {pair(x, t + 1): one}

    def beta_col(j):
        x, t = unpair(j)
        return {pair(x, t - 1): one} if t > 0 else _EMPTY

    alpha = ConeMat(ring, lambda i: {pair(i, 0): one}, alpha_col, 1, None, (one,))
    beta = ConeMat(ring, beta_row, beta_col, 1, None, (one,))
    return alpha, beta


# -- the bimodule W ----------------------------------------------------------

@dataclass(frozen=True)
class WElement:
    """An element of the cone regarded in the bimodule with right action twisted by ``phi``."""

    underlying: ConeMat


def right_w_action(B: WElement, A: ConeMat, pairing: Pairing = CANTOR) -> WElement:
    return WElement(cone_mul(B.underlying, phi_map(A, pairing)))


def w_iso_forward(A: ConeMat, B: WElement, pairing: Pairing = CANTOR) -> WElement:
    """``(A, B) -> A*alpha + B*beta``."""
    alpha, beta = pairing_shifts(A.ring, pairing)
    return WElement(cone_add(cone_mul(A, alpha), cone_mul(B.underlying, beta)))


def w_iso_backward(C: WElement, pairing: Pairing = CANTOR) -> tuple[ConeMat, WElement]:
    """``C -> (C*alpha^T, C*beta^T)``."""
    alpha, beta = pairing_shifts(C.underlying.ring, pairing)
    return (
        cone_mul(C.underlying, cone_transpose(alpha)),
        WElement(cone_mul(C.underlying, cone_transpose(beta))),
    )


# -- windows and certificates ------------------------------------------------

def window_render(A: ConeMat, rows: range, cols: range) -> list[list]:
    zero = A.ring.zero
    out = []
    for i in rows:
        r = A.row(i)
        out.append([r.get(j, zero) for j in cols])
    return out


def _clip(line, n):
    return {k: v for k, v in line.items() if k < n}


def eq_on_window(A: ConeMat, B: ConeMat, N: int) -> bool:
    """Entrywise equality on ``[0, N) x [0, N)``."""
    _same_ring(A, B)
    return all(_clip(A.row(i), N) == _clip(B.row(i), N) for i in range(N))


def window_diff(A: ConeMat, B: ConeMat, N: int, limit: int | None = 16) -> list[tuple]:
    """Disagreements ``(i, j, A[i,j], B[i,j])`` on the window, row-major."""
    _same_ring(A, B)
    zero = A.ring.zero
    out = []
    for i in range(N):
        ra, rb = _clip(A.row(i), N), _clip(B.row(i), N)
        if ra == rb:
            continue
        for j in sorted(ra.keys() | rb.keys()):
            a, b = ra.get(j, zero), rb.get(j, zero)
            if a != b:
                out.append((i, j, a, b))
                if limit is not None and len(out) >= limit:
                    return out
    return out


def materialize_finite(A: ConeMat) -> FinMat:
    """Enumerate a ``Finite``-certified matrix into an exact :class:`FinMat`."""
    if not isinstance(A.cert, Finite):
        raise CertificateRequired(f"materialize_finite needs a Finite certificate, got {A.cert}")
    b = A.cert.bound
    entries = {}
    for i in range(b):
        for j, v in A.row(i).items():
            if j >= b:
                raise WitnessVerificationError(f"entry ({i}, {j}) escapes certificate bound {b}")
            entries[(i, j)] = v
    return FinMat(A.ring, entries)


def check_oracles(A: ConeMat, indices: Iterable[int]) -> ValidationReport:
    """Spot-check row/column agreement, the band bound and the certificate."""
    R = A.ring
    checked = 0
    cert = _spf(A.cert, R)
    for i in indices:
        checked += 1
        row, col = A.row(i), A.col(i)
        if len(row) > A.band or len(col) > A.band:
            return ValidationReport(False, checked, "band bound", (i,))
        for j, v in row.items():
            if A.col(j).get(i) != v:
                return ValidationReport(False, checked, "row/column disagreement", (i, j))
        for k, v in col.items():
            if A.row(k).get(i) != v:
                return ValidationReport(False, checked, "row/column disagreement", (k, i))
        if cert is not None:
            c, b = cert
            expected_far = {} if R.is_zero(c) else {i: c}
            if i >= b:
                if dict(row) != expected_far:
                    return ValidationReport(False, checked, "certificate", (i,))
            elif any(j >= b for j in row):
                return ValidationReport(False, checked, "certificate", (i,))
    return ValidationReport(True, checked)
