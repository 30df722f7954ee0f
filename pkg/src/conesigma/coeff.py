"""Exact coefficient arithmetic.

Two kinds of coefficient structure are supported and share one small
interface (``zero``, ``one``, ``add``, ``sub``, ``neg``, ``mul``,
``is_zero``, ``convert``, ``parse``, ``format``):

* :class:`CoeffRing` -- the integers, the rationals, or ``Z/p``.
* :class:`AlgebraSpec` -- a finite-dimensional unital algebra over a
  :class:`CoeffRing`, given by structure constants.  Elements are tuples of
  base-ring coordinates.

Matrices in :mod:`conesigma.finmat` and :mod:`conesigma.cone` accept either
kind, so the cone over an algebra ``A`` is simply the cone whose entries live
in ``A``.  Nothing here ever touches floating point.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Any

from .errors import DimensionMismatch, PreconditionError

__all__ = [
    "CoeffRing", "ZZ", "QQ", "IntegersModP", "ring_from_text",
    "AlgebraSpec", "ValidationReport", "alg_mul", "alg_validate",
    "as_algebra", "matrix_algebra_spec", "dual_numbers", "cyclic_group_algebra",
    "algebra_spec_from_dict", "algebra_spec_to_dict", "load_algebra_spec",
]


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


@dataclass(frozen=True)
class CoeffRing:
    """An exact commutative base ring: ``"Z"``, ``"Q"`` or ``"Zp"``."""

    kind: str
    p: int | None = None

    def __post_init__(self):
        if self.kind not in ("Z", "Q", "Zp"):
            raise ValueError(f"unknown ring kind {self.kind!r}")
        if self.kind == "Zp":
            if self.p is None or not _is_prime(self.p):
                raise PreconditionError(f"Z/p needs a prime p, got {self.p!r}")
        elif self.p is not None:
            raise ValueError("only Z/p takes a modulus")

    def __str__(self):
        return f"Zp:{self.p}" if self.kind == "Zp" else self.kind

    @property
    def is_field(self) -> bool:
        return self.kind != "Z"

    @property
    def base(self) -> "CoeffRing":
        return self

    @property
    def zero(self):
        return Fraction(0) if self.kind == "Q" else 0

    @property
    def one(self):
        return Fraction(1) if self.kind == "Q" else 1

    def convert(self, x):
        """Coerce an int, Fraction or string into this ring."""
        if isinstance(x, str):
            return self.parse(x)
        if self.kind == "Q":
            return Fraction(x)
        if isinstance(x, Fraction):
            if self.kind == "Z":
                if x.denominator != 1:
                    raise ValueError(f"{x} is not an integer")
                return x.numerator
            if x.denominator % self.p == 0:
                raise ValueError(f"{x} has no image in Z/{self.p}")
            return x.numerator * pow(x.denominator, -1, self.p) % self.p
        if isinstance(x, bool) or not isinstance(x, int):
            raise TypeError(f"cannot convert {x!r} into {self}")
        return x % self.p if self.kind == "Zp" else x

    def add(self, a, b):
        return (a + b) % self.p if self.kind == "Zp" else a + b

    def sub(self, a, b):
        return (a - b) % self.p if self.kind == "Zp" else a - b

    def neg(self, a):
        return -a % self.p if self.kind == "Zp" else -a

    def mul(self, a, b):
        return (a * b) % self.p if self.kind == "Zp" else a * b

    def inv(self, a):
        if self.kind == "Z":
            if a in (1, -1):
                return a
            raise ZeroDivisionError(f"{a} is not a unit in Z")
        if self.kind == "Q":
            return 1 / a
        return pow(a, -1, self.p)

    def is_zero(self, a) -> bool:
        return a == 0

    def parse(self, text: str):
        """Parse ``"a"`` or ``"a/b"``."""
        return self.convert(Fraction(text.strip()))

    def format(self, a) -> str:
        return str(a)


ZZ = CoeffRing("Z")
QQ = CoeffRing("Q")


def IntegersModP(p: int) -> CoeffRing:
    return CoeffRing("Zp", p)


def ring_from_text(text: str) -> CoeffRing:
    """``"Q"``, ``"Z"`` or ``"Zp:<p>"`` as used by the CLI and algebra files."""
    text = text.strip()
    if text in ("Q", "Z"):
        return CoeffRing(text)
    if text.startswith("Zp:"):
        return IntegersModP(int(text[3:]))
    raise ValueError(f"unknown ring {text!r}; expected Q, Z or Zp:<p>")


@dataclass
class ValidationReport:
    ok: bool
    checked: int = 0
    failure: str | None = None
    witness: tuple | None = None

    def __bool__(self):
        return self.ok


@dataclass(frozen=True)
class AlgebraSpec:
    """A finite-dimensional unital algebra given by structure constants.

    ``table[i][j]`` is the coordinate vector of ``e_i * e_j``; ``unit`` is the
    coordinate vector of the identity.  Construction normalizes every entry
    into ``base`` but does not check the algebra axioms; use
    :func:`alg_validate` for that.
    """

    base: CoeffRing
    labels: tuple
    table: tuple
    unit: tuple
    _terms: tuple = field(default=(), init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        n = len(self.labels)
        if n == 0:
            raise PreconditionError("an algebra needs at least one basis element")
        conv = self.base.convert
        table = tuple(tuple(tuple(conv(c) for c in vec) for vec in row) for row in self.table)
        if len(table) != n or any(len(row) != n for row in table) or any(
            len(vec) != n for row in table for vec in row
        ):
            raise DimensionMismatch(f"structure table must be {n}x{n}x{n}")
        unit = tuple(conv(c) for c in self.unit)
        if len(unit) != n:
            raise DimensionMismatch("unit has the wrong length")
        object.__setattr__(self, "labels", tuple(self.labels))
        object.__setattr__(self, "table", table)
        object.__setattr__(self, "unit", unit)
        # sparse (i, j, l, c) list; the bilinear product only walks these
        terms = tuple(
            (i, j, l, c)
            for i in range(n) for j in range(n)
            for l, c in enumerate(table[i][j]) if c != 0
        )
        object.__setattr__(self, "_terms", terms)

    @property
    def dim(self) -> int:
        return len(self.labels)

    @property
    def is_field(self) -> bool:
        return False

    @property
    def zero(self):
        return (self.base.zero,) * self.dim

    @property
    def one(self):
        return self.unit

    def basis(self, i: int):
        v = [self.base.zero] * self.dim
        v[i] = self.base.one
        return tuple(v)

    def scalar(self, c):
        c = self.base.convert(c)
        return tuple(self.base.mul(c, u) for u in self.unit)

    def convert(self, x):
        if isinstance(x, str):
            return self.parse(x)
        if isinstance(x, (tuple, list)):
            return self._check(tuple(self.base.convert(c) for c in x))
        return self.scalar(x)

    def _check(self, a):
        if len(a) != self.dim:
            raise DimensionMismatch(f"expected {self.dim} coordinates, got {len(a)}")
        return a

    def add(self, a, b):
        self._check(a), self._check(b)
        return tuple(self.base.add(x, y) for x, y in zip(a, b))

    def sub(self, a, b):
        self._check(a), self._check(b)
        return tuple(self.base.sub(x, y) for x, y in zip(a, b))

    def neg(self, a):
        return tuple(self.base.neg(x) for x in self._check(a))

    def mul(self, a, b):
        self._check(a), self._check(b)
        R = self.base
        out = [R.zero] * self.dim
        for i, j, l, c in self._terms:
            if a[i] != 0 and b[j] != 0:
                out[l] = R.add(out[l], R.mul(R.mul(a[i], b[j]), c))
        return tuple(out)

    def is_zero(self, a) -> bool:
        return all(x == 0 for x in a)

    def parse(self, text: str):
        """A scalar ``"a/b"`` (times the unit) or a coordinate list ``"[c0, c1, ...]"``."""
        text = text.strip()
        if text.startswith("["):
            inner = text[1:-1].strip()
            coords = [self.base.parse(t) for t in inner.split(",")] if inner else []
            return self._check(tuple(coords))
        return self.scalar(self.base.parse(text))

    def format(self, a) -> str:
        return "[" + ", ".join(self.base.format(c) for c in a) + "]"


def alg_mul(a, b, spec: AlgebraSpec):
    """Multiply two algebra elements; raises on a coordinate-count mismatch."""
    return spec.mul(a, b)


def alg_validate(spec: AlgebraSpec) -> ValidationReport:
    """Brute-force check of associativity on all basis triples and of the unit laws.

    The first failing triple (or basis index, for the unit) is returned as
    the report witness.
    """
    n = spec.dim
    e = [spec.basis(i) for i in range(n)]
    checked = 0
    for i, j, l in product(range(n), repeat=3):
        checked += 1
        if spec.mul(spec.mul(e[i], e[j]), e[l]) != spec.mul(e[i], spec.mul(e[j], e[l])):
            return ValidationReport(False, checked, "associativity", (i, j, l))
    for i in range(n):
        checked += 1
        if spec.mul(spec.unit, e[i]) != e[i]:
            return ValidationReport(False, checked, "left unit", (i,))
        if spec.mul(e[i], spec.unit) != e[i]:
            return ValidationReport(False, checked, "right unit", (i,))
    return ValidationReport(True, checked)


def as_algebra(ring: CoeffRing) -> AlgebraSpec:
    """The ring as a one-dimensional algebra over itself."""
    return AlgebraSpec(ring, ("1",), (((1,),),), (1,))


def matrix_algebra_spec(n: int, inner: AlgebraSpec | CoeffRing) -> AlgebraSpec:
    """The algebra of ``n x n`` matrices over ``inner``.

    Basis element ``(a, b, r)`` (matrix unit ``E_ab`` tensor inner basis
    ``r``) has index ``(a*n + b)*d + r``.
    """
    if n < 1:
        raise PreconditionError("matrix algebra size must be at least 1")
    if isinstance(inner, CoeffRing):
        inner = as_algebra(inner)
    R, d = inner.base, inner.dim
    dim = n * n * d

    def idx(a, b, r):
        return (a * n + b) * d + r

    labels = tuple(
        f"E{a}{b}" if d == 1 else f"E{a}{b}*{inner.labels[r]}"
        for a in range(n) for b in range(n) for r in range(d)
    )
    table = [[[R.zero] * dim for _ in range(dim)] for _ in range(dim)]
    for a, b, c, r, s in product(range(n), range(n), range(n), range(d), range(d)):
        # E_ab x_r * E_bc x_s = E_ac (x_r x_s); other products vanish
        vec = table[idx(a, b, r)][idx(b, c, s)]
        for t, coef in enumerate(inner.table[r][s]):
            vec[idx(a, c, t)] = coef
    unit = [R.zero] * dim
    for a in range(n):
        for t, coef in enumerate(inner.unit):
            unit[idx(a, a, t)] = coef
    return AlgebraSpec(R, labels, table, unit)


def dual_numbers(base: CoeffRing = QQ) -> AlgebraSpec:
    """``base[x]/(x^2)`` with basis ``(1, x)``."""
    return AlgebraSpec(base, ("1", "x"), [[[1, 0], [0, 1]], [[0, 1], [0, 0]]], [1, 0])


def cyclic_group_algebra(n: int, base: CoeffRing = QQ) -> AlgebraSpec:
    """The group algebra of ``Z/n`` with basis ``g^0 .. g^(n-1)``."""
    table = [[[1 if l == (i + j) % n else 0 for l in range(n)] for j in range(n)] for i in range(n)]
    return AlgebraSpec(base, tuple(f"g{i}" for i in range(n)), table, [1] + [0] * (n - 1))


# -- file format -------------------------------------------------------------

def algebra_spec_from_dict(doc: dict[str, Any]) -> AlgebraSpec:
    missing = {"field", "basis", "unit", "table"} - doc.keys()
    if missing:
        raise ValueError(f"algebra document is missing {sorted(missing)}")
    base = ring_from_text(doc["field"])
    conv = lambda c: base.parse(c) if isinstance(c, str) else base.convert(c)  # noqa: E731
    table = [[[conv(c) for c in vec] for vec in row] for row in doc["table"]]
    return AlgebraSpec(base, tuple(doc["basis"]), table, [conv(c) for c in doc["unit"]])


def algebra_spec_to_dict(spec: AlgebraSpec) -> dict[str, Any]:
    fmt = spec.base.format
    return {
        "field": str(spec.base),
        "basis": list(spec.labels),
        "unit": [fmt(c) for c in spec.unit],
        "table": [[[fmt(c) for c in vec] for vec in row] for row in spec.table],
    }


def load_algebra_spec(path) -> AlgebraSpec:
    """Read an algebra from a JSON document with ``field``/``basis``/``unit``/``table``."""
    with open(path, encoding="utf-8") as fh:
        return algebra_spec_from_dict(json.load(fh))

