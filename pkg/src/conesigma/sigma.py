"""The suspension algebra: cone modulo finite matrices, and as left fractions.

Two presentations are modelled side by side:

* :class:`SigmaClass` -- a class ``[E]`` in the quotient, held through any
  cone representative;
* :class:`LeftFraction` -- a pair ``(n, E)`` standing for ``Ibar_n^{-1} E``
  in the localization at ``S = {Ibar_n}``.

Equality in the quotient is decided only when the difference of
representatives carries a ``Finite`` certificate.  Otherwise the answer is
:class:`Unknown` together with a report of where the two agree or disagree
on a window; the procedures here never assert inequality.
"""
from __future__ import annotations

from dataclasses import dataclass, field, replace

from .cone import (
    ConeMat, Finite, cone_add, cone_identity, cone_mul, cone_neg, cone_sub,
    eq_on_window, ibar, materialize_finite, window_diff,
)
from .errors import PreconditionError, WitnessVerificationError
from .finmat import FinMat

__all__ = [
    "SigmaClass", "LeftFraction", "WindowReport", "EqualCertified", "Unknown",
    "sigma_eq", "sigma_add", "sigma_mul", "sigma_neg", "sigma_one",
    "ore_move_witness", "ore_ann_witness", "frac_mul", "frac_add",
    "frac_to_sigma", "sigma_to_frac", "frac_eq",
]

DEFAULT_WINDOW = 64


@dataclass(frozen=True)
class SigmaClass:
    rep: ConeMat

    def __add__(self, other):
        return sigma_add(self, other)

    def __sub__(self, other):
        return SigmaClass(cone_sub(self.rep, other.rep))

    def __mul__(self, other):
        return sigma_mul(self, other)

    def __neg__(self):
        return sigma_neg(self)


@dataclass(frozen=True)
class LeftFraction:
    """``Ibar_{denom_index}^{-1} * numer``; ``denom_index == 0`` is the unit denominator."""

    denom_index: int
    numer: ConeMat

    def __post_init__(self):
        if self.denom_index < 0:
            raise ValueError("denominator index must be a natural number")

    def __mul__(self, other):
        return frac_mul(self, other)

    def __add__(self, other):
        return frac_add(self, other)


@dataclass(frozen=True)
class WindowReport:
    window: int
    disagreements: list = field(default_factory=list)

    @property
    def clean(self) -> bool:
        return not self.disagreements


@dataclass(frozen=True)
class EqualCertified:
    """The difference is a finite matrix; ``evidence`` is that matrix."""

    bound: int
    evidence: FinMat
    witness: int | None = None
    certified = True


@dataclass(frozen=True)
class Unknown:
    report: WindowReport
    certified = False


def sigma_one(ring) -> SigmaClass:
    return SigmaClass(cone_identity(ring))


def sigma_add(a: SigmaClass, b: SigmaClass) -> SigmaClass:
    return SigmaClass(cone_add(a.rep, b.rep))


def sigma_mul(a: SigmaClass, b: SigmaClass) -> SigmaClass:
    return SigmaClass(cone_mul(a.rep, b.rep))


def sigma_neg(a: SigmaClass) -> SigmaClass:
    return SigmaClass(cone_neg(a.rep))


def sigma_eq(a: SigmaClass, b: SigmaClass, window: int = DEFAULT_WINDOW):
    d = cone_sub(a.rep, b.rep)
    if isinstance(d.cert, Finite):
        return EqualCertified(d.cert.bound, materialize_finite(d))
    return Unknown(WindowReport(window, window_diff(a.rep, b.rep, window)))


def ore_move_witness(n: int, E: ConeMat) -> tuple[int, ConeMat]:
    """Find ``m`` and ``E'`` with ``E' * Ibar_n == Ibar_m * E``.

    ``m`` is the least index clearing the supports of the first ``n``
    columns of ``E`` (and at least ``n``); ``E' = Ibar_m * E``.  The identity
    is checked before returning.
    """
    if n == 0:
        return 0, E
    R = E.ring
    m = n
    for j in range(n):
        c = E.col(j)
        if c:
            m = max(m, max(c) + 1)
    Eprime = cone_mul(ibar(m, R), E)
    lhs = cone_mul(Eprime, ibar(n, R))
    # the two sides can only differ in the first n columns
    for j in range(n):
        if Eprime.col(j) or lhs.col(j):
            raise WitnessVerificationError(f"column {j} of Ibar_{m} * E is not cleared")
    span = 2 * m + 8
    if not eq_on_window(lhs, Eprime, span):
        raise WitnessVerificationError(f"E' * Ibar_{n} != Ibar_{m} * E on window {span}")
    return m, Eprime


def ore_ann_witness(n: int, E: ConeMat) -> int:
    """Given ``E * Ibar_n == 0``, return ``m`` with ``Ibar_m * E == 0``.

    Such an ``E`` equals ``E * I_n`` and so is finite; a ``Finite``
    certificate is required to make that checkable.
    """
    if not isinstance(E.cert, Finite):
        raise PreconditionError(f"annihilator witness needs a Finite certificate, got {E.cert}")
    F = materialize_finite(E)
    if any(j >= n for _, j in F.entries):
        raise PreconditionError(f"E * Ibar_{n} != 0")
    m = 1 + max((i for i, _ in F.entries), default=-1)
    if not materialize_finite(cone_mul(ibar(m, E.ring), E)).is_zero():
        raise WitnessVerificationError(f"Ibar_{m} * E != 0")
    return m


def frac_mul(f: LeftFraction, g: LeftFraction) -> LeftFraction:
    m, a_moved = ore_move_witness(g.denom_index, f.numer)
    return LeftFraction(max(m, f.denom_index), cone_mul(a_moved, g.numer))


def frac_add(f: LeftFraction, g: LeftFraction) -> LeftFraction:
    s, t = f.denom_index, g.denom_index
    R = f.numer.ring
    if s == t:
        return LeftFraction(s, cone_add(f.numer, g.numer))
    return LeftFraction(
        max(s, t), cone_add(cone_mul(ibar(t, R), f.numer), cone_mul(ibar(s, R), g.numer))
    )


def frac_to_sigma(f: LeftFraction) -> SigmaClass:
    # every Ibar_n is congruent to I modulo finite matrices
    return SigmaClass(f.numer)


def sigma_to_frac(a: SigmaClass) -> LeftFraction:
    return LeftFraction(0, a.rep)


def frac_eq(f: LeftFraction, g: LeftFraction, window: int = DEFAULT_WINDOW):
    """Compare two fractions through the quotient.

    A certified answer also carries ``witness = p`` such that
    ``B = B' = Ibar_p`` realize the fraction equivalence: ``Ibar_p`` absorbs
    both denominators and kills the difference of numerators.
    """
    verdict = sigma_eq(frac_to_sigma(f), frac_to_sigma(g), window)
    if not verdict.certified:
        return verdict
    p = max(f.denom_index, g.denom_index, verdict.bound)
    R = f.numer.ring
    killed = cone_mul(ibar(p, R), cone_sub(f.numer, g.numer))
    if not materialize_finite(killed).is_zero():
        raise WitnessVerificationError(f"Ibar_{p} does not kill the numerator difference")
    return replace(verdict, witness=p)
