"""
Working modulo finite matrices
==============================

Classes in the quotient by finite matrices can be compared only when the
difference is provably finite.  The same ring appears as left fractions
with denominators Ibar(n) = I - In(n).
"""

from conesigma import (
    LeftFraction, SigmaClass, frac_eq, frac_mul, frac_to_sigma, ibar, ore_ann_witness,
    ore_move_witness, pairing_shifts, sigma_eq,
)
from conesigma.coeff import QQ
from conesigma.cone import cone_from_finite, cone_identity
from conesigma.finmat import E

one = SigmaClass(cone_identity(QQ))
alpha, beta = pairing_shifts(QQ)

# Ibar(5) differs from I by a finite matrix, so the answer is certified
print(sigma_eq(SigmaClass(ibar(5, QQ)), one))

# alpha and I differ everywhere down the diagonal; no certificate, only a report
verdict = sigma_eq(SigmaClass(alpha), one, window=16)
print(type(verdict).__name__, verdict.report.disagreements[:3])

# moving a denominator past a numerator
m, Eprime = ore_move_witness(1, cone_from_finite(E(2, 0)))
print("move witness m =", m)
print("annihilator witness:", ore_ann_witness(2, cone_from_finite(E(0, 0) + E(4, 1))))

# fractions multiply through the move witness
f = LeftFraction(1, cone_identity(QQ))
g = LeftFraction(2, cone_identity(QQ))
h = frac_mul(f, g)
print("denominator of the product:", h.denom_index)
print("same class as I:", frac_eq(h, LeftFraction(0, cone_identity(QQ))).certified)
print("as a quotient class:", sigma_eq(frac_to_sigma(h), one).certified)
