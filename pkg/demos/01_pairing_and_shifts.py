"""
Pairing and the two shift matrices
==================================

Infinite matrices are indexed by natural numbers.  A bijection between
pairs and single indices gives two partial isometries, alpha and beta.
"""

from conesigma import pair_index, unpair_index, pairing_shifts, cone_mul, cone_transpose, eq_on_window
from conesigma.coeff import QQ
from conesigma.cone import cone_add, cone_identity, cone_zero, window_render

# the first few indices and the pairs they stand for
for n in range(6):
    print(n, "->", tuple(unpair_index(n)))
print("pair(3, 4) =", pair_index(3, 4))

alpha, beta = pairing_shifts(QQ)

# alpha sends row i to column pair(i, 0); look at the top-left corner
for row in window_render(alpha, range(4), range(6)):
    print(" ".join(str(v) for v in row))

# both are isometries with orthogonal ranges that together fill everything
one, zero = cone_identity(QQ), cone_zero(QQ)
aT, bT = cone_transpose(alpha), cone_transpose(beta)
N = 512
print("alpha alpha^T = I:", eq_on_window(cone_mul(alpha, aT), one, N))
print("beta  beta^T  = I:", eq_on_window(cone_mul(beta, bT), one, N))
print("beta  alpha^T = 0:", eq_on_window(cone_mul(beta, aT), zero, N))
print("alpha^T alpha + beta^T beta = I:",
      eq_on_window(cone_add(cone_mul(aT, alpha), cone_mul(bT, beta)), one, N))
