"""
The copying map phi and the W isomorphism
=========================================

phi(A) repeats each row of A along the pairing, so it commutes with beta
and is intertwined with A by alpha.  This gives a bimodule isomorphism
between (cone) + W and W, where W is the cone with its right action
twisted through phi.
"""
import random

from conesigma import WElement, cone_mul, eq_on_window, phi_map, pairing_shifts, right_w_action
from conesigma import w_iso_backward, w_iso_forward
from conesigma.coeff import QQ
from conesigma.cone import cone_from_finite
from conesigma.finmat import E
from conesigma.generators import random_cone

alpha, beta = pairing_shifts(QQ)

# phi of a single matrix unit lands on the diagonal at 0, 2, 5, 9, ...
P = phi_map(cone_from_finite(E(0, 0)))
print("phi(E(0,0)) nonzero diagonal:", [i for i in range(15) if P.entry(i, i)])

rng = random.Random(0)
A = random_cone(rng, QQ, "lazy")
pA = phi_map(A)
print("A alpha = alpha phi(A):", eq_on_window(cone_mul(A, alpha), cone_mul(alpha, pA), 256))
print("phi(A) beta = beta phi(A):", eq_on_window(cone_mul(pA, beta), cone_mul(beta, pA), 256))

# forward is (A, B) -> A alpha + B beta, backward reads the pieces off again
B = WElement(random_cone(rng, QQ))
C = w_iso_forward(A, B)
A2, B2 = w_iso_backward(C)
print("roundtrip:", eq_on_window(A2, A, 256) and eq_on_window(B2.underlying, B.underlying, 256))

# compatibility with the right action
D = random_cone(rng, QQ)
lhs = w_iso_forward(cone_mul(A, D), right_w_action(B, D))
rhs = right_w_action(C, D)
print("right-module law:", eq_on_window(lhs.underlying, rhs.underlying, 128))
