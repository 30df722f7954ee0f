"""
Hochschild homology at desk scale
=================================

Bar-complex dimensions for small algebras.  Matrix algebras over a field
have the same Hochschild homology as the field itself.
"""
from pathlib import Path

from conesigma import hh_dims, hochschild_complex, load_algebra_spec, matrix_algebra_spec, morita_compare
from conesigma.coeff import QQ, IntegersModP

print("HH(Q)        :", hh_dims(QQ, 3).dims)
print("HH(M_2(Q))   :", hh_dims(matrix_algebra_spec(2, QQ), 2).dims)
print("HH(M_2(Z/7)) :", hh_dims(matrix_algebra_spec(2, IntegersModP(7)), 2).dims)

# algebras can also be read from a JSON structure table
here = Path(__file__).parent / "algebras"
dual = load_algebra_spec(here / "dual_numbers.json")
print("HH(Q[x]/x^2) :", hh_dims(dual, 3).dims)
print("HH(Q[C_3])   :", hh_dims(load_algebra_spec(here / "group_algebra_c3.json"), 2).dims)

# the complex itself is available
c = hochschild_complex(matrix_algebra_spec(2, QQ), 2)
print("chain group dimensions:", c.dims)

report = morita_compare(QQ, 3, 2)
print("Q vs M_3(Q):", report.algebra, report.matrices, "equal" if report.equal else "different")
