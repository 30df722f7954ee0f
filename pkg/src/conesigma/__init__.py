"""Exact computations in the cone of infinite matrices and its suspension quotient."""
from .coeff import (
    QQ, ZZ, AlgebraSpec, CoeffRing, IntegersModP, alg_mul, alg_validate, dual_numbers,
    load_algebra_spec, matrix_algebra_spec, ring_from_text,
)
from .cone import (
    ConeMat, Finite, ScalarPlusFinite, WElement, cone_add, cone_from_finite, cone_identity,
    cone_mul, cone_scalar, cone_sub, cone_transpose, cone_zero, eq_on_window, ibar,
    materialize_finite, pairing_shifts, phi_map, right_w_action, w_iso_backward,
    w_iso_forward, window_render,
)
from .finmat import E, FinMat, I, IdemObject, fin_mul, idem_hom, local_unit, unit_decompose, unit_iso_pair
from .hochschild import hh_dims, hochschild_complex, morita_compare
from .homology import ChainComplexSpec, homology_dims, smith_normal_form, verify_complex
from .pairing import pair_index, unpair_index
from .sigma import (
    EqualCertified, LeftFraction, SigmaClass, Unknown, frac_add, frac_eq, frac_mul,
    frac_to_sigma, ore_ann_witness, ore_move_witness, sigma_eq, sigma_to_frac,
)

__version__ = "0.1.0"
