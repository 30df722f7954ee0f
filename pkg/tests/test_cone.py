import random

import pytest
from hypothesis import given, settings, strategies as st

from conesigma.coeff import QQ, IntegersModP, dual_numbers, matrix_algebra_spec
from conesigma.cone import (
    ConeMat, Finite, ScalarPlusFinite, WElement, check_oracles, cone_add, cone_from_finite,
    cone_identity, cone_mul, cone_scalar, cone_sub, cone_transpose, cone_zero, eq_on_window,
    ibar, materialize_finite, pairing_shifts, phi_map, right_w_action, w_iso_backward,
    w_iso_forward, window_diff, window_render,
)
from conesigma.errors import CertificateRequired, CoefficientMismatch
from conesigma.finmat import E, FinMat, I
from conesigma.generators import random_banded, random_certified, random_cone, random_finmat
from conesigma.pairing import pair_index, unpair_index

seeds = st.integers(0, 2**32 - 1)
ALPHA, BETA = pairing_shifts(QQ)
ONE, ZERO = cone_identity(QQ), cone_zero(QQ)


def dense_window_product(A, B, n, inner):
    """Oracle: entry-oracle schoolbook product over an explicit inner range."""
    a = window_render(A, range(n), range(inner))
    b = window_render(B, range(inner), range(n))
    return [[sum(a[i][k] * b[k][j] for k in range(inner)) for j in range(n)] for i in range(n)]


def nonzero_positions(A, n):
    return [(i, j) for i in range(n) for j in range(n) if A.entry(i, j) != 0]


# -- constructors ---------------------------------------------------------------

def test_cone_from_finite():
    A = cone_from_finite(E(0, 0))
    assert A.band == 1 and A.cert == Finite(1) and nonzero_positions(A, 5) == [(0, 0)]
    Z = cone_from_finite(FinMat(QQ))
    assert Z.cert == Finite(0) and nonzero_positions(Z, 5) == []
    I4 = cone_from_finite(I(4))
    assert I4.cert == Finite(4) and I4.band == 1


def test_ibar():
    assert eq_on_window(ibar(0, QQ), ONE, 64)
    assert window_render(ibar(2, QQ), range(4), range(4)) == [
        [0, 0, 0, 0], [0, 0, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]]
    assert ibar(3, QQ).cert == ScalarPlusFinite(1, 3)
    assert ONE.cert == ScalarPlusFinite(1, 0)


@pytest.mark.parametrize("n,m", [(2, 3), (3, 2), (0, 5), (4, 4)])
def test_ibar_products_close_up(n, m):
    P = cone_mul(ibar(n, QQ), ibar(m, QQ))
    assert eq_on_window(P, ibar(max(n, m), QQ), 64)
    assert P.cert == ScalarPlusFinite(1, max(n, m))


def test_ibar_kills_leading_rows():
    P = cone_mul(ibar(1, QQ), cone_from_finite(E(0, 0) + E(1, 1)))
    assert materialize_finite(P) == E(1, 1)


def test_coefficient_mismatch():
    with pytest.raises(CoefficientMismatch):
        cone_mul(ONE, cone_identity(IntegersModP(3)))


# -- multiplication against a dense oracle ----------------------------------------

@settings(max_examples=30)
@given(seeds)
def test_mul_matches_dense_oracle(seed):
    rng = random.Random(seed)
    A, B = random_banded(rng, QQ), random_banded(rng, QQ)
    n = 24
    # band offsets are at most 3 and xor masks at most 7, so inner indices stay below n + 8
    expected = dense_window_product(A, B, n, n + 8)
    assert window_render(cone_mul(A, B), range(n), range(n)) == expected


@settings(max_examples=30)
@given(seeds)
def test_oracles_consistent(seed):
    rng = random.Random(seed)
    for kind in ("finite", "certified", "lazy"):
        A = random_cone(rng, QQ, kind)
        B = random_cone(rng, QQ)
        for M in (A, cone_mul(A, B), cone_add(A, B), cone_transpose(A), phi_map(A)):
            assert check_oracles(M, list(range(40)) + [rng.randrange(10**4) for _ in range(20)]).ok


def test_check_oracles_catches_bad_certificate():
    liar = ConeMat(QQ, lambda i: {i: 1}, lambda j: {j: 1}, 1, Finite(3))
    report = check_oracles(liar, range(10))
    assert not report.ok and report.failure == "certificate"


@settings(max_examples=20)
@given(seeds)
def test_ring_axioms_on_windows(seed):
    rng = random.Random(seed)
    A, B, C = (random_cone(rng, QQ) for _ in range(3))
    assert eq_on_window(cone_mul(cone_mul(A, B), C), cone_mul(A, cone_mul(B, C)), 64)
    assert eq_on_window(cone_mul(A, cone_add(B, C)), cone_add(cone_mul(A, B), cone_mul(A, C)), 64)
    assert eq_on_window(cone_mul(cone_add(A, B), C), cone_add(cone_mul(A, C), cone_mul(B, C)), 64)
    assert eq_on_window(cone_mul(ONE, A), A, 64) and eq_on_window(cone_mul(A, ONE), A, 64)


@settings(max_examples=20)
@given(seeds)
def test_transpose_is_anti_homomorphism(seed):
    rng = random.Random(seed)
    A, B = random_cone(rng, QQ), random_cone(rng, QQ)
    lhs = cone_transpose(cone_mul(A, B))
    rhs = cone_mul(cone_transpose(B), cone_transpose(A))
    assert eq_on_window(lhs, rhs, 64)


@settings(max_examples=20)
@given(seeds)
def test_band_bound_law(seed):
    rng = random.Random(seed)
    A, B = random_cone(rng, QQ), random_cone(rng, QQ)
    P = cone_mul(A, B)
    assert P.band == A.band * B.band
    assert all(len(P.row(i)) <= P.band and len(P.col(i)) <= P.band for i in range(200))


@settings(max_examples=20)
@given(seeds)
def test_value_bound_covers_entries(seed):
    rng = random.Random(seed)
    A, B = random_cone(rng, QQ, "finite"), random_cone(rng, QQ, "certified")
    for M in (cone_add(A, B), cone_mul(A, B), cone_mul(B, B)):
        if M.value_bound is not None:
            assert {v for row in window_render(M, range(20), range(20)) for v in row} <= M.value_bound


# -- phi -----------------------------------------------------------------------------

def test_phi_unital():
    assert eq_on_window(phi_map(ONE), ONE, 256)
    assert phi_map(ONE).cert == ScalarPlusFinite(1, 0)


def test_phi_of_corner_unit():
    expected = [(pair_index(0, t), pair_index(0, t)) for t in range(4)]
    assert expected == [(0, 0), (2, 2), (5, 5), (9, 9)]
    P = phi_map(cone_from_finite(E(0, 0)))
    assert nonzero_positions(P, 10) == expected
    assert P.cert is None


@settings(max_examples=15)
@given(seeds)
def test_phi_is_multiplicative(seed):
    rng = random.Random(seed)
    A, B = random_banded(rng, QQ), random_banded(rng, QQ)
    assert eq_on_window(phi_map(cone_mul(A, B)), cone_mul(phi_map(A), phi_map(B)), 128)
    assert eq_on_window(phi_map(cone_add(A, B)), cone_add(phi_map(A), phi_map(B)), 128)


@settings(max_examples=15)
@given(seeds)
def test_phi_copies_rows(seed):
    rng = random.Random(seed)
    A = random_cone(rng, QQ)
    P = phi_map(A)
    for i in range(300):
        x, t = unpair_index(i)
        assert len(P.row(i)) == len(A.row(x))
        assert sorted(P.row(i).values()) == sorted(A.row(x).values())


# -- shifts ----------------------------------------------------------------------------

def test_alpha_window_entries():
    oracle = [(i, j) for i in range(4) for j in range(4) if tuple(unpair_index(j)) == (i, 0)]
    assert oracle == [(0, 0), (1, 1), (2, 3)]
    assert nonzero_positions(ALPHA, 4) == oracle
    assert ALPHA.band == 1 and ALPHA.cert is None


def test_beta_rows():
    def oracle_row(i):
        x, t = unpair_index(i)
        return next(j for j in range(100) if tuple(unpair_index(j)) == (x, t + 1))

    assert [oracle_row(i) for i in range(3)] == [2, 4, 5]
    assert [BETA.row_support(i) for i in range(3)] == [[2], [4], [5]]


@pytest.mark.parametrize("ring", [QQ, IntegersModP(5)], ids=str)
def test_shift_identities(ring):
    a, b = pairing_shifts(ring)
    one, zero = cone_identity(ring), cone_zero(ring)
    aT, bT = cone_transpose(a), cone_transpose(b)
    assert eq_on_window(cone_mul(a, aT), one, 512)
    assert eq_on_window(cone_mul(b, bT), one, 512)
    assert eq_on_window(cone_mul(b, aT), zero, 512)
    assert eq_on_window(cone_mul(a, bT), zero, 512)
    assert eq_on_window(cone_add(cone_mul(aT, a), cone_mul(bT, b)), one, 512)


@settings(max_examples=15)
@given(seeds)
def test_intertwining(seed):
    rng = random.Random(seed)
    A = random_cone(rng, QQ)
    pA = phi_map(A)
    assert eq_on_window(cone_mul(A, ALPHA), cone_mul(ALPHA, pA), 256)
    assert eq_on_window(cone_mul(pA, BETA), cone_mul(BETA, pA), 256)


def test_intertwining_with_noncommutative_coefficients():
    M2 = matrix_algebra_spec(2, QQ)
    rng = random.Random(5)
    alpha, beta = pairing_shifts(M2)
    for _ in range(5):
        A = random_banded(rng, M2)
        pA = phi_map(A)
        assert eq_on_window(cone_mul(A, alpha), cone_mul(alpha, pA), 64)
        assert eq_on_window(cone_mul(pA, beta), cone_mul(beta, pA), 64)


# -- W ---------------------------------------------------------------------------------

def test_right_action_examples():
    rng = random.Random(1)
    B = WElement(random_banded(rng, QQ))
    assert eq_on_window(right_w_action(B, ONE).underlying, B.underlying, 128)
    e = cone_from_finite(E(0, 0))
    assert materialize_finite(right_w_action(WElement(e), e).underlying) == E(0, 0)


@settings(max_examples=10)
@given(seeds)
def test_right_action_associative(seed):
    rng = random.Random(seed)
    B, A, A2 = WElement(random_cone(rng, QQ)), random_cone(rng, QQ), random_cone(rng, QQ)
    lhs = right_w_action(right_w_action(B, A), A2)
    rhs = right_w_action(B, cone_mul(A, A2))
    assert eq_on_window(lhs.underlying, rhs.underlying, 128)


def test_w_iso_on_generators():
    assert eq_on_window(w_iso_forward(ONE, WElement(ZERO)).underlying, ALPHA, 256)
    assert eq_on_window(w_iso_forward(ZERO, WElement(ONE)).underlying, BETA, 256)
    A, B = w_iso_backward(WElement(ALPHA))
    assert eq_on_window(A, ONE, 256) and eq_on_window(B.underlying, ZERO, 256)


@settings(max_examples=10)
@given(seeds)
def test_w_iso_roundtrips_and_module_law(seed):
    rng = random.Random(seed)
    A, B, C = random_cone(rng, QQ), WElement(random_cone(rng, QQ)), random_cone(rng, QQ)
    A2, B2 = w_iso_backward(w_iso_forward(A, B))
    assert eq_on_window(A2, A, 256) and eq_on_window(B2.underlying, B.underlying, 256)
    W = WElement(random_cone(rng, QQ))
    assert eq_on_window(w_iso_forward(*w_iso_backward(W)).underlying, W.underlying, 256)
    lhs = w_iso_forward(cone_mul(A, C), right_w_action(B, C))
    rhs = right_w_action(w_iso_forward(A, B), C)
    assert eq_on_window(lhs.underlying, rhs.underlying, 128)


# -- certificates ------------------------------------------------------------------------

def test_materialize():
    F = E(0, 3) + E(2, 1).scale(5)
    assert materialize_finite(cone_from_finite(F)) == F
    assert materialize_finite(cone_mul(cone_from_finite(E(0, 0)), ALPHA)) == E(0, 0)
    with pytest.raises(CertificateRequired):
        materialize_finite(ALPHA)


def test_certificate_algebra():
    assert cone_sub(cone_add(ONE, cone_from_finite(E(3, 3))), ONE).cert == Finite(4)
    assert cone_sub(ibar(5, QQ), ONE).cert == Finite(5)
    assert cone_add(ONE, ALPHA).cert is None
    assert cone_mul(cone_scalar(2, QQ), ibar(3, QQ)).cert == ScalarPlusFinite(2, 3)
    assert cone_transpose(ibar(3, QQ)).cert == ScalarPlusFinite(1, 3)
    assert phi_map(cone_from_finite(E(0, 0))).cert is None
    # pair(2, 0) = 3, so alpha * E(3,0) = E(2,0) and the bound is tightened to 3
    assert cone_mul(ALPHA, cone_from_finite(E(3, 0))).cert == Finite(3)


@settings(max_examples=30)
@given(seeds)
def test_certificate_soundness(seed):
    rng = random.Random(seed)
    A = random_cone(rng, QQ)
    F = cone_from_finite(random_finmat(rng, QQ, 10))
    for M in (cone_mul(F, A), cone_mul(A, F), cone_sub(random_certified(rng, QQ), cone_identity(QQ))):
        if isinstance(M.cert, Finite):
            mat = cone_from_finite(materialize_finite(M))
            assert eq_on_window(M, mat, M.cert.bound + 40)


def test_window_diff_reports_row_major():
    diff = window_diff(ALPHA, ONE, 8)
    assert diff[0][:2] == (2, 2)


def test_cone_over_algebra_coefficients():
    D = dual_numbers()
    x = D.basis(1)
    X = cone_scalar(x, D)
    assert X.cert == ScalarPlusFinite(x, 0)
    assert cone_mul(X, X).cert == Finite(0)
    assert eq_on_window(cone_mul(X, X), cone_zero(D), 32)
