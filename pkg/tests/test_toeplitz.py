import numpy as np
import pytest

from toeplab.circulant import CirculantPatternError, CirculantSymbol, circulant_eigen_symbols
from toeplab.classify import inner_multiple_test
from toeplab.symbols import MatrixSymbol, ScalarSymbol
from toeplab.toeplitz import (
    VERDICT_CLEAN,
    VERDICT_VIOLATED,
    WindowError,
    commutator_matrix,
    commutator_report,
    conjugation_identity_check,
    gu_lee_F,
    shift,
    truncate,
)

Z = ScalarSymbol.monomial(1)
ZBAR = ScalarSymbol.monomial(-1)
ONE = ScalarSymbol.constant(1.0)


def rand_scalar(rng, w=2):
    idx = rng.choice(np.arange(-w, w + 1), size=rng.integers(1, 2 * w + 1), replace=False)
    return ScalarSymbol({int(n): complex(rng.standard_normal(), rng.standard_normal()) / 2
                         for n in idx})


def rand_matrix(rng, dim, w=2):
    return MatrixSymbol.from_entries(
        [[rand_scalar(rng, w) for _ in range(dim)] for _ in range(dim)]
    )


# ---------------------------------------------------------------------------
# sections


def test_truncate_scalar_shift_is_lower_shift_matrix():
    t = truncate(Z, 6)
    expected = np.diag(np.ones(5), -1)
    assert np.array_equal(t.data, expected.astype(complex))


def test_truncate_block_shift():
    t = truncate(MatrixSymbol(2, {1: np.eye(2)}), 6)
    expected = np.kron(np.diag(np.ones(5), -1), np.eye(2))
    assert np.array_equal(t.data, expected.astype(complex))
    assert t.data.shape == (12, 12)


def test_truncate_two_sided_matches_block_formula():
    # direct block formula oracle, written out independently
    phi = Z + ZBAR
    n = 8
    expected = np.zeros((n, n), dtype=complex)
    for i in range(n):
        for j in range(n):
            if i - j == 1 or i - j == -1:
                expected[i, j] = 1.0
    assert np.array_equal(truncate(phi, n).data, expected)


def test_truncate_rejects_order_at_or_below_4w():
    with pytest.raises(WindowError):
        truncate(Z, 4)
    truncate(Z, 5)  # strictly above is fine


def test_shift_small_and_isometry_window():
    s = shift(1, 2)
    assert np.array_equal(s.data, np.array([[0, 0], [1, 0]], dtype=complex))
    n = 10
    s = shift(1, n)
    sts = s.adjoint().data @ s.data
    # isometry on indices below N-1
    assert np.array_equal(sts[: n - 1, : n - 1], np.eye(n - 1, dtype=complex))
    # direct multiplication oracle for the co-isometry defect
    sst = s.data @ s.data.conj().T
    assert sst[0, 0] == 0.0
    assert np.array_equal(np.diag(sst)[1:], np.ones(n - 1, dtype=complex))


# ---------------------------------------------------------------------------
# commutator reports


def test_shift_symbol_is_binormal_on_window():
    rep = commutator_report(Z, "binormal", 32, 1e-8)
    assert rep.verdict == VERDICT_CLEAN
    assert rep.window_norm <= 1e-12


def test_one_plus_z_binormal_violation_closed_form():
    # closed-form oracle: the commutator is e0 e1* - e1 e0*
    k = commutator_matrix(ONE + Z, "binormal", 32)
    lim = k.window_limit
    assert lim == 32 - 4
    expected = np.zeros((lim, lim), dtype=complex)
    expected[0, 1] = 1.0
    expected[1, 0] = -1.0
    assert np.array_equal(k.window_view(), expected)
    rep = commutator_report(ONE + Z, "binormal", 32, 1e-8)
    assert rep.verdict == VERDICT_VIOLATED
    assert rep.window_norm == 1.0


def test_real_symbol_is_normal():
    rep = commutator_report(Z + ZBAR, "normal", 32, 1e-8)
    assert rep.verdict == VERDICT_CLEAN


def test_quasinormal_report_for_shift():
    # T_z is an isometry, so T*T = I commutes with T
    rep = commutator_report(Z, "quasinormal", 32, 1e-8)
    assert rep.verdict == VERDICT_CLEAN


def test_commutator_rejects_small_orders_and_bad_property():
    with pytest.raises(WindowError):
        commutator_report(Z, "binormal", 8, 1e-8)  # 8 == 4w + 4
    with pytest.raises(ValueError):
        commutator_report(Z, "hyponormal", 32, 1e-8)


def test_report_window_limit_reflects_margin():
    rep = commutator_report(Z + ZBAR, "quasinormal", 32, 1e-8)
    assert rep.window_limit == 32 - 3 * 1
    rep = commutator_report(rand_matrix(np.random.default_rng(0), 2, w=2), "normal", 32, 1e-8)
    assert rep.window_limit == (32 - 2 * 2) * 2


# ---------------------------------------------------------------------------
# the F self-adjointness route


def test_gu_lee_shift_matches_hand_computation():
    # dense numpy oracle: F = S*(T*T)(TT*)S - (T*T)(TT*) with T = S equals
    # e0 e0* on the exact window (the trailing corner feels the cutoff)
    n = 16
    s = np.diag(np.ones(n - 1), -1).astype(complex)
    a = s.conj().T @ s
    b = s @ s.conj().T
    f = s.conj().T @ a @ b @ s - a @ b
    lim = n - 6  # four bandwidth-1 factors plus the two shifts
    expected = np.zeros((lim, lim), dtype=complex)
    expected[0, 0] = 1.0
    assert np.array_equal(f[:lim, :lim], expected)

    rep = gu_lee_F(Z, 32, 1e-8)
    assert rep.property == "f-selfadjoint"
    assert rep.verdict == VERDICT_CLEAN
    assert rep.window_norm == 0.0


def test_gu_lee_scaled_monomial_agrees_with_inner_test():
    phi = ScalarSymbol.monomial(2, 3.0)
    assert inner_multiple_test(phi).verdict == "binormal"
    assert gu_lee_F(phi, 32, 1e-8).verdict == VERDICT_CLEAN


def test_gu_lee_one_plus_z_consistent_with_commutator():
    assert gu_lee_F(ONE + Z, 32, 1e-8).verdict == VERDICT_VIOLATED
    assert commutator_report(ONE + Z, "binormal", 32, 1e-8).verdict == VERDICT_VIOLATED


def test_gu_lee_requires_scalar_symbol():
    with pytest.raises(TypeError):
        gu_lee_F(MatrixSymbol.identity(2), 32, 1e-8)


def test_gu_lee_random_corpus_agrees_with_commutator():
    rng = np.random.default_rng(21)
    for _ in range(20):
        phi = rand_scalar(rng)
        a = gu_lee_F(phi, 48, 1e-8).verdict == VERDICT_CLEAN
        b = commutator_report(phi, "binormal", 48, 1e-8).verdict == VERDICT_CLEAN
        assert a == b


# ---------------------------------------------------------------------------
# conjugation identity


def test_conjugation_identity_random_circulant_pair():
    rng = np.random.default_rng(22)
    c = CirculantSymbol([rand_scalar(rng, 3), rand_scalar(rng, 3)])
    assert conjugation_identity_check(c.as_matrix_symbol(), 32) <= 1e-10


def test_conjugation_identity_scalar_multiple_of_identity():
    rng = np.random.default_rng(23)
    phi = rand_scalar(rng)
    c = CirculantSymbol([phi, ScalarSymbol.zero()])
    assert conjugation_identity_check(c.as_matrix_symbol(), 16) <= 1e-12


def test_conjugation_identity_circ123():
    c = CirculantSymbol([ScalarSymbol.constant(x) for x in (1.0, 2.0, 3.0)])
    assert conjugation_identity_check(c.as_matrix_symbol(), 8) <= 1e-12


def test_conjugation_identity_rejects_non_circulant():
    rng = np.random.default_rng(24)
    phi = rand_matrix(rng, 2)
    with pytest.raises(CirculantPatternError):
        conjugation_identity_check(phi, 16)


# ---------------------------------------------------------------------------
# window invariants


def test_product_window_entries_independent_of_order():
    rng = np.random.default_rng(25)
    phi, psi = rand_matrix(rng, 2, w=2), rand_matrix(rng, 2, w=2)
    n = 24
    small = truncate(phi, n) @ truncate(psi, n)
    large = truncate(phi, n + 8) @ truncate(psi, n + 8)
    lim = small.window_limit
    assert lim == (n - phi.bandwidth - psi.bandwidth) * 2
    assert np.array_equal(small.window_view(), large.data[:lim, :lim])


def test_adjoint_of_truncation_is_truncation_of_adjoint():
    rng = np.random.default_rng(26)
    phi = rand_matrix(rng, 3, w=2)
    t = truncate(phi, 16)
    ta = truncate(phi.adjoint(), 16)
    assert np.array_equal(ta.data, t.data.conj().T)


def test_circulant_transfer_of_binormal_window_norms():
    """Spectral norm of the block commutator window equals the max over
    eigenvalue symbols (the window submatrices are unitarily conjugate,
    blockwise, so any unitarily invariant norm transfers)."""
    rng = np.random.default_rng(27)
    order = 64
    for i in range(32):
        n = (2, 3, 4)[i % 3]
        c = CirculantSymbol([rand_scalar(rng, 3) for _ in range(n)])
        w = c.bandwidth
        blocks = order - 4 * w
        block_k = commutator_matrix(c.as_matrix_symbol(), "binormal", order)
        lim = blocks * n
        block_norm = np.linalg.norm(block_k.data[:lim, :lim], 2)
        scalar_norms = [
            np.linalg.norm(commutator_matrix(lam, "binormal", order).data[:blocks, :blocks], 2)
            for lam in circulant_eigen_symbols(c).lambdas
        ]
        assert abs(block_norm - max(scalar_norms)) <= 1e-10


def test_diagonal_symbol_products_split_blockwise():
    rng = np.random.default_rng(28)
    order = 24
    lams = [rand_scalar(rng, 2) for _ in range(3)]
    zero = ScalarSymbol.zero()
    diag = MatrixSymbol.from_entries(
        [[lams[i] if i == j else zero for j in range(3)] for i in range(3)]
    )
    t = truncate(diag, order)
    full = (t.adjoint() @ t) @ (t @ t.adjoint())
    lim = full.window_limit
    expected = np.zeros_like(full.data)
    for k, lam in enumerate(lams):
        tk = truncate(lam, order)
        pk = ((tk.adjoint() @ tk) @ (tk @ tk.adjoint())).data
        expected[k::3, k::3] = pk
    assert np.max(np.abs(full.data[:lim, :lim] - expected[:lim, :lim])) <= 1e-12
