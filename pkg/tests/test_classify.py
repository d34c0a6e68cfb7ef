import numpy as np
import pytest

from toeplab.circulant import CirculantSymbol
from toeplab.classify import (
    autocorrelation,
    block2_condition_system,
    brown_halmos_normal_test,
    circulant_binormal_classify,
    coanalytic_inner_multiple_test,
    commuting_normal_family,
    inner_multiple_test,
    scalar_binormal_classify,
    special_case_checks,
)
from toeplab.symbols import ScalarSymbol
from toeplab.toeplitz import VERDICT_CLEAN, VERDICT_VIOLATED, commutator_report, truncate

Z = ScalarSymbol.monomial(1)
ZBAR = ScalarSymbol.monomial(-1)
ONE = ScalarSymbol.constant(1.0)
ZERO = ScalarSymbol.zero()
F_REAL = Z + ZBAR


# ---------------------------------------------------------------------------
# constant-multiple-of-inner test


def test_inner_monomial_is_binormal_with_constant_modulus():
    cert = inner_multiple_test(ScalarSymbol.monomial(2, 3.0))
    assert cert.verdict == "binormal"
    assert cert.witness["constant_modulus_sq"] == pytest.approx(9.0)


def test_inner_one_plus_z_fails_at_lag_one():
    cert = inner_multiple_test(ONE + Z)
    assert cert.verdict == "not_binormal"
    assert cert.witness["lag"] == 1
    assert cert.witness["autocorrelation"] == pytest.approx(1.0)


def test_inner_gapped_symbol_fails_at_lag_two():
    phi = ScalarSymbol({1: 1.0, 3: 1.0})
    # brute-force autocorrelation oracle
    coeffs = {1: 1.0 + 0j, 3: 1.0 + 0j}
    r = {}
    for n, a in coeffs.items():
        for m, b in coeffs.items():
            r[n - m] = r.get(n - m, 0j) + a * b.conjugate()
    assert autocorrelation(phi) == r
    assert {j for j, v in r.items() if j > 0 and abs(v) > 0} == {2}

    cert = inner_multiple_test(phi)
    assert cert.verdict == "not_binormal"
    assert cert.witness["lag"] == 2


def test_inner_rejects_non_analytic():
    with pytest.raises(ValueError):
        inner_multiple_test(Z + ZBAR)


def test_coanalytic_variant():
    assert coanalytic_inner_multiple_test(ZBAR).verdict == "binormal"
    assert coanalytic_inner_multiple_test(ONE + ZBAR).verdict == "not_binormal"
    assert coanalytic_inner_multiple_test(ScalarSymbol.constant(5.0)).verdict == "binormal"
    with pytest.raises(ValueError):
        coanalytic_inner_multiple_test(ONE + Z)


# ---------------------------------------------------------------------------
# normality


def test_normal_real_symbol():
    cert = brown_halmos_normal_test(F_REAL)
    assert cert.verdict == "normal"
    assert cert.witness["gamma"] == pytest.approx(1.0)


def test_shift_is_not_normal():
    cert = brown_halmos_normal_test(Z)
    assert cert.verdict == "not_normal"
    assert cert.witness["index"] == 1
    numeric = commutator_report(Z, "normal", 64, 1e-8)
    assert numeric.verdict == VERDICT_VIOLATED


def test_rotated_real_symbol_is_normal():
    phi = ScalarSymbol({1: 1 + 1j, -1: 1 - 1j})
    cert = brown_halmos_normal_test(phi)
    assert cert.verdict == "normal"
    assert cert.witness["gamma"] == pytest.approx(1.0)
    assert commutator_report(phi, "normal", 64, 1e-8).verdict == VERDICT_CLEAN


def test_unbalanced_pair_is_not_normal():
    phi = ScalarSymbol({1: 1.0, -1: 2.0})  # |gamma| would be 2
    cert = brown_halmos_normal_test(phi)
    assert cert.verdict == "not_normal"
    assert cert.witness["index"] == 1
    assert commutator_report(phi, "normal", 64, 1e-8).verdict == VERDICT_VIOLATED


def test_constant_is_normal():
    assert brown_halmos_normal_test(ScalarSymbol.constant(2 - 1j)).verdict == "normal"


# ---------------------------------------------------------------------------
# binormality dispatch


def test_classify_analytic_monomial():
    cert = scalar_binormal_classify(Z * Z)
    assert cert.verdict == "binormal"
    assert cert.witness["branch"] == "analytic"


def test_classify_mixed_real_symbol_via_normality():
    cert = scalar_binormal_classify(F_REAL)
    assert cert.verdict == "binormal"
    assert cert.witness["branch"] == "mixed"
    assert cert.method == "cor310_case"


def test_classify_unbalanced_mixed_symbol():
    phi = ScalarSymbol({-1: 2.0, 1: 1.0})
    cert = scalar_binormal_classify(phi)
    assert cert.verdict == "not_binormal"
    assert commutator_report(phi, "binormal", 64, 1e-8).verdict == VERDICT_VIOLATED


def test_classification_is_scaling_invariant():
    rng = np.random.default_rng(31)
    for _ in range(10):
        idx = rng.choice(np.arange(-3, 4), size=3, replace=False)
        phi = ScalarSymbol({int(n): complex(*rng.standard_normal(2)) for n in idx})
        base = scalar_binormal_classify(phi).verdict
        for c in (1.7 - 0.3j, -2j, 0.01):
            assert scalar_binormal_classify(c * phi).verdict == base
        base_n = brown_halmos_normal_test(phi).verdict
        for c in (1.7 - 0.3j, -2j):
            assert brown_halmos_normal_test(c * phi).verdict == base_n


def test_circulant_classify_monomial_rows():
    res = circulant_binormal_classify(CirculantSymbol([Z, Z]))
    assert res.aggregate == "binormal"
    assert [c.verdict for c in res.certificates] == ["binormal", "binormal"]


def test_circulant_classify_one_and_z():
    res = circulant_binormal_classify(CirculantSymbol([ONE, Z]))
    assert res.aggregate == "not_binormal"
    # lambda_0 = 1 + z fails the inner test with lag 1
    assert res.certificates[0].verdict == "not_binormal"
    assert res.certificates[0].witness["lag"] == 1


def test_circulant_classify_equal_rows_collapse():
    phi = ONE + Z  # modulus not constant
    res = circulant_binormal_classify(CirculantSymbol([phi, phi, phi]))
    assert res.aggregate == "not_binormal"
    assert res.certificates[0].verdict == "not_binormal"
    assert res.certificates[1].verdict == "binormal"  # zero symbol
    assert res.certificates[2].verdict == "binormal"


def test_circulant_classify_agrees_with_block_numeric():
    rng = np.random.default_rng(32)
    for i in range(8):
        n = (2, 3)[i % 2]
        row = []
        for _ in range(n):
            idx = rng.choice(np.arange(-2, 3), size=2, replace=False)
            row.append(ScalarSymbol({int(k): complex(*rng.standard_normal(2)) for k in idx}))
        c = CirculantSymbol(row)
        exact = circulant_binormal_classify(c).aggregate
        numeric = commutator_report(c.as_matrix_symbol(), "binormal", 64, 1e-8)
        assert (exact == "binormal") == (numeric.verdict == VERDICT_CLEAN)


# ---------------------------------------------------------------------------
# commuting normal families


def test_family_basic_member():
    fam = commuting_normal_family(F_REAL, [(1.0, 0.0)])
    assert fam[0] == F_REAL


def test_family_members_are_normal_and_commute_on_window():
    fam = commuting_normal_family(F_REAL, [(1.0, 0.0), (1j, 1.0)])
    for phi in fam:
        assert brown_halmos_normal_test(phi).verdict == "normal"
    t0, t1 = truncate(fam[0], 64), truncate(fam[1], 64)
    assert (t0 @ t1 - t1 @ t0).window_max_abs() <= 1e-12


def test_family_from_zero_is_constant():
    fam = commuting_normal_family(ZERO, [(2.0, 3.0), (1j, -1.0)])
    assert fam[0] == ScalarSymbol.constant(3.0)
    assert fam[1] == ScalarSymbol.constant(-1.0)


def test_family_rejects_non_real_generator():
    with pytest.raises(ValueError):
        commuting_normal_family(Z, [(1.0, 0.0)])


# ---------------------------------------------------------------------------
# condition systems


def _family(rng, count=4):
    f = ScalarSymbol({0: 0.5, 1: complex(*rng.standard_normal(2)) / 2})
    f = f + f.conj_reflect()  # force real-valued
    pairs = [(complex(*rng.standard_normal(2)), complex(*rng.standard_normal(2)))
             for _ in range(count)]
    return commuting_normal_family(f, pairs)


def test_condition_system_corner_cases_are_exactly_zero():
    rng = np.random.default_rng(33)
    a, b = _family(rng, 2)
    for phis in ([ZERO, a, b, ZERO], [a, ZERO, ZERO, b]):
        rep = block2_condition_system(phis, 48, 1e-8)
        assert rep.system_a == (0.0, 0.0, 0.0)
        assert rep.binormal_report.verdict == VERDICT_CLEAN
        assert rep.binormal_consistent


def test_condition_system_third_lines_coincide():
    rng = np.random.default_rng(34)
    rep = block2_condition_system(_family(rng), 48, 1e-8)
    assert rep.system_a[2] == rep.system_b[2]


def test_condition_system_matches_direct_verdicts():
    rng = np.random.default_rng(35)
    saw_violated = False
    for _ in range(6):
        rep = block2_condition_system(_family(rng), 48, 1e-8)
        assert rep.binormal_consistent
        assert rep.normal_consistent
        assert rep.system_a_holds == rep.system_b_holds
        saw_violated = saw_violated or not rep.system_a_holds
    assert saw_violated  # generic families are not binormal


def test_condition_system_rejects_non_normal_entries():
    with pytest.raises(ValueError):
        block2_condition_system([Z, ONE, ONE, Z], 48, 1e-8)


def test_condition_system_rejects_wrong_arity():
    with pytest.raises(ValueError):
        block2_condition_system([ONE, ONE], 48, 1e-8)


# ---------------------------------------------------------------------------
# special cases


def test_special_case_lower_corner():
    rep = special_case_checks([ZERO, ZERO, ONE + Z, ZERO], "ex54a", 48, 1e-8)
    assert rep["binormal_report"]["verdict"] == VERDICT_CLEAN
    assert rep["normal_report"]["verdict"] == VERDICT_VIOLATED


def test_special_case_lower_corner_structure_enforced():
    with pytest.raises(ValueError):
        special_case_checks([ONE, ZERO, Z, ZERO], "ex54a", 48, 1e-8)


def test_special_case_antidiagonal_with_shift():
    rep = special_case_checks([ZERO, ONE, Z, ZERO], "ex54b", 48, 1e-8)
    assert rep["binormal_report"]["verdict"] == VERDICT_CLEAN
    # T_z is a non-unitary isometry: the normality defect shows on the window
    assert rep["unitary_like"] is False
    assert rep["normal_report"]["verdict"] == VERDICT_VIOLATED
    assert rep["consistent"] is True


def test_special_case_antidiagonal_with_unimodular_constant():
    rep = special_case_checks([ZERO, ONE, ONE, ZERO], "ex54b", 48, 1e-8)
    assert rep["binormal_report"]["verdict"] == VERDICT_CLEAN
    assert rep["unitary_like"] is True
    assert rep["normal_report"]["verdict"] == VERDICT_CLEAN
    assert rep["consistent"] is True


def test_special_case_real_sum_condition():
    rng = np.random.default_rng(36)
    a, b = _family(rng, 2)
    # phi_1 + conj-reflect(phi_4) = 2 Re(alpha) f + 2 Re(beta) when phi_4 = phi_1
    rep = special_case_checks([a, ONE, ONE, a], "cor53ii", 48, 1e-8)
    assert rep["real_valued"] is True
    assert rep["normal_report"]["verdict"] == VERDICT_CLEAN
    assert rep["consistent"] is True

    # scaling by i breaks real-valuedness and normality together
    rep = special_case_checks([1j * a, ONE, ONE, ZERO], "cor53ii", 48, 1e-8)
    assert rep["real_valued"] is False
    assert rep["normal_report"]["verdict"] == VERDICT_VIOLATED
    assert rep["consistent"] is True


def test_special_case_real_sum_requires_commuting_normal_entries():
    with pytest.raises(ValueError):
        special_case_checks([Z, ONE, ONE, Z], "cor53ii", 48, 1e-8)


def test_special_case_identity_diagonal():
    rng = np.random.default_rng(37)
    a, b = _family(rng, 2)
    rep = special_case_checks([ONE, a, b, ONE], "cor52i", 48, 1e-8)
    assert rep["consistent"] is True
    rep = special_case_checks([a, ONE, ONE, b], "cor52ii", 48, 1e-8)
    assert rep["consistent"] is True


def test_special_case_identity_diagonal_binormal_instance():
    # phi_3 = conj-reflect(phi_2) makes the displayed identity vanish
    rng = np.random.default_rng(38)
    a, _ = _family(rng, 2)
    rep = special_case_checks([ONE, a, a.conj_reflect(), ONE], "cor52i", 48, 1e-8)
    assert rep["identity_holds"] is True
    assert rep["binormal_report"]["verdict"] == VERDICT_CLEAN
    assert rep["consistent"] is True


def test_special_case_rejects_unknown_case():
    with pytest.raises(ValueError):
        special_case_checks([ONE, ONE, ONE, ONE], "cor99", 48, 1e-8)
