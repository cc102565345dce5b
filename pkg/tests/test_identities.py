from fractions import Fraction

import pytest

from supercong.identities import (
    CERT_ALG,
    CERT_SUMNMK,
    FINAL_REC_CANDIDATES,
    GAUSS_APL_POINTS,
    IdentityId,
    RecurrenceId,
    alg_reference_witness,
    algsum_new_gap,
    catalan_type_sum,
    cool_combination_gap,
    eval_identity,
    final_tail_sum,
    fit_final_recurrence,
    gauss_apl_lhs,
    gauss_apl_middle,
    gauss_apl_rhs,
    homogeneous_h1,
    homogeneous_h2,
    particular_solution,
    rel2_combination_gap,
    s_lambda_sum,
    slambda_coefficients,
    telescoping_defect,
    verify_certificate,
    verify_identity,
    verify_recurrence,
    verify_solutions,
    weighted_h_sum,
)


def test_eval_identity_worked_examples():
    assert eval_identity(IdentityId.OLD, 1) == (-2, -2)
    assert eval_identity(IdentityId.COOL, 2) == (5, 5)
    assert eval_identity(IdentityId.REL2, 1) == (0, 0)


@pytest.mark.parametrize("ident", list(IdentityId))
def test_identity_sweep(ident):
    report = verify_identity(ident, 60)
    assert report.status == "PASS", report.note


def test_sumnmk_first_values():
    assert weighted_h_sum(1, lambda m, k: m - k) == 0
    assert weighted_h_sum(2, lambda m, k: m - k) == -6
    assert weighted_h_sum(3, lambda m, k: m - k) == 42


def test_gauss_apl_three_point_chain():
    # direct sum = terminating 2F1 form = closed product form
    for n in (1, 2, 5, 12):
        for x in GAUSS_APL_POINTS:
            lhs = gauss_apl_lhs(n, x)
            assert lhs == gauss_apl_middle(n, x)
            assert lhs == gauss_apl_rhs(n, x)


def test_s_half_examples():
    assert s_lambda_sum(Fraction(1, 2), 1) == -1
    assert s_lambda_sum(Fraction(1, 2), 2) == -2
    assert s_lambda_sum(Fraction(1, 2), 3) == Fraction(5, 4)


def test_catalan_step():
    assert catalan_type_sum(2) == catalan_type_sum(1) + Fraction(2 * 3, 4) * 2


def test_recurrence_sumnmk():
    assert verify_recurrence(RecurrenceId.REC_SUMNMK, 60).status == "PASS"


def test_recurrence_slambda_samples():
    assert verify_recurrence(RecurrenceId.REC_SLAMBDA, 40).status == "PASS"


def test_slambda_half_degenerates():
    # at lambda = 1/2 the order-4 recurrence loses its odd-shift terms
    for n in (1, 5, 10):
        coeffs = slambda_coefficients(n, Fraction(1, 2))
        assert coeffs[1] == 0 and coeffs[3] == 0
        acc = sum(
            c * s_lambda_sum(Fraction(1, 2), n + i) for i, c in enumerate(coeffs)
        )
        assert acc == 0


def test_recurrence_alg_raw_and_substituted():
    assert verify_recurrence(RecurrenceId.REC_ALG, 60).status == "PASS"


def test_final_recurrence_fit_is_unique_and_corrected():
    survivors = fit_final_recurrence()
    assert survivors == ["(n+2)^2*S(n) + n^2*S(n+1)"]
    # the transcribed shape cannot hold
    transcribed = dict(FINAL_REC_CANDIDATES)["transcribed: (n+2)*S(n) + n^2*S(n)"]
    values = {n: final_tail_sum(n) for n in range(1, 4)}
    assert transcribed(values.__getitem__, 1) != Fraction(-9, 2)


def test_final_recurrence_report_is_informational():
    report = verify_recurrence(RecurrenceId.REC_FINAL, 60)
    assert report.status == "PASS"
    assert report.informational
    assert "(n+2)^2*S(n) + n^2*S(n+1)" in report.note


def test_solution_set():
    report = verify_solutions(50)
    assert report.status == "PASS"


def test_homogeneous_solutions_vanish_individually():
    from supercong.identities import _rec_sumnmk_sides

    for n in range(1, 30):
        assert _rec_sumnmk_sides(homogeneous_h1, n)[0] == 0
        assert _rec_sumnmk_sides(homogeneous_h2, n)[0] == 0
        lhs, rhs = _rec_sumnmk_sides(particular_solution, n)
        assert lhs == rhs


def test_certificate_sumnmk_example_point():
    assert telescoping_defect(CERT_SUMNMK, 5, 2) == 0


def test_certificate_alg_example_point():
    assert telescoping_defect(CERT_ALG, 6, 3) == 0


def test_certificates_sweep():
    for cert in (CERT_SUMNMK, CERT_ALG):
        report = verify_certificate(cert, 30)
        assert report.status == "PASS", report.note
        assert "recurrence confirmed" in report.note


def test_certificate_degenerate_points_are_skipped():
    # k = n leads into the singular witness row k = n+1 and must be skipped
    report = verify_certificate(CERT_SUMNMK, 10)
    assert "degenerate" in report.note
    assert not CERT_SUMNMK.valid(4, 5)
    assert not CERT_ALG.valid(4, 5)


def test_alg_reference_witness_is_corrupted():
    # the as-transcribed closed form does not telescope; the certificate
    # machinery uses the reconstructed witness instead (same shape/anchor)
    from supercong.identities import _alg_coeffs, _alg_term, _alg_witness

    c0, c1 = _alg_coeffs(2)
    ref = (
        alg_reference_witness(2, 1)
        - alg_reference_witness(2, 0)
        - c0 * _alg_term(2, 0)
        - c1 * _alg_term(3, 0)
    )
    assert ref != 0
    fixed = (
        _alg_witness(2, 1) - _alg_witness(2, 0) - c0 * _alg_term(2, 0) - c1 * _alg_term(3, 0)
    )
    assert fixed == 0
    # shared anchor at k = 0
    assert _alg_witness(2, 0) == alg_reference_witness(2, 0)


def test_combination_laws():
    for n in range(1, 80):
        assert cool_combination_gap(n) == 0
        assert rel2_combination_gap(n) == 0
        assert algsum_new_gap(n) == 0
