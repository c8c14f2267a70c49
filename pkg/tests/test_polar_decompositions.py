import numpy as np
import pytest

from sympolar.core import (
    StructureKind,
    TolerancePolicy,
    Variant,
    associated_skew_hamiltonian,
    associated_skew_hamiltonian_left,
    check_structure,
    signature_matrix,
    swap_matrix,
    symplectic_form,
)
from sympolar.decompositions import (
    VARIANT_LAYOUTS,
    decompose,
    factorization_from_factors,
    stored_slots,
    verify,
)
from sympolar.errors import (
    DimensionMismatch,
    PreconditionReason,
    PreconditionViolated,
    SympolarError,
)
from sympolar.linalg import classify_real_eigenvalues

from conftest import well_conditioned

TOL = TolerancePolicy(rel_tol=1e-8)

MS_FAMILY = [Variant.MS, Variant.AS, Variant.SM, Variant.SA]
MDS_FAMILY = [Variant.MDS, Variant.ADS, Variant.SDM, Variant.SDA]
HT_FAMILY = [Variant.HT, Variant.TH, Variant.RDS, Variant.SDR]


def _assert_post_conditions(
    X: np.ndarray, variant: Variant, factors: tuple, tol: TolerancePolicy = TOL
) -> None:
    report = verify(X, factorization_from_factors(variant, factors), tol)
    assert report.ok, (variant, report)
    assert report.reconstruction.residual <= 1e-7


def test_every_variant_has_a_layout() -> None:
    assert set(VARIANT_LAYOUTS) == set(Variant)
    for variant, layout in VARIANT_LAYOUTS.items():
        signatures = [slot for slot in layout if slot.is_signature]
        assert len(signatures) == ("D" in variant.value)
        assert len(stored_slots(variant)) == len(layout) - len(signatures)


def test_ms_of_identity() -> None:
    result = decompose(np.eye(4), Variant.MS)
    M, S = result.factors
    assert np.allclose(M, np.eye(4)) and np.allclose(S, np.eye(4))
    assert result.ok


def test_ms_of_j() -> None:
    J = symplectic_form(1)
    result = decompose(J, "ms")
    assert np.allclose(result.factor("M"), np.eye(2))
    assert np.allclose(result.factor("S"), J)


def test_as_of_identity() -> None:
    result = decompose(np.eye(2), Variant.AS)
    A, S = result.factors
    assert np.allclose(A, -symplectic_form(1))
    assert np.allclose(S, symplectic_form(1))
    assert np.allclose(result.product(), np.eye(2))


def test_ht_of_signature_matrix() -> None:
    D = signature_matrix(1)
    result = decompose(D, Variant.HT)
    H, T = result.factors
    assert check_structure(H, StructureKind.HAMILTONIAN).holds
    assert check_structure(T, StructureKind.ANTI_SYMPLECTIC).holds
    assert np.allclose(H @ T, D)


def test_forced_ht_factors_for_signature_matrix_pass_verification() -> None:
    J, Z, D = symplectic_form(1), swap_matrix(1), signature_matrix(1)
    assert verify(D, factorization_from_factors(Variant.HT, [J, Z])).ok


def test_ms_of_signature_matrix_names_negative_eigenvalue() -> None:
    with pytest.raises(PreconditionViolated) as info:
        decompose(signature_matrix(1), Variant.MS)
    assert info.value.reason is PreconditionReason.SPECTRUM_SIGN
    assert info.value.eigenvalues == (-1.0, -1.0)
    assert "-1.0" in str(info.value)


def test_mds_of_signature_matrix() -> None:
    D = signature_matrix(2)
    result = decompose(D, Variant.MDS)
    assert np.allclose(result.product(), D)
    assert result.ok


def test_mds_rejects_positive_spectrum() -> None:
    with pytest.raises(PreconditionViolated) as info:
        decompose(np.eye(2), Variant.MDS)
    assert info.value.reason is PreconditionReason.SPECTRUM_SIGN


def test_ht_rejects_singular_input() -> None:
    with pytest.raises(PreconditionViolated) as info:
        decompose(np.diag([1.0, 0.0]), Variant.HT)
    assert info.value.reason is PreconditionReason.DEGENERATE


def test_mixed_sign_spectrum_fails_both_families() -> None:
    # Y = diag(1, -1, 1, -1) for n = 2
    X = np.diag([1.0, 1.0, 1.0, -1.0])
    for variant in (Variant.MS, Variant.MDS):
        with pytest.raises(PreconditionViolated):
            decompose(X, variant)


def test_verify_examples() -> None:
    J, D = symplectic_form(1), signature_matrix(1)
    eye = np.eye(2)
    assert verify(eye, factorization_from_factors(Variant.MS, [eye, eye])).ok
    assert verify(J, factorization_from_factors(Variant.MS, [eye, J])).ok
    assert not verify(J, factorization_from_factors(Variant.MS, [eye, D])).ok


def test_verify_rejects_mismatched_factors() -> None:
    with pytest.raises(DimensionMismatch):
        verify(np.eye(4), factorization_from_factors(Variant.MS, [np.eye(2), np.eye(2)]))
    with pytest.raises(DimensionMismatch):
        verify(np.eye(2), factorization_from_factors(Variant.MDS, [np.eye(2)]))


def test_factor_lookup_rejects_unknown_slot() -> None:
    result = decompose(np.eye(2), Variant.MS)
    with pytest.raises(KeyError):
        result.factor("H")


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_ms_family_round_trip(rng: np.random.Generator, n: int) -> None:
    checked = 0
    while checked < 200:
        X = well_conditioned(rng, n, limit=100.0)
        Y = associated_skew_hamiltonian(X)
        classification = classify_real_eigenvalues(Y)
        if classification.has_zero or classification.has_negative_real:
            continue
        for variant in (Variant.MS, Variant.AS):
            result = decompose(X, variant, TOL)
            _assert_post_conditions(X, variant, result.factors)
            assert result.classification is not None
            assert result.classification.summary() == classification.summary()
        M = decompose(X, Variant.MS, TOL).factor("M")
        assert check_structure(M, StructureKind.SKEW_HAMILTONIAN, TOL).holds
        checked += 1


@pytest.mark.parametrize("n", [1, 2, 3])
def test_ht_family_round_trip_includes_negative_spectra(rng: np.random.Generator, n: int) -> None:
    negative = 0
    for _ in range(30):
        X = signature_matrix(n) + 0.3 * rng.standard_normal((2 * n, 2 * n))
        if np.linalg.cond(X) > 100.0:
            continue
        if classify_real_eigenvalues(associated_skew_hamiltonian(X)).has_negative_real:
            negative += 1
        for variant in HT_FAMILY:
            tol = TolerancePolicy(rel_tol=1e-7)
            result = decompose(X, variant, tol)
            _assert_post_conditions(X, variant, result.factors, tol)
    assert negative >= 7


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_variants_satisfy_post_conditions_whenever_preconditions_hold(
    rng: np.random.Generator, n: int
) -> None:
    for _ in range(200):
        X = well_conditioned(rng, n)
        right = classify_real_eigenvalues(associated_skew_hamiltonian(X))
        left = classify_real_eigenvalues(associated_skew_hamiltonian_left(X))
        candidates: list[Variant] = []
        if not (right.has_zero or right.has_negative_real):
            candidates += [Variant.MS, Variant.AS]
        if not (right.has_zero or right.has_positive_real):
            candidates += [Variant.MDS, Variant.ADS]
        if not (left.has_zero or left.has_negative_real):
            candidates += [Variant.SM, Variant.SA]
        if not (left.has_zero or left.has_positive_real):
            candidates += [Variant.SDM, Variant.SDA]
        for variant in candidates:
            result = decompose(X, variant, TOL)
            _assert_post_conditions(X, variant, result.factors)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_ms_on_x_matches_sm_on_transpose(rng: np.random.Generator, n: int) -> None:
    for _ in range(200):
        X = well_conditioned(rng, n)
        outcomes = []
        for matrix, variant in ((X, Variant.MS), (X.T, Variant.SM)):
            try:
                decompose(matrix, variant, TOL)
                outcomes.append("ok")
            except SympolarError as exc:
                outcomes.append(type(exc).__name__)
        assert outcomes[0] == outcomes[1]


def test_reflection_swaps_spectrum_signs(rng: np.random.Generator) -> None:
    for n in (1, 2, 3):
        D = signature_matrix(n)
        for _ in range(30):
            X = well_conditioned(rng, n)
            before = classify_real_eigenvalues(associated_skew_hamiltonian(X))
            after = classify_real_eigenvalues(associated_skew_hamiltonian(X @ D))
            assert after.has_negative_real == before.has_positive_real
            assert after.has_positive_real == before.has_negative_real


def _reflected_one_mode(rng: np.random.Generator) -> np.ndarray:
    X = well_conditioned(rng, 1)
    return X if np.linalg.det(X) < 0 else X[::-1].copy()


def test_one_mode_negative_determinant_needs_the_reflected_family(rng: np.random.Generator) -> None:
    for _ in range(100):
        X = _reflected_one_mode(rng)
        det = np.linalg.det(X)
        for variant in MS_FAMILY:
            with pytest.raises(PreconditionViolated) as info:
                decompose(X, variant, TOL)
            assert info.value.reason is PreconditionReason.SPECTRUM_SIGN
            assert info.value.eigenvalues == pytest.approx((det, det), rel=1e-9)
        for variant in MDS_FAMILY:
            result = decompose(X, variant, TOL)
            _assert_post_conditions(X, variant, result.factors)
            assert result.classification is not None
            assert result.classification.has_negative_real


def test_decompose_reports_the_classification_it_checked() -> None:
    result = decompose(signature_matrix(2), Variant.MDS)
    assert result.classification is not None
    assert result.classification.real_eigenvalues == pytest.approx((-1.0,) * 4)

    transposed = decompose(2.0 * np.eye(2), Variant.SM)
    assert transposed.classification is not None
    assert transposed.classification.real_eigenvalues == pytest.approx((4.0, 4.0))


def test_hamiltonian_variants_carry_a_classification_without_sign_rule() -> None:
    result = decompose(signature_matrix(1), Variant.HT)
    assert result.classification is not None
    assert result.classification.has_negative_real
