import numpy as np
import pytest
from numpy.testing import assert_allclose

from torusphase import (
    DegenerateSpectrumError,
    build_clock_operator,
    build_fourier_operator,
    build_schwinger,
    build_shift_operator,
    compose_schwinger,
    conjugate_pair_suite,
    dense_eigensystem_match,
    eigensystem_by_recursion,
    fourier_covariance_check,
    lattice_cross,
    make_dimension,
    reduce_label,
    schwinger_basis_rank,
    schwinger_matrix,
    schwinger_power_check,
    sine_commutator_check,
    standard_pair_suite,
    weyl_commutator_check,
    weyl_j_matrix,
    window_vectors,
)


@pytest.mark.parametrize("d", [2, 3, 4, 5, 7])
def test_matrix_matches_ordered_product(d):
    # direct O(D^2) build against the half-phase-ordered U^m1 V^m2 product
    dim = make_dimension(d)
    U = build_shift_operator(dim)
    V = build_clock_operator(dim)
    for m in window_vectors(dim):
        # U^d = V^d = 1 exactly, so only the half-phase needs the raw integers
        ref = (np.exp(-0.5j * dim.gamma0 * m[0] * m[1])
               * np.linalg.matrix_power(U, m[0] % d)
               @ np.linalg.matrix_power(V, m[1] % d))
        assert_allclose(schwinger_matrix(dim, m), ref, atol=1e-12)


@pytest.mark.parametrize("d", [2, 3, 5, 7])
def test_adjoint_is_negated_label(d):
    dim = make_dimension(d)
    for m in [(1, 0), (0, 1), (1, 1), (1, -1), (2, 1)]:
        a = schwinger_matrix(dim, m)
        b = schwinger_matrix(dim, (-m[0], -m[1]))
        assert_allclose(a.conj().T, b, atol=1e-13)


@pytest.mark.parametrize("d", [2, 3, 5, 7])
def test_composition_phase_law(d):
    dim = make_dimension(d)
    rng = np.random.default_rng(11)
    for _ in range(30):
        m = tuple(int(x) for x in rng.integers(-d, d + 1, size=2))
        n = tuple(int(x) for x in rng.integers(-d, d + 1, size=2))
        phase, op = compose_schwinger(build_schwinger(dim, m), build_schwinger(dim, n))
        expected = np.exp(0.5j * dim.gamma0 * lattice_cross(m, n))
        assert_allclose(phase, expected, atol=1e-12)
        lhs = schwinger_matrix(dim, m) @ schwinger_matrix(dim, n)
        assert_allclose(lhs, phase * op.matrix, atol=1e-12)


def test_unit_label_is_identity():
    for d in (2, 3, 5):
        dim = make_dimension(d)
        assert_allclose(schwinger_matrix(dim, (0, 0)), np.eye(d), atol=0)


@pytest.mark.parametrize("d", [2, 3, 5, 7])
def test_inverse_composition_is_identity(d):
    dim = make_dimension(d)
    for m in [(1, 0), (1, 1), (2, 1), (1, -2)]:
        lhs = schwinger_matrix(dim, m) @ schwinger_matrix(dim, (-m[0], -m[1]))
        assert_allclose(lhs, np.eye(d), atol=1e-13)


@pytest.mark.parametrize("d", [2, 3, 4, 5])
def test_label_reduction_sign(d):
    dim = make_dimension(d)
    rng = np.random.default_rng(5)
    for _ in range(25):
        m = tuple(int(x) for x in rng.integers(-3 * d, 3 * d, size=2))
        mc, sign = reduce_label(dim, m)
        assert all(x in list(range(-(d // 2), d)) for x in mc)
        assert sign in (1.0, -1.0)
        assert_allclose(schwinger_matrix(dim, m),
                        sign * schwinger_matrix(dim, mc), atol=1e-12)


@pytest.mark.parametrize("d", [2, 3, 5, 7])
def test_power_rule_sign(d):
    dim = make_dimension(d)
    for m in window_vectors(dim):
        if m == (0, 0):
            continue
        sign = schwinger_power_check(build_schwinger(dim, m))
        assert sign == (-1) ** ((d * m[0] * m[1]) % 2)


@pytest.mark.parametrize("d", [3, 5, 7])
def test_eigensystem_recursion_matches_dense(d):
    dim = make_dimension(d)
    for m in window_vectors(dim):
        if m == (0, 0):
            continue
        lam_res, vec_res = dense_eigensystem_match(dim, m)
        assert lam_res < 1e-10
        assert vec_res < 1e-8


def test_eigensystem_eigen_equation_direct():
    dim = make_dimension(7)
    m = (2, 3)
    sys = eigensystem_by_recursion(dim, m)
    S = schwinger_matrix(dim, m)
    for r in range(7):
        v = sys.eigenvectors[:, r]
        assert_allclose(S @ v, sys.eigenvalues[r] * v, atol=1e-12)
    # orthonormality
    g = sys.eigenvectors.conj().T @ sys.eigenvectors
    assert_allclose(g, np.eye(7), atol=1e-12)


def test_eigensystem_rejects_zero_label_and_degenerate():
    dim = make_dimension(5)
    with pytest.raises(ValueError):
        eigensystem_by_recursion(dim, (0, 0))
    with pytest.raises(DegenerateSpectrumError):
        eigensystem_by_recursion(make_dimension(4), (2, 2))


@pytest.mark.parametrize("d", [3, 5, 7, 9])
def test_sine_algebra_commutator(d):
    dim = make_dimension(d)
    assert sine_commutator_check(dim, (1, 0), (0, 1)) < 1e-12
    assert sine_commutator_check(dim, (1, 2), (2, 1)) < 1e-12


@pytest.mark.parametrize("d", [3, 5, 7])
def test_weyl_form_mirrors_schwinger(d):
    dim = make_dimension(d)
    for m in [(1, 0), (0, 1), (1, 1), (2, 1)]:
        # J_m equals the Schwinger matrix at the swapped, negated label
        J = weyl_j_matrix(dim, m)
        assert_allclose(J, schwinger_matrix(dim, (-m[1], -m[0])), atol=1e-12)
    rep = weyl_commutator_check(dim, (1, 0), (1, 1))
    assert rep["mirror"] < 1e-12
    assert rep["minus_form"] < 1e-11
    assert rep["plus_form"] > 1e-2  # the additive form does not close


@pytest.mark.parametrize("d", [2, 3, 5, 7])
def test_fourier_rotates_labels(d):
    dim = make_dimension(d)
    for m in [(1, 0), (0, 1), (1, 1)]:
        assert fourier_covariance_check(dim, m) < 1e-12
    F = build_fourier_operator(dim)
    S = schwinger_matrix(dim, (1, 1))
    assert_allclose(F @ S @ F.conj().T, schwinger_matrix(dim, (-1, 1)), atol=1e-12)


@pytest.mark.parametrize("d", [2, 3, 5])
def test_basis_spans_all_operators(d):
    assert schwinger_basis_rank(make_dimension(d)) == d * d


@pytest.mark.parametrize("d", [2, 3, 5, 7, 11, 13])
def test_standard_pair_suite_clean(d):
    rows = standard_pair_suite(make_dimension(d), rng=np.random.default_rng(0), n_random=60)
    for key, value in rows.items():
        assert value < 1e-11, (d, key, value)


def test_conjugate_pair_suite_accepts_any_conjugate_pair():
    dim = make_dimension(5)
    U = build_shift_operator(dim)
    V = build_clock_operator(dim)
    rows = conjugate_pair_suite(dim, V.conj().T, U, rng=np.random.default_rng(1), n_random=40)
    for key, value in rows.items():
        assert value < 1e-11, (key, value)
