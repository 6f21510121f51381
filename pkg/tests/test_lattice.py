import numpy as np
import pytest
from numpy.testing import assert_allclose

from torusphase import (
    Dimension,
    basis_state,
    build_clock_operator,
    build_fourier_operator,
    build_shift_operator,
    canonical_vector,
    canonical_window,
    is_prime,
    lattice_cross,
    make_dimension,
    random_state,
    window_vectors,
)


def test_is_prime_small_table():
    assert [n for n in range(2, 20) if is_prime(n)] == [2, 3, 5, 7, 11, 13, 17, 19]
    assert not is_prime(1)
    assert not is_prime(0)


def test_dimension_rejects_trivial():
    with pytest.raises(ValueError):
        make_dimension(1)


def test_dimension_constants():
    dim = make_dimension(5)
    assert_allclose(dim.gamma0, 2 * np.pi / 5)
    assert_allclose(dim.omega, np.exp(2j * np.pi / 5))
    assert dim.prime


@pytest.mark.parametrize("d,expected", [
    (2, [0, 1]),
    (3, [-1, 0, 1]),
    (4, [0, 1, 2, 3]),
    (5, [-2, -1, 0, 1, 2]),
])
def test_canonical_window(d, expected):
    assert list(canonical_window(make_dimension(d))) == expected


def test_window_vectors_cover_lattice():
    dim = make_dimension(3)
    vecs = window_vectors(dim)
    assert len(vecs) == 9
    assert len(set((a % 3, b % 3) for a, b in vecs)) == 9


def test_canonical_vector_reduces_into_window():
    dim = make_dimension(5)
    assert canonical_vector(dim, (7, -8)) == (2, 2)
    assert canonical_vector(dim, (0, 0)) == (0, 0)


@pytest.mark.parametrize("d", [2, 3, 4, 5, 7])
def test_clock_shift_and_fourier_relations(d):
    dim = make_dimension(d)
    U = build_shift_operator(dim)
    V = build_clock_operator(dim)
    F = build_fourier_operator(dim)
    eye = np.eye(d)
    # Weyl commutation U V = e^{i gamma0} V U
    assert_allclose(U @ V, np.exp(1j * dim.gamma0) * (V @ U), atol=1e-13)
    # Fourier conjugation exchanges the pair
    assert_allclose(F @ U @ F.conj().T, V, atol=1e-12)
    assert_allclose(F @ V @ F.conj().T, np.linalg.matrix_power(U, d - 1), atol=1e-12)
    # F is unitary of order four
    assert_allclose(F @ F.conj().T, eye, atol=1e-13)
    assert_allclose(np.linalg.matrix_power(F, 4), eye, atol=1e-12)
    # cyclicity
    assert_allclose(np.linalg.matrix_power(U, d), eye, atol=1e-13)
    assert_allclose(np.linalg.matrix_power(V, d), eye, atol=1e-13)


def test_basis_states_are_eigenvectors():
    dim = make_dimension(5)
    U = build_shift_operator(dim)
    V = build_clock_operator(dim)
    for k in range(5):
        eu = basis_state(dim, "u", k)
        assert_allclose(V @ eu, np.exp(-1j * dim.gamma0 * k) * eu, atol=1e-13)
        ev = basis_state(dim, "v", k)
        assert_allclose(U @ ev, np.exp(1j * dim.gamma0 * k) * ev, atol=1e-13)


def test_random_state_seeded_and_normalized():
    dim = make_dimension(7)
    a = random_state(dim, seed=3)
    b = random_state(dim, seed=3)
    c = random_state(dim, seed=4)
    assert_allclose(a, b)
    assert not np.allclose(a, c)
    assert_allclose(np.linalg.norm(a), 1.0, atol=1e-13)


def test_lattice_cross_is_exact_integer():
    assert lattice_cross((2, 3), (5, 7)) == 2 * 7 - 3 * 5
    assert isinstance(lattice_cross((10**9, 1), (1, 10**9)), int)
