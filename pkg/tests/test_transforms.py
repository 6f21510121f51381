import numpy as np
import pytest
from numpy.testing import assert_allclose

from torusphase import (
    DegenerateSpectrumError,
    NonSymplecticMapError,
    SymplecticMap,
    build_fourier_operator,
    build_metaplectic,
    closure_check,
    covariance_report,
    fourier_check,
    make_dimension,
    predicted_phase,
    random_symplectic,
    schwinger_matrix,
    verify_symplectic,
    window_vectors,
)


def test_symplectic_map_reduction_and_determinant():
    dim = make_dimension(5)
    smap = SymplecticMap.from_rows(dim, ((0, -1), (1, 0)))
    assert np.array_equal(smap.matrix, [[0, 4], [1, 0]])
    assert smap.determinant % 5 == 1
    assert verify_symplectic(smap)
    bad = SymplecticMap.from_rows(dim, ((1, 1), (1, 0)))
    assert not verify_symplectic(bad)


def test_nonsymplectic_map_rejected():
    dim = make_dimension(5)
    with pytest.raises(NonSymplecticMapError):
        build_metaplectic(dim, SymplecticMap.from_rows(dim, ((1, 1), (1, 0))))


def test_composite_dimension_rejected():
    dim = make_dimension(4)
    with pytest.raises(DegenerateSpectrumError):
        build_metaplectic(dim, SymplecticMap.from_rows(dim, ((0, -1), (1, 0))))


@pytest.mark.parametrize("d", [2, 3, 5, 7])
def test_quarter_turn_gives_fourier(d):
    assert fourier_check(make_dimension(d)) < 1e-10


@pytest.mark.parametrize("d", [2, 3, 5, 7])
def test_identity_map_gives_identity(d):
    dim = make_dimension(d)
    op = build_metaplectic(dim, SymplecticMap.from_rows(dim, ((1, 0), (0, 1))))
    assert_allclose(op.matrix, np.eye(d), atol=1e-12)


@pytest.mark.parametrize("d", [3, 5, 7])
def test_aligned_gauge_covariance_is_exact(d):
    dim = make_dimension(d)
    rng = np.random.default_rng(2)
    for _ in range(6):
        smap = random_symplectic(dim, rng=rng)
        op = build_metaplectic(dim, smap)
        assert op.gauge == "aligned"
        assert op.unitary_residual < 1e-12
        worst, records = covariance_report(op)
        assert worst < 1e-9, (d, smap.matrix, worst)
        for rec in records:
            assert abs(abs(rec["phase"]) - 1.0) < 1e-9


@pytest.mark.parametrize("d", [3, 5, 7])
def test_predicted_phase_matches_measured(d):
    dim = make_dimension(d)
    rng = np.random.default_rng(4)
    smap = random_symplectic(dim, rng=rng)
    op = build_metaplectic(dim, smap)
    _, records = covariance_report(op)
    for rec in records:
        pred = predicted_phase(op, rec["m"])
        assert abs(pred - rec["phase"]) < 1e-9, (rec["m"], pred, rec["phase"])


@pytest.mark.parametrize("d", [3, 5, 7])
def test_group_closure_up_to_scalar(d):
    dim = make_dimension(d)
    rng = np.random.default_rng(6)
    a = build_metaplectic(dim, random_symplectic(dim, rng=rng))
    b = build_metaplectic(dim, random_symplectic(dim, rng=rng))
    scalar, resid = closure_check(a, b)
    assert resid < 1e-10
    assert abs(abs(scalar) - 1.0) < 1e-12


def test_d2_columnwise_covariance_but_no_closure():
    dim = make_dimension(2)
    rng = np.random.default_rng(8)
    smap = random_symplectic(dim, rng=rng)
    op = build_metaplectic(dim, smap)
    assert op.gauge == "columnwise"
    worst, _ = covariance_report(op)
    assert worst < 1e-10
    a = build_metaplectic(dim, SymplecticMap.from_rows(dim, ((0, 1), (1, 0))))
    b = build_metaplectic(dim, SymplecticMap.from_rows(dim, ((1, 1), (0, 1))))
    _, resid = closure_check(a, b)
    assert resid > 0.5  # scalar closure genuinely fails at D=2


@pytest.mark.parametrize("d", [2, 3, 5, 7, 11])
def test_random_symplectic_produces_valid_maps(d):
    dim = make_dimension(d)
    rng = np.random.default_rng(10)
    for _ in range(40):
        smap = random_symplectic(dim, rng=rng)
        assert verify_symplectic(smap)
        assert smap.s != (0, 0)


def test_covariance_sends_labels_through_the_map():
    dim = make_dimension(5)
    smap = SymplecticMap.from_rows(dim, ((0, -1), (1, 0)))
    op = build_metaplectic(dim, smap)
    F = build_fourier_operator(dim)
    for m in window_vectors(dim):
        lhs = op.matrix @ schwinger_matrix(dim, m) @ op.matrix.conj().T
        image = smap.apply(m)
        rhs = schwinger_matrix(dim, (image[0] % 5, image[1] % 5))
        z = np.trace(rhs.conj().T @ lhs) / 5
        assert abs(abs(z) - 1.0) < 1e-10, m
    # and the quarter-turn op is the Fourier matrix up to a global phase
    z = np.trace(F.conj().T @ op.matrix) / 5
    assert_allclose(op.matrix, (z / abs(z)) * F, atol=1e-10)
