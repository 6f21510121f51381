"""Discrete Wigner function on the torus phase-space grid.

The kernel Delta(V) = (1/D^2) sum_m e^{-i gamma0 m x V} S_m over the canonical
label window is the operator-valued Fourier dual of the torus basis; its
expectation value in a state is the (real) Wigner function on the D x D grid.
The continuous phase-space integral collapses to the unit-weight sum over grid
points because every integrand is a finite Fourier series with gamma0-multiple
frequencies, so the D-point rule is exact.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .lattice import (
    Dimension,
    build_fourier_operator,
    max_abs,
    random_state,
    window_vectors,
)
from .schwinger import schwinger_matrix

TORUS_NORMALIZATION = "torus-1/D^2"


@lru_cache(maxsize=None)
def _kernel_grid_cached(d: int) -> np.ndarray:
    """All D^2 kernels, indexed K[V1, V2, :, :]."""
    dim = Dimension(d)
    labels = window_vectors(dim)
    stack = np.stack([schwinger_matrix(dim, m) for m in labels])   # (n_m, d, d)
    m1 = np.array([m[0] for m in labels])
    m2 = np.array([m[1] for m in labels])
    a = np.arange(d)
    # phase[i, V1, V2] = exp(-i gamma0 (m1_i V2 - m2_i V1))
    phase = np.exp(-1j * dim.gamma0 * (m1[:, None, None] * a[None, None, :]
                                       - m2[:, None, None] * a[None, :, None]))
    K = np.einsum("mab,mij->abij", phase, stack) / d**2
    K.flags.writeable = False
    return K


def kernel_grid(dim: Dimension) -> np.ndarray:
    """Array of shape (D, D, D, D): the kernel at every grid point."""
    return _kernel_grid_cached(dim.d)


@dataclass(frozen=True)
class WignerKernel:
    dim: Dimension
    V: tuple[float, float]
    matrix: np.ndarray
    normalization: str = TORUS_NORMALIZATION
    exact: bool = True          # False when V is off the integer grid


def build_kernel(dim: Dimension, V) -> WignerKernel:
    """Kernel at a phase-space point; off-grid (non-integer) V is diagnostic only."""
    v1, v2 = float(V[0]), float(V[1])
    on_grid = v1 == int(v1) and v2 == int(v2)
    if on_grid:
        K = kernel_grid(dim)[int(v1) % dim.d, int(v2) % dim.d]
        return WignerKernel(dim, (int(v1), int(v2)), K)
    acc = np.zeros((dim.d, dim.d), dtype=complex)
    for m in window_vectors(dim):
        acc += np.exp(-1j * dim.gamma0 * (m[0] * v2 - m[1] * v1)) * schwinger_matrix(dim, m)
    acc /= dim.d**2
    acc.flags.writeable = False
    return WignerKernel(dim, (v1, v2), acc, exact=False)


@dataclass(frozen=True)
class WignerGrid:
    dim: Dimension
    values: np.ndarray          # real, indexed [V1, V2] (or [J, theta-index])
    state_ref: str = ""
    normalization: str = TORUS_NORMALIZATION

    def total(self) -> float:
        return float(self.values.sum())


def wigner_function(dim: Dimension, state: np.ndarray, state_ref: str = "",
                    reality_tol: float = 1e-12) -> WignerGrid:
    """W(V) = <psi| Delta(V) |psi> at every grid point."""
    psi = np.asarray(state, dtype=complex)
    K = kernel_grid(dim)
    W = np.einsum("i,abij,j->ab", psi.conj(), K, psi)
    imag = float(np.max(np.abs(W.imag)))
    if imag > reality_tol:
        raise ValueError(f"Wigner values not real: imaginary part {imag:.2e}")
    vals = np.ascontiguousarray(W.real)
    vals.flags.writeable = False
    return WignerGrid(dim=dim, values=vals, state_ref=state_ref)


def classical_symbol(dim: Dimension, op: np.ndarray) -> np.ndarray:
    """f(V) = Tr(F Delta(V)) on the grid; pairs with W as sum f W = <F>/D."""
    K = kernel_grid(dim)
    return np.einsum("abij,ji->ab", K, np.asarray(op, dtype=complex))


def symbol_reconstruct(dim: Dimension, symbol: np.ndarray) -> np.ndarray:
    """Inverse of classical_symbol: F = D sum_V f(V) Delta(V)."""
    K = kernel_grid(dim)
    return dim.d * np.einsum("ab,abij->ij", np.asarray(symbol, dtype=complex), K)


def kernel_suite(dim: Dimension) -> dict:
    """Structural kernel identities as max-norm residuals.

    hermitian / trace (= 1/D) / resolution (sum over V = identity) /
    dual (sum_V e^{i gamma0 m x V} Delta(V) = S_m) / completeness (symbol
    round-trip on a random operator) / rotation (F Delta(V) F^dag equals the
    kernel at the quarter-turned point (-V2, V1)) / rotation4 (four turns
    return the kernel).  The rotation residuals are O(1) at D=2, where the
    half-phases break quarter-turn covariance; callers gate on odd D.
    """
    d = dim.d
    K = kernel_grid(dim)
    res = {
        "hermitian": max_abs(K - K.conj().transpose(0, 1, 3, 2)),
        "trace": float(np.max(np.abs(np.einsum("abii->ab", K) - 1.0 / d))),
        "resolution": max_abs(K.sum(axis=(0, 1)) - np.eye(d)),
    }
    a = np.arange(d)
    dual = 0.0
    for m in window_vectors(dim):
        phase = np.exp(1j * dim.gamma0 * (m[0] * a[None, :] - m[1] * a[:, None]))
        acc = np.einsum("ab,abij->ij", phase, K)
        dual = max(dual, max_abs(acc - schwinger_matrix(dim, m)))
    res["dual"] = dual
    rng = np.random.default_rng(d)
    op = rng.normal(size=(d, d)) + 1j * rng.normal(size=(d, d))
    res["completeness"] = max_abs(symbol_reconstruct(dim, classical_symbol(dim, op)) - op)
    F = build_fourier_operator(dim)
    rot = 0.0
    for v1 in range(d):
        for v2 in range(d):
            rot = max(rot, max_abs(F @ K[v1, v2] @ F.conj().T - K[(-v2) % d, v1]))
    res["rotation"] = rot
    K4 = K[1 % d, 2 % d]
    for _ in range(4):
        K4 = F @ K4 @ F.conj().T
    res["rotation4"] = max_abs(K4 - K[1 % d, 2 % d])
    return res


def property_suite(dim: Dimension, n_states: int = 6, rng=None, seed=None,
                   states=None) -> dict:
    """Worst-case residuals of the six fundamental Wigner-function properties.

    (i) reality; (ii) marginals in both conjugate bases; (iii) covariance under
    U^n1 / V^n2 translations; (iv) time inversion (conjugation) and parity
    (F^2); (v) overlap sum_V W W' = |<psi|psi'>|^2 / D including self-overlap
    1/D; (vi) trace pairing with a random Hermitian operator through its
    classical symbol.  States default to seeded random ones.
    """
    d = dim.d
    if rng is None:
        rng = np.random.default_rng(seed if seed is not None else 20260817)
    K = kernel_grid(dim)
    F = build_fourier_operator(dim)
    ii = np.arange(d)
    worst: dict[str, float] = {}

    def bump(key, val):
        worst[key] = max(worst.get(key, 0.0), float(val))

    def wig(v):
        return np.einsum("i,abij,j->ab", v.conj(), K, v)

    if states is None:
        states = [random_state(dim, rng=rng) for _ in range(n_states)]
    for psi in states:
        phiv = random_state(dim, rng=rng)
        Wc = wig(psi)
        bump("real", np.max(np.abs(Wc.imag)))
        W = Wc.real
        bump("norm", abs(W.sum() - 1.0))
        bump("marginal_u", np.max(np.abs(W.sum(axis=1) - np.abs(psi) ** 2)))
        bump("marginal_v", np.max(np.abs(W.sum(axis=0) - np.abs(F.conj().T @ psi) ** 2)))
        n1 = int(rng.integers(1, d)) if d > 1 else 0
        n2 = int(rng.integers(1, d)) if d > 1 else 0
        Wt = wig(np.linalg.matrix_power(schwinger_matrix(dim, (1, 0)), n1) @ psi).real
        bump("translation_u", max_abs(Wt - W[(ii[:, None] - n1) % d, ii[None, :]]))
        Wv = wig(np.linalg.matrix_power(schwinger_matrix(dim, (0, 1)), n2) @ psi).real
        bump("translation_v", max_abs(Wv - W[ii[:, None], (ii[None, :] - n2) % d]))
        Wstar = wig(psi.conj()).real
        bump("time_inversion", max_abs(Wstar - W[ii[:, None], (-ii[None, :]) % d]))
        bump("parity", max_abs(wig(F @ (F @ psi)).real
                               - W[(-ii[:, None]) % d, (-ii[None, :]) % d]))
        Wphi = wig(phiv).real
        bump("overlap", abs((W * Wphi).sum() - abs(np.vdot(psi, phiv)) ** 2 / d))
        bump("self_overlap", abs((W * W).sum() - 1.0 / d))
        H = rng.normal(size=(d, d)) + 1j * rng.normal(size=(d, d))
        H = H + H.conj().T
        fsym = classical_symbol(dim, H)
        bump("symbol_real", np.max(np.abs(fsym.imag)))
        bump("pairing", abs((fsym.real * W).sum() - np.real(psi.conj() @ H @ psi) / d))
    return worst
