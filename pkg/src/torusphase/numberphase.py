"""Unitary number-phase pair and the action-angle Wigner representation.

E_N = e^{-i gamma0 N} (number exponential, diagonal) and the unitary phase
operator E_phi (cyclic lowering of the number index) satisfy the same clock
and shift exchange relation as the torus pair, so every torus-basis identity
transfers verbatim through the substitution (U, V) -> (E_N, E_phi).  The
basis elements built on the pair generate the action-angle kernel
Delta(J, theta) with 1/(2 pi D) normalization, whose expectation value is the
number-phase Wigner function on the J x theta grid.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import PhaseMismatchError
from .deformed import build_q_oscillator
from .lattice import Dimension, canonical_window, max_abs, window_vectors
from .schwinger import conjugate_pair_suite, pair_schwinger, schwinger_matrix
from .wigner import WignerGrid

ACTION_ANGLE_NORMALIZATION = "action-angle-1/(2piD)"


@dataclass(frozen=True)
class PhasePair:
    dim: Dimension
    e_n: np.ndarray            # diag(e^{-i gamma0 n})
    e_phi: np.ndarray          # |n-1><n| cyclically
    phase_states: np.ndarray   # columns |phi_l>, entries e^{i gamma0 n l}/sqrt(D)


def build_phase_pair(dim: Dimension) -> PhasePair:
    d = dim.d
    e_n = np.diag(np.exp(-1j * dim.gamma0 * np.arange(d)))
    e_phi = np.zeros((d, d), dtype=complex)
    for n in range(d):
        e_phi[(n - 1) % d, n] = 1.0
    ph = np.exp(1j * dim.gamma0 * np.outer(np.arange(d), np.arange(d))) / np.sqrt(d)
    for a in (e_n, e_phi, ph):
        a.flags.writeable = False
    return PhasePair(dim=dim, e_n=e_n, e_phi=e_phi, phase_states=ph)


def phase_pair_residuals(pair: PhasePair) -> dict:
    """Defining relations of the pair as max-norm residuals."""
    dim = pair.dim
    d = dim.d
    EN, Ep, Ph = pair.e_n, pair.e_phi, pair.phase_states
    eye = np.eye(d)
    res = {
        "commutation": max_abs(EN @ Ep - dim.omega * Ep @ EN),
        "cyclic_number": max_abs(np.linalg.matrix_power(EN, d) - eye),
        "cyclic_phase": max_abs(np.linalg.matrix_power(Ep, d) - eye),
        "orthonormal": max_abs(Ph.conj().T @ Ph - eye),
        "complete": max_abs(Ph @ Ph.conj().T - eye),
    }
    lvals = np.exp(1j * dim.gamma0 * np.arange(d))
    res["phase_eigen"] = max_abs(Ep @ Ph - Ph * lvals)
    res["number_shift"] = max_abs(EN @ Ph - Ph[:, (np.arange(d) - 1) % d])
    return res


def number_phase_schwinger(dim: Dimension, pair: PhasePair, m) -> np.ndarray:
    """Torus basis element built on (E_N, E_phi) instead of (U, V)."""
    return pair_schwinger(dim, pair.e_n, pair.e_phi, m)


def identification_suite(dim: Dimension, rng=None, n_random: int = 200) -> dict:
    """Full torus-pair identity suite run through the (E_N, E_phi) pair."""
    pair = build_phase_pair(dim)
    return conjugate_pair_suite(dim, pair.e_n, pair.e_phi, rng=rng, n_random=n_random)


@dataclass(frozen=True)
class ActionAngleKernel:
    dim: Dimension
    J: float
    theta: float
    matrix: np.ndarray
    normalization: str = ACTION_ANGLE_NORMALIZATION


def build_action_angle_kernel(dim: Dimension, J: float, theta: float) -> ActionAngleKernel:
    """Delta(J, theta) = (1/2piD) sum_m e^{i(gamma0 m1 J - m2 theta)} S^np_m.

    J and theta may be any reals; the kernel is cyclic under J -> J + D and
    theta -> theta + 2pi.  Exact-quadrature grids are integer (or, in shifted
    mode, half-integer) J and theta = 2pi j / D.
    """
    pair = build_phase_pair(dim)
    acc = np.zeros((dim.d, dim.d), dtype=complex)
    for m in window_vectors(dim):
        acc += np.exp(1j * (dim.gamma0 * m[0] * J - m[1] * theta)) * number_phase_schwinger(dim, pair, m)
    acc /= 2.0 * np.pi * dim.d
    acc.flags.writeable = False
    return ActionAngleKernel(dim=dim, J=float(J), theta=float(theta), matrix=acc)


def action_angle_phase_form(dim: Dimension, J: float, theta: float) -> np.ndarray:
    """Independent phase-eigenbasis construction of the same kernel.

    Delta(J, theta) = (1/2piD) sum_m sum_l e^{i(gamma0 m1 J - m2 theta)}
    e^{i gamma0 l m2} e^{i gamma0 m1 m2 / 2} |phi_l><phi_{l + m1}|.
    """
    pair = build_phase_pair(dim)
    Ph = pair.phase_states
    d = dim.d
    acc = np.zeros((d, d), dtype=complex)
    for m1, m2 in window_vectors(dim):
        ph = np.exp(1j * (dim.gamma0 * m1 * J - m2 * theta))
        for l in range(d):
            acc += (ph * np.exp(1j * dim.gamma0 * l * m2) * np.exp(0.5j * dim.gamma0 * m1 * m2)
                    * np.outer(Ph[:, l], Ph[:, (l + m1) % d].conj()))
    return acc / (2.0 * np.pi * d)


def kernel_form_residual(dim: Dimension, J: float, theta: float) -> float:
    """Max deviation between the two independent kernel constructions."""
    return max_abs(build_action_angle_kernel(dim, J, theta).matrix
                   - action_angle_phase_form(dim, J, theta))


def theta_grid(dim: Dimension) -> np.ndarray:
    """Exact-quadrature angles theta_j = 2 pi j / D."""
    return dim.gamma0 * np.arange(dim.d)


def _pair_expectations(dim: Dimension, psi: np.ndarray):
    """<psi| S^np_m |psi> for all window labels, as (m-components, matrix)."""
    mlist = np.array(canonical_window(dim))
    n = np.arange(dim.d)
    EV = np.zeros((len(mlist), len(mlist)), dtype=complex)
    for i1, m1 in enumerate(mlist):
        row = psi.conj() * np.exp(-1j * dim.gamma0 * n * m1)
        for i2, m2 in enumerate(mlist):
            EV[i1, i2] = np.exp(-0.5j * dim.gamma0 * (m1 * m2)) * np.sum(row * psi[(n + m2) % dim.d])
    return mlist, EV


def action_angle_values(dim: Dimension, state: np.ndarray, j_values,
                        parity: int | None = None) -> np.ndarray:
    """W(J, theta_j) rows over j_values, columns over the exact theta grid.

    parity filters the m2 sum: 0 keeps even m2, 1 keeps odd m2, None keeps all
    (the full Wigner function).  The expectation-value form used here equals
    the kernel form by linearity and is O(D^2) per row.
    """
    psi = np.asarray(state, dtype=complex)
    mlist, EV = _pair_expectations(dim, psi)
    jv = np.asarray(j_values, dtype=float)
    if parity is not None:
        EV = EV * ((np.abs(mlist) % 2) == parity)[None, :]
    P1 = np.exp(1j * dim.gamma0 * np.outer(jv, mlist))
    P2 = np.exp(-1j * dim.gamma0 * np.outer(mlist, np.arange(dim.d)))
    return np.real(P1 @ EV @ P2) / (2.0 * np.pi * dim.d)


def wigner_number_phase(dim: Dimension, state: np.ndarray, state_ref: str = "") -> WignerGrid:
    """Number-phase Wigner function on the integer J x exact theta grid.

    Total mass sums to 1 with the (2pi/D) theta weight; the J marginal
    (gamma0-weighted theta sum) is |<J|psi>|^2 and the theta marginal (J sum)
    is (D/2pi) |<phi_j|psi>|^2.
    """
    vals = action_angle_values(dim, state, np.arange(dim.d))
    vals = np.ascontiguousarray(vals)
    vals.flags.writeable = False
    return WignerGrid(dim=dim, values=vals, state_ref=state_ref,
                      normalization=ACTION_ANGLE_NORMALIZATION)


@dataclass(frozen=True)
class NumberExpansion:
    dim: Dimension
    m: tuple[int, int]
    mp: tuple[int, int]
    cross: int
    coefficients: np.ndarray     # f~_k = sum_n e^{i gamma0 k n} f(n)
    reconstruction: np.ndarray
    target: np.ndarray
    residual: float


def expand_number_function(dim: Dimension, f, m, mp, tol: float = 1e-9) -> NumberExpansion:
    """Operator Fourier expansion of a number function on the (m, m') ladder.

    f~_k = sum_n e^{i gamma0 k n} f(n); reconstruction
    F(N) = (1/D) sum_k f~_{(-ck) mod D} (q^{-N})^k, with q^{-N} realized as the
    rescaled basis element -eta S_{-m} S_{m'} / c_q.  The round-trip residual
    against diag(f) in the oscillator number eigenbasis is the arbiter of the
    index convention and must clear tol.
    """
    fv = np.asarray(f, dtype=complex)
    if fv.shape != (dim.d,):
        raise ValueError(f"need {dim.d} values, got shape {fv.shape}")
    osc = build_q_oscillator(dim, m, mp)
    c = osc.cross
    d = dim.d
    B = schwinger_matrix(dim, (-osc.m[0], -osc.m[1])) @ schwinger_matrix(dim, osc.mp)
    qN = (-osc.eta) * B / osc.c_q
    ft = np.array([np.sum(np.exp(1j * dim.gamma0 * k * np.arange(d)) * fv) for k in range(d)])
    recon = np.zeros((d, d), dtype=complex)
    P = np.eye(d, dtype=complex)
    for k in range(d):
        recon += ft[(-c * k) % d] * P
        P = P @ qN
    recon /= d
    v = osc.eigenvectors
    target = (v * fv[osc.n_values]) @ v.conj().T
    residual = max_abs(recon - target)
    if residual > tol:
        raise PhaseMismatchError(f"round-trip residual {residual:.2e} exceeds {tol:.1e}")
    return NumberExpansion(dim=dim, m=osc.m, mp=osc.mp, cross=c, coefficients=ft,
                           reconstruction=recon, target=target, residual=residual)
