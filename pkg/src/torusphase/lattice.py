"""Torus lattice arithmetic and the fundamental conjugate operator pair.

The Hilbert space is C^D with the coordinate basis |u_k>.  The shift U acts as
U|u_k> = |u_{k+1 mod D}> and the clock V as V|u_k> = e^{-i gamma0 k}|u_k> with
gamma0 = 2 pi / D.  The discrete Fourier operator F exchanges the two:
F U F^-1 = V and F V F^-1 = U^-1, with F^4 = I.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import UnsupportedBasisError


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


@dataclass(frozen=True)
class Dimension:
    """Hilbert-space dimension D with the derived lattice constants."""

    d: int
    prime: bool = field(default=False, compare=False)

    def __post_init__(self):
        if self.d < 2:
            raise ValueError(f"dimension must be >= 2, got {self.d}")
        object.__setattr__(self, "prime", is_prime(self.d))

    @property
    def gamma0(self) -> float:
        return 2.0 * np.pi / self.d

    @property
    def omega(self) -> complex:
        return np.exp(1j * self.gamma0)


def make_dimension(d: int) -> Dimension:
    return Dimension(int(d))


def canonical_window(dim: Dimension) -> list[int]:
    """Component range of the canonical lattice window.

    Odd D uses the symmetric window {-(D-1)/2, ..., (D-1)/2} so that m <-> -m
    stays inside it; even D uses {0, ..., D-1}.
    """
    d = dim.d
    if d % 2 == 1:
        h = (d - 1) // 2
        return list(range(-h, h + 1))
    return list(range(d))


def window_vectors(dim: Dimension):
    """All lattice vectors with both components in the canonical window."""
    w = canonical_window(dim)
    return [(m1, m2) for m1 in w for m2 in w]


def canonical_component(dim: Dimension, x: int) -> int:
    x = x % dim.d
    if dim.d % 2 == 1 and x > (dim.d - 1) // 2:
        x -= dim.d
    return x


def canonical_vector(dim: Dimension, m) -> tuple[int, int]:
    return (canonical_component(dim, m[0]), canonical_component(dim, m[1]))


def lattice_cross(a, b) -> int:
    """Symplectic area m x m' = m1 m2' - m2 m1' as an exact integer."""
    return a[0] * b[1] - a[1] * b[0]


def lattice_cross_mod(dim: Dimension, a, b) -> int:
    return lattice_cross(a, b) % dim.d


def build_shift_operator(dim: Dimension) -> np.ndarray:
    d = dim.d
    U = np.zeros((d, d), dtype=complex)
    for k in range(d):
        U[(k + 1) % d, k] = 1.0
    return U


def build_clock_operator(dim: Dimension) -> np.ndarray:
    return np.diag(np.exp(-1j * dim.gamma0 * np.arange(dim.d)))


def build_fourier_operator(dim: Dimension) -> np.ndarray:
    k = np.arange(dim.d)
    return np.exp(-1j * dim.gamma0 * np.outer(k, k)) / math.sqrt(dim.d)


def basis_state(dim: Dimension, basis: str, index: int) -> np.ndarray:
    """Coordinate (u) or Fourier-conjugate (v) basis vector as u-amplitudes."""
    index = index % dim.d
    if basis == "u":
        psi = np.zeros(dim.d, dtype=complex)
        psi[index] = 1.0
        return psi
    if basis == "v":
        return build_fourier_operator(dim)[:, index].copy()
    raise UnsupportedBasisError(f"unknown basis tag {basis!r}")


def change_basis(dim: Dimension, amplitudes: np.ndarray, source: str, target: str) -> np.ndarray:
    """Convert state amplitudes between the u and v representations.

    v-amplitudes are <v_l|psi>; the two are related by the DFT kernel
    e^{-i gamma0 k l}/sqrt(D), and the round trip is the identity.
    """
    for tag in (source, target):
        if tag not in ("u", "v"):
            raise UnsupportedBasisError(f"unknown basis tag {tag!r}")
    psi = np.asarray(amplitudes, dtype=complex)
    if source == target:
        return psi.copy()
    F = build_fourier_operator(dim)
    if source == "u":  # u -> v
        return F.conj().T @ psi
    return F @ psi  # v -> u


def random_state(dim: Dimension, seed=None, rng=None) -> np.ndarray:
    """Normalized state with complex-normal amplitudes from a seeded generator."""
    if rng is None:
        rng = np.random.default_rng(seed)
    psi = rng.normal(size=dim.d) + 1j * rng.normal(size=dim.d)
    return psi / np.linalg.norm(psi)


def max_abs(a) -> float:
    """Max-norm of a matrix or vector difference; the residual measure used throughout."""
    return float(np.max(np.abs(a)))
